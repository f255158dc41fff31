#include "jmexpand/recurrence.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "jmexpand/errors.hpp"

namespace jmexpand {

namespace {

constexpr const char* kCacheHeader = "jmexpand-cache 1";

bool is_all_ones(const Partition& p) { return p.sum() == p.length(); }

/// rho = (2, 1, 1, ..., 1)?
bool is_two_and_ones(const Partition& p) {
  return !p.empty() && p.largest() == 2 && p.multiplicity(2) == 1;
}

}  // namespace

const char* kind_tag(CoeffKind kind) {
  switch (kind) {
    case CoeffKind::A:
      return "a";
    case CoeffKind::APower:
      return "a-power";
    case CoeffKind::C:
      return "c";
    case CoeffKind::B:
      return "b";
    case CoeffKind::BPower:
      return "b-power";
    case CoeffKind::D:
      return "d";
  }
  return "?";
}

CoeffKind parse_kind(const std::string& tag) {
  if (tag == "a") return CoeffKind::A;
  if (tag == "a-power") return CoeffKind::APower;
  if (tag == "c") return CoeffKind::C;
  if (tag == "b") return CoeffKind::B;
  if (tag == "b-power") return CoeffKind::BPower;
  if (tag == "d") return CoeffKind::D;
  throw InvalidInputError("unknown coefficient kind: '" + tag + "'");
}

Int CoefficientEngine::memoized(
    TableId table, int k, const Partition& p,
    Int (CoefficientEngine::*compute)(int, const Partition&) const) const {
  Key key{k, p};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_[table].find(key);
    if (it != tables_[table].end()) return it->second;
  }
  Int value = (this->*compute)(k, p);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    tables_[table].emplace(std::move(key), value);
  }
  return value;
}

Int CoefficientEngine::a(int k, const Partition& rho) const {
  if (k < 0) throw InvalidInputError("negative degree k");
  return memoized(kA, k, rho, &CoefficientEngine::compute_a);
}

Int CoefficientEngine::compute_a(int k, const Partition& rho) const {
  if (rho.empty()) return k == 0 ? 1 : 0;
  if (k == 0) return is_all_ones(rho) ? 1 : 0;
  int m = rho.largest();
  Partition rest = rho.remove_part(m);
  Int total = 0;
  if (m == 1) total += a(k, rest);
  for (auto [value, mult] : rest.grouped_parts()) {
    total += Int(value) * mult * a(k - 1, rest.remove_part(value).add_part(value + m));
  }
  for (int r = 1; r < m; ++r) {
    total += a(k - 1, rest.add_part(r).add_part(m - r));
  }
  return total;
}

Int CoefficientEngine::a_peel_smallest(int k, const Partition& rho) const {
  if (k < 0) throw InvalidInputError("negative degree k");
  return memoized(kASmallest, k, rho, &CoefficientEngine::compute_a_smallest);
}

Int CoefficientEngine::compute_a_smallest(int k, const Partition& rho) const {
  if (rho.empty()) return k == 0 ? 1 : 0;
  if (k == 0) return is_all_ones(rho) ? 1 : 0;
  int m = rho.smallest();
  Partition rest = rho.remove_part(m);
  Int total = 0;
  if (m == 1) total += a_peel_smallest(k, rest);
  for (auto [value, mult] : rest.grouped_parts()) {
    total += Int(value) * mult *
             a_peel_smallest(k - 1, rest.remove_part(value).add_part(value + m));
  }
  for (int r = 1; r < m; ++r) {
    total += a_peel_smallest(k - 1, rest.add_part(r).add_part(m - r));
  }
  return total;
}

Int CoefficientEngine::a_power(int k, const Partition& rho) const {
  if (k < 1) throw InvalidInputError("power-sum degree must be >= 1");
  return memoized(kAPower, k, rho, &CoefficientEngine::compute_a_power);
}

Int CoefficientEngine::compute_a_power(int k, const Partition& rho) const {
  if (rho.empty()) return 0;
  if (k == 1) return is_two_and_ones(rho) ? 1 : 0;
  int m = rho.largest();
  Partition rest = rho.remove_part(m);
  Int total = 0;
  if (m == 1) total += a_power(k, rest);
  for (auto [value, mult] : rest.grouped_parts()) {
    total += Int(value) * mult *
             a_power(k - 1, rest.remove_part(value).add_part(value + m));
  }
  for (int r = 1; r < m; ++r) {
    total += a_power(k - 1, rest.add_part(r).add_part(m - r));
  }
  if (m > 1) total -= a_power(k - 1, rest.add_part(m - 1));
  return total;
}

Int CoefficientEngine::c(int k, const Partition& lambda) const {
  if (k < 0) throw InvalidInputError("negative degree k");
  return memoized(kC, k, lambda, &CoefficientEngine::compute_c);
}

Int CoefficientEngine::compute_c(int k, const Partition& lambda) const {
  if (lambda.empty()) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  int m = lambda.largest();
  Partition rest = lambda.remove_part(m);
  Int total = 0;
  for (auto [value, mult] : rest.grouped_parts()) {
    total += Int(value) * mult *
             c(k - 1, rest.remove_part(value).add_part(value + m));
  }
  // the peeled part contributes differently for m = 1, 2 and >= 3
  if (m == 2) {
    total += c(k - 1, rest.add_part(1).add_part(1));
    total += 2 * c(k - 1, rest.add_part(1));
    total += c(k - 1, rest);
  } else if (m >= 3) {
    for (int r = 1; r < m; ++r) {
      total += c(k - 1, rest.add_part(r).add_part(m - r));
    }
    total += 2 * c(k - 1, rest.add_part(m - 1));
  }
  return total;
}

Int CoefficientEngine::b(int k, const Partition& mu) const {
  if (k < 0) throw InvalidInputError("negative degree k");
  return memoized(kB, k, mu, &CoefficientEngine::compute_b);
}

Int CoefficientEngine::compute_b(int k, const Partition& mu) const {
  if (mu.empty()) return k == 0 ? 1 : 0;
  if (k == 0) return is_all_ones(mu) ? 1 : 0;
  int m = mu.largest();
  Partition rest = mu.remove_part(m);
  Int total = 0;
  if (m == 1) total += b(k, rest);
  for (auto [value, mult] : rest.grouped_parts()) {
    total += 2 * Int(value) * mult *
             b(k - 1, rest.remove_part(value).add_part(value + m));
  }
  for (int r = 1; r < m; ++r) {
    total += b(k - 1, rest.add_part(r).add_part(m - r));
  }
  total += Int(m - 1) * b(k - 1, mu);
  return total;
}

Int CoefficientEngine::b_peel_smallest(int k, const Partition& mu) const {
  if (k < 0) throw InvalidInputError("negative degree k");
  return memoized(kBSmallest, k, mu, &CoefficientEngine::compute_b_smallest);
}

Int CoefficientEngine::compute_b_smallest(int k, const Partition& mu) const {
  if (mu.empty()) return k == 0 ? 1 : 0;
  if (k == 0) return is_all_ones(mu) ? 1 : 0;
  int m = mu.smallest();
  Partition rest = mu.remove_part(m);
  Int total = 0;
  if (m == 1) total += b_peel_smallest(k, rest);
  for (auto [value, mult] : rest.grouped_parts()) {
    total += 2 * Int(value) * mult *
             b_peel_smallest(k - 1, rest.remove_part(value).add_part(value + m));
  }
  for (int r = 1; r < m; ++r) {
    total += b_peel_smallest(k - 1, rest.add_part(r).add_part(m - r));
  }
  total += Int(m - 1) * b_peel_smallest(k - 1, mu);
  return total;
}

Int CoefficientEngine::b_power(int k, const Partition& mu) const {
  if (k < 1) throw InvalidInputError("power-sum degree must be >= 1");
  return memoized(kBPower, k, mu, &CoefficientEngine::compute_b_power);
}

Int CoefficientEngine::compute_b_power(int k, const Partition& mu) const {
  if (mu.empty()) return 0;
  if (k == 1) return is_two_and_ones(mu) ? 1 : 0;
  int m = mu.largest();
  Partition rest = mu.remove_part(m);
  Int total = 0;
  if (m == 1) total += b_power(k, rest);
  for (auto [value, mult] : rest.grouped_parts()) {
    total += 2 * Int(value) * mult *
             b_power(k - 1, rest.remove_part(value).add_part(value + m));
  }
  for (int r = 1; r < m; ++r) {
    total += b_power(k - 1, rest.add_part(r).add_part(m - r));
  }
  total += Int(m - 1) * b_power(k - 1, mu);
  if (m > 1) total -= b_power(k - 1, rest.add_part(m - 1));
  return total;
}

Int CoefficientEngine::d(int k, const Partition& rho) const {
  if (k < 0) throw InvalidInputError("negative degree k");
  return memoized(kD, k, rho, &CoefficientEngine::compute_d);
}

Int CoefficientEngine::compute_d(int k, const Partition& rho) const {
  auto [stripped, ones] = rho.strip_ones();
  Int value = b(k, rho);
  for (int i = 0; i < ones; ++i) {
    value -= d(k, stripped.append_ones(i)) * binomial(ones, i);
  }
  return value;
}

Int CoefficientEngine::coefficient(CoeffKind kind, int k,
                                   const Partition& p) const {
  switch (kind) {
    case CoeffKind::A:
      return a(k, p);
    case CoeffKind::APower:
      return a_power(k, p);
    case CoeffKind::C:
      return c(k, p);
    case CoeffKind::B:
      return b(k, p);
    case CoeffKind::BPower:
      return b_power(k, p);
    case CoeffKind::D:
      return d(k, p);
  }
  throw InvalidInputError("unknown coefficient kind");
}

Int CoefficientEngine::a_from_c(int k, const Partition& rho) const {
  auto [stripped, ones] = rho.strip_ones();
  Int total = 0;
  for (int i = 0; i <= ones; ++i) {
    total += c(k, stripped.append_ones(i)) * binomial(ones, i);
  }
  return total;
}

Int CoefficientEngine::c_from_a(int k, const Partition& lambda) const {
  auto [stripped, ones] = lambda.strip_ones();
  Int value = a(k, lambda);
  for (int i = 0; i < ones; ++i) {
    value -= c_from_a(k, stripped.append_ones(i)) * binomial(ones, i);
  }
  return value;
}

bool CoefficientEngine::lassalle_identity_check(int k,
                                                const Partition& rho) const {
  if (k < 1) throw InvalidInputError("need k >= 1");
  const std::vector<int>& parts = rho.parts();
  int len = rho.length();

  // first relation: growing by a fixed point
  Int lhs1 = a(k, rho.add_part(1));
  Int rhs1 = a(k, rho);
  for (int i = 0; i < len; ++i) {
    int v = parts[static_cast<std::size_t>(i)];
    rhs1 += Int(v) * a(k - 1, rho.remove_part(v).add_part(v + 1));
  }
  if (lhs1 != rhs1) return false;

  // second relation: the double sum over ordered pairs of distinct cycles
  Int lhs2 = 0;
  for (int i = 0; i < len; ++i) {
    int v = parts[static_cast<std::size_t>(i)];
    lhs2 += Int(v) * a(k, rho.remove_part(v).add_part(v + 1));
  }
  Int rhs2 = 0;
  for (int i = 0; i < len; ++i) {
    for (int j = 0; j < len; ++j) {
      if (i == j) continue;
      int vi = parts[static_cast<std::size_t>(i)];
      int vj = parts[static_cast<std::size_t>(j)];
      rhs2 += Int(vi) * vj *
              a(k - 1,
                rho.remove_part(vi).remove_part(vj).add_part(vi + vj + 1));
    }
  }
  for (int i = 0; i < len; ++i) {
    int v = parts[static_cast<std::size_t>(i)];
    Partition without = rho.remove_part(v);
    for (int r = 1; r <= v; ++r) {
      rhs2 += Int(v) * a(k - 1, without.add_part(r).add_part(v + 1 - r));
    }
  }
  return lhs2 == rhs2;
}

std::vector<Rat> CoefficientEngine::polynomial_in_t(
    int k, const Partition& rho) const {
  if (rho.count_ones() > 0) {
    throw InvalidInputError("polynomial_in_t needs a partition without ones");
  }
  int max_i = k - (rho.sum() - rho.length());
  std::vector<Rat> poly;
  // binom(t, i) expanded iteratively: basis[i] = basis[i-1] * (t - (i-1)) / i
  std::vector<Rat> basis{Rat(1)};
  for (int i = 0; i <= max_i; ++i) {
    if (i > 0) {
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        next[j + 1] += basis[j];
        next[j] -= Rat(i - 1) * basis[j];
      }
      for (Rat& coeff : next) coeff /= i;
      basis = std::move(next);
    }
    Int weight = c(k, rho.append_ones(i));
    if (weight == 0) continue;
    if (poly.size() < basis.size()) poly.resize(basis.size(), Rat(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      poly[j] += Rat(weight) * basis[j];
    }
  }
  while (!poly.empty() && poly.back() == 0) poly.pop_back();
  return poly;
}

Rat evaluate_polynomial(const std::vector<Rat>& coefficients, long t) {
  Rat value(0);
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    value = value * t + *it;
  }
  return value;
}

void CoefficientEngine::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string header;
  if (!std::getline(in, header) || header != kCacheHeader) return;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag, partition_text, value_text;
    int k = 0;
    if (!(fields >> tag >> k >> partition_text >> value_text)) {
      throw InvalidInputError("malformed cache line: '" + line + "'");
    }
    CoeffKind kind = parse_kind(tag);
    Partition p = parse_partition(partition_text);
    Int value(value_text);
    TableId table = kTableCount;
    switch (kind) {
      case CoeffKind::A:
        table = kA;
        break;
      case CoeffKind::APower:
        table = kAPower;
        break;
      case CoeffKind::C:
        table = kC;
        break;
      case CoeffKind::B:
        table = kB;
        break;
      case CoeffKind::BPower:
        table = kBPower;
        break;
      case CoeffKind::D:
        table = kD;
        break;
    }
    std::lock_guard<std::mutex> lock(mutex_);
    tables_[table].emplace(Key{k, std::move(p)}, std::move(value));
  }
}

void CoefficientEngine::save_cache(const std::string& path) const {
  struct Row {
    int kind_order;
    int k;
    Partition partition;
    Int value;
  };
  std::vector<Row> rows;
  constexpr std::pair<TableId, CoeffKind> kPersisted[] = {
      {kA, CoeffKind::A},         {kAPower, CoeffKind::APower},
      {kC, CoeffKind::C},         {kB, CoeffKind::B},
      {kBPower, CoeffKind::BPower}, {kD, CoeffKind::D},
  };
  {
    std::lock_guard<std::mutex> lock(mutex_);
    for (auto [table, kind] : kPersisted) {
      for (const auto& [key, value] : tables_[table]) {
        rows.push_back(Row{static_cast<int>(kind), key.k, key.partition,
                           value});
      }
    }
  }
  PartitionOutputOrder order;
  std::sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
    if (x.kind_order != y.kind_order) return x.kind_order < y.kind_order;
    if (x.k != y.k) return x.k < y.k;
    if (x.partition != y.partition) return order(x.partition, y.partition);
    return false;
  });
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw InvalidInputError("cannot write cache file: " + path);
  out << kCacheHeader << '\n';
  for (const Row& row : rows) {
    out << kind_tag(static_cast<CoeffKind>(row.kind_order)) << ' ' << row.k
        << ' ' << partition_to_string(row.partition) << ' '
        << to_decimal(row.value) << '\n';
  }
}

}  // namespace jmexpand
