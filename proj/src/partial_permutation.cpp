#include "jmexpand/partial_permutation.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "jmexpand/errors.hpp"

namespace jmexpand {

PartialPermutation::PartialPermutation(std::vector<int> support,
                                       std::vector<int> images)
    : support_(std::move(support)), images_(std::move(images)) {
  if (support_.size() != images_.size()) {
    throw InvalidInputError("support and image sizes differ");
  }
  for (std::size_t t = 0; t < support_.size(); ++t) {
    if (support_[t] < 1) {
      throw InvalidInputError("support points must be positive");
    }
    if (t + 1 < support_.size() && support_[t] >= support_[t + 1]) {
      throw InvalidInputError("support must be strictly increasing");
    }
  }
  std::vector<int> sorted_images = images_;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (sorted_images != support_) {
    throw InvalidInputError("images are not a bijection of the support");
  }
}

PartialPermutation PartialPermutation::transposition(int a, int b) {
  if (a == b) throw InvalidInputError("transposition needs distinct points");
  if (a > b) std::swap(a, b);
  return PartialPermutation({a, b}, {b, a});
}

PartialPermutation PartialPermutation::canonical_of_type(
    const Partition& lambda) {
  std::vector<int> support;
  std::vector<int> images;
  int next = 1;
  for (int part : lambda.parts()) {
    for (int t = 0; t < part; ++t) {
      support.push_back(next + t);
      images.push_back(t + 1 == part ? next : next + t + 1);
    }
    next += part;
  }
  return PartialPermutation(std::move(support), std::move(images));
}

int PartialPermutation::apply(int x) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), x);
  if (it == support_.end() || *it != x) return x;
  return images_[static_cast<std::size_t>(it - support_.begin())];
}

Partition PartialPermutation::cycle_type() const {
  std::vector<bool> seen(support_.size(), false);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < support_.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    std::size_t t = start;
    while (!seen[t]) {
      seen[t] = true;
      int image = images_[t];
      t = static_cast<std::size_t>(
          std::lower_bound(support_.begin(), support_.end(), image) -
          support_.begin());
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition::from_unsorted(std::move(lengths));
}

int PartialPermutation::cycle_count() const {
  return cycle_type().length();
}

int PartialPermutation::fixed_points() const {
  int count = 0;
  for (std::size_t t = 0; t < support_.size(); ++t) {
    if (images_[t] == support_[t]) ++count;
  }
  return count;
}

int PartialPermutation::filtration_degree() const {
  return support_size() - cycle_count() + fixed_points();
}

PartialPermutation operator*(const PartialPermutation& lhs,
                             const PartialPermutation& rhs) {
  std::vector<int> support;
  support.reserve(lhs.support_.size() + rhs.support_.size());
  std::set_union(lhs.support_.begin(), lhs.support_.end(),
                 rhs.support_.begin(), rhs.support_.end(),
                 std::back_inserter(support));
  std::vector<int> images;
  images.reserve(support.size());
  for (int x : support) images.push_back(lhs.apply(rhs.apply(x)));
  PartialPermutation out;
  out.support_ = std::move(support);
  out.images_ = std::move(images);
  return out;
}

std::size_t PartialPermutationHash::operator()(
    const PartialPermutation& p) const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](int v) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  };
  for (int v : p.support()) mix(v);
  mix(-1);
  for (int v : p.images()) mix(v);
  return h;
}

PartialAlgebraElement PartialAlgebraElement::unit() {
  PartialAlgebraElement x;
  x.add(PartialPermutation(), 1);
  return x;
}

void PartialAlgebraElement::add(const PartialPermutation& p,
                                const Int& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Int PartialAlgebraElement::coefficient(const PartialPermutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Int(0) : it->second;
}

PartialAlgebraElement& PartialAlgebraElement::operator+=(
    const PartialAlgebraElement& other) {
  for (const auto& [p, coeff] : other.terms_) add(p, coeff);
  return *this;
}

PartialAlgebraElement& PartialAlgebraElement::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= scalar;
  return *this;
}

PartialAlgebraElement operator*(const PartialAlgebraElement& lhs,
                                const PartialAlgebraElement& rhs) {
  PartialAlgebraElement out;
  for (const auto& [p, a] : lhs.terms()) {
    for (const auto& [q, b] : rhs.terms()) {
      out.add(p * q, a * b);
    }
  }
  return out;
}

PartialAlgebraElement partial_jm_element(int i) {
  if (i < 1) throw IndexOutOfRangeError("index must be positive");
  PartialAlgebraElement x;
  for (int j = 1; j < i; ++j) {
    x.add(PartialPermutation::transposition(j, i), 1);
  }
  return x;
}

PartialAlgebraElement evaluate_in_partial_jm(SymFamily family, int k, int n,
                                             const OracleLimits& limits) {
  if (k < 0) throw InvalidInputError("negative degree k");
  if (n < 0) throw InvalidInputError("negative truncation size n");
  if (n > limits.max_partial_n || k > limits.max_degree) {
    throw ResourceGuardError(
        "partial-permutation expansion beyond configured bounds (n=" +
        std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  switch (family) {
    case SymFamily::Complete: {
      std::vector<PartialAlgebraElement> h(static_cast<std::size_t>(k) + 1);
      h[0] = PartialAlgebraElement::unit();
      for (int i = 1; i <= n; ++i) {
        PartialAlgebraElement xi = partial_jm_element(i);
        for (int j = 1; j <= k; ++j) {
          h[static_cast<std::size_t>(j)] +=
              xi * h[static_cast<std::size_t>(j - 1)];
        }
      }
      return h[static_cast<std::size_t>(k)];
    }
    case SymFamily::Elementary: {
      std::vector<PartialAlgebraElement> e(static_cast<std::size_t>(k) + 1);
      e[0] = PartialAlgebraElement::unit();
      for (int i = 1; i <= n; ++i) {
        PartialAlgebraElement xi = partial_jm_element(i);
        for (int j = k; j >= 1; --j) {
          e[static_cast<std::size_t>(j)] +=
              xi * e[static_cast<std::size_t>(j - 1)];
        }
      }
      return e[static_cast<std::size_t>(k)];
    }
    case SymFamily::PowerSum: {
      if (k == 0) {
        PartialAlgebraElement x = PartialAlgebraElement::unit();
        x *= Int(n);
        return x;
      }
      PartialAlgebraElement total;
      for (int i = 1; i <= n; ++i) {
        PartialAlgebraElement xi = partial_jm_element(i);
        PartialAlgebraElement power = PartialAlgebraElement::unit();
        for (int j = 0; j < k; ++j) power = power * xi;
        total += power;
      }
      return total;
    }
  }
  throw InvalidInputError("unknown family");
}

PartialAlgebraElement partial_jm_expansion(int k, int n,
                                           const OracleLimits& limits) {
  return evaluate_in_partial_jm(SymFamily::Complete, k, n, limits);
}

Int coefficient_of_cycle_type(const PartialAlgebraElement& x,
                              const Partition& lambda) {
  return x.coefficient(PartialPermutation::canonical_of_type(lambda));
}

GroupAlgebraElement project_to_group_algebra(const PartialAlgebraElement& x,
                                             int n) {
  GroupAlgebraElement out(n);
  for (const auto& [p, coeff] : x.terms()) {
    if (!p.support().empty() && p.support().back() > n) continue;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int point = 1; point <= n; ++point) {
      images[static_cast<std::size_t>(point - 1)] = p.apply(point) - 1;
    }
    out.add(Permutation(std::move(images)), coeff);
  }
  return out;
}

}  // namespace jmexpand
