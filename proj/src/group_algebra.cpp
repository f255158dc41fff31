#include "jmexpand/group_algebra.hpp"

#include <utility>
#include <vector>

#include "jmexpand/errors.hpp"

namespace jmexpand {

SymFamily parse_family(const std::string& name) {
  if (name == "h" || name == "complete") return SymFamily::Complete;
  if (name == "e" || name == "elementary") return SymFamily::Elementary;
  if (name == "p" || name == "power-sum" || name == "power") {
    return SymFamily::PowerSum;
  }
  throw InvalidInputError("unknown symmetric function family: '" + name + "'");
}

std::string family_name(SymFamily family) {
  switch (family) {
    case SymFamily::Complete:
      return "h";
    case SymFamily::Elementary:
      return "e";
    case SymFamily::PowerSum:
      return "p";
  }
  return "?";
}

GroupAlgebraElement::GroupAlgebraElement(int degree) : degree_(degree) {
  if (degree < 0) throw InvalidInputError("negative degree");
}

GroupAlgebraElement GroupAlgebraElement::zero(int degree) {
  return GroupAlgebraElement(degree);
}

GroupAlgebraElement GroupAlgebraElement::unit(int degree) {
  GroupAlgebraElement x(degree);
  x.add(Permutation::identity(degree), 1);
  return x;
}

void GroupAlgebraElement::add(const Permutation& sigma,
                              const Int& coefficient) {
  if (sigma.degree() != degree_) {
    throw InvalidInputError("term degree mismatch");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(sigma, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Int GroupAlgebraElement::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Int(0) : it->second;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(
    const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw InvalidInputError("degree mismatch");
  for (const auto& [sigma, coeff] : other.terms_) add(sigma, coeff);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(
    const GroupAlgebraElement& other) {
  if (other.degree_ != degree_) throw InvalidInputError("degree mismatch");
  for (const auto& [sigma, coeff] : other.terms_) add(sigma, -coeff);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Int& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [sigma, coeff] : terms_) coeff *= scalar;
  return *this;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& other) const {
  return degree_ == other.degree_ && terms_ == other.terms_;
}

GroupAlgebraElement operator+(GroupAlgebraElement lhs,
                              const GroupAlgebraElement& rhs) {
  lhs += rhs;
  return lhs;
}

GroupAlgebraElement operator-(GroupAlgebraElement lhs,
                              const GroupAlgebraElement& rhs) {
  lhs -= rhs;
  return lhs;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& lhs,
                              const GroupAlgebraElement& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw InvalidInputError("degree mismatch in product");
  }
  GroupAlgebraElement out(lhs.degree());
  for (const auto& [sigma, a] : lhs.terms()) {
    for (const auto& [tau, b] : rhs.terms()) {
      out.add(sigma * tau, a * b);
    }
  }
  return out;
}

GroupAlgebraElement jm_element(int i, int n) {
  if (i < 1 || i > n) {
    throw IndexOutOfRangeError("Jucys-Murphy index " + std::to_string(i) +
                               " outside 1.." + std::to_string(n));
  }
  GroupAlgebraElement x(n);
  for (int j = 0; j + 1 < i; ++j) {
    x.add(Permutation::transposition(n, j, i - 1), 1);
  }
  return x;
}

namespace {

void check_oracle_limits(int k, int n, const OracleLimits& limits) {
  if (k < 0) throw InvalidInputError("negative degree k");
  if (n < 0) throw InvalidInputError("negative ambient size n");
  if (n > limits.max_symmetric_n || k > limits.max_degree) {
    throw ResourceGuardError(
        "exhaustive expansion beyond configured bounds (n=" +
        std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

GroupAlgebraElement evaluate_in_jm(SymFamily family, int k, int n,
                                   const OracleLimits& limits) {
  check_oracle_limits(k, n, limits);
  switch (family) {
    case SymFamily::Complete: {
      // h_j(J_1..J_i) = h_j(J_1..J_{i-1}) + J_i h_{j-1}(J_1..J_i)
      std::vector<GroupAlgebraElement> h(static_cast<std::size_t>(k) + 1,
                                         GroupAlgebraElement::zero(n));
      h[0] = GroupAlgebraElement::unit(n);
      for (int i = 1; i <= n; ++i) {
        GroupAlgebraElement ji = jm_element(i, n);
        for (int j = 1; j <= k; ++j) {
          h[static_cast<std::size_t>(j)] +=
              ji * h[static_cast<std::size_t>(j - 1)];
        }
      }
      return h[static_cast<std::size_t>(k)];
    }
    case SymFamily::Elementary: {
      // e_j(J_1..J_i) = e_j(J_1..J_{i-1}) + J_i e_{j-1}(J_1..J_{i-1})
      std::vector<GroupAlgebraElement> e(static_cast<std::size_t>(k) + 1,
                                         GroupAlgebraElement::zero(n));
      e[0] = GroupAlgebraElement::unit(n);
      for (int i = 1; i <= n; ++i) {
        GroupAlgebraElement ji = jm_element(i, n);
        for (int j = k; j >= 1; --j) {
          e[static_cast<std::size_t>(j)] +=
              ji * e[static_cast<std::size_t>(j - 1)];
        }
      }
      return e[static_cast<std::size_t>(k)];
    }
    case SymFamily::PowerSum: {
      if (k == 0) {
        GroupAlgebraElement x = GroupAlgebraElement::unit(n);
        x *= Int(n);
        return x;
      }
      GroupAlgebraElement total(n);
      for (int i = 1; i <= n; ++i) {
        GroupAlgebraElement ji = jm_element(i, n);
        GroupAlgebraElement power = GroupAlgebraElement::unit(n);
        for (int j = 0; j < k; ++j) power = power * ji;
        total += power;
      }
      return total;
    }
  }
  throw InvalidInputError("unknown family");
}

ClassExpansion::ClassExpansion(int n) : n_(n) {
  for (const Partition& lambda : partitions_of(n)) coeffs_[lambda] = 0;
}

const Int& ClassExpansion::at(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    throw InvalidInputError("partition " + partition_to_string(lambda) +
                            " does not index a class of S_" +
                            std::to_string(n_));
  }
  return it->second;
}

void ClassExpansion::set(const Partition& lambda, Int value) {
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    throw InvalidInputError("partition " + partition_to_string(lambda) +
                            " does not index a class of S_" +
                            std::to_string(n_));
  }
  it->second = std::move(value);
}

Int conjugacy_class_size(const Partition& lambda) {
  return factorial(lambda.sum()) / symmetrizer_order(lambda);
}

ClassExpansion class_expansion(const GroupAlgebraElement& x) {
  struct Bucket {
    Int value;
    Int count;
  };
  std::map<Partition, Bucket, PartitionOutputOrder> buckets;
  for (const auto& [sigma, coeff] : x.terms()) {
    Partition type = sigma.cycle_type();
    auto [it, inserted] = buckets.try_emplace(type, Bucket{coeff, 1});
    if (!inserted) {
      if (it->second.value != coeff) {
        throw NotCentralError(
            "coefficients differ within the class of type " +
            partition_to_string(type));
      }
      ++it->second.count;
    }
  }
  ClassExpansion expansion(x.degree());
  for (const auto& [type, bucket] : buckets) {
    // a class partially covered means the missing permutations carry 0
    if (bucket.count != conjugacy_class_size(type)) {
      throw NotCentralError("class of type " + partition_to_string(type) +
                            " is only partially supported");
    }
    expansion.set(type, bucket.value);
  }
  return expansion;
}

bool jucys_ek_check(int k, int n, const OracleLimits& limits) {
  if (k < 0 || k > n) throw InvalidInputError("need 0 <= k <= n");
  check_oracle_limits(k, n, limits);
  GroupAlgebraElement lhs = evaluate_in_jm(SymFamily::Elementary, k, n, limits);
  GroupAlgebraElement rhs(n);
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (sigma.cycle_count() == n - k) rhs.add(sigma, 1);
  });
  return lhs == rhs;
}

}  // namespace jmexpand
