#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "jmexpand/group_algebra.hpp"
#include "jmexpand/partition.hpp"

namespace jmexpand {

/// A partial permutation: a finite support set of positive integers together
/// with a permutation of that set. The pair with empty support is the unit
/// of the algebra.
class PartialPermutation {
 public:
  PartialPermutation() = default;

  /// support must be strictly increasing; images[t] is the image of
  /// support[t] and must be a bijection of the support.
  PartialPermutation(std::vector<int> support, std::vector<int> images);

  /// ({a, b}, (a b)) for distinct positive a, b.
  static PartialPermutation transposition(int a, int b);

  /// Cycles (1..lambda_1)(lambda_1+1..)... on the support {1,...,|lambda|}.
  static PartialPermutation canonical_of_type(const Partition& lambda);

  const std::vector<int>& support() const { return support_; }
  const std::vector<int>& images() const { return images_; }
  int support_size() const { return static_cast<int>(support_.size()); }

  /// Image of x; points outside the support are fixed.
  int apply(int x) const;

  Partition cycle_type() const;
  int cycle_count() const;
  int fixed_points() const;

  /// |support| - #cycles + #fixed points.
  int filtration_degree() const;

  bool operator==(const PartialPermutation&) const = default;

  friend PartialPermutation operator*(const PartialPermutation& lhs,
                                      const PartialPermutation& rhs);

 private:
  std::vector<int> support_;
  std::vector<int> images_;
};

struct PartialPermutationHash {
  std::size_t operator()(const PartialPermutation& p) const;
};

/// Integer combination of partial permutations (a truncation of the
/// infinite partial-permutation algebra). Zero coefficients never stored.
class PartialAlgebraElement {
 public:
  using TermMap =
      std::unordered_map<PartialPermutation, Int, PartialPermutationHash>;

  PartialAlgebraElement() = default;

  static PartialAlgebraElement zero() { return {}; }
  static PartialAlgebraElement unit();

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add(const PartialPermutation& p, const Int& coefficient);
  Int coefficient(const PartialPermutation& p) const;

  PartialAlgebraElement& operator+=(const PartialAlgebraElement& other);
  PartialAlgebraElement& operator*=(const Int& scalar);
  bool operator==(const PartialAlgebraElement& other) const {
    return terms_ == other.terms_;
  }

 private:
  TermMap terms_;
};

PartialAlgebraElement operator*(const PartialAlgebraElement& lhs,
                                const PartialAlgebraElement& rhs);

/// X_i = sum over j < i of ({j, i}, (j i)); X_1 = 0.
PartialAlgebraElement partial_jm_element(int i);

/// F_k(X_1, ..., X_n) in the truncated algebra. The coefficient of any
/// (d, sigma) with d contained in {1..n} is exact, since only monomials in
/// the X_i with i in d contribute to it.
PartialAlgebraElement evaluate_in_partial_jm(SymFamily family, int k, int n,
                                             const OracleLimits& limits = {});

/// h_k(X_1, ..., X_n).
PartialAlgebraElement partial_jm_expansion(int k, int n,
                                           const OracleLimits& limits = {});

/// Coefficient of ({1..|lambda|}, sigma) for sigma of cycle type lambda.
Int coefficient_of_cycle_type(const PartialAlgebraElement& x,
                              const Partition& lambda);

/// The projection to Z[S_n]: keeps terms with support inside {1..n} and
/// extends their permutations by fixed points.
GroupAlgebraElement project_to_group_algebra(const PartialAlgebraElement& x,
                                             int n);

}  // namespace jmexpand
