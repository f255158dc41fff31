#pragma once

#include <map>
#include <string>
#include <unordered_map>

#include "jmexpand/exact.hpp"
#include "jmexpand/partition.hpp"
#include "jmexpand/permutation.hpp"

namespace jmexpand {

/// Size limits for the exhaustive expansions. The guards raise
/// ResourceGuardError instead of attempting an infeasible computation.
struct OracleLimits {
  int max_symmetric_n = 8;
  int max_degree = 8;
  int max_hecke_n = 4;
  int max_partial_n = 8;
  int max_dyck_half_length = 14;
};

enum class SymFamily { Complete, Elementary, PowerSum };

/// Accepts "h"/"complete", "e"/"elementary", "p"/"power-sum".
SymFamily parse_family(const std::string& name);
std::string family_name(SymFamily family);

/// An element of Z[S_N]: a finitely supported integer-valued map on
/// permutations of a fixed degree. Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  using TermMap = std::unordered_map<Permutation, Int, PermutationHash>;

  explicit GroupAlgebraElement(int degree);

  static GroupAlgebraElement zero(int degree);
  /// The multiplicative unit: identity permutation with coefficient 1.
  static GroupAlgebraElement unit(int degree);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add(const Permutation& sigma, const Int& coefficient);
  Int coefficient(const Permutation& sigma) const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(const Int& scalar);

  bool operator==(const GroupAlgebraElement& other) const;

 private:
  int degree_ = 0;
  TermMap terms_;
};

GroupAlgebraElement operator+(GroupAlgebraElement lhs,
                              const GroupAlgebraElement& rhs);
GroupAlgebraElement operator-(GroupAlgebraElement lhs,
                              const GroupAlgebraElement& rhs);

/// Convolution product; the right factor acts first, matching the
/// permutation product convention.
GroupAlgebraElement operator*(const GroupAlgebraElement& lhs,
                              const GroupAlgebraElement& rhs);

/// The Jucys-Murphy element J_i = (1 i) + (2 i) + ... + (i-1 i) in Z[S_n],
/// with the classical 1-based index i (J_1 = 0).
GroupAlgebraElement jm_element(int i, int n);

/// F_k(J_1, ..., J_n) by exhaustive expansion; F is the complete, elementary
/// or power-sum family of degree k.
GroupAlgebraElement evaluate_in_jm(SymFamily family, int k, int n,
                                   const OracleLimits& limits = {});

/// Coefficients of the conjugacy class sums, indexed by cycle type.
class ClassExpansion {
 public:
  using CoeffMap = std::map<Partition, Int, PartitionOutputOrder>;

  explicit ClassExpansion(int n);

  int n() const { return n_; }
  const Int& at(const Partition& lambda) const;
  void set(const Partition& lambda, Int value);
  const CoeffMap& coefficients() const { return coeffs_; }

 private:
  int n_ = 0;
  CoeffMap coeffs_;
};

/// Number of permutations of cycle type lambda in S_{|lambda|}.
Int conjugacy_class_size(const Partition& lambda);

/// Reads off the map (cycle type -> coefficient). Throws NotCentralError if
/// two permutations of the same type carry different coefficients.
ClassExpansion class_expansion(const GroupAlgebraElement& x);

/// Whether e_k(J_1,...,J_n) equals the sum of all permutations with exactly
/// n-k cycles, each with coefficient 1.
bool jucys_ek_check(int k, int n, const OracleLimits& limits = {});

}  // namespace jmexpand
