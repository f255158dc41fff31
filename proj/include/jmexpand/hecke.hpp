#pragma once

#include <map>
#include <vector>

#include "jmexpand/group_algebra.hpp"
#include "jmexpand/partition.hpp"
#include "jmexpand/permutation.hpp"

namespace jmexpand {

// Permutations of {1, 1', ..., n, n'} live in S_{2n} with the interleaved
// point encoding: k -> index 2(k-1), and its partner k' -> index 2(k-1)+1.
// The pairing order 1 < 1' < 2 < 2' < ... is then the natural index order.

/// Partner of a point under the pairing involution.
constexpr int bar(int x) { return x ^ 1; }

/// Whether sigma commutes with the pairing, i.e. sigma(x') = sigma(x)'.
bool in_hyperoctahedral(const Permutation& sigma);

/// All 2^n n! elements of H_n inside S_{2n}.
std::vector<Permutation> hyperoctahedral_group(int n);

/// p_n: the sum of all elements of H_n, each with coefficient 1.
GroupAlgebraElement hyperoctahedral_sum(int n, const OracleLimits& limits = {});

/// The coset type of sigma in S_{2n}: build the graph with solid edges
/// {x, x'} and dashed edges {sigma(x), sigma(x')}; its cycles all have even
/// length, and the half-lengths sorted decreasingly form a partition of n.
Partition coset_type(const Permutation& sigma);

/// The odd Jucys-Murphy element: the sum of the 2(i-1) transpositions
/// exchanging the point i with every smaller point (barred or not).
GroupAlgebraElement odd_jm(int i, int n);

/// F_k evaluated in the odd Jucys-Murphy elements of S_{2n}.
GroupAlgebraElement evaluate_in_odd_jm(SymFamily family, int k, int n,
                                       const OracleLimits& limits = {});

/// Coefficients of the double coset sums, indexed by coset type.
class CosetExpansion {
 public:
  using CoeffMap = std::map<Partition, Int, PartitionOutputOrder>;

  explicit CosetExpansion(int n);

  int n() const { return n_; }
  const Int& at(const Partition& mu) const;
  void set(const Partition& mu, Int value);
  const CoeffMap& coefficients() const { return coeffs_; }

 private:
  int n_ = 0;
  CoeffMap coeffs_;
};

/// Number of permutations of S_{2n} with coset type mu. Computed once per n
/// by exhaustive enumeration and cached.
const std::map<Partition, Int, PartitionOutputOrder>& double_coset_sizes(
    int n, const OracleLimits& limits = {});

/// Reads off the map (coset type -> coefficient). Throws NotBiInvariantError
/// if two permutations of the same coset type carry different coefficients.
CosetExpansion coset_expansion(const GroupAlgebraElement& x,
                               const OracleLimits& limits = {});

/// Class expansion of F_k(J^odd_1, ..., J^odd_n) * p_n over coset types.
CosetExpansion b_expansion_oracle(SymFamily family, int k, int n,
                                  const OracleLimits& limits = {});

/// Whether e_k(J^odd) * p_n equals the sum of the double coset sums over all
/// mu with |mu| - l(mu) = k.
bool hecke_ek_check(int k, int n, const OracleLimits& limits = {});

}  // namespace jmexpand
