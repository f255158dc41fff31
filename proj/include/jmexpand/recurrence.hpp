#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jmexpand/exact.hpp"
#include "jmexpand/partition.hpp"

namespace jmexpand {

/// The coefficient families the engine can produce.
///   A / APower   : class expansion of h_k resp. p_k in the Jucys-Murphy
///                  elements, indexed by cycle type.
///   C            : expansion of h_k in the partial Jucys-Murphy elements,
///                  indexed by cycle type of the partial permutation.
///   B / BPower   : coset-type expansion of h_k resp. p_k in the odd
///                  Jucys-Murphy elements times the hyperoctahedral sum.
///   D            : binomial-transform companion of B.
enum class CoeffKind { A, APower, C, B, BPower, D };

const char* kind_tag(CoeffKind kind);
CoeffKind parse_kind(const std::string& tag);

/// Memoized exact computation of all coefficient families through the
/// one-part-peeling induction relations.
///
/// Thread safety: lookups and inserts are synchronized; concurrent calls may
/// duplicate work but always insert equal values.
class CoefficientEngine {
 public:
  /// Coefficient of the class sum of type rho in h_k(J_1, ..., J_{|rho|}).
  Int a(int k, const Partition& rho) const;

  /// Power-sum variant of a(); requires k >= 1.
  Int a_power(int k, const Partition& rho) const;

  /// Coefficient of the partial-permutation class sum of type lambda in
  /// h_k(X_1, X_2, ...).
  Int c(int k, const Partition& lambda) const;

  /// Coefficient of the double coset sum of type mu in h_k(J^odd) * p_{|mu|}.
  Int b(int k, const Partition& mu) const;

  /// Power-sum variant of b(); requires k >= 1.
  Int b_power(int k, const Partition& mu) const;

  /// Solution of the sparse triangular system linking b to its
  /// stripped-ones transform.
  Int d(int k, const Partition& rho) const;

  Int coefficient(CoeffKind kind, int k, const Partition& p) const;

  /// Binomial transform: a^k_rho = sum_i c^k_{stripped(rho) + 1^i} *
  /// binom(ones(rho), i). Equal to a() everywhere.
  Int a_from_c(int k, const Partition& rho) const;

  /// Triangular inversion of a_from_c.
  Int c_from_a(int k, const Partition& lambda) const;

  /// Verifies both of Lassalle's induction relations at (k, rho) against the
  /// values produced by a(). Requires k >= 1.
  bool lassalle_identity_check(int k, const Partition& rho) const;

  /// The polynomial P with P(t) = a(k, rho + 1^t) for every integer t >= 0,
  /// as monomial coefficients (index = power of t, trailing zeros trimmed).
  /// rho must have no part equal to 1.
  std::vector<Rat> polynomial_in_t(int k, const Partition& rho) const;

  /// Same values as a()/b(), computed by peeling the smallest part instead
  /// of the largest. Exposed so tests can check that the induction does not
  /// depend on the decomposition choice.
  Int a_peel_smallest(int k, const Partition& rho) const;
  Int b_peel_smallest(int k, const Partition& mu) const;

  /// Merges entries from a cache file. A missing file or a version header
  /// mismatch is ignored (the cache is rebuilt on save).
  void load_cache(const std::string& path);

  /// Writes all memoized entries of the persistable kinds, deterministically
  /// ordered. Format: a version header line, then one "kind k lambda value"
  /// entry per line with the partition comma-separated ("-" when empty).
  void save_cache(const std::string& path) const;

 private:
  struct Key {
    int k;
    Partition partition;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const {
      return PartitionHash{}(key.partition) * 31 +
             static_cast<std::size_t>(key.k);
    }
  };
  using Table = std::unordered_map<Key, Int, KeyHash>;

  enum TableId {
    kA,
    kAPower,
    kC,
    kB,
    kBPower,
    kD,
    kASmallest,
    kBSmallest,
    kTableCount
  };

  Int memoized(TableId table, int k, const Partition& p,
               Int (CoefficientEngine::*compute)(int, const Partition&)
                   const) const;

  Int compute_a(int k, const Partition& rho) const;
  Int compute_a_power(int k, const Partition& rho) const;
  Int compute_c(int k, const Partition& lambda) const;
  Int compute_b(int k, const Partition& mu) const;
  Int compute_b_power(int k, const Partition& mu) const;
  Int compute_d(int k, const Partition& rho) const;
  Int compute_a_smallest(int k, const Partition& rho) const;
  Int compute_b_smallest(int k, const Partition& mu) const;

  mutable std::mutex mutex_;
  mutable Table tables_[kTableCount];
};

/// Evaluates a monomial-coefficient polynomial at an integer point.
Rat evaluate_polynomial(const std::vector<Rat>& coefficients, long t);

}  // namespace jmexpand
