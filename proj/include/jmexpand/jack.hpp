#pragma once

#include <map>
#include <vector>

#include "jmexpand/exact.hpp"
#include "jmexpand/partition.hpp"

namespace jmexpand {

/// The deformed content alpha*(j-1) - (i-1) of every box of the diagram,
/// rows i and columns j counted from 1.
std::vector<Rat> alpha_contents(const Partition& lambda, const Rat& alpha);

/// Complete homogeneous sum of degree k over a multiset of values.
Rat h_on_multiset(int k, const std::vector<Rat>& values);

/// The Jack basis of degree n at a fixed parameter, in the power-sum
/// coordinates. Built by Gram-Schmidt over the monomial basis (ordered
/// compatibly with dominance) under the deformed inner product
/// <p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}, then normalized so
/// that the coefficient of m_{1^n} is n! (equivalently the p_{1^n}
/// coordinate is 1).
///
/// Throws DegenerateGramError when a pivot vanishes at the sampled alpha.
class JackBasis {
 public:
  JackBasis(int n, const Rat& alpha, int bound = 6);

  int n() const { return n_; }
  const Rat& alpha() const { return alpha_; }

  /// Partitions of n in the fixed index order (decreasing lexicographic).
  const std::vector<Partition>& partitions() const { return partitions_; }

  /// Coefficient of p_mu in the Jack element indexed by lambda.
  const Rat& theta(const Partition& mu, const Partition& lambda) const;

  /// All power-sum coefficients of the Jack element indexed by lambda.
  std::map<Partition, Rat, PartitionOutputOrder> power_sum_expansion(
      const Partition& lambda) const;

  /// <J_lambda, J_mu> under the deformed inner product.
  Rat inner(const Partition& lambda, const Partition& mu) const;

 private:
  int index_of(const Partition& p) const;

  int n_ = 0;
  Rat alpha_;
  std::vector<Partition> partitions_;
  // theta_[lambda][mu]: coefficient of p_mu in J_lambda
  std::vector<std::vector<Rat>> theta_;
};

/// Expansion of the Jack element indexed by lambda on the power-sum basis.
std::map<Partition, Rat, PartitionOutputOrder> jack_in_power_basis(
    const Partition& lambda, const Rat& alpha, int bound = 6);

/// The interpolating coefficients at degree n: the unique solution of
/// h_k(contents of lambda) = sum_mu x_mu theta_mu(lambda) over all lambda
/// of n. Throws SingularThetaError if the system degenerates.
std::map<Partition, Rat, PartitionOutputOrder> a_alpha(int k, int n,
                                                       const Rat& alpha,
                                                       int bound = 6);

struct ConjectureInstance {
  Rat alpha;
  int n = 0;
  int k = 0;
  Partition rho;
  int m = 0;
  Rat lhs;
  Rat rhs;
  bool pass = false;
};

/// Checks the peeling relation for the interpolating coefficients at every
/// sampled alpha, size n <= n_max, degree k <= k_max, and every removal of a
/// distinct part m >= 2. Returns one record per instance.
std::vector<ConjectureInstance> conjecture_check(
    int k_max, int n_max, const std::vector<Rat>& alpha_samples,
    int bound = 6);

}  // namespace jmexpand
