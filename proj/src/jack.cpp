#include "jmexpand/jack.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "jmexpand/errors.hpp"

namespace jmexpand {

std::vector<Rat> alpha_contents(const Partition& lambda, const Rat& alpha) {
  std::vector<Rat> contents;
  contents.reserve(static_cast<std::size_t>(lambda.sum()));
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      contents.push_back(alpha * j - i);
    }
  }
  return contents;
}

Rat h_on_multiset(int k, const std::vector<Rat>& values) {
  if (k < 0) throw InvalidInputError("negative degree k");
  std::vector<Rat> h(static_cast<std::size_t>(k) + 1, Rat(0));
  h[0] = 1;
  for (const Rat& value : values) {
    for (int d = 1; d <= k; ++d) {
      h[static_cast<std::size_t>(d)] +=
          value * h[static_cast<std::size_t>(d - 1)];
    }
  }
  return h[static_cast<std::size_t>(k)];
}

namespace {

/// Coefficient of the monomial symmetric function m_lambda in the power-sum
/// product p_mu: the number of maps from the parts of mu onto the columns of
/// lambda such that each column receives parts summing to its entry.
Int power_in_monomial(const Partition& mu, const Partition& lambda) {
  std::vector<int> remaining = lambda.parts();
  const std::vector<int>& parts = mu.parts();
  std::function<Int(std::size_t)> assign = [&](std::size_t index) -> Int {
    if (index == parts.size()) {
      for (int r : remaining) {
        if (r != 0) return 0;
      }
      return 1;
    }
    Int count = 0;
    for (std::size_t slot = 0; slot < remaining.size(); ++slot) {
      if (remaining[slot] < parts[index]) continue;
      remaining[slot] -= parts[index];
      count += assign(index + 1);
      remaining[slot] += parts[index];
    }
    return count;
  };
  return assign(0);
}

using Matrix = std::vector<std::vector<Rat>>;

/// Inverts a square matrix in place by Gauss-Jordan elimination.
Matrix invert(Matrix m) {
  std::size_t size = m.size();
  Matrix inv(size, std::vector<Rat>(size, Rat(0)));
  for (std::size_t i = 0; i < size; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) throw SingularThetaError("singular transition matrix");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rat lead = m[col][col];
    for (std::size_t j = 0; j < size; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat factor = m[row][col];
      for (std::size_t j = 0; j < size; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<Rat> solve(Matrix m, std::vector<Rat> rhs) {
  std::size_t size = m.size();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) {
      throw SingularThetaError("theta matrix is singular at this alpha");
    }
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    Rat lead = m[col][col];
    for (std::size_t j = col; j < size; ++j) m[col][j] /= lead;
    rhs[col] /= lead;
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat factor = m[row][col];
      for (std::size_t j = col; j < size; ++j) {
        m[row][j] -= factor * m[col][j];
      }
      rhs[row] -= factor * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

JackBasis::JackBasis(int n, const Rat& alpha, int bound)
    : n_(n), alpha_(alpha), partitions_(partitions_of(n)) {
  if (n < 0) throw InvalidInputError("negative degree");
  if (n > bound) {
    throw ResourceGuardError("Jack basis beyond configured bound (n=" +
                             std::to_string(n) + ")");
  }
  std::size_t size = partitions_.size();

  // transition matrices between the power-sum and monomial bases
  Matrix p_to_m(size, std::vector<Rat>(size, Rat(0)));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      p_to_m[i][j] = Rat(power_in_monomial(partitions_[i], partitions_[j]));
    }
  }
  Matrix m_to_p = invert(std::move(p_to_m));

  // diagonal inner product weights z_lambda * alpha^{l(lambda)}
  std::vector<Rat> weight(size);
  for (std::size_t i = 0; i < size; ++i) {
    Rat pow(1);
    for (int t = 0; t < partitions_[i].length(); ++t) pow *= alpha_;
    weight[i] = Rat(symmetrizer_order(partitions_[i])) * pow;
  }
  auto dot = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
    Rat total(0);
    for (std::size_t t = 0; t < u.size(); ++t) total += u[t] * v[t] * weight[t];
    return total;
  };

  // Gram-Schmidt from the bottom of the dominance order upward; the index
  // order is decreasing lexicographic, so walk it backwards
  theta_.assign(size, {});
  std::vector<Rat> norms(size);
  std::size_t ones_index = size - 1;  // (1^n) is last in the index order
  for (std::size_t step = 0; step < size; ++step) {
    std::size_t i = size - 1 - step;
    std::vector<Rat> vec = m_to_p[i];
    for (std::size_t done = size - 1; done > i; --done) {
      if (norms[done] == 0) {
        throw DegenerateGramError(
            "Gram-Schmidt pivot vanished at alpha = " + to_decimal(alpha_));
      }
      Rat coeff = dot(vec, theta_[done]) / norms[done];
      for (std::size_t t = 0; t < size; ++t) {
        vec[t] -= coeff * theta_[done][t];
      }
    }
    if (vec[ones_index] == 0) {
      throw DegenerateGramError("normalization vanished at alpha = " +
                                to_decimal(alpha_));
    }
    Rat scale = vec[ones_index];
    for (Rat& entry : vec) entry /= scale;
    theta_[i] = std::move(vec);
    norms[i] = dot(theta_[i], theta_[i]);
  }
}

int JackBasis::index_of(const Partition& p) const {
  auto it = std::find(partitions_.begin(), partitions_.end(), p);
  if (it == partitions_.end()) {
    throw InvalidInputError("partition " + partition_to_string(p) +
                            " is not of degree " + std::to_string(n_));
  }
  return static_cast<int>(it - partitions_.begin());
}

const Rat& JackBasis::theta(const Partition& mu,
                            const Partition& lambda) const {
  return theta_[static_cast<std::size_t>(index_of(lambda))]
               [static_cast<std::size_t>(index_of(mu))];
}

std::map<Partition, Rat, PartitionOutputOrder> JackBasis::power_sum_expansion(
    const Partition& lambda) const {
  std::map<Partition, Rat, PartitionOutputOrder> out;
  std::size_t li = static_cast<std::size_t>(index_of(lambda));
  for (std::size_t mi = 0; mi < partitions_.size(); ++mi) {
    out[partitions_[mi]] = theta_[li][mi];
  }
  return out;
}

Rat JackBasis::inner(const Partition& lambda, const Partition& mu) const {
  std::size_t li = static_cast<std::size_t>(index_of(lambda));
  std::size_t mi = static_cast<std::size_t>(index_of(mu));
  Rat total(0);
  for (std::size_t t = 0; t < partitions_.size(); ++t) {
    Rat pow(1);
    for (int e = 0; e < partitions_[t].length(); ++e) pow *= alpha_;
    total += theta_[li][t] * theta_[mi][t] *
             Rat(symmetrizer_order(partitions_[t])) * pow;
  }
  return total;
}

std::map<Partition, Rat, PartitionOutputOrder> jack_in_power_basis(
    const Partition& lambda, const Rat& alpha, int bound) {
  JackBasis basis(lambda.sum(), alpha, bound);
  return basis.power_sum_expansion(lambda);
}

std::map<Partition, Rat, PartitionOutputOrder> a_alpha(int k, int n,
                                                       const Rat& alpha,
                                                       int bound) {
  if (k < 0) throw InvalidInputError("negative degree k");
  JackBasis basis(n, alpha, bound);
  const std::vector<Partition>& parts = basis.partitions();
  std::size_t size = parts.size();
  Matrix system(size, std::vector<Rat>(size));
  std::vector<Rat> rhs(size);
  for (std::size_t li = 0; li < size; ++li) {
    for (std::size_t mi = 0; mi < size; ++mi) {
      system[li][mi] = basis.theta(parts[mi], parts[li]);
    }
    rhs[li] = h_on_multiset(k, alpha_contents(parts[li], alpha));
  }
  std::vector<Rat> solution = solve(std::move(system), std::move(rhs));
  std::map<Partition, Rat, PartitionOutputOrder> out;
  for (std::size_t mi = 0; mi < size; ++mi) out[parts[mi]] = solution[mi];
  return out;
}

std::vector<ConjectureInstance> conjecture_check(
    int k_max, int n_max, const std::vector<Rat>& alpha_samples, int bound) {
  std::vector<ConjectureInstance> instances;
  for (const Rat& alpha : alpha_samples) {
    for (int n = 2; n <= n_max; ++n) {
      std::vector<std::map<Partition, Rat, PartitionOutputOrder>> table;
      table.reserve(static_cast<std::size_t>(k_max) + 1);
      for (int k = 0; k <= k_max; ++k) {
        table.push_back(a_alpha(k, n, alpha, bound));
      }
      for (int k = 1; k <= k_max; ++k) {
        const auto& now = table[static_cast<std::size_t>(k)];
        const auto& prev = table[static_cast<std::size_t>(k - 1)];
        for (const Partition& mu : partitions_of(n)) {
          for (auto [m, mult] : mu.grouped_parts()) {
            if (m < 2) continue;
            Partition rho = mu.remove_part(m);
            Rat rhs(0);
            for (int r = 1; r < m; ++r) {
              rhs += prev.at(rho.add_part(r).add_part(m - r));
            }
            for (auto [value, count] : rho.grouped_parts()) {
              rhs += alpha * value * count *
                     prev.at(rho.remove_part(value).add_part(value + m));
            }
            rhs += (alpha - 1) * (m - 1) * prev.at(mu);
            Rat lhs = now.at(mu);
            instances.push_back(ConjectureInstance{
                alpha, n, k, rho, m, lhs, rhs, lhs == rhs});
          }
        }
      }
    }
  }
  return instances;
}

}  // namespace jmexpand
