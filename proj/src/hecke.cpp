#include "jmexpand/hecke.hpp"

#include <cassert>
#include <mutex>
#include <string>
#include <utility>

#include "jmexpand/errors.hpp"

namespace jmexpand {

namespace {

void check_hecke_limits(int k, int n, const OracleLimits& limits) {
  if (k < 0) throw InvalidInputError("negative degree k");
  if (n < 0) throw InvalidInputError("negative ambient size n");
  if (n > limits.max_hecke_n || k > limits.max_degree) {
    throw ResourceGuardError(
        "Hecke expansion beyond configured bounds (n=" + std::to_string(n) +
        ", k=" + std::to_string(k) + ")");
  }
}

}  // namespace

bool in_hyperoctahedral(const Permutation& sigma) {
  if (sigma.degree() % 2 != 0) return false;
  for (int x = 0; x < sigma.degree(); x += 2) {
    if (sigma.apply(bar(x)) != bar(sigma.apply(x))) return false;
  }
  return true;
}

std::vector<Permutation> hyperoctahedral_group(int n) {
  if (n < 0) throw InvalidInputError("negative ambient size n");
  std::vector<Permutation> elements;
  // signed permutations: a permutation of the pairs plus a swap bit per pair
  for_each_permutation(n, [&](const Permutation& pi) {
    for (unsigned long swaps = 0; swaps < (1ul << n); ++swaps) {
      std::vector<int> images(static_cast<std::size_t>(2 * n));
      for (int t = 0; t < n; ++t) {
        int target = 2 * pi.apply(t);
        bool flip = (swaps >> t) & 1ul;
        images[static_cast<std::size_t>(2 * t)] = flip ? bar(target) : target;
        images[static_cast<std::size_t>(2 * t + 1)] =
            flip ? target : bar(target);
      }
      elements.push_back(Permutation(std::move(images)));
    }
  });
  return elements;
}

GroupAlgebraElement hyperoctahedral_sum(int n, const OracleLimits& limits) {
  check_hecke_limits(0, n, limits);
  GroupAlgebraElement x(2 * n);
  for (const Permutation& h : hyperoctahedral_group(n)) x.add(h, 1);
  return x;
}

Partition coset_type(const Permutation& sigma) {
  if (sigma.degree() % 2 != 0) {
    throw InvalidInputError("coset type needs an even degree");
  }
  // each vertex carries one solid edge (to its partner) and one dashed edge
  // (to sigma(bar(sigma^{-1}(v)))); alternate them along each cycle
  Permutation inv = sigma.inverse();
  auto dashed = [&](int v) { return sigma.apply(bar(inv.apply(v))); };
  std::vector<bool> seen(static_cast<std::size_t>(sigma.degree()), false);
  std::vector<int> half_lengths;
  for (int start = 0; start < sigma.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    int v = start;
    bool take_solid = true;
    do {
      seen[static_cast<std::size_t>(v)] = true;
      v = take_solid ? bar(v) : dashed(v);
      take_solid = !take_solid;
      ++length;
    } while (v != start);
    assert(length % 2 == 0);
    half_lengths.push_back(length / 2);
  }
  return Partition::from_unsorted(std::move(half_lengths));
}

GroupAlgebraElement odd_jm(int i, int n) {
  if (i < 1 || i > n) {
    throw IndexOutOfRangeError("odd Jucys-Murphy index " + std::to_string(i) +
                               " outside 1.." + std::to_string(n));
  }
  GroupAlgebraElement x(2 * n);
  int point = 2 * (i - 1);
  for (int j = 0; j < point; ++j) {
    x.add(Permutation::transposition(2 * n, j, point), 1);
  }
  return x;
}

GroupAlgebraElement evaluate_in_odd_jm(SymFamily family, int k, int n,
                                       const OracleLimits& limits) {
  check_hecke_limits(k, n, limits);
  int degree = 2 * n;
  switch (family) {
    case SymFamily::Complete: {
      std::vector<GroupAlgebraElement> h(static_cast<std::size_t>(k) + 1,
                                         GroupAlgebraElement::zero(degree));
      h[0] = GroupAlgebraElement::unit(degree);
      for (int i = 1; i <= n; ++i) {
        GroupAlgebraElement ji = odd_jm(i, n);
        for (int j = 1; j <= k; ++j) {
          h[static_cast<std::size_t>(j)] +=
              ji * h[static_cast<std::size_t>(j - 1)];
        }
      }
      return h[static_cast<std::size_t>(k)];
    }
    case SymFamily::Elementary: {
      std::vector<GroupAlgebraElement> e(static_cast<std::size_t>(k) + 1,
                                         GroupAlgebraElement::zero(degree));
      e[0] = GroupAlgebraElement::unit(degree);
      for (int i = 1; i <= n; ++i) {
        GroupAlgebraElement ji = odd_jm(i, n);
        for (int j = k; j >= 1; --j) {
          e[static_cast<std::size_t>(j)] +=
              ji * e[static_cast<std::size_t>(j - 1)];
        }
      }
      return e[static_cast<std::size_t>(k)];
    }
    case SymFamily::PowerSum: {
      if (k == 0) {
        GroupAlgebraElement x = GroupAlgebraElement::unit(degree);
        x *= Int(n);
        return x;
      }
      GroupAlgebraElement total(degree);
      for (int i = 1; i <= n; ++i) {
        GroupAlgebraElement ji = odd_jm(i, n);
        GroupAlgebraElement power = GroupAlgebraElement::unit(degree);
        for (int j = 0; j < k; ++j) power = power * ji;
        total += power;
      }
      return total;
    }
  }
  throw InvalidInputError("unknown family");
}

CosetExpansion::CosetExpansion(int n) : n_(n) {
  for (const Partition& mu : partitions_of(n)) coeffs_[mu] = 0;
}

const Int& CosetExpansion::at(const Partition& mu) const {
  auto it = coeffs_.find(mu);
  if (it == coeffs_.end()) {
    throw InvalidInputError("partition " + partition_to_string(mu) +
                            " does not index a coset type for n=" +
                            std::to_string(n_));
  }
  return it->second;
}

void CosetExpansion::set(const Partition& mu, Int value) {
  auto it = coeffs_.find(mu);
  if (it == coeffs_.end()) {
    throw InvalidInputError("partition " + partition_to_string(mu) +
                            " does not index a coset type for n=" +
                            std::to_string(n_));
  }
  it->second = std::move(value);
}

const std::map<Partition, Int, PartitionOutputOrder>& double_coset_sizes(
    int n, const OracleLimits& limits) {
  check_hecke_limits(0, n, limits);
  static std::mutex mutex;
  static std::map<int, std::map<Partition, Int, PartitionOutputOrder>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::map<Partition, Int, PartitionOutputOrder> sizes;
  for (const Partition& mu : partitions_of(n)) sizes[mu] = 0;
  for_each_permutation(2 * n, [&](const Permutation& sigma) {
    sizes[coset_type(sigma)] += 1;
  });
  return cache.emplace(n, std::move(sizes)).first->second;
}

CosetExpansion coset_expansion(const GroupAlgebraElement& x,
                               const OracleLimits& limits) {
  if (x.degree() % 2 != 0) {
    throw InvalidInputError("coset expansion needs an even degree");
  }
  int n = x.degree() / 2;
  struct Bucket {
    Int value;
    Int count;
  };
  std::map<Partition, Bucket, PartitionOutputOrder> buckets;
  for (const auto& [sigma, coeff] : x.terms()) {
    Partition type = coset_type(sigma);
    auto [it, inserted] = buckets.try_emplace(type, Bucket{coeff, 1});
    if (!inserted) {
      if (it->second.value != coeff) {
        throw NotBiInvariantError(
            "coefficients differ within the double coset of type " +
            partition_to_string(type));
      }
      ++it->second.count;
    }
  }
  const auto& sizes = double_coset_sizes(n, limits);
  CosetExpansion expansion(n);
  for (const auto& [type, bucket] : buckets) {
    if (bucket.count != sizes.at(type)) {
      throw NotBiInvariantError("double coset of type " +
                                partition_to_string(type) +
                                " is only partially supported");
    }
    expansion.set(type, bucket.value);
  }
  return expansion;
}

CosetExpansion b_expansion_oracle(SymFamily family, int k, int n,
                                  const OracleLimits& limits) {
  check_hecke_limits(k, n, limits);
  GroupAlgebraElement f = evaluate_in_odd_jm(family, k, n, limits);
  return coset_expansion(f * hyperoctahedral_sum(n, limits), limits);
}

bool hecke_ek_check(int k, int n, const OracleLimits& limits) {
  if (k < 0 || k > n) throw InvalidInputError("need 0 <= k <= n");
  check_hecke_limits(k, n, limits);
  CosetExpansion lhs = b_expansion_oracle(SymFamily::Elementary, k, n, limits);
  for (const auto& [mu, coeff] : lhs.coefficients()) {
    Int expected = (mu.sum() - mu.length() == k) ? 1 : 0;
    if (coeff != expected) return false;
  }
  return true;
}

}  // namespace jmexpand
