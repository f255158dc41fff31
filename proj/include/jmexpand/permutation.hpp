#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "jmexpand/partition.hpp"

namespace jmexpand {

/// A permutation of {0, ..., N-1} in one-line image form.
class Permutation {
 public:
  Permutation() = default;  // the unique permutation of the empty set

  /// Validates that images is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// The transposition (a b) in S_n, 0-based points.
  static Permutation transposition(int n, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[static_cast<std::size_t>(x)]; }
  int operator[](int x) const { return apply(x); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  Partition cycle_type() const;
  int cycle_count() const;
  int fixed_points() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

  /// Product sigma * tau applies tau first, then sigma.
  friend Permutation operator*(const Permutation& sigma,
                               const Permutation& tau);

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Visits every element of S_n once, in lexicographic image order.
template <typename F>
void for_each_permutation(int n, F&& visit) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  do {
    visit(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace jmexpand
