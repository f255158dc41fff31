#include "jmexpand/permutation.hpp"

#include <string>

#include "jmexpand/errors.hpp"

namespace jmexpand {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInputError("image sequence is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw InvalidInputError("negative degree");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw IndexOutOfRangeError("transposition point out of range");
  }
  if (a == b) throw InvalidInputError("transposition needs two distinct points");
  Permutation p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a)],
            p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) {
    inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  }
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    int x = start;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      x = images_[static_cast<std::size_t>(x)];
      ++length;
    }
    lengths.push_back(length);
  }
  return Partition::from_unsorted(std::move(lengths));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++cycles;
    int x = start;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      x = images_[static_cast<std::size_t>(x)];
    }
  }
  return cycles;
}

int Permutation::fixed_points() const {
  int count = 0;
  for (int x = 0; x < degree(); ++x) {
    if (images_[static_cast<std::size_t>(x)] == x) ++count;
  }
  return count;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[static_cast<std::size_t>(x)] != x) return false;
  }
  return true;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) {
    throw InvalidInputError("degree mismatch in permutation product: " +
                            std::to_string(sigma.degree()) + " vs " +
                            std::to_string(tau.degree()));
  }
  std::vector<int> images(static_cast<std::size_t>(sigma.degree()));
  for (int x = 0; x < sigma.degree(); ++x) {
    images[static_cast<std::size_t>(x)] = sigma.apply(tau.apply(x));
  }
  Permutation p;
  // both factors are bijections, skip revalidation
  p.images_ = std::move(images);
  return p;
}

}  // namespace jmexpand
