#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jmexpand/exact.hpp"

namespace jmexpand {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// Immutable; every operation returns a fresh value.
class Partition {
 public:
  Partition() = default;

  /// Validates the invariant (weakly decreasing, all parts >= 1).
  explicit Partition(std::vector<int> parts);

  /// Sorts the given parts; still rejects non-positive entries.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int length() const { return static_cast<int>(parts_.size()); }
  int sum() const;
  int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int largest() const;
  int smallest() const;

  /// Number of parts equal to one.
  int count_ones() const;
  int multiplicity(int v) const;
  bool contains_part(int v) const;

  /// Removes one part equal to v. Throws NoSuchPartError.
  Partition remove_part(int v) const;

  /// Inserts a part equal to v >= 1 at its sorted place.
  Partition add_part(int v) const;

  /// Splits off the parts equal to one: returns (stripped partition, count).
  std::pair<Partition, int> strip_ones() const;

  Partition append_ones(int count) const;

  /// (value, multiplicity) pairs in decreasing value order.
  std::vector<std::pair<int, int>> grouped_parts() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Comparator for the stable output order: decreasing lexicographic, i.e.
/// (n) first and (1^n) last among partitions of n.
struct PartitionOutputOrder {
  bool operator()(const Partition& a, const Partition& b) const;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const;
};

/// All partitions of n, each exactly once, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Parses the text syntax: comma-separated parts ("3,1,1"); "-" denotes the
/// empty partition. Parts may be given in any order.
Partition parse_partition(const std::string& text);

/// Inverse of parse_partition ("-" for the empty partition).
std::string partition_to_string(const Partition& p);

/// Order of the centralizer of a permutation of cycle type lambda:
/// prod_i i^{m_i} m_i!.
Int symmetrizer_order(const Partition& lambda);

/// A sequence of non-negative integers.
struct WeakComposition {
  std::vector<int> entries;

  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> e);

  int length() const { return static_cast<int>(entries.size()); }
  int sum() const;
};

/// mu - 1: every part decremented by one, kept in place (entries may be 0).
WeakComposition decrement_parts(const Partition& mu);

}  // namespace jmexpand
