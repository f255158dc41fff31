#include "jmexpand/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "jmexpand/errors.hpp"

namespace jmexpand {

namespace {

void check_parts_positive(const std::vector<int>& parts) {
  for (int v : parts) {
    if (v < 1) {
      throw InvalidInputError("partition parts must be positive, got " +
                              std::to_string(v));
    }
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts_positive(parts_);
  if (!std::is_sorted(parts_.rbegin(), parts_.rend())) {
    throw InvalidInputError("partition parts must be weakly decreasing");
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  check_parts_positive(parts);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

int Partition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::largest() const {
  if (parts_.empty()) throw InvalidInputError("empty partition has no parts");
  return parts_.front();
}

int Partition::smallest() const {
  if (parts_.empty()) throw InvalidInputError("empty partition has no parts");
  return parts_.back();
}

int Partition::count_ones() const { return multiplicity(1); }

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

bool Partition::contains_part(int v) const {
  return std::find(parts_.begin(), parts_.end(), v) != parts_.end();
}

Partition Partition::remove_part(int v) const {
  auto it = std::find(parts_.begin(), parts_.end(), v);
  if (it == parts_.end()) {
    throw NoSuchPartError("no part equal to " + std::to_string(v) + " in " +
                          partition_to_string(*this));
  }
  Partition out;
  out.parts_.reserve(parts_.size() - 1);
  out.parts_.insert(out.parts_.end(), parts_.begin(), it);
  out.parts_.insert(out.parts_.end(), std::next(it), parts_.end());
  return out;
}

Partition Partition::add_part(int v) const {
  if (v < 1) {
    throw InvalidInputError("cannot add non-positive part " +
                            std::to_string(v));
  }
  Partition out;
  out.parts_.reserve(parts_.size() + 1);
  auto it = std::lower_bound(parts_.begin(), parts_.end(), v,
                             std::greater<int>());
  out.parts_.insert(out.parts_.end(), parts_.begin(), it);
  out.parts_.push_back(v);
  out.parts_.insert(out.parts_.end(), it, parts_.end());
  return out;
}

std::pair<Partition, int> Partition::strip_ones() const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), 1,
                             std::greater<int>());
  // parts are weakly decreasing, so everything from the first 1 on is a 1
  while (it != parts_.end() && *it > 1) ++it;
  Partition stripped;
  stripped.parts_.assign(parts_.begin(), it);
  return {stripped, static_cast<int>(parts_.end() - it)};
}

Partition Partition::append_ones(int count) const {
  if (count < 0) throw InvalidInputError("negative number of parts");
  Partition out;
  out.parts_ = parts_;
  out.parts_.insert(out.parts_.end(), static_cast<std::size_t>(count), 1);
  return out;
}

std::vector<std::pair<int, int>> Partition::grouped_parts() const {
  std::vector<std::pair<int, int>> groups;
  for (int v : parts_) {
    if (!groups.empty() && groups.back().first == v) {
      ++groups.back().second;
    } else {
      groups.emplace_back(v, 1);
    }
  }
  return groups;
}

bool PartitionOutputOrder::operator()(const Partition& a,
                                      const Partition& b) const {
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

std::size_t PartitionHash::operator()(const Partition& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.parts()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidInputError("partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> descend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(Partition(current));
      return;
    }
    for (int v = std::min(max_part, remaining); v >= 1; --v) {
      current.push_back(v);
      descend(remaining - v, v);
      current.pop_back();
    }
  };
  descend(n, n);
  return out;
}

Partition parse_partition(const std::string& text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw InvalidInputError("malformed partition: '" + text + "'");
    }
    if (pos != item.size()) {
      throw InvalidInputError("malformed partition: '" + text + "'");
    }
    parts.push_back(v);
  }
  if (parts.empty()) {
    throw InvalidInputError("malformed partition: '" + text + "'");
  }
  return Partition::from_unsorted(std::move(parts));
}

std::string partition_to_string(const Partition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

Int symmetrizer_order(const Partition& lambda) {
  Int z = 1;
  for (auto [value, mult] : lambda.grouped_parts()) {
    z *= int_pow(static_cast<unsigned long>(value),
                 static_cast<unsigned long>(mult));
    z *= factorial(mult);
  }
  return z;
}

WeakComposition::WeakComposition(std::vector<int> e) : entries(std::move(e)) {
  for (int v : entries) {
    if (v < 0) {
      throw InvalidInputError("weak composition entries must be >= 0");
    }
  }
}

int WeakComposition::sum() const {
  return std::accumulate(entries.begin(), entries.end(), 0);
}

WeakComposition decrement_parts(const Partition& mu) {
  std::vector<int> entries;
  entries.reserve(mu.parts().size());
  for (int v : mu.parts()) entries.push_back(v - 1);
  return WeakComposition(std::move(entries));
}

}  // namespace jmexpand
