#include "jmexpand/dyck.hpp"

#include <string>
#include <vector>

#include "jmexpand/errors.hpp"

namespace jmexpand {

Int catalan(int n) {
  if (n < 0) throw InvalidInputError("negative Catalan index");
  return binomial(2L * n, n) / (n + 1);
}

Int dyck_area_closed(int k) {
  if (k < 0) throw InvalidInputError("negative path half-length");
  return int_pow(4, static_cast<unsigned long>(k)) - binomial(2L * k + 1, k);
}

namespace {

/// Iterative depth-first enumeration of all Dyck paths of length 2k.
/// Visits each path once with its area: the geometric area between the path
/// and the axis. An up step from height h contributes h + 1/2, a down step
/// h - 1/2; the doubled running total stays integral.
template <typename Visit>
void for_each_dyck_path(int k, Visit&& visit) {
  if (k == 0) {
    visit(0L);
    return;
  }
  int steps = 2 * k;
  // per position: 0 = nothing tried yet, 1 = up tried, 2 = both tried
  std::vector<int> choice(static_cast<std::size_t>(steps), 0);
  std::vector<int> height(static_cast<std::size_t>(steps) + 1, 0);
  std::vector<long> twice_area(static_cast<std::size_t>(steps) + 1, 0);
  int pos = 0;
  while (pos >= 0) {
    if (pos == steps) {
      visit(twice_area[static_cast<std::size_t>(pos)] / 2);
      --pos;
      continue;
    }
    std::size_t p = static_cast<std::size_t>(pos);
    int h = height[p];
    int remaining = steps - pos;
    if (choice[p] == 0) {
      choice[p] = 1;
      // up is feasible iff the path can still come back to the axis
      if (h + 1 <= remaining - 1) {
        height[p + 1] = h + 1;
        twice_area[p + 1] = twice_area[p] + 2 * h + 1;
        ++pos;
        continue;
      }
    }
    if (choice[p] == 1) {
      choice[p] = 2;
      if (h > 0) {
        height[p + 1] = h - 1;
        twice_area[p + 1] = twice_area[p] + 2 * h - 1;
        ++pos;
        continue;
      }
    }
    choice[p] = 0;
    --pos;
  }
}

void check_dyck_limits(int k, const OracleLimits& limits) {
  if (k < 0) throw InvalidInputError("negative path half-length");
  if (k > limits.max_dyck_half_length) {
    throw ResourceGuardError("Dyck path enumeration beyond configured bound"
                             " (k=" + std::to_string(k) + ")");
  }
}

}  // namespace

Int dyck_area_bruteforce(int k, const OracleLimits& limits) {
  check_dyck_limits(k, limits);
  Int total = 0;
  for_each_dyck_path(k, [&](long area) { total += area; });
  return total;
}

Int dyck_path_count_bruteforce(int k, const OracleLimits& limits) {
  check_dyck_limits(k, limits);
  Int count = 0;
  for_each_dyck_path(k, [&](long) { count += 1; });
  return count;
}

Int composition_area(const WeakComposition& composition) {
  Int product = 1;
  for (int entry : composition.entries) product *= catalan(entry);
  Int total = 0;
  for (int entry : composition.entries) {
    total += dyck_area_closed(entry) * (product / catalan(entry));
  }
  return total;
}

bool lemma_area_check(int m) {
  if (m < 1) throw InvalidInputError("need m >= 1");
  Int lhs = dyck_area_closed(m - 1);
  Int rhs = Int(m - 1) * catalan(m - 1);
  for (int r = 1; r < m; ++r) {
    int s = m - r;
    rhs += dyck_area_closed(r - 1) * catalan(s - 1);
    rhs += dyck_area_closed(s - 1) * catalan(r - 1);
  }
  return lhs == rhs;
}

Int leading_b(const Partition& rho) {
  if (rho.empty()) throw InvalidInputError("need a nonempty partition");
  Int product = 1;
  for (int part : rho.parts()) product *= catalan(part - 1);
  return product;
}

Int subleading_b(const Partition& mu) {
  if (mu.empty()) throw InvalidInputError("need a nonempty partition");
  return composition_area(decrement_parts(mu));
}

}  // namespace jmexpand
