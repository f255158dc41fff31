#pragma once

#include "jmexpand/exact.hpp"
#include "jmexpand/group_algebra.hpp"
#include "jmexpand/partition.hpp"

namespace jmexpand {

/// Cat_n = binom(2n, n) / (n + 1).
Int catalan(int n);

/// Total area below all Dyck paths of length 2k: 4^k - binom(2k+1, k).
Int dyck_area_closed(int k);

/// Same quantity by enumerating every path. The area of one path is the
/// geometric area between the path and the axis (so the single path of
/// length 2 has area 1). Guarded for k beyond the configured bound.
Int dyck_area_bruteforce(int k, const OracleLimits& limits = {});

/// Number of Dyck paths of length 2k by enumeration (a Catalan oracle).
Int dyck_path_count_bruteforce(int k, const OracleLimits& limits = {});

/// Total area over concatenations of Dyck paths of lengths 2*i_1, 2*i_2, ...:
/// sum_j area(i_j) * prod_{t != j} Cat(i_t).
Int composition_area(const WeakComposition& composition);

/// First-return identity for the total area:
/// area(m-1) = (m-1) Cat(m-1) + sum_{r+s=m} (area(r-1) Cat(s-1) +
/// area(s-1) Cat(r-1)).
bool lemma_area_check(int m);

/// The coefficient b at its maximal degree |rho| - l(rho): a product of
/// Catalan numbers.
Int leading_b(const Partition& rho);

/// The coefficient b one degree above the maximum: the total Dyck area of
/// the decremented-parts composition.
Int subleading_b(const Partition& mu);

}  // namespace jmexpand
