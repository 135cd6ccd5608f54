#pragma once

#include "dpchroma/cover.hpp"
#include "dpchroma/report.hpp"

namespace dpchroma {

/// Exact-sum checks are skipped (with explicit status) above this size of
/// |V(M)| + |E(G)| for the cone subset-sum report.
inline constexpr int kConeSubsetExactLimit = 14;

/// Exhaustively checks, for a full cover of a connected graph with finite
/// girth g, the sizes of the intersections of "bad" sets over every edge
/// subset: equality fold^(n-k) for subsets of size k <= g-1; at most
/// fold^(n-g+1) for size-g subsets with equality fold^(n-g) when the subset
/// is not the edge set of a g-cycle; and at most fold^(n-g) for larger
/// subsets.
CheckReport intersection_bounds_report(const DPCover& cover);

/// Checks the five subset-sum bounds for a star-normalized cover of a cone
/// M (apex edges identity): with n = |V(M)|, s = |E(M)| - (n-1), t the
/// triangle count, x the total twist and p3..p6 the spanning-subgraph
/// classification of M,
///   (i)   sum over size-3 subsets <= t m^(n-2) - x m^(n-3) + p3 m^(n-3)
///   (ii)  sum over size-4 subsets >= p4 m^(n-3) - 2 p4 x m^(n-4)
///   (iii) sum over size-5 subsets <= p5 m^(n-3) + (C(n+s,5) - p5) m^(n-4)
///   (iv)  sum over size-6 subsets >= p6 m^(n-3) - 2 p6 x m^(n-4)
///   (v)   for each k >= 7, sum over size-k subsets <= C(n+s,k) m^(n-4).
CheckReport cone_subset_sums_report(const DPCover& cover, int apex = -1);

} // namespace dpchroma
