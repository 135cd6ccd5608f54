#pragma once

#include "dpchroma/bigint.hpp"
#include "dpchroma/cover.hpp"

namespace dpchroma {

/// 2^s inclusion-exclusion terms.
inline constexpr int kMaxInclusionExclusionEdges = 20;
/// Assignment space cap for the brute-force oracle.
inline constexpr long long kMaxBruteForceAssignments = 100'000'000;

/// Exact number of transversals (one color per vertex) such that for every
/// edge uv the colors satisfy color(v) != sigma_uv(color(u)). Backtracking
/// over the BFS order from vertex 0 with incremental forbidden sets;
/// bitmask fast path for fold <= 64, generic sets beyond.
BigInt count_colorings(const DPCover& cover);

/// Same contract by full enumeration of all fold^n assignments.
/// Independent oracle for count_colorings; throws CapacityError when
/// fold^n > kMaxBruteForceAssignments.
BigInt brute_force_count(const DPCover& cover);

/// Number of transversals that use a matching cross-edge on EVERY edge of
/// the query, i.e. color(v) == sigma_uv(color(u)) for each queried edge.
/// Computed per component of the query subgraph: a spanning tree chains the
/// fibers together and each cotree edge restricts the root color to the
/// fixed points of its holonomy. Query must be a nonempty valid edge mask.
BigInt bad_intersection_count(const DPCover& cover, EdgeMask query);

/// fold^n plus the alternating sum of bad_intersection_count over all
/// nonempty edge subsets. Equals count_colorings (a tested identity).
/// Throws CapacityError when edge_count() > kMaxInclusionExclusionEdges.
BigInt inclusion_exclusion_count(const DPCover& cover);

/// Number of transversals using a matching cross-edge on every edge, for a
/// canonically labeled cover of a connected graph; always the fold size.
/// Throws ValidationError when the cover is not canonically labeled or the
/// graph is disconnected.
BigInt count_full_transversals(const DPCover& cover);

/// Exact count via whichever route is feasible: backtracking when the
/// assignment space is small, the inclusion-exclusion identity when the
/// edge count permits (exactness is route-independent, a tested invariant).
BigInt count_colorings_auto(const DPCover& cover);

} // namespace dpchroma
