#pragma once

#include "dpchroma/graph.hpp"
#include "dpchroma/perm.hpp"
#include "dpchroma/rng.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dpchroma {

/// m-fold cover of a graph with one full matching per edge, encoded as a
/// permutation per edge index: for edge i with endpoints u < v, sigma[i]
/// maps the color chosen at u to the color it forbids at v. The reverse
/// orientation implicitly carries the inverse permutation.
struct DPCover {
    std::shared_ptr<const Graph> graph;
    int fold = 1;
    std::vector<Perm> sigma;

    const Graph& g() const { return *graph; }
};

/// Per-edge twist counts of a star-normalized cover of a cone: for each
/// non-apex edge, x_i = fold - (number of fixed points of sigma_i); total
/// is the sum over those edges. Apex edges carry entry 0.
struct TwistStats {
    int apex = -1;
    std::vector<int> per_edge;
    long long total = 0;
};

/// Cover with every permutation the identity.
DPCover canonical_cover(std::shared_ptr<const Graph> g, int fold);

/// Gauge-normalizes a cover of a connected graph: composes per-vertex color
/// relabelings, propagated along the given spanning tree, so every tree
/// edge carries the identity. Transversal counts are preserved (a tested
/// invariant). Default tree is the BFS tree from vertex 0.
DPCover normalize(const DPCover& cover);
DPCover normalize(const DPCover& cover, EdgeMask tree);

/// True iff some relabeling makes every matching aligned, i.e. forest
/// normalization leaves only identities. Works for disconnected graphs.
bool is_canonically_labeled(const DPCover& cover);

/// Requires every edge at the apex to carry the identity (star-normalized).
TwistStats twist_stats(const DPCover& cover, int apex = -1);

/// Uniform random permutation on every edge (not normalized).
DPCover random_full_cover(std::shared_ptr<const Graph> g, int fold, SplitMix64& rng);

/// Apex edges identity, uniform random permutations elsewhere. When
/// require_twist is set, resamples until some permutation is non-identity.
DPCover random_star_cover(std::shared_ptr<const Graph> g, int fold, int apex,
                          SplitMix64& rng, bool require_twist);

/// {"m": k, "sigma": {"<edge-index>": [one-line images...]}}, identity
/// permutations omitted.
std::string cover_to_json(const DPCover& cover);
DPCover cover_from_json(std::shared_ptr<const Graph> g, std::string_view text);

} // namespace dpchroma
