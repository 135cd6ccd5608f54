#include "dpchroma/cover.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace dpchroma {

namespace {

void validate_cover(const DPCover& c) {
    if (!c.graph) throw ValidationError("cover has no graph");
    if (c.fold < 1) throw ValidationError("fold size must be >= 1");
    if (static_cast<int>(c.sigma.size()) != c.g().edge_count())
        throw ValidationError("cover needs one permutation per edge");
    for (const auto& p : c.sigma)
        if (p.size() != c.fold) throw ValidationError("permutation degree differs from fold size");
}

// sigma' with out[pi_u(j)] = pi_v(sigma(j)): the matching expressed in the
// relabeled fiber coordinates at both endpoints
Perm relabel_matching(const Perm& sigma, const Perm& pi_u, const Perm& pi_v) {
    const int m = sigma.size();
    std::vector<int> img(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) img[static_cast<std::size_t>(pi_u.image(j))] = pi_v.image(sigma.image(j));
    return Perm::unchecked(std::move(img));
}

// Per-vertex relabelings making every tree edge the identity, propagated
// from the given roots across tree_mask edges. Covers every vertex when the
// roots list has one entry per component of (V, tree_mask).
std::vector<Perm> tree_relabelings(const DPCover& c, EdgeMask tree_mask, const std::vector<int>& roots) {
    const Graph& g = c.g();
    const int n = g.vertex_count();
    std::vector<Perm> pi(static_cast<std::size_t>(n));
    std::vector<char> done(static_cast<std::size_t>(n), 0);
    std::vector<int> queue;
    for (int root : roots) {
        queue.assign(1, root);
        pi[static_cast<std::size_t>(root)] = Perm::identity(c.fold);
        done[static_cast<std::size_t>(root)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for (int w : g.neighbors(x)) {
                if (done[static_cast<std::size_t>(w)]) continue;
                const int ei = g.edge_index(x, w);
                if (!(tree_mask & (EdgeMask{1} << ei))) continue;
                const Edge& e = g.edge(ei);
                const Perm& sigma = c.sigma[static_cast<std::size_t>(ei)];
                // want relabel_matching(sigma, pi_u, pi_v) == identity
                if (x == e.u)
                    pi[static_cast<std::size_t>(w)] = compose(inverse(sigma), pi[static_cast<std::size_t>(x)]);
                else
                    pi[static_cast<std::size_t>(w)] = compose(sigma, pi[static_cast<std::size_t>(x)]);
                done[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!done[static_cast<std::size_t>(v)]) throw ValidationError("edge set does not span the graph");
    return pi;
}

DPCover apply_relabelings(const DPCover& c, const std::vector<Perm>& pi) {
    DPCover out;
    out.graph = c.graph;
    out.fold = c.fold;
    out.sigma.reserve(c.sigma.size());
    const Graph& g = c.g();
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        out.sigma.push_back(relabel_matching(c.sigma[static_cast<std::size_t>(i)],
                                             pi[static_cast<std::size_t>(e.u)],
                                             pi[static_cast<std::size_t>(e.v)]));
    }
    return out;
}

} // namespace

DPCover canonical_cover(std::shared_ptr<const Graph> g, int fold) {
    if (!g) throw ValidationError("cover has no graph");
    if (fold < 1) throw ValidationError("fold size must be >= 1");
    DPCover c;
    c.graph = std::move(g);
    c.fold = fold;
    c.sigma.assign(static_cast<std::size_t>(c.g().edge_count()), Perm::identity(fold));
    return c;
}

DPCover normalize(const DPCover& cover) { return normalize(cover, spanning_tree(cover.g())); }

DPCover normalize(const DPCover& cover, EdgeMask tree) {
    validate_cover(cover);
    if (!cover.g().is_connected()) throw ValidationError("normalization requires a connected graph");
    if (component_count(cover.g(), tree) != 1 || popcount(tree) != cover.g().vertex_count() - 1)
        throw ValidationError("edge mask is not a spanning tree");
    return apply_relabelings(cover, tree_relabelings(cover, tree, {0}));
}

bool is_canonically_labeled(const DPCover& cover) {
    validate_cover(cover);
    // forest normalization works per component, so disconnected graphs are fine
    const Graph& g = cover.g();
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> roots;
    EdgeMask forest = 0;
    for (int r = 0; r < g.vertex_count(); ++r) {
        if (seen[static_cast<std::size_t>(r)]) continue;
        roots.push_back(r);
        std::vector<int> queue{r};
        seen[static_cast<std::size_t>(r)] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int w : g.neighbors(queue[head])) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                forest |= EdgeMask{1} << g.edge_index(queue[head], w);
                queue.push_back(w);
            }
        }
    }
    DPCover norm = apply_relabelings(cover, tree_relabelings(cover, forest, roots));
    return std::all_of(norm.sigma.begin(), norm.sigma.end(), [](const Perm& p) { return p.is_identity(); });
}

TwistStats twist_stats(const DPCover& cover, int apex) {
    validate_cover(cover);
    const Graph& g = cover.g();
    if (apex < 0) apex = find_apex(g);
    if (apex < 0) throw ValidationError("no apex vertex: graph is not a cone");
    if (g.degree(apex) != g.vertex_count() - 1)
        throw ValidationError("apex is not adjacent to every other vertex");

    TwistStats stats;
    stats.apex = apex;
    stats.per_edge.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        if (e.u == apex || e.v == apex) {
            if (!cover.sigma[static_cast<std::size_t>(i)].is_identity())
                throw ValidationError("cover is not star-normalized: apex edge " + std::to_string(i) +
                                      " is not the identity");
            continue;
        }
        const int x = cover.sigma[static_cast<std::size_t>(i)].twist();
        stats.per_edge[static_cast<std::size_t>(i)] = x;
        stats.total += x;
    }
    return stats;
}

DPCover random_full_cover(std::shared_ptr<const Graph> g, int fold, SplitMix64& rng) {
    DPCover c = canonical_cover(std::move(g), fold);
    for (auto& p : c.sigma) p = Perm::unchecked(random_images(rng, fold));
    return c;
}

DPCover random_star_cover(std::shared_ptr<const Graph> g, int fold, int apex, SplitMix64& rng,
                          bool require_twist) {
    if (!g) throw ValidationError("cover has no graph");
    if (apex < 0) apex = find_apex(*g);
    if (apex < 0) throw ValidationError("no apex vertex: graph is not a cone");
    for (;;) {
        DPCover c = canonical_cover(g, fold);
        bool twisted = false;
        for (int i = 0; i < c.g().edge_count(); ++i) {
            const Edge& e = c.g().edge(i);
            if (e.u == apex || e.v == apex) continue;
            c.sigma[static_cast<std::size_t>(i)] = Perm::unchecked(random_images(rng, fold));
            twisted = twisted || !c.sigma[static_cast<std::size_t>(i)].is_identity();
        }
        if (!require_twist || twisted) return c;
        // fold 1 or a bare star can never twist
        if (fold < 2 || c.g().edge_count() == c.g().vertex_count() - 1)
            throw ValidationError("graph admits no twisted star-normalized cover");
    }
}

std::string cover_to_json(const DPCover& cover) {
    validate_cover(cover);
    nlohmann::json j;
    j["m"] = cover.fold;
    j["sigma"] = nlohmann::json::object();
    for (std::size_t i = 0; i < cover.sigma.size(); ++i) {
        if (cover.sigma[i].is_identity()) continue;
        j["sigma"][std::to_string(i)] = cover.sigma[i].images();
    }
    return j.dump();
}

DPCover cover_from_json(std::shared_ptr<const Graph> g, std::string_view text) {
    if (!g) throw ValidationError("cover has no graph");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad cover JSON: ") + e.what());
    }
    if (!j.contains("m") || !j["m"].is_number_integer()) throw ParseError("cover JSON needs an integer field m");
    const int fold = j["m"].get<int>();
    DPCover c = canonical_cover(std::move(g), fold);
    if (j.contains("sigma")) {
        if (!j["sigma"].is_object()) throw ParseError("cover sigma must be an object");
        for (const auto& [key, value] : j["sigma"].items()) {
            int idx = -1;
            try {
                idx = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError("bad edge index \"" + key + "\" in cover JSON");
            }
            if (idx < 0 || idx >= c.g().edge_count())
                throw ValidationError("edge index " + key + " out of range");
            if (!value.is_array()) throw ParseError("permutation for edge " + key + " must be an array");
            std::vector<int> img;
            for (const auto& x : value) {
                if (!x.is_number_integer()) throw ParseError("permutation entries must be integers");
                img.push_back(x.get<int>());
            }
            if (static_cast<int>(img.size()) != fold)
                throw ValidationError("permutation for edge " + key + " has wrong degree");
            c.sigma[static_cast<std::size_t>(idx)] = Perm(std::move(img));  // validating
        }
    }
    return c;
}

} // namespace dpchroma
