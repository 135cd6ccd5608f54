#include "dpchroma/counting.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

namespace dpchroma {

namespace {

void validate(const DPCover& c) {
    if (!c.graph) throw ValidationError("cover has no graph");
    if (c.fold < 1) throw ValidationError("fold size must be >= 1");
    if (static_cast<int>(c.sigma.size()) != c.g().edge_count())
        throw ValidationError("cover needs one permutation per edge");
}

// constraint on a vertex from an earlier-ordered neighbor: the color
// forbidden here is mapped.image(color of the earlier vertex)
struct Back {
    int earlier_pos;
    Perm mapped;
};

std::vector<std::vector<Back>> back_constraints(const DPCover& c, const std::vector<int>& order) {
    const Graph& g = c.g();
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::vector<Back>> back(order.size());
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(i);
        const Perm& sigma = c.sigma[static_cast<std::size_t>(i)];
        const int pu = pos[static_cast<std::size_t>(e.u)];
        const int pv = pos[static_cast<std::size_t>(e.v)];
        if (pu < pv)
            back[static_cast<std::size_t>(pv)].push_back(Back{pu, sigma});
        else
            back[static_cast<std::size_t>(pu)].push_back(Back{pv, inverse(sigma)});
    }
    return back;
}

// bitmask fast path, fold <= 64 and fold^n < 2^63
std::uint64_t count_masked(const std::vector<std::vector<Back>>& back, int fold, int n) {
    const std::uint64_t all = fold == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << fold) - 1;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::uint64_t total = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++total;
            return;
        }
        std::uint64_t forbidden = 0;
        for (const auto& b : back[static_cast<std::size_t>(depth)])
            forbidden |= std::uint64_t{1} << b.mapped.image(color[static_cast<std::size_t>(b.earlier_pos)]);
        for (std::uint64_t open = all & ~forbidden; open != 0; open &= open - 1) {
            color[static_cast<std::size_t>(depth)] = std::countr_zero(open);
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return total;
}

// generic path for larger folds
BigInt count_generic(const std::vector<std::vector<Back>>& back, int fold, int n) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    BigInt total = 0;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            ++total;
            return;
        }
        std::vector<char> f(static_cast<std::size_t>(fold), 0);
        for (const auto& b : back[static_cast<std::size_t>(depth)])
            f[static_cast<std::size_t>(b.mapped.image(color[static_cast<std::size_t>(b.earlier_pos)]))] = 1;
        for (int c = 0; c < fold; ++c) {
            if (f[static_cast<std::size_t>(c)]) continue;
            color[static_cast<std::size_t>(depth)] = c;
            self(self, depth + 1);
        }
        color[static_cast<std::size_t>(depth)] = -1;
    };
    rec(rec, 0);
    return total;
}

} // namespace

BigInt count_colorings(const DPCover& cover) {
    validate(cover);
    const Graph& g = cover.g();
    const int n = g.vertex_count();

    // BFS forest order from ascending roots; works for disconnected graphs
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        if (seen[static_cast<std::size_t>(r)]) continue;
        seen[static_cast<std::size_t>(r)] = 1;
        order.push_back(r);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            for (int w : g.neighbors(order[head])) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
            }
        }
    }
    const auto back = back_constraints(cover, order);
    if (cover.fold <= 64) {
        // the count is bounded by fold^n; stay in 64-bit when that cannot wrap
        if (big_pow(cover.fold, static_cast<unsigned>(n)) < (BigInt(1) << 63))
            return BigInt(count_masked(back, cover.fold, n));
    }
    return count_generic(back, cover.fold, n);
}

BigInt brute_force_count(const DPCover& cover) {
    validate(cover);
    const Graph& g = cover.g();
    const int n = g.vertex_count();
    const BigInt space = big_pow(cover.fold, static_cast<unsigned>(n));
    if (space > kMaxBruteForceAssignments)
        throw CapacityError("brute force enumerates fold^n = " + to_decimal(space) +
                            " assignments; limit is " + std::to_string(kMaxBruteForceAssignments));

    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (int i = 0; i < g.edge_count() && ok; ++i) {
            const Edge& e = g.edge(i);
            if (assign[static_cast<std::size_t>(e.v)] ==
                cover.sigma[static_cast<std::size_t>(i)].image(assign[static_cast<std::size_t>(e.u)]))
                ok = false;
        }
        if (ok) ++count;
        int pos = n - 1;
        while (pos >= 0 && assign[static_cast<std::size_t>(pos)] == cover.fold - 1) {
            assign[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++assign[static_cast<std::size_t>(pos)];
    }
    return BigInt(count);
}

BigInt bad_intersection_count(const DPCover& cover, EdgeMask query) {
    validate(cover);
    const Graph& g = cover.g();
    const int n = g.vertex_count();
    const int s = g.edge_count();
    if (s > kMaxEdgeMaskBits)
        throw CapacityError("edge masks support at most " + std::to_string(kMaxEdgeMaskBits) + " edges");
    if (query == 0) throw ValidationError("bad-set query must be a nonempty edge subset");
    if (s < 64 && (query >> s) != 0) throw ValidationError("edge subset out of range");

    // adjacency restricted to queried edges
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (EdgeMask bits = query; bits != 0; bits &= bits - 1) {
        const int i = std::countr_zero(bits);
        incident[static_cast<std::size_t>(g.edge(i).u)].push_back(i);
        incident[static_cast<std::size_t>(g.edge(i).v)].push_back(i);
    }

    const int fold = cover.fold;
    BigInt result = 1;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<Perm> chain(static_cast<std::size_t>(n));  // root color -> this vertex's color
    std::vector<int> queue;
    std::vector<char> valid(static_cast<std::size_t>(fold));
    for (int root = 0; root < n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        if (incident[static_cast<std::size_t>(root)].empty()) {
            result *= fold;  // untouched fiber, free choice
            continue;
        }
        queue.assign(1, root);
        chain[static_cast<std::size_t>(root)] = Perm::identity(fold);
        std::fill(valid.begin(), valid.end(), 1);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            for (int ei : incident[static_cast<std::size_t>(x)]) {
                const Edge& e = g.edge(ei);
                const int w = e.u == x ? e.v : e.u;
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                // forced color: color(v) = sigma(color(u)) along the edge orientation
                const Perm& sigma = cover.sigma[static_cast<std::size_t>(ei)];
                chain[static_cast<std::size_t>(w)] =
                    e.u == x ? compose(chain[static_cast<std::size_t>(x)], sigma)
                             : compose(chain[static_cast<std::size_t>(x)], inverse(sigma));
                queue.push_back(w);
            }
        }
        // every queried edge in the component must agree with the chained
        // colors; tree edges agree by construction, each cycle edge cuts the
        // valid root colors down to its holonomy's fixed points
        for (int x : queue) {
            for (int ei : incident[static_cast<std::size_t>(x)]) {
                const Edge& e = g.edge(ei);
                if (e.u != x) continue;  // visit each edge once, from its lower endpoint
                const Perm& sigma = cover.sigma[static_cast<std::size_t>(ei)];
                // need chain_v(c) == sigma(chain_u(c)); valid root colors are
                // the fixed points of chain_v^-1 . sigma . chain_u
                const Perm hol = compose(compose(chain[static_cast<std::size_t>(e.u)], sigma),
                                         inverse(chain[static_cast<std::size_t>(e.v)]));
                for (int c = 0; c < fold; ++c)
                    if (hol.image(c) != c) valid[static_cast<std::size_t>(c)] = 0;
            }
        }
        long long good = 0;
        for (int c = 0; c < fold; ++c) good += valid[static_cast<std::size_t>(c)];
        if (good == 0) return BigInt(0);
        result *= good;
    }
    return result;
}

BigInt inclusion_exclusion_count(const DPCover& cover) {
    validate(cover);
    const Graph& g = cover.g();
    const int s = g.edge_count();
    if (s > kMaxInclusionExclusionEdges)
        throw CapacityError("inclusion-exclusion sums over 2^s subsets; s=" + std::to_string(s) +
                            " exceeds the limit of " + std::to_string(kMaxInclusionExclusionEdges));
    BigInt total = big_pow(cover.fold, static_cast<unsigned>(g.vertex_count()));
    for (EdgeMask mask = 1; mask < (EdgeMask{1} << s); ++mask) {
        const BigInt term = bad_intersection_count(cover, mask);
        if (popcount(mask) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

BigInt count_full_transversals(const DPCover& cover) {
    validate(cover);
    if (!cover.g().is_connected())
        throw ValidationError("full-transversal count requires a connected graph");
    if (!is_canonically_labeled(cover))
        throw ValidationError("cover is not canonically labeled");
    if (cover.g().edge_count() == 0) return BigInt(cover.fold);
    EdgeMask all = cover.g().edge_count() == 64 ? ~EdgeMask{0}
                                                : (EdgeMask{1} << cover.g().edge_count()) - 1;
    return bad_intersection_count(cover, all);
}

BigInt count_colorings_auto(const DPCover& cover) {
    validate(cover);
    const Graph& g = cover.g();
    const BigInt space = big_pow(cover.fold, static_cast<unsigned>(g.vertex_count()));
    if (space <= 2'000'000 || g.edge_count() > kMaxInclusionExclusionEdges) return count_colorings(cover);
    return inclusion_exclusion_count(cover);
}

} // namespace dpchroma
