#include "dpchroma/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>

namespace dpchroma {

IntPolynomial whitney_expansion(const Graph& g) {
    const int n = g.vertex_count();
    const int s = g.edge_count();
    if (s > kMaxSubsetEdges)
        throw CapacityError("subset expansion enumerates 2^s subsets; s=" + std::to_string(s) +
                            " exceeds the limit of " + std::to_string(kMaxSubsetEdges));

    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) {
                parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
                x = parent[static_cast<std::size_t>(x)];
            }
            return x;
        };
        int components = n;
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
            const auto& e = g.edge(std::countr_zero(bits));
            const int a = find(e.u), b = find(e.v);
            if (a != b) {
                parent[static_cast<std::size_t>(b)] = a;
                --components;
            }
        }
        if (std::popcount(mask) % 2 == 0)
            ++coeffs[static_cast<std::size_t>(components)];
        else
            --coeffs[static_cast<std::size_t>(components)];
    }
    return IntPolynomial(std::move(coeffs));
}

namespace {

// Edge-list form used inside the deletion-contraction recursion; cheaper to
// contract than the full Graph type.
struct LiteGraph {
    int n = 0;
    std::vector<Edge> edges;  // sorted, deduplicated, u < v
};

LiteGraph to_lite(const Graph& g) { return LiteGraph{g.vertex_count(), g.edges()}; }

LiteGraph delete_edge(const LiteGraph& g, std::size_t idx) {
    LiteGraph out{g.n, g.edges};
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(idx));
    return out;
}

// Contract edge (u,v): merge v into u, drop the loop, merge parallels,
// shift labels above v down.
LiteGraph contract_edge(const LiteGraph& g, std::size_t idx) {
    const int u = g.edges[idx].u;
    const int v = g.edges[idx].v;
    LiteGraph out;
    out.n = g.n - 1;
    out.edges.reserve(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == idx) continue;
        int a = g.edges[i].u;
        int b = g.edges[i].v;
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == b) continue;  // cannot happen in a simple graph, kept as a guard
        if (a > v) --a;
        if (b > v) --b;
        if (a > b) std::swap(a, b);
        out.edges.push_back(Edge{a, b});
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

std::string lite_key(const LiteGraph& g) {
    std::vector<Edge> edges = g.edges;
    Graph tmp(g.n, std::move(edges));
    return refined_canonical_key(tmp);
}

struct DelContrEngine {
    std::mutex mu;
    std::unordered_map<std::string, IntPolynomial> memo;

    IntPolynomial run(const LiteGraph& g) {
        if (g.edges.empty()) return IntPolynomial::monomial(1, g.n);
        const std::string key = lite_key(g);
        {
            std::lock_guard<std::mutex> lock(mu);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        // pick the last edge; any fixed rule keeps the recursion deterministic
        const std::size_t idx = g.edges.size() - 1;
        IntPolynomial result = run(delete_edge(g, idx)) - run(contract_edge(g, idx));
        {
            std::lock_guard<std::mutex> lock(mu);
            memo.emplace(key, result);
        }
        return result;
    }
};

DelContrEngine& engine() {
    static DelContrEngine e;
    return e;
}

} // namespace

IntPolynomial deletion_contraction(const Graph& g) { return engine().run(to_lite(g)); }

SubgraphClassification classify_spanning_subgraphs(const Graph& m) {
    const int n = m.vertex_count();
    const int s = m.edge_count();
    if (n < 4) throw ValidationError("spanning-subgraph classification needs at least 4 vertices");
    if (find_apex(m) < 0) throw ValidationError("graph has no vertex adjacent to all others (not a cone)");
    if (s > kMaxSubsetEdges)
        throw CapacityError("subset classification enumerates edge subsets; s=" + std::to_string(s) +
                            " exceeds the limit of " + std::to_string(kMaxSubsetEdges));

    SubgraphClassification out;
    out.triangles = count_cycles_of_length(m, 3);

    // all subsets of size 3..6; a spanning subgraph with n-3 components has
    // rank 3, so at most 6 edges can be involved
    std::vector<int> idx;
    long long counts[7] = {0, 0, 0, 0, 0, 0, 0};
    auto rec = [&](auto&& self, int start) -> void {
        const int k = static_cast<int>(idx.size());
        if (k >= 3) {
            EdgeMask mask = 0;
            for (int i : idx) mask |= EdgeMask{1} << i;
            if (component_count(m, mask) == n - 3) ++counts[k];
        }
        if (k == 6) return;
        for (int i = start; i < s; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    out.p3 = counts[3];
    out.p4 = counts[4];
    out.p5 = counts[5];
    out.p6 = counts[6];
    out.a3 = out.p3 - out.p4 + out.p5 - out.p6;
    return out;
}

CheckReport coefficient_report(const Graph& g) {
    if (!g.is_connected()) throw ValidationError("coefficient report requires a connected graph");
    const int n = g.vertex_count();
    const int s = g.edge_count();
    const int girth_value = girth(g);

    const IntPolynomial p = whitney_expansion(g);
    // a_i = (-1)^i * coefficient of m^(n-i)
    std::vector<BigInt> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        BigInt c = p.coeff(n - i);
        a[static_cast<std::size_t>(i)] = (i % 2 == 0) ? c : -c;
    }

    CheckReport report;
    report.name = "coefficient-structure";

    bool alternating = true;
    for (int i = 0; i <= n; ++i)
        if (a[static_cast<std::size_t>(i)] < 0) alternating = false;
    report.check("signs alternate as (-1)^i", "a_i >= 0 for all i", alternating ? "yes" : "no", alternating);

    bool positive = true;
    for (int i = 0; i <= n - 1; ++i)
        if (a[static_cast<std::size_t>(i)] <= 0) positive = false;
    const bool last_zero = a[static_cast<std::size_t>(n)] == 0;
    report.check("a_0..a_{n-1} positive", "> 0", positive ? "all positive" : "nonpositive entry found", positive);
    report.check("a_n = 0", "0", to_decimal(a[static_cast<std::size_t>(n)]), last_zero);

    const int upper = girth_value == kGirthInfinity ? n : girth_value - 2;
    for (int i = 0; i <= std::min(upper, n); ++i) {
        const BigInt expect = binomial(s, i);
        const bool ok = a[static_cast<std::size_t>(i)] == expect;
        report.check("a_" + std::to_string(i) + " = C(s," + std::to_string(i) + ")", to_decimal(expect),
                     to_decimal(a[static_cast<std::size_t>(i)]), ok);
    }
    if (girth_value != kGirthInfinity) {
        const long long t = count_cycles_of_length(g, girth_value);
        const BigInt expect = binomial(s, girth_value - 1) - t;
        const int i = girth_value - 1;
        const bool ok = i <= n && a[static_cast<std::size_t>(i)] == expect;
        report.check("a_{g-1} = C(s,g-1) - t", to_decimal(expect),
                     i <= n ? to_decimal(a[static_cast<std::size_t>(i)]) : "out of range", ok);
    }
    return report;
}

} // namespace dpchroma
