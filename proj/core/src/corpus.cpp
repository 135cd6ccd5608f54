#include "dpchroma/corpus.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace dpchroma {

namespace {

bool mask_connected(int n, const std::vector<Edge>& all_edges, std::uint64_t mask) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int comps = n;
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
        if (!(mask & (std::uint64_t{1} << i))) continue;
        const int a = find(all_edges[i].u), b = find(all_edges[i].v);
        if (a != b) {
            parent[static_cast<std::size_t>(b)] = a;
            --comps;
        }
    }
    return comps == 1;
}

} // namespace

std::vector<Graph> connected_graph_corpus(int max_n) {
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Edge> all_edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_edges.push_back(Edge{u, v});
        const int s = static_cast<int>(all_edges.size());
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
            if (popcount(mask) < n - 1) continue;
            if (!mask_connected(n, all_edges, mask)) continue;
            std::vector<Edge> edges;
            for (int i = 0; i < s; ++i)
                if (mask & (std::uint64_t{1} << i)) edges.push_back(all_edges[static_cast<std::size_t>(i)]);
            Graph g(n, std::move(edges));
            if (seen.insert(refined_canonical_key(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<std::pair<std::string, Graph>> builtin_verify_corpus() {
    std::vector<std::pair<std::string, Graph>> out;
    std::unordered_set<std::string> seen;
    auto add = [&](std::string name, Graph g) {
        if (seen.insert(refined_canonical_key(g)).second) out.emplace_back(std::move(name), std::move(g));
    };
    int idx = 0;
    for (auto& g : connected_graph_corpus(5)) add("conn5-" + std::to_string(idx++), std::move(g));
    for (int k = 3; k <= 8; ++k) add("C" + std::to_string(k), make_named_graph("C" + std::to_string(k)));
    for (int k = 2; k <= 5; ++k) add("K" + std::to_string(k), make_named_graph("K" + std::to_string(k)));
    for (int k = 3; k <= 5; ++k) add("cone:C" + std::to_string(k), make_named_graph("cone:C" + std::to_string(k)));
    add("glue:3", make_named_graph("glue-cycles 3"));
    add("glue:5", make_named_graph("glue-cycles 5"));
    return out;
}

Graph random_tree(SplitMix64& rng, int n) {
    if (n < 1) throw ValidationError("tree needs at least 1 vertex");
    if (n == 1) return Graph::edgeless(1);
    if (n == 2) return Graph(2, {Edge{0, 1}});
    std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
    for (auto& x : pruefer) x = rng.below_int(n);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : pruefer) ++degree[static_cast<std::size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int x : pruefer) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(Edge{leaf, x});
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.push_back(Edge{a, b});
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(SplitMix64& rng, int n, int edge_target) {
    const int max_edges = n * (n - 1) / 2;
    edge_target = std::min(edge_target, max_edges);
    Graph tree = random_tree(rng, n);
    std::set<Edge> edges(tree.edges().begin(), tree.edges().end());
    while (static_cast<int>(edges.size()) < edge_target) {
        int u = rng.below_int(n);
        int v = rng.below_int(n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        edges.insert(Edge{u, v});
    }
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
}

} // namespace dpchroma
