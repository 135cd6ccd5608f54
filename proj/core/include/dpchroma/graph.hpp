#pragma once

#include "dpchroma/errors.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace dpchroma {

/// Endpoints of an undirected edge; invariant u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of the edge list of a fixed graph, bit i = edge index i.
/// Mask-based operations require edge_count() <= kMaxEdgeMaskBits.
using EdgeMask = std::uint64_t;

inline constexpr int kMaxEdgeMaskBits = 63;

/// Distinguished girth value for acyclic graphs.
inline constexpr int kGirthInfinity = std::numeric_limits<int>::max();

/// Finite simple undirected graph with dense 0-based vertex labels.
/// Edge list is sorted lexicographically and defines the canonical edge
/// indexing used by covers, subsets and serialized output.
class Graph {
public:
    /// Validates simplicity (no loops, no duplicates), normalizes each edge
    /// to u < v and sorts the list.
    Graph(int n, std::vector<Edge> edges);

    static Graph edgeless(int n) { return Graph(n, {}); }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    /// Sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int u, int v) const;

    /// Index into edges() or -1 when absent. Order of u, v irrelevant.
    int edge_index(int u, int v) const;

    bool is_connected() const;

    /// BFS order from root, neighbors visited ascending.
    std::vector<int> bfs_order(int root) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Result of parsing an edge-list file: the graph plus, for each internal
/// vertex index, the label it carried in the input (identity for dense
/// 0-based inputs).
struct ParsedGraph {
    Graph graph;
    std::vector<long long> labels;
};

/// Edge-list text format: one "u v" pair per line, '#' comments, optional
/// "n=<k>" header adding trailing isolated vertices. Arbitrary nonnegative
/// labels are accepted; sparse label sets are remapped densely in sorted
/// order, with the mapping recorded in ParsedGraph::labels.
ParsedGraph parse_edge_list(std::string_view text);

/// Built-in generator. Accepts "Cn <k>", "Kn <k>", "Pn <k>", "Wn <k>",
/// "cone <spec-or-file>", "glue-cycles <g>" and the compact forms
/// "C4", "K5", "P6", "W4", "cone:C4", "glue:3". "glue-cycles g" is a g-cycle
/// and a (g+1)-cycle sharing exactly one vertex; "Wn k" is cone of C_k.
Graph make_named_graph(std::string_view spec);

/// Length of a shortest cycle; kGirthInfinity iff acyclic.
int girth(const Graph& g);

/// Number of connected components of the spanning subgraph (V, A).
int component_count(const Graph& g, EdgeMask edge_subset);

/// Deterministic BFS tree from vertex 0, ties by ascending neighbor index.
/// Throws ValidationError when g is disconnected.
EdgeMask spanning_tree(const Graph& g);

/// The edges incident to apex, which must be adjacent to every other
/// vertex (so they form a spanning star).
EdgeMask star_tree(const Graph& g, int apex);

/// Number of distinct cycles of exactly the given length (as vertex sets
/// with cyclic structure, each counted once). Requires length >= 3.
long long count_cycles_of_length(const Graph& g, int length);

/// Join of a new vertex (index n, the apex) with every vertex of g.
Graph cone(const Graph& g);

/// Highest-index vertex adjacent to all others, or -1 if none exists.
int find_apex(const Graph& g);

/// Degree-refinement canonical relabeling key: exact edge multiset after a
/// deterministic relabel. Equal keys imply isomorphic (in fact identical
/// relabeled) graphs; unequal keys may still be isomorphic.
std::string refined_canonical_key(const Graph& g);

int popcount(EdgeMask m) noexcept;

} // namespace dpchroma
