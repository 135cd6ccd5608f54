#pragma once

#include "dpchroma/graph.hpp"
#include "dpchroma/rng.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dpchroma {

/// All connected graphs with 1 <= n <= max_n vertices, one representative
/// per refined canonical key (so every isomorphism class is covered, a few
/// classes may appear twice under distinct keys).
std::vector<Graph> connected_graph_corpus(int max_n);

/// Named graphs used by the verification suites: connected graphs n <= 5,
/// C3..C8, K2..K5, cones of C3..C5, glue-cycles 3 and 5, deduplicated.
std::vector<std::pair<std::string, Graph>> builtin_verify_corpus();

/// Uniform random labeled tree on n vertices (Pruefer sequence).
Graph random_tree(SplitMix64& rng, int n);

/// Random connected graph: random spanning tree plus extra random edges
/// until the requested edge count (capped at C(n,2)).
Graph random_connected_graph(SplitMix64& rng, int n, int edge_target);

} // namespace dpchroma
