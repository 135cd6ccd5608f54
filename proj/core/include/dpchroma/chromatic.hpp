#pragma once

#include "dpchroma/graph.hpp"
#include "dpchroma/polynomial.hpp"
#include "dpchroma/report.hpp"

namespace dpchroma {

/// Hard cap on edge-subset enumeration (2^s subsets).
inline constexpr int kMaxSubsetEdges = 24;

/// Chromatic polynomial by the subset expansion: sum over all edge subsets
/// A of (-1)^|A| m^{k_A}, k_A the component count of the spanning subgraph.
/// Throws CapacityError when edge_count() > kMaxSubsetEdges.
IntPolynomial whitney_expansion(const Graph& g);

/// Chromatic polynomial by deletion-contraction with simple-graph
/// contraction, memoized process-wide on refined_canonical_key. Independent
/// of whitney_expansion; the two are cross-checked in tests.
IntPolynomial deletion_contraction(const Graph& g);

/// Counts of spanning subgraphs of M with exactly |V(M)| - 3 components,
/// bucketed by edge count (only sizes 3..6 can occur), plus the alternating
/// sum a3 = p3 - p4 + p5 - p6 and the triangle count t of M.
struct SubgraphClassification {
    long long p3 = 0;
    long long p4 = 0;
    long long p5 = 0;
    long long p6 = 0;
    long long a3 = 0;
    long long triangles = 0;
};

/// Requires M to be a cone (some vertex adjacent to all others) with at
/// least 4 vertices; edge count capped at kMaxSubsetEdges.
SubgraphClassification classify_spanning_subgraphs(const Graph& m);

/// Structural checks on the coefficients of P(G,m) for connected G, written
/// as P(G,m) = sum (-1)^i a_i m^{n-i}: alternating signs with a_0..a_{n-1}
/// positive and a_n = 0; a_i = C(s,i) for i <= g-2; and
/// a_{g-1} = C(s,g-1) - t with t the number of girth-length cycles.
CheckReport coefficient_report(const Graph& g);

} // namespace dpchroma
