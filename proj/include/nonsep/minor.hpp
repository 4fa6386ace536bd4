#pragma once

#include <optional>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

/// Branch-set certificate that h is a minor of g: one vertex set of g per
/// vertex of h. Valid iff the sets are non-empty, pairwise disjoint, each
/// induces a connected subgraph, and every h-edge is realized by a g-edge
/// between the corresponding sets.
struct MinorModel {
    std::vector<VertexSet> branch_sets;  // indexed by h's vertices
};

/// Pure re-check of the three MinorModel invariants; shares no code with the
/// searcher.
bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& m);

/// Exhaustive branch-and-reduce model search. Deterministic: h-vertices are
/// mapped most-constrained-first and candidate branch sets are generated in a
/// fixed ascending order, so the first model found is reproducible.
std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h);

bool contains_minor(const Graph& g, const Graph& h);

/// Named graphs the toolkit reasons about. Each constructor asserts its
/// definitional vertex/edge counts.
namespace graphs {

Graph complete(int n);
Graph cycle(int k);
Graph path(int k);  // k vertices, k-1 edges
/// Hub joined to every vertex of a k-cycle; k+1 vertices, 2k edges.
Graph wheel(int spokes);
Graph complete_multipartite(const std::vector<int>& parts);

Graph k4();
Graph k23();
Graph k113();
Graph k1_plus_k4();
Graph k1_plus_k23();
Graph w4();
Graph k5();
Graph k33();
Graph k6();
Graph k133();
Graph k1123();
Graph k2113();
Graph petersen();
Graph triangular_prism();
/// Two triangles (corners 0,1,2 and 3,4,5) joined by side paths i -- 3+i of
/// the given edge counts; internal side vertices are numbered from 6 upward,
/// side by side. elongated_prism(1,1,1) is the triangular prism.
Graph elongated_prism(int l1, int l2, int l3);

}  // namespace graphs

}  // namespace nonsep
