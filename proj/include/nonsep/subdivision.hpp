#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

/// A spanning K2,3-subdivision: two terminals of degree 3 in the subdivision
/// and three internally disjoint terminal paths between them whose vertices
/// cover the host graph. Normal form: terminal_u < terminal_v, every path
/// runs u -> v, paths ordered by their second vertex.
struct K23Subdivision {
    int terminal_u = -1;
    int terminal_v = -1;
    std::array<std::vector<int>, 3> paths;

    int path_length(int i) const { return static_cast<int>(paths[i].size()) - 1; }
    VertexSet path_mask(int i) const;
    /// Vertices of path i other than the terminals.
    VertexSet inner_mask(int i) const;
    bool is_path_edge(int u, int v) const;
};

bool is_valid_spanning_k23(const Graph& g, const K23Subdivision& s);

/// All spanning K2,3-subdivisions, each exactly once up to swapping terminals
/// and permuting paths. Deterministic order.
std::vector<K23Subdivision> find_spanning_k23_subdivisions(const Graph& g);

/// True iff no host edge joins two non-consecutive vertices of path i.
bool is_chordless_terminal_path(const Graph& g, const K23Subdivision& s, int i);

/// Indices i such that for each j != i some host edge joins an inner vertex
/// of path i to an inner vertex of path j.
std::vector<int> middle_paths(const Graph& g, const K23Subdivision& s);

struct MiddleLessResult {
    bool middle_less;
    /// A subdivision together with one of its middle path indices, present
    /// exactly when the graph is middle-ful.
    std::optional<std::pair<K23Subdivision, int>> witness;
};

/// Quantifies over every spanning K2,3-subdivision. Throws precondition_error
/// when the graph has none.
MiddleLessResult is_middle_less(const Graph& g);

enum class MiddleLessType { TypeI, TypeII, TypeIII };

struct MiddleLessClassification {
    MiddleLessType type;
    K23Subdivision subdivision;
    /// The unique non-path edge, for types II and III.
    std::optional<std::pair<int, int>> extra_edge;
};

/// Classifies an obstruction-free middle-less graph with a spanning
/// K2,3-subdivision into the three template shapes. Preconditions are
/// re-checked and violations reported as precondition_error naming the check.
MiddleLessClassification classify_middle_less(const Graph& g);

/// One side of a fan decomposition: the subgraph induced by the middle path
/// together with `side_path` embeds in a fan whose handle is an outer inner
/// vertex of the middle path.
struct FanWitness {
    int side_path;  // index of the non-middle path of this side
    int handle;
    std::vector<std::pair<int, int>> spoke_edges;  // induced non-path edges
};

/// Fan witnesses for both sides of middle path `mid`. Requires mid to be a
/// middle path of s and the host to be obstruction-free; failure to find a
/// handle afterwards is reported as internal_error.
std::pair<FanWitness, FanWitness> fan_decomposition(const Graph& g, const K23Subdivision& s,
                                                    int mid);

/// Independent re-check of a fan witness against the host graph.
bool verify_fan_witness(const Graph& g, const K23Subdivision& s, int mid,
                        const FanWitness& w);

}  // namespace nonsep
