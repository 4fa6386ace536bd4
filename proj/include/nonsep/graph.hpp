#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nonsep {

/// Vertices are dense indices 0..n-1; a vertex set is one machine word.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline int set_size(VertexSet s) { return std::popcount(s); }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

/// Input that violates a documented precondition.
struct precondition_error : std::logic_error {
    using std::logic_error::logic_error;
};
/// A guaranteed-by-theory step failed; indicates an implementation bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};
/// Instance exceeds a size/work guard.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on at most 64 vertices, adjacency as per-vertex
/// bitmasks. Structural equality ignores labels. Operations below return new
/// graphs; instances are cheap values and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return (adj_[u] & vbit(v)) != 0; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    VertexSet vertex_set() const { return full_set(n_); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges as (u,v) with u<v, ascending lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int v) const { return labels_[v]; }
    void set_labels(std::vector<std::string> labels);
    /// Labels each vertex with its current index ("0", "1", ...).
    void label_with_indices();

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;  // empty, or one name per vertex
};

// -- elementary minor operations (pure; indices recompacted to 0..n-1) ------

Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
/// Contracts edge (u,v) into min(u,v), de-duplicating parallel edges and
/// dropping the loop. The kept vertex inherits the lower vertex's label.
Graph contract_edge(const Graph& g, int u, int v);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Subgraph induced by `keep`; old_of_new[i] (if requested) is the original
/// index of new vertex i. New indices follow ascending original order.
Graph induced_subgraph(const Graph& g, VertexSet keep,
                       std::vector<int>* old_of_new = nullptr);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// True iff `within` induces a connected subgraph (empty set counts as
/// connected).
bool is_connected_subset(const Graph& g, VertexSet within);
/// Length of a shortest cycle, or 0 if the graph is a forest.
int girth(const Graph& g);

// -- graph6 ------------------------------------------------------------------

/// One graph6 line (optionally prefixed ">>graph6<<"). Rejects n > 64 with
/// capacity_error and malformed input with parse_error.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// -- cycles ------------------------------------------------------------------

/// Cyclic sequence of >= 3 distinct vertices; consecutive entries (including
/// the wrap-around pair) are adjacent in the host graph.
struct Cycle {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    VertexSet vertex_mask() const;
    bool operator==(const Cycle&) const = default;
};

/// Every simple cycle exactly once, rooted at its minimum vertex and oriented
/// so the second vertex is smaller than the last; order is deterministic
/// (roots ascending, DFS with ascending neighbors).
std::vector<Cycle> enumerate_cycles(const Graph& g);

bool is_valid_cycle(const Graph& g, const Cycle& c);

// -- isomorphism -------------------------------------------------------------

/// Canonical byte string (degree-refined individualization search); equal
/// strings iff isomorphic. Intended for n <= 12 or so.
std::string canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace nonsep
