#include "nonsep/graph.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace nonsep {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw capacity_error("vertex count " + std::to_string(n) + " outside 0..64");
    adj_.assign(n, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw precondition_error("edge endpoint out of range");
    if (u == v) throw precondition_error("self-loops are not allowed");
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u] &= ~vbit(v);
    adj_[v] &= ~vbit(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (VertexSet m = adj_[u] & ~(vbit(u) | (vbit(u) - 1)); m; m &= m - 1)
            out.emplace_back(u, std::countr_zero(m));
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw precondition_error("label count must match vertex count");
    labels_ = std::move(labels);
}

void Graph::label_with_indices() {
    labels_.resize(n_);
    for (int v = 0; v < n_; ++v) labels_[v] = std::to_string(v);
}

namespace {

// Removes bit position `v` from a mask, shifting higher bits down.
VertexSet squeeze_bit(VertexSet m, int v) {
    VertexSet low = m & (vbit(v) - 1);
    VertexSet high = (v == 63) ? 0 : (m >> (v + 1)) << v;
    return low | high;
}

}  // namespace

Graph delete_vertex(const Graph& g, int v) {
    int n = g.vertex_count();
    if (v < 0 || v >= n) throw precondition_error("delete_vertex: no such vertex");
    Graph out(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        int nu = u < v ? u : u - 1;
        VertexSet m = squeeze_bit(g.neighbors(u) & ~vbit(v), v);
        for (VertexSet s = m; s; s &= s - 1) {
            int w = std::countr_zero(s);
            if (w > nu) out.add_edge(nu, w);
        }
    }
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int u = 0; u < n; ++u)
            if (u != v) labels.push_back(g.label(u));
        out.set_labels(std::move(labels));
    }
    return out;
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw precondition_error("delete_edge: not an edge");
    Graph out = g;
    out.remove_edge(u, v);
    return out;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (u == v || !g.has_edge(u, v))
        throw precondition_error("contract_edge: not an edge of the graph");
    int keep = std::min(u, v), gone = std::max(u, v);
    Graph merged = g;
    VertexSet both = (g.neighbors(u) | g.neighbors(v)) & ~vbit(u) & ~vbit(v);
    merged.remove_edge(u, v);
    for (VertexSet s = both; s; s &= s - 1) {
        int w = std::countr_zero(s);
        if (!merged.has_edge(keep, w)) merged.add_edge(keep, w);
    }
    return delete_vertex(merged, gone);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count(), nb = b.vertex_count();
    if (na + nb > kMaxVertices)
        throw capacity_error("disjoint_union exceeds 64 vertices");
    Graph out(na + nb);
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
    if (a.has_labels() && b.has_labels()) {
        std::vector<std::string> labels;
        for (int v = 0; v < na; ++v) labels.push_back(a.label(v));
        for (int v = 0; v < nb; ++v) labels.push_back(b.label(v));
        out.set_labels(std::move(labels));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep, std::vector<int>* old_of_new) {
    std::vector<int> olds;
    for (VertexSet s = keep; s; s &= s - 1) olds.push_back(std::countr_zero(s));
    Graph out(static_cast<int>(olds.size()));
    for (int i = 0; i < static_cast<int>(olds.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(olds.size()); ++j)
            if (g.has_edge(olds[i], olds[j])) out.add_edge(i, j);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int o : olds) labels.push_back(g.label(o));
        out.set_labels(std::move(labels));
    }
    if (old_of_new) *old_of_new = std::move(olds);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen & vbit(v)) continue;
        VertexSet comp = vbit(v), frontier = vbit(v);
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet s = frontier; s; s &= s - 1)
                next |= g.neighbors(std::countr_zero(s));
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

bool is_connected_subset(const Graph& g, VertexSet within) {
    if (within == 0) return true;
    VertexSet comp = vbit(first_vertex(within)), frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet s = frontier; s; s &= s - 1)
            next |= g.neighbors(std::countr_zero(s));
        frontier = next & within & ~comp;
        comp |= frontier;
    }
    return comp == within;
}

int girth(const Graph& g) {
    int n = g.vertex_count(), best = 0;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::vector<int> queue{root};
        dist[root] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
                int w = std::countr_zero(s);
                if (w == parent[v]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else {
                    int len = dist[v] + dist[w] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

// -- graph6 ------------------------------------------------------------------

namespace {

int g6_value(char c) {
    if (c < 63 || c > 126) throw parse_error("graph6: byte out of printable range");
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                             line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    if (line.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    long n;
    if (line[0] != '~') {
        n = g6_value(line[pos++]);
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw capacity_error("graph6: 8-byte vertex counts exceed the 64-vertex cap");
        if (line.size() < 4) throw parse_error("graph6: truncated length field");
        n = 0;
        for (int k = 1; k <= 3; ++k) n = (n << 6) | g6_value(line[k]);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw capacity_error("graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex cap");

    long bits = n * (n - 1) / 2;
    long need = (bits + 5) / 6;
    if (static_cast<long>(line.size() - pos) != need)
        throw parse_error("graph6: bit-string length mismatch");

    Graph g(static_cast<int>(n));
    long bi = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bi) {
            int val = g6_value(line[pos + bi / 6]);
            if (val & (1 << (5 - bi % 6))) g.add_edge(i, j);
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        for (int k = 2; k >= 0; --k)
            out.push_back(static_cast<char>(63 + ((n >> (6 * k)) & 63)));
    }
    int acc = 0, fill = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++fill == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                fill = 0;
            }
        }
    }
    if (fill > 0) out.push_back(static_cast<char>(63 + (acc << (6 - fill))));
    return out;
}

// -- cycles ------------------------------------------------------------------

VertexSet Cycle::vertex_mask() const {
    VertexSet m = 0;
    for (int v : vertices) m |= vbit(v);
    return m;
}

bool is_valid_cycle(const Graph& g, const Cycle& c) {
    int len = c.length();
    if (len < 3) return false;
    if (set_size(c.vertex_mask()) != len) return false;
    for (int i = 0; i < len; ++i) {
        int u = c.vertices[i], v = c.vertices[(i + 1) % len];
        if (u < 0 || u >= g.vertex_count() || !g.has_edge(u, v)) return false;
    }
    return true;
}

namespace {

// Paths rooted at the cycle minimum, extended through larger vertices only;
// each cycle is reported in its canonical orientation (second < last).
void cycle_dfs(const Graph& g, int root, std::vector<int>& path, VertexSet on,
               std::vector<Cycle>& out) {
    int v = path.back();
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
        int w = std::countr_zero(s);
        if (w < root) continue;
        if (w == root) {
            if (path.size() >= 3 && path[1] < path.back()) out.push_back(Cycle{path});
        } else if (!(on & vbit(w))) {
            path.push_back(w);
            cycle_dfs(g, root, path, on | vbit(w), out);
            path.pop_back();
        }
    }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) {
    std::vector<Cycle> out;
    for (int root = 0; root < g.vertex_count(); ++root) {
        std::vector<int> path{root};
        cycle_dfs(g, root, path, vbit(root), out);
    }
    return out;
}

// -- isomorphism -------------------------------------------------------------

namespace {

using Partition = std::vector<std::vector<int>>;

// Equitable refinement of an ordered partition. Cells split into sub-cells
// keyed by neighbor counts per cell; sub-cell order follows the key, so the
// result is independent of input vertex labels within a cell.
void refine(const Graph& g, Partition& cells) {
    for (bool changed = true; changed;) {
        changed = false;
        std::array<int, kMaxVertices> cell_of{};
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
            for (int v : cells[ci]) cell_of[v] = ci;
        Partition next;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::map<std::vector<int>, std::vector<int>> groups;
            for (int v : cell) {
                std::vector<int> sig(cells.size(), 0);
                for (VertexSet s = g.neighbors(v); s; s &= s - 1)
                    ++sig[cell_of[std::countr_zero(s)]];
                groups[sig].push_back(v);
            }
            if (groups.size() > 1) changed = true;
            for (auto& [sig, members] : groups) next.push_back(std::move(members));
        }
        cells = std::move(next);
    }
}

std::string adjacency_string(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    std::string s((n * (n - 1) / 2 + 7) / 8, '\0');
    int bi = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bi)
            if (g.has_edge(order[i], order[j])) s[bi / 8] |= char(1 << (bi % 8));
    return s;
}

void canon_search(const Graph& g, Partition cells, std::string& best, bool& have) {
    refine(g, cells);
    int split = -1;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
        if (cells[ci].size() > 1) {
            split = ci;
            break;
        }
    if (split == -1) {
        std::vector<int> order;
        for (const auto& cell : cells) order.push_back(cell[0]);
        std::string s = adjacency_string(g, order);
        if (!have || s < best) {
            best = std::move(s);
            have = true;
        }
        return;
    }
    for (int v : cells[split]) {
        Partition branched;
        for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
            if (ci != split) {
                branched.push_back(cells[ci]);
                continue;
            }
            branched.push_back({v});
            std::vector<int> rest;
            for (int w : cells[ci])
                if (w != v) rest.push_back(w);
            branched.push_back(std::move(rest));
        }
        canon_search(g, std::move(branched), best, have);
    }
}

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    std::string best;
    if (n > 0) {
        Partition cells(1);
        for (int v = 0; v < n; ++v) cells[0].push_back(v);
        bool have = false;
        canon_search(g, std::move(cells), best, have);
    }
    return std::string(1, static_cast<char>(n)) + best;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace nonsep
