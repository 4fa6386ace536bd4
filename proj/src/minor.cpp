#include "nonsep/minor.hpp"

#include <algorithm>

namespace nonsep {

bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& m) {
    if (static_cast<int>(m.branch_sets.size()) != h.vertex_count()) return false;
    VertexSet used = 0;
    for (VertexSet bs : m.branch_sets) {
        if (bs == 0) return false;
        if (bs & used) return false;  // overlap
        if (bs & ~g.vertex_set()) return false;
        if (!is_connected_subset(g, bs)) return false;
        used |= bs;
    }
    for (auto [a, b] : h.edges()) {
        bool realized = false;
        for (VertexSet s = m.branch_sets[a]; s && !realized; s &= s - 1)
            if (g.neighbors(std::countr_zero(s)) & m.branch_sets[b]) realized = true;
        if (!realized) return false;
    }
    return true;
}

namespace {

struct ModelSearch {
    const Graph& g;
    const Graph& h;
    int hn;
    std::vector<VertexSet> branch;     // per h-vertex, 0 = unassigned
    std::vector<VertexSet> nbr_mask;   // g-neighborhood of each branch set
    VertexSet free;
    int unassigned;
    bool found = false;

    ModelSearch(const Graph& g_, const Graph& h_)
        : g(g_), h(h_), hn(h_.vertex_count()), branch(hn, 0), nbr_mask(hn, 0),
          free(g_.vertex_set()), unassigned(hn) {}

    // Most-constrained h-vertex next: highest degree, then most already-mapped
    // neighbors, then lowest index. Leaves isolated h-vertices (the K1 of the
    // disconnected obstructions) for last, where any free vertex serves.
    int pick_next() const {
        int best = -1, bd = -1, bm = -1;
        for (int x = 0; x < hn; ++x) {
            if (branch[x]) continue;
            int d = h.degree(x), mapped = 0;
            for (VertexSet s = h.neighbors(x); s; s &= s - 1)
                if (branch[std::countr_zero(s)]) ++mapped;
            if (d > bd || (d == bd && mapped > bm)) {
                best = x;
                bd = d;
                bm = mapped;
            }
        }
        return best;
    }

    bool mapped_neighbors_ok(int x, VertexSet candidate_nbrs) const {
        for (VertexSet s = h.neighbors(x); s; s &= s - 1) {
            int y = std::countr_zero(s);
            if (branch[y] && !(candidate_nbrs & branch[y])) return false;
        }
        return true;
    }

    // Every assigned h-vertex that still has unassigned h-neighbors must keep
    // at least one free g-neighbor, or no future branch set can reach it.
    bool frontier_ok() const {
        for (int y = 0; y < hn; ++y) {
            if (!branch[y]) continue;
            bool pending = false;
            for (VertexSet s = h.neighbors(y); s && !pending; s &= s - 1)
                if (!branch[std::countr_zero(s)]) pending = true;
            if (pending && !(nbr_mask[y] & free)) return false;
        }
        return true;
    }

    void try_assignment(int x, VertexSet bs, VertexSet bs_nbrs) {
        if (!mapped_neighbors_ok(x, bs_nbrs)) return;
        branch[x] = bs;
        nbr_mask[x] = bs_nbrs;
        free &= ~bs;
        --unassigned;
        if (frontier_ok()) {
            if (unassigned == 0)
                found = true;
            else
                extend();
        }
        if (!found) {
            branch[x] = 0;
            nbr_mask[x] = 0;
            free |= bs;
            ++unassigned;
        }
    }

    // Enumerates each connected superset of `set` within `allowed` exactly
    // once (frontier expansion with a ban list), capped at max_size vertices.
    void grow(int x, VertexSet set, VertexSet set_nbrs, VertexSet ext, VertexSet allowed,
              int max_size) {
        try_assignment(x, set, set_nbrs);
        if (found) return;
        if (set_size(set) >= max_size) return;
        while (ext) {
            int u = std::countr_zero(ext);
            ext &= ext - 1;
            VertexSet un = g.neighbors(u);
            grow(x, set | vbit(u), set_nbrs | un,
                 (ext | (un & allowed & ~set)) & ~vbit(u), allowed, max_size);
            if (found) return;
            allowed &= ~vbit(u);  // u is banned from all later branches
            ext &= allowed;
        }
    }

    void extend() {
        int x = pick_next();
        int max_size = set_size(free) - (unassigned - 1);
        if (max_size < 1) return;
        for (VertexSet seeds = free; seeds && !found; seeds &= seeds - 1) {
            int seed = std::countr_zero(seeds);
            VertexSet allowed = free & ~(vbit(seed) - 1);  // seed stays minimal
            grow(x, vbit(seed), g.neighbors(seed), g.neighbors(seed) & allowed & ~vbit(seed),
                 allowed, max_size);
        }
    }
};

}  // namespace

std::optional<MinorModel> find_minor_model(const Graph& g, const Graph& h) {
    if (h.vertex_count() == 0) return MinorModel{};
    if (h.vertex_count() > g.vertex_count()) return std::nullopt;
    if (h.edge_count() > g.edge_count()) return std::nullopt;

    ModelSearch search(g, h);
    search.extend();
    if (!search.found) return std::nullopt;
    MinorModel m{search.branch};
    if (!verify_minor_model(g, h, m))
        throw internal_error("find_minor_model produced a model its checker rejects");
    return m;
}

bool contains_minor(const Graph& g, const Graph& h) {
    return find_minor_model(g, h).has_value();
}

namespace graphs {

namespace {

Graph checked(Graph g, int n, int m, const char* name) {
    if (g.vertex_count() != n || g.edge_count() != m)
        throw internal_error(std::string("catalog graph ") + name +
                             " violates its definitional counts");
    return g;
}

}  // namespace

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return checked(std::move(g), n, n * (n - 1) / 2, "K_n");
}

Graph cycle(int k) {
    if (k < 3) throw precondition_error("cycle needs k >= 3");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return checked(std::move(g), k, k, "C_k");
}

Graph path(int k) {
    Graph g(k);
    for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph wheel(int spokes) {
    if (spokes < 3) throw precondition_error("wheel needs >= 3 spokes");
    Graph g = cycle(spokes);
    Graph out(spokes + 1);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < spokes; ++v) out.add_edge(spokes, v);
    return checked(std::move(out), spokes + 1, 2 * spokes, "W_k");
}

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    Graph g(n);
    int expected = 0;
    int a_start = 0;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        int b_start = a_start + parts[a];
        for (std::size_t b = a + 1; b < parts.size(); ++b) {
            expected += parts[a] * parts[b];
            for (int u = a_start; u < a_start + parts[a]; ++u)
                for (int v = b_start; v < b_start + parts[b]; ++v) g.add_edge(u, v);
            b_start += parts[b];
        }
        a_start += parts[a];
    }
    return checked(std::move(g), n, expected, "K_multipartite");
}

Graph k4() { return complete(4); }
Graph k23() { return checked(complete_multipartite({2, 3}), 5, 6, "K_{2,3}"); }
Graph k113() { return checked(complete_multipartite({1, 1, 3}), 5, 7, "K_{1,1,3}"); }
Graph k1_plus_k4() { return checked(disjoint_union(Graph(1), k4()), 5, 6, "K1+K4"); }
Graph k1_plus_k23() { return checked(disjoint_union(Graph(1), k23()), 6, 6, "K1+K23"); }
Graph w4() { return checked(wheel(4), 5, 8, "W_4"); }
Graph k5() { return complete(5); }
Graph k33() { return checked(complete_multipartite({3, 3}), 6, 9, "K_{3,3}"); }
Graph k6() { return complete(6); }
Graph k133() { return checked(complete_multipartite({1, 3, 3}), 7, 15, "K_{1,3,3}"); }
Graph k1123() { return checked(complete_multipartite({1, 1, 2, 3}), 7, 17, "K_{1,1,2,3}"); }
Graph k2113() { return checked(complete_multipartite({2, 1, 1, 3}), 7, 17, "K_{2,1,1,3}"); }

Graph petersen() {
    // Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5.
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return checked(std::move(g), 10, 15, "Petersen");
}

Graph triangular_prism() {
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
    }
    return checked(std::move(g), 6, 9, "triangular prism");
}

Graph elongated_prism(int l1, int l2, int l3) {
    if (l1 < 1 || l2 < 1 || l3 < 1)
        throw precondition_error("elongated_prism: side lengths must be positive");
    int lens[3] = {l1, l2, l3};
    int n = 6 + (l1 - 1) + (l2 - 1) + (l3 - 1);
    Graph g(n);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
    }
    int next = 6;
    for (int i = 0; i < 3; ++i) {
        int prev = i;
        for (int k = 1; k < lens[i]; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 3 + i);
    }
    return checked(std::move(g), n, n + 3, "elongated prism");
}

}  // namespace graphs

}  // namespace nonsep
