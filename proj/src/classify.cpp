#include "nonsep/classify.hpp"

#include <algorithm>
#include <functional>

#include "nonsep/subdivision.hpp"

namespace nonsep {

const std::array<std::pair<std::string, Graph>, 3>& obstruction_catalog() {
    static const std::array<std::pair<std::string, Graph>, 3> catalog = {{
        {"K1+K4", graphs::k1_plus_k4()},
        {"K1+K23", graphs::k1_plus_k23()},
        {"K113", graphs::k113()},
    }};
    return catalog;
}

// -- outerplanar branch --------------------------------------------------------

namespace {

// Biconnected components as edge lists (bridges are two-vertex blocks);
// discovery order is deterministic for a fixed root.
struct BlockDecomposition {
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    std::vector<VertexSet> block_verts;
    std::vector<std::vector<int>> blocks_of;  // per vertex, ascending block ids
};

BlockDecomposition find_blocks(const Graph& g) {
    int n = g.vertex_count();
    BlockDecomposition out;
    out.blocks_of.assign(n, {});
    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = ++timer;
        for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
            int w = std::countr_zero(s);
            if (w == parent) continue;
            if (disc[w] == 0) {
                estack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<std::pair<int, int>> block;
                    while (true) {
                        auto e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(u, w)) break;
                    }
                    VertexSet verts = 0;
                    for (auto [a, b] : block) verts |= vbit(a) | vbit(b);
                    int id = static_cast<int>(out.block_edges.size());
                    out.block_edges.push_back(std::move(block));
                    out.block_verts.push_back(verts);
                    for (VertexSet m = verts; m; m &= m - 1)
                        out.blocks_of[std::countr_zero(m)].push_back(id);
                }
            } else if (disc[w] < disc[u]) {
                estack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };

    for (int v = 0; v < n; ++v)
        if (disc[v] == 0) dfs(v, -1);
    return out;
}

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g, VertexSet verts,
                                                  int start) {
    int need = set_size(verts);
    std::vector<int> path{start};
    std::function<bool(VertexSet)> extend = [&](VertexSet visited) {
        if (static_cast<int>(path.size()) == need)
            return g.has_edge(path.back(), start);
        for (VertexSet s = g.neighbors(path.back()) & verts & ~visited; s; s &= s - 1) {
            int w = std::countr_zero(s);
            path.push_back(w);
            if (extend(visited | vbit(w))) return true;
            path.pop_back();
        }
        return false;
    };
    if (!extend(vbit(start))) return std::nullopt;
    return path;
}

// Splices each block's boundary cycle into the order right after its
// attachment vertex; outerplanar blocks have a unique Hamiltonian boundary.
std::vector<int> build_outerplanar_order(const Graph& g) {
    auto blocks = find_blocks(g);
    int n = g.vertex_count();
    std::vector<int> order;
    std::vector<bool> block_used(blocks.block_edges.size(), false);
    std::vector<bool> placed(n, false);

    std::function<void(int)> place = [&](int v) {
        placed[v] = true;
        order.push_back(v);
        for (int b : blocks.blocks_of[v]) {
            if (block_used[b]) continue;
            block_used[b] = true;
            if (blocks.block_edges[b].size() == 1) {
                auto [x, y] = blocks.block_edges[b][0];
                place(x == v ? y : x);
            } else {
                auto cycle = hamiltonian_cycle(g, blocks.block_verts[b], v);
                if (!cycle)
                    throw internal_error(
                        "outerplanar order: block has no Hamiltonian boundary");
                for (std::size_t k = 1; k < cycle->size(); ++k) place((*cycle)[k]);
            }
        }
    };

    for (int v = 0; v < n; ++v)
        if (!placed[v]) place(v);
    return order;
}

}  // namespace

bool verify_outerplanar_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != -1) return false;
        pos[v] = i;
    }
    auto es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            int rb = (pos[b] - pos[a] + n) % n;
            int rc = (pos[c] - pos[a] + n) % n;
            int rd = (pos[d] - pos[a] + n) % n;
            bool c_in = rc > 0 && rc < rb, d_in = rd > 0 && rd < rb;
            if (c_in != d_in) return false;  // edges interleave
        }
    return true;
}

std::optional<std::vector<int>> is_outerplanar(const Graph& g) {
    if (contains_minor(g, graphs::k4()) || contains_minor(g, graphs::k23()))
        return std::nullopt;
    std::vector<int> order = build_outerplanar_order(g);
    if (!verify_outerplanar_order(g, order))
        throw internal_error("outerplanar certificate failed the interleaving check");
    return order;
}

// -- wheel branch --------------------------------------------------------------

namespace {

// Orders `verts` so that every induced edge joins consecutive entries: the
// induced graph must be a linear forest, or a single cycle covering `verts`.
std::optional<std::vector<int>> arrange_in_cycle(const Graph& g, VertexSet verts) {
    std::vector<int> order;
    auto deg_in = [&](int v) { return set_size(g.neighbors(v) & verts); };
    for (VertexSet m = verts; m; m &= m - 1)
        if (deg_in(std::countr_zero(m)) > 2) return std::nullopt;

    VertexSet left = verts;
    bool saw_cycle = false;
    while (left) {
        // component of the smallest remaining vertex
        int seed = first_vertex(left);
        VertexSet comp = vbit(seed), frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (VertexSet m = frontier; m; m &= m - 1)
                next |= g.neighbors(std::countr_zero(m)) & verts;
            frontier = next & ~comp;
            comp |= frontier;
        }
        left &= ~comp;
        bool all_two = true;
        int start = -1;
        for (VertexSet m = comp; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (deg_in(v) < 2) {
                all_two = false;
                if (start == -1) start = v;
            }
        }
        if (all_two) {  // a cycle component: only allowed when it spans verts
            if (comp != verts) return std::nullopt;
            saw_cycle = true;
            start = first_vertex(comp);
        }
        if (saw_cycle && (left || !order.empty())) return std::nullopt;
        // walk the path/cycle from start, smaller neighbor first
        int prev = -1, at = start;
        while (at != -1) {
            order.push_back(at);
            VertexSet cand = g.neighbors(at) & comp;
            if (prev != -1) cand &= ~vbit(prev);
            VertexSet fresh = cand;
            for (int u : order)
                fresh &= ~vbit(u);
            prev = at;
            at = fresh ? first_vertex(fresh) : -1;
        }
        if (static_cast<int>(order.size()) != set_size(verts & ~left))
            return std::nullopt;  // walk did not cover the component
    }
    return order;
}

}  // namespace

std::optional<WheelWitness> wheel_subgraph_witness(const Graph& g) {
    if (auto rim = arrange_in_cycle(g, g.vertex_set()))
        return WheelWitness{std::nullopt, *rim};
    for (int h = 0; h < g.vertex_count(); ++h)
        if (auto rim = arrange_in_cycle(g, g.vertex_set() & ~vbit(h)))
            return WheelWitness{h, *rim};
    return std::nullopt;
}

bool verify_wheel_witness(const Graph& g, const WheelWitness& w) {
    int n = g.vertex_count();
    VertexSet expected = g.vertex_set();
    if (w.hub) {
        if (*w.hub < 0 || *w.hub >= n) return false;
        expected &= ~vbit(*w.hub);
    }
    VertexSet rimset = 0;
    std::vector<int> pos(n, -1);
    for (std::size_t i = 0; i < w.rim.size(); ++i) {
        int v = w.rim[i];
        if (v < 0 || v >= n || (rimset & vbit(v))) return false;
        rimset |= vbit(v);
        pos[v] = static_cast<int>(i);
    }
    if (rimset != expected) return false;
    int k = static_cast<int>(w.rim.size());
    for (auto [a, b] : g.edges()) {
        if (w.hub && (a == *w.hub || b == *w.hub)) continue;  // spoke edge
        int d = std::abs(pos[a] - pos[b]);
        if (k > 2 && d != 1 && d != k - 1) return false;
    }
    return true;
}

// -- elongated prism branch ----------------------------------------------------

std::optional<std::vector<int>> subgraph_embedding(const Graph& g, const Graph& host) {
    int n = g.vertex_count(), hn = host.vertex_count();
    if (n > hn || g.edge_count() > host.edge_count()) return std::nullopt;
    std::vector<int> map(n, -1);
    VertexSet used = 0;
    int placed = 0;

    auto pick = [&]() {
        int best = -1, bm = -1, bd = -1;
        for (int x = 0; x < n; ++x) {
            if (map[x] != -1) continue;
            int mapped = 0;
            for (VertexSet s = g.neighbors(x); s; s &= s - 1)
                if (map[std::countr_zero(s)] != -1) ++mapped;
            int d = g.degree(x);
            if (mapped > bm || (mapped == bm && d > bd)) {
                best = x;
                bm = mapped;
                bd = d;
            }
        }
        return best;
    };

    std::function<bool()> rec = [&]() {
        if (placed == n) return true;
        int x = pick();
        for (int hv = 0; hv < hn; ++hv) {
            if (used & vbit(hv)) continue;
            if (host.degree(hv) < g.degree(x)) continue;
            bool ok = true;
            for (VertexSet s = g.neighbors(x); s && ok; s &= s - 1) {
                int y = std::countr_zero(s);
                if (map[y] != -1 && !host.has_edge(hv, map[y])) ok = false;
            }
            if (!ok) continue;
            map[x] = hv;
            used |= vbit(hv);
            ++placed;
            if (rec()) return true;
            map[x] = -1;
            used &= ~vbit(hv);
            --placed;
        }
        return false;
    };

    if (!rec()) return std::nullopt;
    return map;
}

std::optional<PrismWitness> elongated_prism_subgraph_witness(const Graph& g) {
    int n = g.vertex_count();
    int max_total = std::max(3, n - 3);
    for (int total = 3; total <= max_total; ++total)
        for (int l1 = 1; l1 <= total - 2; ++l1)
            for (int l2 = 1; l2 <= l1; ++l2) {
                int l3 = total - l1 - l2;
                if (l3 < 1 || l3 > l2) continue;
                Graph host = graphs::elongated_prism(l1, l2, l3);
                if (auto m = subgraph_embedding(g, host))
                    return PrismWitness{{l1, l2, l3}, *m};
            }
    return std::nullopt;
}

bool verify_prism_witness(const Graph& g, const PrismWitness& w) {
    auto [l1, l2, l3] = w.side_lengths;
    if (l1 < 1 || l2 < 1 || l3 < 1) return false;
    Graph host = graphs::elongated_prism(l1, l2, l3);
    if (static_cast<int>(w.host_of_g.size()) != g.vertex_count()) return false;
    VertexSet used = 0;
    for (int hv : w.host_of_g) {
        if (hv < 0 || hv >= host.vertex_count() || (used & vbit(hv))) return false;
        used |= vbit(hv);
    }
    for (auto [a, b] : g.edges())
        if (!host.has_edge(w.host_of_g[a], w.host_of_g[b])) return false;
    return true;
}

bool verify_witness(const Graph& g, const StructuralWitness& w) {
    return std::visit(
        [&](const auto& ww) {
            using T = std::decay_t<decltype(ww)>;
            if constexpr (std::is_same_v<T, OuterplanarWitness>)
                return verify_outerplanar_order(g, ww.order);
            else if constexpr (std::is_same_v<T, WheelWitness>)
                return verify_wheel_witness(g, ww);
            else
                return verify_prism_witness(g, ww);
        },
        w);
}

// -- the decision procedure ----------------------------------------------------

Classification classify(const Graph& g) {
    Classification c;
    for (const auto& [name, h] : obstruction_catalog()) {
        if (auto m = find_minor_model(g, h)) {
            c.member = false;
            c.trace = "obstruction";
            c.obstruction = ObstructionCertificate{name, *m};
            if (!verify_classification(g, c))
                throw internal_error("obstruction certificate failed re-verification");
            return c;
        }
    }

    c.member = true;
    bool has_k4 = contains_minor(g, graphs::k4());
    bool has_k23 = contains_minor(g, graphs::k23());
    if (!has_k4 && !has_k23) {
        auto order = is_outerplanar(g);
        if (!order)
            throw internal_error("classify: K4- and K2,3-free graph is not outerplanar");
        c.trace = "outerplanar";
        c.witness = OuterplanarWitness{*order};
    } else {
        if (has_k4 && !has_k23) {
            c.trace = "K4-only";
        } else {
            MiddleLessResult res = [&] {
                try {
                    return is_middle_less(g);
                } catch (const precondition_error&) {
                    throw internal_error(
                        "classify: K2,3 minor present but no spanning subdivision found");
                }
            }();
            if (res.middle_less) {
                auto cls = classify_middle_less(g);
                switch (cls.type) {
                    case MiddleLessType::TypeI: c.trace = "middle-less-type-I"; break;
                    case MiddleLessType::TypeII: c.trace = "middle-less-type-II"; break;
                    case MiddleLessType::TypeIII: c.trace = "middle-less-type-III"; break;
                }
                c.analysis = CaseAnalysis{cls.subdivision, cls.type, cls.extra_edge,
                                          std::nullopt, std::nullopt};
            } else {
                auto [s, mid] = *res.witness;
                auto fans = fan_decomposition(g, s, mid);
                c.trace = fans.first.handle == fans.second.handle
                              ? "middle-ful-coincident-handles"
                              : "middle-ful-distinct-handles";
                c.analysis = CaseAnalysis{s, std::nullopt, std::nullopt, mid, fans};
            }
        }
        if (auto w = wheel_subgraph_witness(g))
            c.witness = *w;
        else if (auto p = elongated_prism_subgraph_witness(g))
            c.witness = *p;
        else
            throw internal_error("classify: obstruction-free graph received no witness");
    }
    if (!verify_classification(g, c))
        throw internal_error("classification certificate failed re-verification");
    return c;
}

bool verify_classification(const Graph& g, const Classification& c) {
    if (c.member) {
        if (!c.witness || c.obstruction) return false;
        if (c.analysis) {
            if (!is_valid_spanning_k23(g, c.analysis->subdivision)) return false;
            if (c.analysis->fans) {
                int mid = *c.analysis->middle_path;
                if (!verify_fan_witness(g, c.analysis->subdivision, mid,
                                        c.analysis->fans->first) ||
                    !verify_fan_witness(g, c.analysis->subdivision, mid,
                                        c.analysis->fans->second))
                    return false;
            }
        }
        return verify_witness(g, *c.witness);
    }
    if (!c.obstruction || c.witness) return false;
    for (const auto& [name, h] : obstruction_catalog())
        if (name == c.obstruction->name)
            return verify_minor_model(g, h, c.obstruction->model);
    return false;
}

bool check_maximal_nonseparating(const Graph& g) {
    if (!classify(g).member)
        throw precondition_error("check_maximal_nonseparating: graph is not a member");
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            Graph plus = g;
            plus.add_edge(u, v);
            if (classify(plus).member) return false;
        }
    return true;
}

}  // namespace nonsep
