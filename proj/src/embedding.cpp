#include "nonsep/embedding.hpp"

#include <algorithm>
#include <array>
#include <bitset>

#include "nonsep/minor.hpp"

namespace nonsep {

namespace {

// Directed edges are indexed u * 16 + v; the oracle is hard-capped at 16
// vertices (the work budget rules out anything close to that anyway).
constexpr int kStride = 16;
constexpr int kOracleHardCap = 16;
using DeMask = std::bitset<kStride * kStride>;

inline int de_id(int u, int v) { return u * kStride + v; }

struct CompEmbedding {
    std::vector<std::vector<int>> rot;    // per component vertex, ascending
    std::vector<std::vector<int>> faces;  // boundary walks (directed-edge tails)
};

// Faces of one component's rotation system; genus != 0 yields nothing.
std::optional<std::vector<std::vector<int>>> trace_faces(
    const std::vector<int>& verts, const std::vector<std::vector<int>>& rot_of,
    int edge_count) {
    thread_local std::array<std::uint8_t, kStride * kStride> pos;
    for (int v : verts)
        for (std::size_t k = 0; k < rot_of[v].size(); ++k)
            pos[de_id(v, rot_of[v][k])] = static_cast<std::uint8_t>(k);

    DeMask seen;
    std::vector<std::vector<int>> faces;
    for (int v : verts)
        for (int w : rot_of[v]) {
            if (seen[de_id(v, w)]) continue;
            std::vector<int> walk;
            int cu = v, cv = w;
            while (!seen[de_id(cu, cv)]) {
                seen.set(de_id(cu, cv));
                walk.push_back(cu);
                const auto& rv = rot_of[cv];
                int nxt = rv[(pos[de_id(cv, cu)] + 1) % rv.size()];
                cu = cv;
                cv = nxt;
            }
            faces.push_back(std::move(walk));
        }
    int f = static_cast<int>(faces.size());
    if (static_cast<int>(verts.size()) - edge_count + f != 2) return std::nullopt;
    return faces;
}

// Streams the genus-0 rotation systems of one component, up to reflection:
// every vertex's first neighbor is pinned, and at the smallest vertex of
// degree >= 3 the second neighbor is kept below the last.
void for_each_component_embedding(const Graph& g, VertexSet comp,
                                  const std::function<bool(CompEmbedding&&)>& visit) {
    std::vector<int> verts;
    for (VertexSet m = comp; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    int edge_count = 0;
    for (int v : verts) edge_count += set_size(g.neighbors(v));
    edge_count /= 2;

    if (edge_count == 0) {  // a lone vertex: one drawing, one all-around face
        CompEmbedding e;
        e.rot.assign(1, {});
        e.faces.push_back({});
        visit(std::move(e));
        return;
    }

    int mirror_vertex = -1;
    for (int v : verts)
        if (g.degree(v) >= 3) {
            mirror_vertex = v;
            break;
        }

    std::vector<std::vector<int>> rot_of(g.vertex_count());
    bool stopped = false;
    std::function<void(std::size_t)> assign = [&](std::size_t vi) {
        if (stopped) return;
        if (vi == verts.size()) {
            if (auto faces = trace_faces(verts, rot_of, edge_count)) {
                CompEmbedding e;
                e.rot.reserve(verts.size());
                for (int v : verts) e.rot.push_back(rot_of[v]);
                e.faces = std::move(*faces);
                if (!visit(std::move(e))) stopped = true;
            }
            return;
        }
        int v = verts[vi];
        std::vector<int> nbrs;
        for (VertexSet m = g.neighbors(v); m; m &= m - 1)
            nbrs.push_back(std::countr_zero(m));
        std::vector<int> tail(nbrs.begin() + 1, nbrs.end());
        do {
            if (v == mirror_vertex && tail.front() > tail.back())
                continue;  // the mirror image covers this ordering
            rot_of[v].assign(1, nbrs[0]);
            rot_of[v].insert(rot_of[v].end(), tail.begin(), tail.end());
            assign(vi + 1);
            if (stopped) return;
        } while (std::next_permutation(tail.begin(), tail.end()));
    };
    assign(0);
}

double rotation_estimate(const Graph& g) {
    double total = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int k = 2; k < g.degree(v); ++k) total *= k;
    return total;
}

}  // namespace

void for_each_planar_embedding(const Graph& g, const EmbeddingLimits& lim,
                               const std::function<bool(const PlanarDrawing&)>& visit) {
    int n = g.vertex_count();
    if (n > lim.max_vertices || n > kOracleHardCap)
        throw capacity_error("embedding oracle: " + std::to_string(n) +
                             " vertices exceeds the guard of " +
                             std::to_string(std::min(lim.max_vertices, kOracleHardCap)));
    if (rotation_estimate(g) > double(lim.max_rotation_systems))
        throw capacity_error(
            "embedding oracle: rotation-system count exceeds the work budget");

    if (n == 0) {
        visit(PlanarDrawing{});
        return;
    }

    auto comps = connected_components(g);
    int nc = static_cast<int>(comps.size());

    PlanarDrawing d;
    d.components = comps;
    d.rotations.assign(n, {});

    std::vector<int> comp_verts_flat;
    std::vector<int> face_base(nc + 1, 0);

    // drawing assembly over a fixed choice of component embeddings
    auto with_embeddings = [&](const std::vector<const CompEmbedding*>& emb) -> bool {
        d.faces.clear();
        for (int c = 0; c < nc; ++c) {
            std::vector<int> verts;
            for (VertexSet m = comps[c]; m; m &= m - 1) verts.push_back(std::countr_zero(m));
            for (std::size_t i = 0; i < verts.size(); ++i)
                d.rotations[verts[i]] = emb[c]->rot[i];
            face_base[c] = static_cast<int>(d.faces.size());
            for (const auto& w : emb[c]->faces) d.faces.push_back({c, w});
        }
        face_base[nc] = static_cast<int>(d.faces.size());
        d.outer_face.assign(nc, 0);
        d.nesting.assign(nc, PlanarDrawing::Nesting{});

        std::function<bool(int)> nestings = [&](int c) -> bool {
            if (c == nc) return visit(d);
            d.nesting[c] = {-1, -1};
            if (!nestings(c + 1)) return false;
            for (int p = 0; p < nc; ++p) {
                if (p == c) continue;
                int a = p;
                bool above = false;  // is c an ancestor of p already?
                while (a != -1) {
                    if (a == c) {
                        above = true;
                        break;
                    }
                    a = d.nesting[a].parent_component;
                }
                if (above) continue;
                for (int f = face_base[p]; f < face_base[p + 1]; ++f) {
                    if (f == d.outer_face[p]) continue;  // that side is outside p
                    d.nesting[c] = {p, f};
                    if (!nestings(c + 1)) return false;
                }
            }
            d.nesting[c] = {-1, -1};
            return true;
        };

        std::function<bool(int)> outer_choices = [&](int c) -> bool {
            if (c == nc) return nestings(0);
            if (nc == 1) {  // cannot matter for a connected graph
                d.outer_face[c] = face_base[c];
                return outer_choices(c + 1);
            }
            for (int f = face_base[c]; f < face_base[c + 1]; ++f) {
                d.outer_face[c] = f;
                if (!outer_choices(c + 1)) return false;
            }
            return true;
        };

        return outer_choices(0);
    };

    if (nc == 1) {  // stream; materializing can be large for dense components
        for_each_component_embedding(g, comps[0], [&](CompEmbedding&& e) {
            const CompEmbedding* p = &e;
            return with_embeddings({p});
        });
        return;
    }

    std::vector<std::vector<CompEmbedding>> per_comp(nc);
    for (int c = 0; c < nc; ++c)
        for_each_component_embedding(g, comps[c], [&](CompEmbedding&& e) {
            per_comp[c].push_back(std::move(e));
            return true;
        });

    std::vector<const CompEmbedding*> pick(nc);
    std::function<bool(int)> product = [&](int c) -> bool {
        if (c == nc) return with_embeddings(pick);
        for (const auto& e : per_comp[c]) {
            pick[c] = &e;
            if (!product(c + 1)) return false;
        }
        return true;
    };
    product(0);
}

std::vector<PlanarDrawing> enumerate_planar_embeddings(const Graph& g,
                                                       const EmbeddingLimits& lim) {
    std::vector<PlanarDrawing> out;
    for_each_planar_embedding(g, lim, [&](const PlanarDrawing& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

namespace {

// Per-drawing lookup tables for the separating-cycle test.
struct DrawingIndex {
    std::array<std::int16_t, kStride * kStride> face_of;  // directed edge -> face
    std::vector<int> host_of_vertex;                      // vertex -> component
};

DrawingIndex index_drawing(const PlanarDrawing& d, int n) {
    DrawingIndex ix;
    ix.face_of.fill(-1);
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
        const auto& w = d.faces[f].walk;
        for (std::size_t i = 0; i < w.size(); ++i)
            ix.face_of[de_id(w[i], w[(i + 1) % w.size()])] = static_cast<std::int16_t>(f);
    }
    ix.host_of_vertex.assign(n, -1);
    for (std::size_t c = 0; c < d.components.size(); ++c)
        for (VertexSet m = d.components[c]; m; m &= m - 1)
            ix.host_of_vertex[std::countr_zero(m)] = static_cast<int>(c);
    return ix;
}

struct CycleInfo {
    Cycle cycle;
    DeMask cycle_des;  // both directions of every cycle edge
    VertexSet verts;
};

CycleInfo make_cycle_info(const Cycle& c) {
    CycleInfo ci{c, {}, c.vertex_mask()};
    int len = c.length();
    for (int i = 0; i < len; ++i) {
        int a = c.vertices[i], b = c.vertices[(i + 1) % len];
        ci.cycle_des.set(de_id(a, b));
        ci.cycle_des.set(de_id(b, a));
    }
    return ci;
}

// face_side[f] for the host component's faces (0/1), others untouched.
// Exactly two classes must appear; anything else is an internal error.
void split_sides(const Graph& g, const PlanarDrawing& d, const DrawingIndex& ix,
                 const CycleInfo& ci, int host, std::array<std::int8_t, 256>& face_side) {
    std::array<std::int16_t, 256> rep;
    for (std::size_t f = 0; f < d.faces.size(); ++f) rep[f] = static_cast<std::int16_t>(f);
    auto find = [&](int x) {
        while (rep[x] != x) x = rep[x] = rep[rep[x]];
        return x;
    };
    for (VertexSet m = d.components[host]; m; m &= m - 1) {
        int u = std::countr_zero(m);
        for (VertexSet s = g.neighbors(u) & ~(vbit(u) | (vbit(u) - 1)); s; s &= s - 1) {
            int v = std::countr_zero(s);
            if (ci.cycle_des[de_id(u, v)]) continue;
            rep[find(ix.face_of[de_id(u, v)])] =
                static_cast<std::int16_t>(find(ix.face_of[de_id(v, u)]));
        }
    }
    int side0 = -1, side1 = -1;
    for (std::size_t f = 0; f < d.faces.size(); ++f) {
        if (d.faces[f].component != host) continue;
        int r = find(static_cast<int>(f));
        if (side0 == -1) side0 = r;
        if (r == side0) {
            face_side[f] = 0;
        } else {
            if (side1 == -1) side1 = r;
            if (r != side1)
                throw internal_error("face split along a cycle yielded over two sides");
            face_side[f] = 1;
        }
    }
    if (side1 == -1)
        throw internal_error("face split along a cycle yielded a single side");
}

int component_side(const PlanarDrawing& d, const std::array<std::int8_t, 256>& face_side,
                   int host, int other) {
    int at = other;
    while (d.nesting[at].parent_component != -1) {
        int p = d.nesting[at].parent_component;
        if (p == host) return face_side[d.nesting[at].parent_face];
        at = p;
    }
    return face_side[d.outer_face[host]];
}

std::array<long, 2> side_counts(const PlanarDrawing& d,
                                const DrawingIndex& ix, const CycleInfo& ci, int host,
                                const std::array<std::int8_t, 256>& face_side) {
    std::array<long, 2> count{0, 0};
    for (VertexSet m = d.components[host] & ~ci.verts; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int to = d.rotations[v][0];
        ++count[face_side[ix.face_of[de_id(v, to)]]];
    }
    for (std::size_t k = 0; k < d.components.size(); ++k)
        if (static_cast<int>(k) != host)
            count[component_side(d, face_side, host, static_cast<int>(k))] +=
                set_size(d.components[k]);
    return count;
}

std::vector<Cycle> separating_cycles_impl(const Graph& g, const PlanarDrawing& d,
                                          std::optional<int> root_face) {
    int n = g.vertex_count();
    DrawingIndex ix = index_drawing(d, n);
    std::vector<Cycle> out;
    std::array<std::int8_t, 256> face_side{};
    for (const Cycle& c : enumerate_cycles(g)) {
        if (c.length() > n - 2) continue;  // too few vertices left to separate
        CycleInfo ci = make_cycle_info(c);
        int host = ix.host_of_vertex[c.vertices[0]];
        split_sides(g, d, ix, ci, host, face_side);
        auto count = side_counts(d, ix, ci, host, face_side);
        if (root_face) {  // label the sides from the chosen root
            if (d.faces[*root_face].component != host)
                throw precondition_error("root face must belong to the cycle's component");
            int exterior = face_side[*root_face];
            if (count[1 - exterior] > 0 && count[exterior] > 0) out.push_back(c);
        } else if (count[0] > 0 && count[1] > 0) {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace

std::vector<Cycle> separating_cycles(const Graph& g, const PlanarDrawing& d) {
    return separating_cycles_impl(g, d, std::nullopt);
}

std::vector<Cycle> separating_cycles_rooted(const Graph& g, const PlanarDrawing& d,
                                            int root_face) {
    return separating_cycles_impl(g, d, root_face);
}

std::optional<PlanarDrawing> exists_nonseparating_drawing(const Graph& g,
                                                          const EmbeddingLimits& lim) {
    if (g.vertex_count() == 0) return PlanarDrawing{};
    for (const Graph& h : {graphs::k5(), graphs::k33()}) {
        auto m = find_minor_model(g, h);
        if (m && verify_minor_model(g, h, *m)) return std::nullopt;  // not planar
    }
    int n = g.vertex_count();
    std::vector<CycleInfo> candidates;
    for (const Cycle& c : enumerate_cycles(g))
        if (c.length() <= n - 2) candidates.push_back(make_cycle_info(c));

    std::optional<PlanarDrawing> result;
    std::array<std::int8_t, 256> face_side{};
    for_each_planar_embedding(g, lim, [&](const PlanarDrawing& d) {
        DrawingIndex ix = index_drawing(d, n);
        for (const CycleInfo& ci : candidates) {
            int host = ix.host_of_vertex[ci.cycle.vertices[0]];
            split_sides(g, d, ix, ci, host, face_side);
            auto count = side_counts(d, ix, ci, host, face_side);
            if (count[0] > 0 && count[1] > 0) return true;  // separating: next drawing
        }
        result = d;
        return false;
    });
    return result;
}

bool verify_drawing(const Graph& g, const PlanarDrawing& d) {
    int n = g.vertex_count();
    if (static_cast<int>(d.rotations.size()) != n) return false;
    for (int v = 0; v < n; ++v) {
        VertexSet seen = 0;
        for (int w : d.rotations[v]) {
            if (w < 0 || w >= n || !g.has_edge(v, w) || (seen & vbit(w))) return false;
            seen |= vbit(w);
        }
        if (seen != g.neighbors(v)) return false;
    }
    if (d.components != connected_components(g)) return false;
    for (std::size_t c = 0; c < d.components.size(); ++c) {
        int verts = set_size(d.components[c]);
        int edges = 0;
        for (VertexSet m = d.components[c]; m; m &= m - 1)
            edges += set_size(g.neighbors(std::countr_zero(m)));
        edges /= 2;
        int faces = 0;
        for (const auto& f : d.faces)
            if (f.component == static_cast<int>(c)) ++faces;
        if (verts - edges + faces != 2) return false;
        if (c >= d.outer_face.size() || d.outer_face[c] < 0 ||
            d.outer_face[c] >= static_cast<int>(d.faces.size()) ||
            d.faces[d.outer_face[c]].component != static_cast<int>(c))
            return false;
    }
    if (d.nesting.size() != d.components.size()) return false;
    for (std::size_t c = 0; c < d.nesting.size(); ++c) {
        int steps = 0, at = static_cast<int>(c);
        while (d.nesting[at].parent_component != -1) {
            int p = d.nesting[at].parent_component;
            int f = d.nesting[at].parent_face;
            if (p < 0 || p >= static_cast<int>(d.components.size())) return false;
            if (f < 0 || f >= static_cast<int>(d.faces.size()) ||
                d.faces[f].component != p)
                return false;
            if (f == d.outer_face[p]) return false;
            at = p;
            if (++steps > static_cast<int>(d.nesting.size())) return false;
        }
    }
    return true;
}

}  // namespace nonsep
