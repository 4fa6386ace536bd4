#include "nonsep/subdivision.hpp"

#include <algorithm>

#include "nonsep/minor.hpp"

namespace nonsep {

VertexSet K23Subdivision::path_mask(int i) const {
    VertexSet m = 0;
    for (int v : paths[i]) m |= vbit(v);
    return m;
}

VertexSet K23Subdivision::inner_mask(int i) const {
    return path_mask(i) & ~vbit(terminal_u) & ~vbit(terminal_v);
}

bool K23Subdivision::is_path_edge(int u, int v) const {
    for (const auto& p : paths)
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
            if ((p[k] == u && p[k + 1] == v) || (p[k] == v && p[k + 1] == u)) return true;
    return false;
}

bool is_valid_spanning_k23(const Graph& g, const K23Subdivision& s) {
    if (s.terminal_u == s.terminal_v) return false;
    VertexSet covered = 0;
    for (int i = 0; i < 3; ++i) {
        const auto& p = s.paths[i];
        if (p.size() < 3) return false;  // length >= 2, so one inner at least
        if (p.front() != s.terminal_u || p.back() != s.terminal_v) return false;
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
            if (!g.has_edge(p[k], p[k + 1])) return false;
        VertexSet inner = s.inner_mask(i);
        if (set_size(inner) != static_cast<int>(p.size()) - 2) return false;
        if (inner & covered) return false;  // internally disjoint
        covered |= inner;
    }
    covered |= vbit(s.terminal_u) | vbit(s.terminal_v);
    return covered == g.vertex_set();  // spanning
}

namespace {

void uv_paths_dfs(const Graph& g, int v_target, std::vector<int>& path, VertexSet on,
                  std::vector<std::vector<int>>& out) {
    int at = path.back();
    for (VertexSet s = g.neighbors(at); s; s &= s - 1) {
        int w = std::countr_zero(s);
        if (w == v_target) {
            if (path.size() >= 2) {  // at least one inner vertex
                path.push_back(w);
                out.push_back(path);
                path.pop_back();
            }
        } else if (!(on & vbit(w))) {
            path.push_back(w);
            uv_paths_dfs(g, v_target, path, on | vbit(w), out);
            path.pop_back();
        }
    }
}

}  // namespace

std::vector<K23Subdivision> find_spanning_k23_subdivisions(const Graph& g) {
    std::vector<K23Subdivision> out;
    int n = g.vertex_count();
    if (n < 5) return out;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 3) continue;
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(v) < 3) continue;
            std::vector<std::vector<int>> paths;
            std::vector<int> start{u};
            uv_paths_dfs(g, v, start, vbit(u) | vbit(v), paths);
            std::vector<VertexSet> inner(paths.size());
            for (std::size_t i = 0; i < paths.size(); ++i) {
                VertexSet m = 0;
                for (std::size_t k = 1; k + 1 < paths[i].size(); ++k) m |= vbit(paths[i][k]);
                inner[i] = m;
            }
            VertexSet target = g.vertex_set() & ~vbit(u) & ~vbit(v);
            for (std::size_t i = 0; i < paths.size(); ++i)
                for (std::size_t j = i + 1; j < paths.size(); ++j) {
                    if (inner[i] & inner[j]) continue;
                    VertexSet ij = inner[i] | inner[j];
                    for (std::size_t k = j + 1; k < paths.size(); ++k) {
                        if (ij & inner[k]) continue;
                        if ((ij | inner[k]) != target) continue;
                        K23Subdivision s;
                        s.terminal_u = u;
                        s.terminal_v = v;
                        s.paths = {paths[i], paths[j], paths[k]};
                        std::sort(s.paths.begin(), s.paths.end(),
                                  [](const auto& a, const auto& b) { return a[1] < b[1]; });
                        out.push_back(std::move(s));
                    }
                }
        }
    }
    return out;
}

bool is_chordless_terminal_path(const Graph& g, const K23Subdivision& s, int i) {
    if (i < 0 || i > 2) throw precondition_error("terminal path index must be 0, 1 or 2");
    const auto& p = s.paths[i];
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 2; b < p.size(); ++b)
            if (g.has_edge(p[a], p[b])) return false;
    return true;
}

std::vector<int> middle_paths(const Graph& g, const K23Subdivision& s) {
    std::array<VertexSet, 3> inner, reach;
    for (int i = 0; i < 3; ++i) {
        inner[i] = s.inner_mask(i);
        reach[i] = 0;
        for (VertexSet m = inner[i]; m; m &= m - 1)
            reach[i] |= g.neighbors(std::countr_zero(m));
    }
    std::vector<int> out;
    for (int i = 0; i < 3; ++i) {
        bool mid = true;
        for (int j = 0; j < 3 && mid; ++j)
            if (j != i && !(reach[i] & inner[j])) mid = false;
        if (mid) out.push_back(i);
    }
    return out;
}

MiddleLessResult is_middle_less(const Graph& g) {
    auto subs = find_spanning_k23_subdivisions(g);
    if (subs.empty())
        throw precondition_error("is_middle_less: graph has no spanning K2,3-subdivision");
    for (const auto& s : subs) {
        auto mids = middle_paths(g, s);
        if (!mids.empty()) return {false, std::make_pair(s, mids.front())};
    }
    return {true, std::nullopt};
}

namespace {

void require_obstruction_free(const Graph& g, const char* who) {
    const std::pair<const char*, Graph> obstructions[] = {
        {"K1+K4", graphs::k1_plus_k4()},
        {"K1+K23", graphs::k1_plus_k23()},
        {"K113", graphs::k113()},
    };
    for (const auto& [name, h] : obstructions)
        if (contains_minor(g, h))
            throw precondition_error(std::string(who) + ": graph contains " + name +
                                     " as a minor");
}

// Path index whose inner vertices contain v, or -1 for terminals.
int inner_path_of(const K23Subdivision& s, int v) {
    for (int i = 0; i < 3; ++i)
        if (s.inner_mask(i) & vbit(v)) return i;
    return -1;
}

}  // namespace

MiddleLessClassification classify_middle_less(const Graph& g) {
    require_obstruction_free(g, "classify_middle_less");
    auto subs = find_spanning_k23_subdivisions(g);
    if (subs.empty())
        throw precondition_error(
            "classify_middle_less: graph has no spanning K2,3-subdivision");
    for (const auto& s : subs)
        if (!middle_paths(g, s).empty())
            throw precondition_error("classify_middle_less: graph is middle-ful");

    const K23Subdivision& s = subs.front();
    std::vector<std::pair<int, int>> extras;
    for (auto [a, b] : g.edges())
        if (!s.is_path_edge(a, b)) extras.emplace_back(a, b);

    if (extras.empty()) return {MiddleLessType::TypeI, s, std::nullopt};
    if (extras.size() > 1)
        throw precondition_error(
            "classify_middle_less: several non-path edges; the single-extra-edge "
            "guarantee fails, so a precondition was violated");

    auto [a, b] = extras.front();
    int ia = inner_path_of(s, a), ib = inner_path_of(s, b);
    if (ia < 0 || ib < 0 || ia == ib)
        throw internal_error(
            "classify_middle_less: extra edge is a chord, which chordlessness of "
            "terminal paths rules out here");
    if (s.path_length(ia) == 2 || s.path_length(ib) == 2)
        return {MiddleLessType::TypeII, s, extras.front()};

    bool share_u = g.has_edge(a, s.terminal_u) && g.has_edge(b, s.terminal_u);
    bool share_v = g.has_edge(a, s.terminal_v) && g.has_edge(b, s.terminal_v);
    if (!share_u && !share_v)
        throw internal_error(
            "classify_middle_less: extra edge endpoints not adjacent to a common "
            "terminal despite both incident paths being longer than 2");
    return {MiddleLessType::TypeIII, s, extras.front()};
}

namespace {

std::vector<std::pair<int, int>> side_nonpath_edges(const Graph& g, const K23Subdivision& s,
                                                    int side_path, int mid) {
    VertexSet verts = s.path_mask(side_path) | s.path_mask(mid);
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : g.edges())
        if ((verts & vbit(a)) && (verts & vbit(b)) && !s.is_path_edge(a, b))
            out.emplace_back(a, b);
    return out;
}

}  // namespace

std::pair<FanWitness, FanWitness> fan_decomposition(const Graph& g, const K23Subdivision& s,
                                                    int mid) {
    if (mid < 0 || mid > 2) throw precondition_error("fan_decomposition: bad path index");
    auto mids = middle_paths(g, s);
    if (std::find(mids.begin(), mids.end(), mid) == mids.end())
        throw precondition_error("fan_decomposition: given path is not a middle path");
    require_obstruction_free(g, "fan_decomposition");

    const auto& pm = s.paths[mid];
    int outer_first = pm[1];
    int outer_last = pm[pm.size() - 2];

    auto build_side = [&](int side_path) {
        FanWitness w;
        w.side_path = side_path;
        w.spoke_edges = side_nonpath_edges(g, s, side_path, mid);
        w.handle = -1;
        for (int candidate : {outer_first, outer_last}) {
            bool all = true;
            for (auto [a, b] : w.spoke_edges)
                if (a != candidate && b != candidate) {
                    all = false;
                    break;
                }
            if (all) {
                w.handle = candidate;
                break;
            }
        }
        if (w.handle < 0)
            throw internal_error(
                "fan_decomposition: no outer inner vertex of the middle path covers "
                "all non-path edges of a side");
        return w;
    };

    int o1 = -1, o2 = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == mid) continue;
        (o1 < 0 ? o1 : o2) = i;
    }
    FanWitness f1 = build_side(o1), f2 = build_side(o2);
    if (f1.handle == f2.handle && s.path_length(mid) != 2)
        throw internal_error(
            "fan_decomposition: coincident handles require a middle path of length 2");
    if (f1.handle != f2.handle &&
        (f1.spoke_edges.size() != 1 || f2.spoke_edges.size() != 1))
        throw internal_error(
            "fan_decomposition: distinct handles require exactly one non-path edge per "
            "side");
    return {f1, f2};
}

bool verify_fan_witness(const Graph& g, const K23Subdivision& s, int mid,
                        const FanWitness& w) {
    const auto& pm = s.paths[mid];
    int outer_first = pm[1], outer_last = pm[pm.size() - 2];
    if (w.handle != outer_first && w.handle != outer_last) return false;
    for (auto [a, b] : side_nonpath_edges(g, s, w.side_path, mid))
        if (a != w.handle && b != w.handle) return false;
    return true;
}

}  // namespace nonsep
