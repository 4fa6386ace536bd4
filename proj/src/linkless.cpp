#include "nonsep/linkless.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace nonsep {

Graph build_elongated_prism(const ElongatedPrismSpec& spec) {
    Graph g = graphs::elongated_prism(spec.l1, spec.l2, spec.l3);
    if (g.vertex_count() != spec.vertex_count() || g.edge_count() != spec.edge_count() ||
        g.edge_count() != g.vertex_count() + 3)
        throw internal_error("elongated prism violates its edge-count identity");
    return g;
}

Graph apex_augment(const Graph& g) {
    int n = g.vertex_count();
    if (n + 2 > kMaxVertices) throw capacity_error("apex_augment exceeds 64 vertices");
    Graph out(n + 2);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (int v = 0; v < n; ++v) {
        out.add_edge(n, v);
        out.add_edge(n + 1, v);
    }
    if (out.edge_count() != g.edge_count() + 2 * n)
        throw internal_error("apex_augment edge count is off");
    return out;
}

namespace {

std::vector<Graph> delta_to_y_moves(const Graph& g) {
    std::vector<Graph> out;
    int n = g.vertex_count();
    if (n + 1 > kMaxVertices) return out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c)) continue;
                Graph h(n + 1);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                h.remove_edge(a, b);
                h.remove_edge(a, c);
                h.remove_edge(b, c);
                h.add_edge(n, a);
                h.add_edge(n, b);
                h.add_edge(n, c);
                out.push_back(std::move(h));
            }
        }
    return out;
}

std::vector<Graph> y_to_delta_moves(const Graph& g) {
    std::vector<Graph> out;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (g.degree(w) != 3) continue;
        int nb[3], k = 0;
        for (VertexSet m = g.neighbors(w); m; m &= m - 1) nb[k++] = std::countr_zero(m);
        if (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[0], nb[2]) ||
            g.has_edge(nb[1], nb[2]))
            continue;  // would create a parallel edge
        Graph h = delete_vertex(g, w);
        auto shift = [&](int v) { return v < w ? v : v - 1; };
        h.add_edge(shift(nb[0]), shift(nb[1]));
        h.add_edge(shift(nb[0]), shift(nb[2]));
        h.add_edge(shift(nb[1]), shift(nb[2]));
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<PetersenFamilyMember> compute_petersen_family() {
    struct Entry {
        Graph graph;
        std::vector<std::string> moves;
    };
    std::map<std::string, Entry> seen;
    std::vector<std::string> queue;

    Graph k6 = graphs::k6();
    std::string k6key = canonical_form(k6);
    seen.emplace(k6key, Entry{k6, {}});
    queue.push_back(k6key);

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Entry at = seen.at(queue[qi]);
        auto explore = [&](std::vector<Graph> next, const char* tag) {
            for (std::size_t i = 0; i < next.size(); ++i) {
                std::string key = canonical_form(next[i]);
                if (seen.count(key)) continue;
                std::vector<std::string> chain = at.moves;
                chain.push_back(std::string(tag) + "#" + std::to_string(i));
                seen.emplace(key, Entry{std::move(next[i]), std::move(chain)});
                queue.push_back(key);
            }
        };
        explore(delta_to_y_moves(at.graph), "dY");
        explore(y_to_delta_moves(at.graph), "Yd");
    }

    std::vector<PetersenFamilyMember> members;
    for (auto& [key, entry] : seen)
        members.push_back({std::move(entry.graph), "", std::move(entry.moves)});
    std::sort(members.begin(), members.end(),
              [](const PetersenFamilyMember& a, const PetersenFamilyMember& b) {
                  if (a.graph.vertex_count() != b.graph.vertex_count())
                      return a.graph.vertex_count() < b.graph.vertex_count();
                  return canonical_form(a.graph) < canonical_form(b.graph);
              });

    // the known shape of the closure, asserted
    if (members.size() != 7)
        throw internal_error("delta-wye closure of K6 has " +
                             std::to_string(members.size()) + " classes, expected 7");
    bool have_k133 = false, have_petersen = false;
    std::map<int, int> per_n;
    for (auto& m : members) {
        int n = m.graph.vertex_count();
        ++per_n[n];
        if (m.graph.edge_count() != 15)
            throw internal_error("family member does not have 15 edges");
        if (are_isomorphic(m.graph, graphs::k6())) m.name = "K6";
        if (are_isomorphic(m.graph, graphs::k133())) {
            m.name = "K1,3,3";
            have_k133 = true;
        }
        bool cubic = true;
        for (int v = 0; v < n; ++v)
            if (m.graph.degree(v) != 3) cubic = false;
        if (n == 10 && cubic && girth(m.graph) == 5) {
            m.name = "Petersen";
            have_petersen = true;
        }
    }
    if (!have_k133 || !have_petersen || members[0].name != "K6")
        throw internal_error("delta-wye closure of K6 misses an expected member");
    for (auto& m : members)
        if (m.name.empty()) {
            m.name = "PF" + std::to_string(m.graph.vertex_count());
            if (per_n[m.graph.vertex_count()] > 1) {
                int seq = 0;
                for (auto& other : members) {
                    if (&other == &m) break;
                    if (other.graph.vertex_count() == m.graph.vertex_count()) ++seq;
                }
                m.name += char('a' + seq);
            }
        }
    return members;
}

}  // namespace

const std::vector<PetersenFamilyMember>& petersen_family() {
    static const std::vector<PetersenFamilyMember> family = compute_petersen_family();
    return family;
}

bool is_linkless(const Graph& g) {
    for (const auto& member : petersen_family())
        if (contains_minor(g, member.graph)) return false;
    return true;
}

MaximalityReport verify_maximal_linkless(const Graph& h, int jobs) {
    if (!is_linkless(h))
        throw precondition_error("verify_maximal_linkless: graph is not linkless");

    std::vector<std::pair<int, int>> non_edges;
    for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = u + 1; v < h.vertex_count(); ++v)
            if (!h.has_edge(u, v)) non_edges.emplace_back(u, v);

    MaximalityReport report;
    report.per_edge.resize(non_edges.size());

    auto check_edge = [&](std::size_t i) {
        auto [u, v] = non_edges[i];
        Graph plus = h;
        plus.add_edge(u, v);
        EdgeEvidence ev;
        ev.edge = non_edges[i];
        const auto& family = petersen_family();
        for (std::size_t k = 0; k < family.size(); ++k) {
            if (auto m = find_minor_model(plus, family[k].graph)) {
                ev.family_index = static_cast<int>(k);
                ev.family_name = family[k].name;
                ev.model = *m;
                break;
            }
        }
        report.per_edge[i] = std::move(ev);
    };

    if (jobs <= 1 || non_edges.size() < 2) {
        for (std::size_t i = 0; i < non_edges.size(); ++i) check_edge(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        int count = std::min<int>(jobs, static_cast<int>(non_edges.size()));
        for (int t = 0; t < count; ++t)
            workers.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < non_edges.size();
                     i = next.fetch_add(1))
                    check_edge(i);
            });
        for (auto& w : workers) w.join();
    }

    report.maximal = true;
    for (const auto& ev : report.per_edge)
        if (ev.family_index < 0) report.maximal = false;
    return report;
}

std::vector<SachsInstance> sachs_family(int max_total_length, int jobs) {
    if (max_total_length < 3)
        throw precondition_error("sachs_family: total side length must be at least 3");
    std::vector<SachsInstance> out;
    for (int total = 3; total <= max_total_length; ++total)
        for (int l1 = (total + 2) / 3; l1 <= total - 2; ++l1)
            for (int l2 = (total - l1 + 1) / 2; l2 <= std::min(l1, total - l1 - 1); ++l2) {
                ElongatedPrismSpec spec{l1, l2, total - l1 - l2};
                SachsInstance inst;
                inst.spec = spec;
                inst.graph = apex_augment(build_elongated_prism(spec));
                bool duplicate = false;
                for (const auto& prev : out)
                    if (are_isomorphic(prev.graph, inst.graph)) duplicate = true;
                if (duplicate) continue;
                inst.vertices = inst.graph.vertex_count();
                inst.edges = inst.graph.edge_count();
                inst.edge_identity = inst.edges == 3 * inst.vertices - 3;
                inst.linkless = is_linkless(inst.graph);
                if (!inst.edge_identity || !inst.linkless)
                    throw internal_error("sachs_family member failed verification");
                inst.maximality = verify_maximal_linkless(inst.graph, jobs);
                if (!inst.maximality.maximal)
                    throw internal_error("sachs_family member is not maximal");
                out.push_back(std::move(inst));
            }
    return out;
}

}  // namespace nonsep
