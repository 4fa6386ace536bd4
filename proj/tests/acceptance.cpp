// Acceptance suite: runs the seven headline checks end to end and prints one
// PASS/FAIL line each. Exits nonzero if anything fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "nonsep/classify.hpp"
#include "nonsep/crosscheck.hpp"
#include "nonsep/embedding.hpp"
#include "nonsep/linkless.hpp"
#include "nonsep/subdivision.hpp"

using namespace nonsep;

namespace {

bool all_pass = true;

void report(int num, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %d: %s — %s (%.1fs)\n", pass ? "PASS" : "FAIL", num,
                name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    all_pass = all_pass && pass;
}

template <typename F>
void timed(int num, const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(num, name, pass, detail, secs);
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 2 : static_cast<int>(hw);
}

Graph random_connected_planar(std::mt19937& rng) {
    for (;;) {
        int n = 4 + int(rng() % 4);
        Graph g(n);
        std::bernoulli_distribution coin(0.45);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (!is_connected(g)) continue;
        if (contains_minor(g, graphs::k5()) || contains_minor(g, graphs::k33())) continue;
        return g;
    }
}

}  // namespace

int main() {
    int jobs = worker_count();

    timed(1, "three-way equivalence on all graphs up to 7 vertices", [&](std::string& d) {
        CrosscheckOptions conn;
        conn.n_max = 7;
        conn.jobs = jobs;
        CrosscheckReport rc = run_crosscheck(conn);
        CrosscheckOptions disc;
        disc.n_max = 6;
        disc.include_disconnected = true;
        disc.jobs = jobs;
        CrosscheckReport rd = run_crosscheck(disc);
        d = "connected n<=7: " + std::to_string(rc.graphs) + " graphs, " +
            std::to_string(rc.mismatches.size()) + " mismatches; with disconnected n<=6: " +
            std::to_string(rd.graphs) + " graphs, " + std::to_string(rd.mismatches.size()) +
            " mismatches";
        return rc.mismatches.empty() && rd.mismatches.empty();
    });

    timed(2, "obstruction minimality", [&](std::string& d) {
        int checked = 0;
        for (const auto& [name, h] : obstruction_catalog()) {
            if (classify(h).member) {
                d = name + " classified as member";
                return false;
            }
            for (auto [u, v] : h.edges()) {
                if (!classify(delete_edge(h, u, v)).member) {
                    d = name + " minus an edge is still a non-member";
                    return false;
                }
                if (!classify(contract_edge(h, u, v)).member) {
                    d = name + " with an edge contracted is still a non-member";
                    return false;
                }
                checked += 2;
            }
        }
        d = "3 obstructions non-member; all " + std::to_string(checked) +
            " single-operation reductions are members";
        return true;
    });

    timed(3, "chordless/middle-path properties over K113-free hosts, n<=7", [&](std::string& d) {
        Graph k113 = graphs::k113();
        Graph w4 = graphs::w4();
        long hosts = 0, subdivisions = 0;
        for (const Graph& g : crosscheck_corpus(7, false)) {
            if (contains_minor(g, k113)) continue;
            auto subs = find_spanning_k23_subdivisions(g);
            if (subs.empty()) continue;
            ++hosts;
            bool middle_less = true;
            for (const auto& s : subs) {
                ++subdivisions;
                for (int i = 0; i < 3; ++i)
                    if (!is_chordless_terminal_path(g, s, i)) {
                        d = "chorded terminal path in " + to_graph6(g);
                        return false;
                    }
                auto mids = middle_paths(g, s);
                if (mids.size() > 1) {
                    d = "two middle paths in " + to_graph6(g);
                    return false;
                }
                if (!mids.empty()) middle_less = false;
            }
            if (middle_less && contains_minor(g, w4)) {
                d = "middle-less graph with a W4 minor: " + to_graph6(g);
                return false;
            }
        }
        d = std::to_string(hosts) + " hosts, " + std::to_string(subdivisions) +
            " spanning subdivisions, zero violations";
        return hosts > 10;  // non-vacuity: the corpus has 21 such hosts
    });

    timed(4, "maximal linkless family with 3|V|-3 edges, side lengths up to 6",
          [&](std::string& d) {
              auto family = sachs_family(6, jobs);
              for (const auto& inst : family) {
                  if (!inst.edge_identity || !inst.linkless || !inst.maximality.maximal) {
                      d = "member failed verification";
                      return false;
                  }
                  int u = inst.vertices - 2, v = inst.vertices - 1;  // the apexes
                  bool apex_edge_is_k6 = false;
                  for (const auto& ev : inst.maximality.per_edge)
                      if (ev.edge == std::make_pair(u, v))
                          apex_edge_is_k6 = ev.family_name == "K6";
                  if (!apex_edge_is_k6) {
                      d = "apex-apex edge did not yield K6";
                      return false;
                  }
              }
              d = std::to_string(family.size()) +
                  " isomorphism classes, all linkless and edge-maximal with exactly "
                  "3|V|-3 edges; the apex-apex edge always yields K6";
              return family.size() == 7;
          });

    timed(5, "Petersen family by delta-wye closure", [&](std::string& d) {
        const auto& family = petersen_family();
        bool petersen = false;
        for (const auto& m : family) {
            bool cubic = m.graph.vertex_count() == 10;
            for (int v = 0; cubic && v < 10; ++v) cubic = m.graph.degree(v) == 3;
            if (cubic && girth(m.graph) == 5) petersen = true;
        }
        d = std::to_string(family.size()) +
            " isomorphism classes; 3-regular girth-5 10-vertex member present";
        return family.size() == 7 && petersen;
    });

    timed(6, "elongated prisms are maximal non-separating, side lengths up to 6",
          [&](std::string& d) {
              int count = 0;
              for (int total = 3; total <= 6; ++total)
                  for (int l1 = (total + 2) / 3; l1 <= total - 2; ++l1)
                      for (int l2 = (total - l1 + 1) / 2;
                           l2 <= std::min(l1, total - l1 - 1); ++l2) {
                          ElongatedPrismSpec spec{l1, l2, total - l1 - l2};
                          if (!check_maximal_nonseparating(build_elongated_prism(spec))) {
                              d = "prism not maximal";
                              return false;
                          }
                          ++count;
                      }
              d = std::to_string(count) + " prisms, every added edge breaks membership";
              return count == 7;
          });

    timed(7, "separating cycles invariant under outer-face re-rooting", [&](std::string& d) {
        std::mt19937 rng(123456);
        long rootings = 0;
        for (int trial = 0; trial < 200; ++trial) {
            Graph g = random_connected_planar(rng);
            int drawings = 0;
            bool ok = true;
            for_each_planar_embedding(g, {}, [&](const PlanarDrawing& dr) {
                auto baseline = separating_cycles(g, dr);
                for (std::size_t f = 0; f < dr.faces.size(); ++f) {
                    ++rootings;
                    if (separating_cycles_rooted(g, dr, int(f)) != baseline) {
                        ok = false;
                        return false;
                    }
                }
                return ++drawings < 3;
            });
            if (!ok) {
                d = "re-rooting changed the separating set on " + to_graph6(g);
                return false;
            }
        }
        d = "200 graphs, " + std::to_string(rootings) + " rootings, sets identical";
        return true;
    });

    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                                 : "ACCEPTANCE: FAILURES PRESENT");
    return all_pass ? 0 : 1;
}
