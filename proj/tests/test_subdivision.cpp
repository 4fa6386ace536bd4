#include "doctest.h"
#include "nonsep/minor.hpp"
#include "nonsep/subdivision.hpp"
#include "test_oracles.hpp"

#include <algorithm>
#include <random>

using namespace nonsep;

namespace {

// Theta graph: terminals 0 and 1 joined by three paths of the given lengths.
Graph theta(int l1, int l2, int l3) {
    int n = 2 + (l1 - 1) + (l2 - 1) + (l3 - 1);
    Graph g(n);
    int next = 2;
    for (int len : {l1, l2, l3}) {
        int prev = 0;
        for (int k = 1; k < len; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

}  // namespace

TEST_CASE("K23 is its own unique spanning subdivision") {
    auto subs = find_spanning_k23_subdivisions(graphs::k23());
    REQUIRE(subs.size() == 1);
    const auto& s = subs[0];
    CHECK(s.terminal_u == 0);
    CHECK(s.terminal_v == 1);
    for (int i = 0; i < 3; ++i) CHECK(s.path_length(i) == 2);
    CHECK(is_valid_spanning_k23(graphs::k23(), s));
}

namespace {

// Independent count of spanning K2,3-subdivisions by edge subsets. A
// connected spanning subgraph with degree sequence (3,3,2,...,2) has n+1
// edges and is either a theta or a dumbbell (two cycles joined by a path);
// dumbbells fall apart when a degree-3 vertex is removed. Degree-3 vertices
// adjacent within the subset would mean a length-1 terminal path, which no
// K2,3 subdivision has.
long count_spanning_theta_subgraphs(const Graph& g) {
    auto es = g.edges();
    int m = static_cast<int>(es.size()), n = g.vertex_count();
    if (n < 5 || m < n + 1) return 0;
    long count = 0;
    for (long mask = 0; mask < (1L << m); ++mask) {
        if (std::popcount(static_cast<unsigned long>(mask)) != n + 1) continue;
        Graph s(n);
        for (int i = 0; i < m; ++i)
            if (mask & (1L << i)) s.add_edge(es[i].first, es[i].second);
        int t1 = -1, t2 = -1;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (s.degree(v) == 3)
                (t1 < 0 ? t1 : t2) = v;
            else if (s.degree(v) != 2)
                ok = false;
        }
        if (!ok || t2 < 0 || s.has_edge(t1, t2) || !is_connected(s)) continue;
        if (is_connected(delete_vertex(s, t1))) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("subdivision enumeration count matches the edge-subset oracle") {
    std::mt19937 rng(5150);
    std::vector<Graph> fixtures = {graphs::k23(), graphs::triangular_prism(),
                                   graphs::w4(), theta(2, 3, 3), graphs::wheel(5)};
    for (int trial = 0; trial < 40; ++trial)
        fixtures.push_back(oracle::random_graph(rng, 5 + int(rng() % 2), 0.5));
    long nonzero = 0;
    for (const Graph& g : fixtures) {
        auto subs = find_spanning_k23_subdivisions(g);
        for (const auto& s : subs) CHECK(is_valid_spanning_k23(g, s));
        CHECK(static_cast<long>(subs.size()) == count_spanning_theta_subgraphs(g));
        if (!subs.empty()) ++nonzero;
    }
    CHECK(nonzero >= 5);
}

TEST_CASE("prism subdivisions include the expected witness; P4 has none") {
    Graph prism = graphs::triangular_prism();
    auto subs = find_spanning_k23_subdivisions(prism);
    REQUIRE(!subs.empty());
    bool found = false;
    for (const auto& s : subs) {
        CHECK(is_valid_spanning_k23(prism, s));
        if (s.terminal_u == 0 && s.terminal_v == 4) {
            std::array<std::vector<int>, 3> expect = {
                std::vector<int>{0, 1, 4}, {0, 2, 5, 4}, {0, 3, 4}};
            if (s.paths == expect) found = true;
        }
    }
    CHECK(found);

    CHECK(find_spanning_k23_subdivisions(graphs::path(4)).empty());
}

TEST_CASE("chordless terminal paths") {
    auto k23sub = find_spanning_k23_subdivisions(graphs::k23())[0];
    for (int i = 0; i < 3; ++i) CHECK(is_chordless_terminal_path(graphs::k23(), k23sub, i));

    // W4, subdivision with opposite rim terminals: rim paths are chordless
    Graph w4 = graphs::w4();
    auto subs = find_spanning_k23_subdivisions(w4);
    REQUIRE(!subs.empty());
    for (const auto& s : subs)
        for (int i = 0; i < 3; ++i)
            if (set_size(s.inner_mask(i) & vbit(4)) == 0)  // not the hub path
                CHECK(is_chordless_terminal_path(w4, s, i));

    // adding the terminal-terminal edge makes a length-3 path chorded
    Graph chorded = theta(3, 2, 2);
    chorded.add_edge(0, 1);
    auto csubs = find_spanning_k23_subdivisions(chorded);
    REQUIRE(!csubs.empty());
    const auto& cs = csubs[0];
    int long_path = -1;
    for (int i = 0; i < 3; ++i)
        if (cs.path_length(i) == 3) long_path = i;
    REQUIRE(long_path >= 0);
    CHECK_FALSE(is_chordless_terminal_path(chorded, cs, long_path));

    CHECK_THROWS_AS(is_chordless_terminal_path(chorded, cs, 5), precondition_error);
}

TEST_CASE("middle path detection") {
    // K23: no inner-inner edges at all
    auto k23sub = find_spanning_k23_subdivisions(graphs::k23())[0];
    CHECK(middle_paths(graphs::k23(), k23sub).empty());

    // W4: the hub path is the middle path of every spanning subdivision
    Graph w4 = graphs::w4();
    for (const auto& s : find_spanning_k23_subdivisions(w4)) {
        auto mids = middle_paths(w4, s);
        REQUIRE(mids.size() == 1);
        CHECK((s.inner_mask(mids[0]) & vbit(4)) != 0);
    }

    // prism: exactly the long path through a3, b3 in the witness subdivision
    Graph prism = graphs::triangular_prism();
    for (const auto& s : find_spanning_k23_subdivisions(prism)) {
        if (s.terminal_u != 0 || s.terminal_v != 4) continue;
        if (s.paths[1] != std::vector<int>{0, 2, 5, 4}) continue;
        CHECK(middle_paths(prism, s) == std::vector<int>{1});
    }
}

TEST_CASE("is_middle_less") {
    CHECK(is_middle_less(theta(3, 3, 3)).middle_less);

    auto w4res = is_middle_less(graphs::w4());
    CHECK_FALSE(w4res.middle_less);
    REQUIRE(w4res.witness.has_value());
    CHECK((w4res.witness->first.inner_mask(w4res.witness->second) & vbit(4)) != 0);

    CHECK_FALSE(is_middle_less(graphs::triangular_prism()).middle_less);

    CHECK_THROWS_AS(is_middle_less(graphs::path(4)), precondition_error);
}

TEST_CASE("classify_middle_less recognizes the three templates") {
    auto t1 = classify_middle_less(theta(2, 3, 4));
    CHECK(t1.type == MiddleLessType::TypeI);
    CHECK_FALSE(t1.extra_edge.has_value());

    // inner of a length-2 path joined to an inner of another path
    Graph t2g = graphs::k23();
    t2g.add_edge(2, 3);
    auto t2 = classify_middle_less(t2g);
    CHECK(t2.type == MiddleLessType::TypeII);
    REQUIRE(t2.extra_edge.has_value());
    CHECK(*t2.extra_edge == std::make_pair(2, 3));

    // both incident paths longer than 2, both endpoints adjacent to terminal 0
    Graph t3g = theta(3, 3, 2);
    t3g.add_edge(2, 4);
    auto t3 = classify_middle_less(t3g);
    CHECK(t3.type == MiddleLessType::TypeIII);
    REQUIRE(t3.extra_edge.has_value());
    CHECK(*t3.extra_edge == std::make_pair(2, 4));
}

TEST_CASE("classify_middle_less enforces its preconditions") {
    CHECK_THROWS_AS(classify_middle_less(graphs::w4()), precondition_error);  // middle-ful
    CHECK_THROWS_AS(classify_middle_less(graphs::path(4)), precondition_error);
    CHECK_THROWS_AS(classify_middle_less(graphs::k113()), precondition_error);
}

TEST_CASE("fan decomposition of W4: both handles at the hub") {
    Graph w4 = graphs::w4();
    auto res = is_middle_less(w4);
    REQUIRE(res.witness.has_value());
    auto [s, mid] = *res.witness;
    auto [f1, f2] = fan_decomposition(w4, s, mid);
    CHECK(f1.handle == 4);
    CHECK(f2.handle == 4);
    CHECK(s.path_length(mid) == 2);
    CHECK(verify_fan_witness(w4, s, mid, f1));
    CHECK(verify_fan_witness(w4, s, mid, f2));
}

TEST_CASE("fan decomposition of the prism: distinct handles, one spoke each") {
    Graph prism = graphs::triangular_prism();
    K23Subdivision s;
    s.terminal_u = 0;
    s.terminal_v = 4;
    s.paths = {std::vector<int>{0, 1, 4}, {0, 2, 5, 4}, {0, 3, 4}};
    REQUIRE(is_valid_spanning_k23(prism, s));
    auto [f1, f2] = fan_decomposition(prism, s, 1);
    CHECK(f1.handle == 2);  // a3
    CHECK(f2.handle == 5);  // b3
    CHECK(f1.spoke_edges.size() == 1);
    CHECK(f2.spoke_edges.size() == 1);
    CHECK(verify_fan_witness(prism, s, 1, f1));
    CHECK(verify_fan_witness(prism, s, 1, f2));
}

TEST_CASE("fan decomposition requires a middle path") {
    auto k23sub = find_spanning_k23_subdivisions(graphs::k23())[0];
    CHECK_THROWS_AS(fan_decomposition(graphs::k23(), k23sub, 0), precondition_error);
}

TEST_CASE("chordless paths and unique middle paths on random hosts") {
    std::mt19937 rng(31337);
    Graph k113 = graphs::k113();
    Graph k1k4 = graphs::k1_plus_k4();
    Graph k1k23 = graphs::k1_plus_k23();
    Graph w4 = graphs::w4();
    int with_subdivision = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Graph g = oracle::random_graph(rng, 5 + int(rng() % 2), 0.5);
        if (contains_minor(g, k113)) continue;
        auto subs = find_spanning_k23_subdivisions(g);
        if (subs.empty()) continue;
        ++with_subdivision;
        bool middle_less = true;
        for (const auto& s : subs) {
            for (int i = 0; i < 3; ++i) CHECK(is_chordless_terminal_path(g, s, i));
            auto mids = middle_paths(g, s);
            CHECK(mids.size() <= 1);  // at most one middle path
            if (!mids.empty()) middle_less = false;
        }
        if (middle_less) CHECK_FALSE(contains_minor(g, w4));

        // no inner vertex of a side path sends two edges to the middle path
        if (!middle_less && !contains_minor(g, k1k4) && !contains_minor(g, k1k23)) {
            for (const auto& s : subs)
                for (int mid : middle_paths(g, s)) {
                    VertexSet midset = s.inner_mask(mid);
                    for (int i = 0; i < 3; ++i) {
                        if (i == mid) continue;
                        for (VertexSet m = s.inner_mask(i); m; m &= m - 1)
                            CHECK(set_size(g.neighbors(std::countr_zero(m)) & midset) <= 1);
                    }
                }
        }
    }
    CHECK(with_subdivision > 10);  // the sweep actually exercised something
}
