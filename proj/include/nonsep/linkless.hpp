#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nonsep/minor.hpp"

namespace nonsep {

/// Side-path edge counts of an elongated triangular prism. The built graph
/// has 3 + sum vertices and 6 + sum edges, so |E| = |V| + 3 always.
struct ElongatedPrismSpec {
    int l1 = 1, l2 = 1, l3 = 1;
    int vertex_count() const { return 3 + l1 + l2 + l3; }
    int edge_count() const { return 6 + l1 + l2 + l3; }
};

Graph build_elongated_prism(const ElongatedPrismSpec& spec);

/// Adds two new vertices adjacent to every original vertex but not to each
/// other; the result has |E| + 2|V| edges.
Graph apex_augment(const Graph& g);

struct PetersenFamilyMember {
    Graph graph;
    std::string name;
    std::vector<std::string> moves;  // delta-wye provenance chain from K6
};

/// The closure of {K6} under triangle/Y exchanges (Y moves that would create
/// parallel edges are skipped), one representative per isomorphism class,
/// ordered by vertex count then canonical form — K6 first. The known shape of
/// the family (7 members, K_{1,3,3} among them, a 3-regular 10-vertex member
/// of girth 5) is asserted, not assumed.
const std::vector<PetersenFamilyMember>& petersen_family();

/// Petersen-family minor-freeness, the operational definition of
/// linklessness.
bool is_linkless(const Graph& g);

struct EdgeEvidence {
    std::pair<int, int> edge;
    int family_index = -1;  // -1: no family minor found, the edge is harmless
    std::string family_name;
    MinorModel model;
};

struct MaximalityReport {
    bool maximal = false;
    std::vector<EdgeEvidence> per_edge;  // non-edges in ascending order
};

/// Checks that adding any missing edge creates a Petersen-family minor,
/// naming the first family member found per edge. Edges are checked in
/// parallel when jobs > 1.
MaximalityReport verify_maximal_linkless(const Graph& h, int jobs = 1);

struct SachsInstance {
    ElongatedPrismSpec spec;
    Graph graph;  // the apex-augmented prism
    int vertices = 0;
    int edges = 0;
    bool edge_identity = false;  // edges == 3*vertices - 3
    bool linkless = false;
    MaximalityReport maximality;
};

/// The maximal-linkless family: apex-augmented elongated prisms for every
/// spec with l1+l2+l3 <= max_total_length, one per isomorphism class, each
/// fully verified; a failed verification is a hard error.
std::vector<SachsInstance> sachs_family(int max_total_length, int jobs = 1);

}  // namespace nonsep
