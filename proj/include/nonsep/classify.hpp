#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nonsep/minor.hpp"
#include "nonsep/subdivision.hpp"

namespace nonsep {

/// Cyclic vertex order on the disk boundary; valid iff no two edges
/// interleave in it.
struct OuterplanarWitness {
    std::vector<int> order;
};

/// Subgraph-of-a-wheel embedding: deleting the hub (if any) leaves a graph
/// whose every edge joins cyclically consecutive rim entries.
struct WheelWitness {
    std::optional<int> hub;
    std::vector<int> rim;
};

/// Subgraph-of-an-elongated-prism embedding into the host
/// graphs::elongated_prism(side_lengths): host_of_g[v] is the host vertex
/// carrying g's vertex v.
struct PrismWitness {
    std::array<int, 3> side_lengths;
    std::vector<int> host_of_g;
};

using StructuralWitness = std::variant<OuterplanarWitness, WheelWitness, PrismWitness>;

struct ObstructionCertificate {
    std::string name;  // "K1+K4", "K1+K23" or "K113"
    MinorModel model;
};

/// Supporting data for the spanning-subdivision proof cases: the subdivision
/// that drove the analysis, plus either the middle-less template or the fan
/// decomposition of the middle path.
struct CaseAnalysis {
    K23Subdivision subdivision;
    std::optional<MiddleLessType> middle_less_type;
    std::optional<std::pair<int, int>> extra_edge;
    std::optional<int> middle_path;
    std::optional<std::pair<FanWitness, FanWitness>> fans;
};

/// Total classification result: members carry a structural witness,
/// non-members an obstruction minor model; `trace` names the proof case that
/// produced the certificate, with the subdivision analysis attached for the
/// middle-path cases.
struct Classification {
    bool member = false;
    std::string trace;
    std::optional<StructuralWitness> witness;
    std::optional<ObstructionCertificate> obstruction;
    std::optional<CaseAnalysis> analysis;
};

/// The three excluded minors, in fixed order with their certificate names.
const std::array<std::pair<std::string, Graph>, 3>& obstruction_catalog();

/// Decision by K4/K2,3 minor-freeness; the certificate order is built from
/// the block structure and re-checked before returning.
std::optional<std::vector<int>> is_outerplanar(const Graph& g);
bool verify_outerplanar_order(const Graph& g, const std::vector<int>& order);

std::optional<WheelWitness> wheel_subgraph_witness(const Graph& g);
bool verify_wheel_witness(const Graph& g, const WheelWitness& w);

/// Searches host prisms on at most max(6, n) vertices; any larger host can be
/// shrunk by excising unused side vertices.
std::optional<PrismWitness> elongated_prism_subgraph_witness(const Graph& g);
bool verify_prism_witness(const Graph& g, const PrismWitness& w);

bool verify_witness(const Graph& g, const StructuralWitness& w);

/// Injective map of g's vertices into host with every g-edge on a host edge.
std::optional<std::vector<int>> subgraph_embedding(const Graph& g, const Graph& host);

/// The three-way characterisation as a total decision procedure; every
/// certificate re-verifies before being returned. Inconsistencies between the
/// obstruction tests and the witness search raise internal_error.
Classification classify(const Graph& g);
bool verify_classification(const Graph& g, const Classification& c);

/// True iff g is a member and adding any missing edge destroys membership.
bool check_maximal_nonseparating(const Graph& g);

}  // namespace nonsep
