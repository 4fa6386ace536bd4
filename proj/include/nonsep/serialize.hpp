#pragma once

#include "json.hpp"
#include "nonsep/classify.hpp"
#include "nonsep/crosscheck.hpp"
#include "nonsep/embedding.hpp"
#include "nonsep/linkless.hpp"

namespace nonsep {

using json = nlohmann::ordered_json;

inline json vertex_set_to_json(VertexSet s) {
    json out = json::array();
    for (VertexSet m = s; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

inline json minor_model_to_json(const MinorModel& m, const std::string& h_name) {
    json sets = json::array();
    for (VertexSet bs : m.branch_sets) sets.push_back(vertex_set_to_json(bs));
    return json{{"h", h_name}, {"branch_sets", sets}};
}

inline json witness_to_json(const StructuralWitness& w) {
    return std::visit(
        [](const auto& ww) -> json {
            using T = std::decay_t<decltype(ww)>;
            if constexpr (std::is_same_v<T, OuterplanarWitness>) {
                return json{{"type", "outerplanar"}, {"order", ww.order}};
            } else if constexpr (std::is_same_v<T, WheelWitness>) {
                json hub = ww.hub ? json(*ww.hub) : json(nullptr);
                return json{{"type", "wheel"}, {"hub", hub}, {"rim", ww.rim}};
            } else {
                // reconstruct which g-vertex sits on each host slot
                auto [l1, l2, l3] = ww.side_lengths;
                int host_n = 3 + l1 + l2 + l3;
                std::vector<int> g_of_host(host_n, -1);
                for (std::size_t v = 0; v < ww.host_of_g.size(); ++v)
                    g_of_host[ww.host_of_g[v]] = static_cast<int>(v);
                auto slot = [&](int hv) {
                    return g_of_host[hv] < 0 ? json(nullptr) : json(g_of_host[hv]);
                };
                json tri_a = json::array(), tri_b = json::array();
                for (int i = 0; i < 3; ++i) {
                    tri_a.push_back(slot(i));
                    tri_b.push_back(slot(3 + i));
                }
                json sides = json::array();
                int next = 6;
                for (int len : {l1, l2, l3}) {
                    json side = json::array();
                    for (int k = 1; k < len; ++k) side.push_back(slot(next++));
                    sides.push_back(side);
                }
                return json{{"type", "prism"},
                            {"side_lengths", {l1, l2, l3}},
                            {"triangle_a", tri_a},
                            {"triangle_b", tri_b},
                            {"side_internals", sides}};
            }
        },
        w);
}

inline json subdivision_to_json(const K23Subdivision& s) {
    json paths = json::array();
    for (const auto& p : s.paths) paths.push_back(p);
    return json{{"terminals", {s.terminal_u, s.terminal_v}}, {"paths", paths}};
}

inline json fan_witness_to_json(const FanWitness& f) {
    json spokes = json::array();
    for (auto [a, b] : f.spoke_edges) spokes.push_back({a, b});
    return json{{"side_path", f.side_path}, {"handle", f.handle},
                {"spoke_edges", spokes}};
}

inline json classification_to_json(const Classification& c) {
    json out;
    out["verdict"] = c.member ? "member" : "non-member";
    out["case"] = c.trace;
    if (c.analysis) {
        json a{{"subdivision", subdivision_to_json(c.analysis->subdivision)}};
        if (c.analysis->extra_edge)
            a["extra_edge"] = {c.analysis->extra_edge->first,
                               c.analysis->extra_edge->second};
        if (c.analysis->middle_path) a["middle_path"] = *c.analysis->middle_path;
        if (c.analysis->fans)
            a["fans"] = {fan_witness_to_json(c.analysis->fans->first),
                         fan_witness_to_json(c.analysis->fans->second)};
        out["analysis"] = a;
    }
    if (c.member) {
        out["certificate"] = witness_to_json(*c.witness);
    } else {
        json model = minor_model_to_json(c.obstruction->model, c.obstruction->name);
        out["certificate"] = json{{"type", "minor-model"},
                                  {"obstruction", c.obstruction->name},
                                  {"h", model["h"]},
                                  {"branch_sets", model["branch_sets"]}};
    }
    return out;
}

inline json drawing_to_json(const PlanarDrawing& d) {
    json rot = json::array();
    for (const auto& r : d.rotations) rot.push_back(r);
    json comps = json::array();
    for (VertexSet c : d.components) comps.push_back(vertex_set_to_json(c));
    json faces = json::array();
    for (const auto& f : d.faces)
        faces.push_back(json{{"component", f.component}, {"walk", f.walk}});
    json nesting = json::array();
    for (const auto& nst : d.nesting)
        nesting.push_back(json{{"parent_component", nst.parent_component},
                               {"parent_face", nst.parent_face}});
    return json{{"rotations", rot},
                {"components", comps},
                {"faces", faces},
                {"outer_face", d.outer_face},
                {"nesting", nesting}};
}

inline json crosscheck_report_to_json(const CrosscheckReport& r, bool stable) {
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back(json{{"index", m.index},
                                  {"graph6", m.graph6},
                                  {"classifier", m.classifier},
                                  {"minor", m.minor},
                                  {"oracle", m.oracle}});
    json out{{"n", r.n_max},
             {"include_disconnected", r.include_disconnected},
             {"graphs", r.graphs},
             {"members", r.members},
             {"witnesses",
              {{"outerplanar", r.outerplanar_witnesses},
               {"wheel", r.wheel_witnesses},
               {"prism", r.prism_witnesses}}},
             {"mismatches", mismatches}};
    if (!stable)
        out["elapsed_seconds"] = {{"minor", r.seconds_minor},
                                  {"classifier", r.seconds_classifier},
                                  {"oracle", r.seconds_oracle}};
    return out;
}

inline json sachs_instance_to_json(const SachsInstance& inst) {
    json edges = json::array();
    for (const auto& ev : inst.maximality.per_edge)
        edges.push_back(json{{"edge", {ev.edge.first, ev.edge.second}},
                             {"witness", ev.family_index < 0 ? json(nullptr)
                                                             : json(ev.family_name)}});
    return json{{"spec", {inst.spec.l1, inst.spec.l2, inst.spec.l3}},
                {"vertices", inst.vertices},
                {"edges", inst.edges},
                {"edge_identity_3v_minus_3", inst.edge_identity},
                {"linkless", inst.linkless},
                {"maximal", inst.maximality.maximal},
                {"per_edge", edges}};
}

}  // namespace nonsep
