#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

/// Work guard for the brute-force drawing enumeration. max_rotation_systems
/// bounds the product of per-vertex rotation counts over all components.
struct EmbeddingLimits {
    int max_vertices = 8;
    std::uint64_t max_rotation_systems = 20'000'000;
};

/// A combinatorial plane drawing: genus-0 rotation systems per component,
/// their traced faces, one face per component marked as facing the
/// component's surroundings, and a nesting forest placing each component in
/// the outer region or inside a (non-outer) face of another component.
struct PlanarDrawing {
    struct Face {
        int component;
        std::vector<int> walk;  // tails of the directed boundary edges
    };
    struct Nesting {
        int parent_component = -1;  // -1: the outer region
        int parent_face = -1;
    };

    std::vector<std::vector<int>> rotations;  // per vertex, cyclic neighbor order
    std::vector<VertexSet> components;
    std::vector<Face> faces;
    std::vector<int> outer_face;  // per component, index into faces
    std::vector<Nesting> nesting;
};

/// Streams every drawing of g: all genus-0 rotation systems per component (up
/// to global reflection), all outer-face markings (skipped for connected
/// graphs, where they cannot matter), and all acyclic nestings. The visitor
/// returns false to stop early. Throws capacity_error beyond the limits.
void for_each_planar_embedding(const Graph& g, const EmbeddingLimits& lim,
                               const std::function<bool(const PlanarDrawing&)>& visit);

std::vector<PlanarDrawing> enumerate_planar_embeddings(const Graph& g,
                                                       const EmbeddingLimits& lim = {});

/// The cycles of g with at least one vertex on each side in drawing d. Sides
/// are computed by splitting the host component's face set along the cycle;
/// nested components count on the side of their enclosing face, everything
/// else on the side of the host's outer face.
std::vector<Cycle> separating_cycles(const Graph& g, const PlanarDrawing& d);

/// Same set, but computed through an explicit interior/exterior labelling
/// rooted at the given face of the cycle's component. For connected graphs
/// the result is independent of the root; the crosscheck asserts this.
std::vector<Cycle> separating_cycles_rooted(const Graph& g, const PlanarDrawing& d,
                                            int root_face);

/// First drawing with no separating cycle, if any: the literal definition of
/// a non-separating planar graph, by exhaustion. Non-planar inputs are
/// dismissed via a verified K5/K33 minor certificate before enumerating.
std::optional<PlanarDrawing> exists_nonseparating_drawing(const Graph& g,
                                                          const EmbeddingLimits& lim = {});

/// Euler consistency, rotation validity, and nesting sanity of a drawing.
bool verify_drawing(const Graph& g, const PlanarDrawing& d);

}  // namespace nonsep
