#pragma once

#include <utility>
#include <vector>

#include "upset/embedding.hpp"
#include "upset/error.hpp"
#include "upset/geometry.hpp"
#include "upset/graph.hpp"

namespace upset {

struct GadgetLabel {
  int cycle;     // 1-based cycle index, 1 = outermost
  int position;  // 0, 1, 2 within the cycle
};

// Stack of 2k triangles: cycle i is joined to cycle i+1 by the six edges
// (i,j)-(i+1,j) and (i,j)-(i+1,(j+1) mod 3), so each vertex has exactly two
// neighbors in each adjacent cycle and the layer between consecutive cycles
// is a triangulated annulus. Vertex ids encode the labels.
struct GadgetGraph {
  PlanarGraph graph;
  int k = 0;

  int cycles() const { return 2 * k; }

  static int vertex_id(int cycle, int position) {
    return 3 * (cycle - 1) + position;
  }

  static GadgetLabel label_of(int v) { return {v / 3 + 1, v % 3}; }
};

// Reference drawing: cycle i sits on the triangle with corners (-2s, -s),
// (2s, -s), (0, 2s) for s = 2k - i + 1, so cycle 1 is outermost and the
// triangles shrink strictly toward the origin.
inline std::vector<Point> concentric_gadget_placement(int k) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "k must be >= 1");
  std::vector<Point> placement;
  placement.reserve(static_cast<std::size_t>(6) * k);
  for (int i = 1; i <= 2 * k; ++i) {
    const Coord s = 2 * k - i + 1;
    placement.push_back({-2 * s, -s});
    placement.push_back({2 * s, -s});
    placement.push_back({0, 2 * s});
  }
  return placement;
}

inline GadgetGraph build_gadget(int n) {
  if (n < 12 || n % 12 != 0)
    raise(ErrorCode::InvalidN,
          "gadget size must be a positive multiple of 12, got " +
              std::to_string(n));
  const int k = n / 6;
  PlanarGraph g(n);
  for (int i = 1; i <= 2 * k; ++i)
    for (int j = 0; j < 3; ++j)
      g.add_edge(GadgetGraph::vertex_id(i, j),
                 GadgetGraph::vertex_id(i, (j + 1) % 3));
  for (int i = 1; i < 2 * k; ++i) {
    for (int j = 0; j < 3; ++j) {
      g.add_edge(GadgetGraph::vertex_id(i, j),
                 GadgetGraph::vertex_id(i + 1, j));
      g.add_edge(GadgetGraph::vertex_id(i, j),
                 GadgetGraph::vertex_id(i + 1, (j + 1) % 3));
    }
  }
  g.set_embedding(embedding_from_drawing(g, concentric_gadget_placement(k)));
  return {std::move(g), k};
}

// Rebuilds the gadget for a graph loaded from disk (edge lists carry no
// rotation system) and checks the edges match the id convention.
inline GadgetGraph gadget_from_graph(const PlanarGraph& g, int k) {
  if (k < 2 || g.n() != 6 * k)
    raise(ErrorCode::FormatError, "vertex count does not match gadget k");
  GadgetGraph rebuilt = build_gadget(6 * k);
  if (!graphs_equal(rebuilt.graph, g))
    raise(ErrorCode::FormatError,
          "edge list does not match the gadget with k=" + std::to_string(k));
  return rebuilt;
}

}  // namespace upset
