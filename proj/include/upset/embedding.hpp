#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "upset/geometry.hpp"
#include "upset/graph.hpp"

namespace upset {

struct StraightLineEmbedding {
  PlanarGraph graph;
  std::vector<Point> placement;  // indexed by vertex
};

// A drawing is valid iff the placement is injective, no vertex sits in the
// interior of a non-incident edge segment, and no two edge segments share
// anything beyond a common endpoint.
inline bool verify_embedding(const StraightLineEmbedding& e) {
  const int n = e.graph.n();
  if (static_cast<int>(e.placement.size()) != n) return false;

  std::vector<Point> sorted = e.placement;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;

  const auto edges = e.graph.edges();
  for (const auto& [u, v] : edges) {
    const Point& a = e.placement[u];
    const Point& b = e.placement[v];
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (detail::strictly_inside_segment(a, b, e.placement[w])) return false;
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Segment si{e.placement[edges[i].first], e.placement[edges[i].second]};
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Segment sj{e.placement[edges[j].first],
                       e.placement[edges[j].second]};
      if (segments_conflict(si, sj)) return false;
    }
  }
  return true;
}

namespace detail {

// Counterclockwise angular order around the origin, starting at the positive
// x axis. Directions are nonzero and no two may be equal (that would mean two
// collinear edges on the same side of a vertex).
inline bool angle_less(const Point& d1, const Point& d2) {
  auto half = [](const Point& d) {
    return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1;
  };
  const int h1 = half(d1), h2 = half(d2);
  if (h1 != h2) return h1 < h2;
  const Wide cross = Wide(d1.x) * d2.y - Wide(d1.y) * d2.x;
  if (cross == 0)
    raise(ErrorCode::InvalidArgument,
          "two edges leave a vertex in the same direction");
  return cross > 0;
}

}  // namespace detail

// Reads the rotation system off a crossing-free straight-line drawing by
// sorting each vertex's neighbors angularly, then validates it by face
// tracing: a planar drawing of a connected graph yields exactly 2 - n + m
// faces, exactly one of which (the outer one) walks clockwise. Requires a
// triangulated drawing so the outer face can be stored as a triangle.
inline CombinatorialEmbedding embedding_from_drawing(
    const PlanarGraph& g, const std::vector<Point>& placement) {
  if (static_cast<int>(placement.size()) != g.n())
    raise(ErrorCode::InvalidArgument, "placement size mismatch");

  CombinatorialEmbedding embedding;
  embedding.rotations.resize(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto& rot = embedding.rotations[v];
    rot = g.neighbors(v);
    const Point origin = placement[v];
    std::sort(rot.begin(), rot.end(), [&](int a, int b) {
      const Point da{placement[a].x - origin.x, placement[a].y - origin.y};
      const Point db{placement[b].x - origin.x, placement[b].y - origin.y};
      return detail::angle_less(da, db);
    });
  }

  PlanarGraph probe = g;
  probe.set_embedding(embedding);
  const auto faces = trace_faces(probe);
  if (static_cast<int>(faces.size()) != 2 - g.n() + g.m())
    raise(ErrorCode::InvalidArgument,
          "drawing does not induce a genus-zero rotation system");

  int outer = -1;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Wide area2 = 0;
    const auto& face = faces[f];
    for (std::size_t i = 0; i < face.size(); ++i) {
      const Point& p = placement[face[i]];
      const Point& q = placement[face[(i + 1) % face.size()]];
      area2 += Wide(p.x) * q.y - Wide(p.y) * q.x;
    }
    if (area2 < 0) {
      if (outer != -1)
        raise(ErrorCode::InvalidArgument, "multiple clockwise faces");
      outer = static_cast<int>(f);
    }
  }
  if (outer == -1)
    raise(ErrorCode::InvalidArgument, "no clockwise (outer) face found");
  if (faces[outer].size() != 3)
    raise(ErrorCode::InvalidArgument, "outer face is not a triangle");
  std::copy(faces[outer].begin(), faces[outer].end(),
            embedding.outer_face.begin());
  return embedding;
}

}  // namespace upset
