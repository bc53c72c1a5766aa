#pragma once

#include <array>
#include <cassert>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "upset/bounds.hpp"
#include "upset/embedding.hpp"
#include "upset/error.hpp"
#include "upset/gadget.hpp"
#include "upset/geometry.hpp"
#include "upset/permutation.hpp"
#include "upset/point_set.hpp"

namespace upset {

enum class CornerRole { BL, TR, TL, BR };

inline std::string_view to_string(CornerRole role) {
  switch (role) {
    case CornerRole::BL: return "BL";
    case CornerRole::TR: return "TR";
    case CornerRole::TL: return "TL";
    case CornerRole::BR: return "BR";
  }
  return "?";
}

struct SharedCorner {
  Point point;
  CornerRole role;
};

// A corner of the bounding box that is also a corner of the triangle. One
// always exists: each box side touches a triangle corner, and three corners
// cannot cover four sides without one of them taking two adjacent sides.
// Role order BL, TR, TL, BR breaks ties.
inline SharedCorner shared_corner(const Triangle& t) {
  const Box box = bounding_box(t);
  const std::array<SharedCorner, 4> candidates{{
      {{box.xmin, box.ymin}, CornerRole::BL},
      {{box.xmax, box.ymax}, CornerRole::TR},
      {{box.xmin, box.ymax}, CornerRole::TL},
      {{box.xmax, box.ymin}, CornerRole::BR},
  }};
  for (const SharedCorner& c : candidates)
    if (c.point == t.a || c.point == t.b || c.point == t.c) return c;
  raise(ErrorCode::InvalidArgument,
        "no box corner coincides with a triangle corner");
}

struct CornerEntry {
  Point point;
  CornerRole role;
  int nested_index;  // 0 = outermost box
};

struct CornerClasses {
  std::vector<CornerEntry> s1;  // BL and TR corners, increasing
  std::vector<CornerEntry> s2;  // TL and BR corners, decreasing
};

// Splits corner entries of nested boxes into the increasing class (bottom-left
// and top-right) and the decreasing class (top-left and bottom-right). Each
// class is sorted by x and its monotonicity re-verified rather than trusted.
inline CornerClasses classify_corners(const std::vector<CornerEntry>& corners) {
  CornerClasses classes;
  for (const CornerEntry& entry : corners) {
    if (entry.role == CornerRole::BL || entry.role == CornerRole::TR)
      classes.s1.push_back(entry);
    else
      classes.s2.push_back(entry);
  }
  auto by_x = [](const CornerEntry& a, const CornerEntry& b) {
    return a.point.x < b.point.x;
  };
  std::sort(classes.s1.begin(), classes.s1.end(), by_x);
  std::sort(classes.s2.begin(), classes.s2.end(), by_x);
  for (std::size_t i = 1; i < classes.s1.size(); ++i) {
    const Point& prev = classes.s1[i - 1].point;
    const Point& cur = classes.s1[i].point;
    if (!(prev.x < cur.x && prev.y < cur.y))
      raise(ErrorCode::MonotoneViolation,
            "BL/TR corners of nested boxes must increase");
  }
  for (std::size_t i = 1; i < classes.s2.size(); ++i) {
    const Point& prev = classes.s2[i - 1].point;
    const Point& cur = classes.s2[i].point;
    if (!(prev.x < cur.x && prev.y > cur.y))
      raise(ErrorCode::MonotoneViolation,
            "TL/BR corners of nested boxes must decrease");
  }
  return classes;
}

struct NestedRun {
  std::vector<Triangle> triangles;  // outermost first
  std::vector<int> cycles;          // gadget cycle index of each triangle
};

namespace detail {

enum class NestRel { NONE, INWARD, OUTWARD };

inline NestRel nest_relation(const Triangle& outer, const Triangle& inner) {
  if (triangle_strictly_inside(inner, outer)) return NestRel::INWARD;
  if (triangle_strictly_inside(outer, inner)) return NestRel::OUTWARD;
  return NestRel::NONE;
}

}  // namespace detail

// The images of the gadget cycles, restricted to the maximal consecutive run
// of strictly nested triangles that contains the first k or the last k cycles
// (the first-k run wins when both qualify), returned outermost first. Any
// valid drawing nests one of the two halves; a miss means the input was not a
// valid drawing of the gadget, and is reported loudly.
inline NestedRun extract_nested_triangles(const GadgetGraph& gadget,
                                          const StraightLineEmbedding& e) {
  if (!graphs_equal(gadget.graph, e.graph))
    raise(ErrorCode::InvalidArgument,
          "embedding does not belong to the gadget graph");
  if (!verify_embedding(e))
    raise(ErrorCode::InvalidArgument,
          "embedding fails geometric verification");

  const int cycles = gadget.cycles();
  std::vector<Triangle> tri;
  tri.reserve(cycles);
  for (int i = 1; i <= cycles; ++i)
    tri.emplace_back(e.placement[GadgetGraph::vertex_id(i, 0)],
                     e.placement[GadgetGraph::vertex_id(i, 1)],
                     e.placement[GadgetGraph::vertex_id(i, 2)]);

  // rel[i] relates the images of cycles i+1 and i+2.
  std::vector<detail::NestRel> rel(cycles - 1);
  for (int i = 0; i + 1 < cycles; ++i)
    rel[i] = detail::nest_relation(tri[i], tri[i + 1]);

  const int k = gadget.k;
  auto uniform = [&](int lo, int hi) {  // rel[lo..hi] equal and not NONE
    for (int i = lo; i <= hi; ++i)
      if (rel[i] == detail::NestRel::NONE || rel[i] != rel[lo]) return false;
    return true;
  };

  int lo, hi;  // inclusive triangle index range of the chosen run
  if (uniform(0, k - 2)) {
    lo = 0;
    hi = k - 1;
  } else if (uniform(k, 2 * k - 2)) {
    lo = k;
    hi = 2 * k - 1;
  } else {
    raise(ErrorCode::NestingNotFound,
          "neither the first nor the last " + std::to_string(k) +
              " cycle images are nested");
  }
  const detail::NestRel dir = rel[lo];
  while (lo > 0 && rel[lo - 1] == dir) --lo;
  while (hi + 1 < cycles && rel[hi] == dir) ++hi;

  NestedRun run;
  for (int i = lo; i <= hi; ++i) {
    run.triangles.push_back(tri[i]);
    run.cycles.push_back(i + 1);
  }
  if (dir == detail::NestRel::OUTWARD) {
    std::reverse(run.triangles.begin(), run.triangles.end());
    std::reverse(run.cycles.begin(), run.cycles.end());
  }
  return run;
}

enum class Direction { INCREASING, DECREASING };

inline std::string_view to_string(Direction d) {
  return d == Direction::INCREASING ? "INCREASING" : "DECREASING";
}

struct WitnessProvenance {
  int nested_index;  // position in the nested run, 0 = outermost
  int cycle;         // gadget cycle whose image contributed the corner
  CornerRole role;
};

struct MonotoneWitness {
  std::vector<Point> points;  // strictly increasing in x
  Direction direction;
  std::vector<WitnessProvenance> provenance;  // parallel to points
};

// Lemma pipeline: nested triangles -> shared box corners -> the larger of the
// increasing and decreasing corner classes (ties to the increasing one).
// Always yields at least ceil(run/2) >= floor(n/12) points.
inline MonotoneWitness monotone_witness(const GadgetGraph& gadget,
                                        const StraightLineEmbedding& e) {
  const NestedRun run = extract_nested_triangles(gadget, e);

  std::vector<CornerEntry> corners;
  corners.reserve(run.triangles.size());
  for (std::size_t i = 0; i < run.triangles.size(); ++i) {
    const SharedCorner sc = shared_corner(run.triangles[i]);
    corners.push_back({sc.point, sc.role, static_cast<int>(i)});
  }
  const CornerClasses classes = classify_corners(corners);

  const bool take_s1 = classes.s1.size() >= classes.s2.size();
  const auto& chosen = take_s1 ? classes.s1 : classes.s2;

  MonotoneWitness witness;
  witness.direction = take_s1 ? Direction::INCREASING : Direction::DECREASING;
  for (const CornerEntry& entry : chosen) {
    witness.points.push_back(entry.point);
    witness.provenance.push_back(
        {entry.nested_index, run.cycles[entry.nested_index], entry.role});
  }
  assert(static_cast<int>(witness.points.size()) >=
         monotone_threshold(6 * gadget.k));
  return witness;
}

struct NonUniversalityCertificate {
  int n = 0;
  int m = 0;
  int ell = 0;
  int lis = 0;
  int lds = 0;
};

// Contrapositive of the witness lemma: an n-universal set must contain a
// monotone subset of floor(n/12) points, so max(lis, lds) below that proves
// non-universality. Inconclusive (empty) output claims nothing.
inline std::optional<NonUniversalityCertificate> certify_nonuniversal(
    const PointSet& u, int n) {
  if (n < 12) raise(ErrorCode::InvalidArgument, "need n >= 12");
  require_distinct_coordinates(u.points);
  const Permutation pi = perm_of(u);
  const int rises = lis(pi);
  const int falls = lds(pi);
  const int ell = monotone_threshold(n);
  if (std::max(rises, falls) >= ell) return std::nullopt;
  return NonUniversalityCertificate{n, static_cast<int>(u.size()), ell, rises,
                                    falls};
}

}  // namespace upset
