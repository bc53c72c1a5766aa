#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>

#include "upset/error.hpp"

namespace upset {

// All coordinates are 64-bit integers and every predicate is evaluated in
// exact 128-bit arithmetic. Intermediate cross products stay below 2^127 as
// long as |x|, |y| < 2^62, which the predicates assert. Coordinates of unit
// square point sets live on the 2^40 lattice (see PointSet::lattice_bits);
// grid drawings use their own small integer range. The lattice denominator is
// metadata only and never enters a predicate.
using Coord = std::int64_t;
using Wide = __int128;

inline constexpr int lattice_bits_default = 40;
inline constexpr Coord lattice_max = Coord{1} << lattice_bits_default;
inline constexpr Coord coord_limit = Coord{1} << 62;

struct Point {
  Coord x = 0;
  Coord y = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orientation { CCW, CW, COLLINEAR };

inline bool in_coord_range(const Point& p) {
  return -coord_limit < p.x && p.x < coord_limit && -coord_limit < p.y &&
         p.y < coord_limit;
}

// Twice the signed area of triangle (p, q, r); positive iff CCW.
inline Wide signed_area2(const Point& p, const Point& q, const Point& r) {
  assert(in_coord_range(p) && in_coord_range(q) && in_coord_range(r));
  const Wide ax = Wide(q.x) - p.x;
  const Wide ay = Wide(q.y) - p.y;
  const Wide bx = Wide(r.x) - p.x;
  const Wide by = Wide(r.y) - p.y;
  return ax * by - ay * bx;
}

inline Orientation orient(const Point& p, const Point& q, const Point& r) {
  const Wide area = signed_area2(p, q, r);
  if (area > 0) return Orientation::CCW;
  if (area < 0) return Orientation::CW;
  return Orientation::COLLINEAR;
}

inline int orient_sign(const Point& p, const Point& q, const Point& r) {
  const Wide area = signed_area2(p, q, r);
  return area > 0 ? 1 : area < 0 ? -1 : 0;
}

struct Segment {
  Point a;
  Point b;
};

namespace detail {

// p is assumed collinear with [a, b]; tests closed containment.
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// p strictly between a and b on their common line.
inline bool strictly_inside_segment(const Point& a, const Point& b,
                                    const Point& p) {
  return orient_sign(a, b, p) == 0 && p != a && p != b && on_segment(a, b, p);
}

}  // namespace detail

// True iff the closed segments share any point other than a common endpoint.
// Segments touching only at one shared endpoint do not conflict; any other
// contact (proper crossing, T-contact, collinear overlap) does.
inline bool segments_conflict(const Segment& s1, const Segment& s2) {
  assert(s1.a != s1.b && s2.a != s2.b);

  const bool aa = s1.a == s2.a, ab = s1.a == s2.b;
  const bool ba = s1.b == s2.a, bb = s1.b == s2.b;
  const int shared = int(aa) + int(ab) + int(ba) + int(bb);
  if (shared >= 2) return true;  // identical segments overlap everywhere
  if (shared == 1) {
    // Orient both segments away from the shared endpoint.
    Point p, q1, q2;
    if (aa) { p = s1.a; q1 = s1.b; q2 = s2.b; }
    else if (ab) { p = s1.a; q1 = s1.b; q2 = s2.a; }
    else if (ba) { p = s1.b; q1 = s1.a; q2 = s2.b; }
    else { p = s1.b; q1 = s1.a; q2 = s2.a; }
    if (orient_sign(p, q1, q2) != 0) return false;
    // Collinear rays from p: they overlap beyond p iff they leave in the
    // same direction.
    const Wide dot = (Wide(q1.x) - p.x) * (Wide(q2.x) - p.x) +
                     (Wide(q1.y) - p.y) * (Wide(q2.y) - p.y);
    return dot > 0;
  }

  const int d1 = orient_sign(s2.a, s2.b, s1.a);
  const int d2 = orient_sign(s2.a, s2.b, s1.b);
  const int d3 = orient_sign(s1.a, s1.b, s2.a);
  const int d4 = orient_sign(s1.a, s1.b, s2.b);

  if (d1 * d2 < 0 && d3 * d4 < 0) return true;  // proper crossing

  // No shared endpoints here, so any collinear touch is a conflict.
  if (d1 == 0 && detail::on_segment(s2.a, s2.b, s1.a)) return true;
  if (d2 == 0 && detail::on_segment(s2.a, s2.b, s1.b)) return true;
  if (d3 == 0 && detail::on_segment(s1.a, s1.b, s2.a)) return true;
  if (d4 == 0 && detail::on_segment(s1.a, s1.b, s2.b)) return true;
  return false;
}

struct Triangle {
  Point a;
  Point b;
  Point c;

  Triangle(const Point& a_, const Point& b_, const Point& c_)
      : a(a_), b(b_), c(c_) {
    if (orient(a, b, c) == Orientation::COLLINEAR)
      raise(ErrorCode::DegenerateTriangle, "triangle corners are collinear");
  }
};

enum class Containment { INSIDE, BOUNDARY, OUTSIDE };

inline Containment point_in_triangle(const Point& p, const Triangle& t) {
  Point a = t.a, b = t.b, c = t.c;
  if (orient(a, b, c) == Orientation::CW) std::swap(b, c);
  const int d1 = orient_sign(a, b, p);
  const int d2 = orient_sign(b, c, p);
  const int d3 = orient_sign(c, a, p);
  if (d1 < 0 || d2 < 0 || d3 < 0) return Containment::OUTSIDE;
  if (d1 == 0 || d2 == 0 || d3 == 0) return Containment::BOUNDARY;
  return Containment::INSIDE;
}

struct Box {
  Coord xmin, xmax, ymin, ymax;

  Box(Coord xmin_, Coord xmax_, Coord ymin_, Coord ymax_)
      : xmin(xmin_), xmax(xmax_), ymin(ymin_), ymax(ymax_) {
    if (!(xmin < xmax && ymin < ymax))
      raise(ErrorCode::DegenerateBox, "box sides must have positive extent");
  }

  friend bool operator==(const Box&, const Box&) = default;
};

inline Box bounding_box(const Triangle& t) {
  const Coord xmin = std::min({t.a.x, t.b.x, t.c.x});
  const Coord xmax = std::max({t.a.x, t.b.x, t.c.x});
  const Coord ymin = std::min({t.a.y, t.b.y, t.c.y});
  const Coord ymax = std::max({t.a.y, t.b.y, t.c.y});
  // A non-degenerate triangle spans both axes, so the Box constructor
  // cannot reject this.
  return Box(xmin, xmax, ymin, ymax);
}

inline bool triangle_strictly_inside(const Triangle& inner,
                                     const Triangle& outer) {
  return point_in_triangle(inner.a, outer) == Containment::INSIDE &&
         point_in_triangle(inner.b, outer) == Containment::INSIDE &&
         point_in_triangle(inner.c, outer) == Containment::INSIDE;
}

// Non-strict componentwise nesting: inner may touch outer's sides.
inline bool box_nested(const Box& inner, const Box& outer) {
  return outer.xmin <= inner.xmin && inner.xmax <= outer.xmax &&
         outer.ymin <= inner.ymin && inner.ymax <= outer.ymax;
}

}  // namespace upset
