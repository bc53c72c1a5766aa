#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include <upset/geometry.hpp>
#include <upset/point_set.hpp>
#include <upset/rng.hpp>

using namespace upset;

TEST_CASE("orientation of elementary triples") {
  const Point a{0, 0}, b{1, 0}, c{0, 1};
  CHECK(orient(a, b, c) == Orientation::CCW);
  CHECK(orient(a, c, b) == Orientation::CW);
  CHECK(orient(a, b, Point{2, 0}) == Orientation::COLLINEAR);
  CHECK(signed_area2(a, b, c) == 1);
  CHECK(signed_area2(a, c, b) == -1);
}

TEST_CASE("orientation symmetries on random triples") {
  Xoshiro256StarStar rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    auto coord = [&]() {
      return static_cast<Coord>(rng.next_below(2001)) - 1000;
    };
    const Point a{coord(), coord()}, b{coord(), coord()}, c{coord(), coord()};
    const Wide area = signed_area2(a, b, c);
    CHECK(signed_area2(b, c, a) == area);
    CHECK(signed_area2(c, a, b) == area);
    CHECK(signed_area2(b, a, c) == -area);
    const Coord dx = coord(), dy = coord();
    const Point at{a.x + dx, a.y + dy}, bt{b.x + dx, b.y + dy},
        ct{c.x + dx, c.y + dy};
    CHECK(signed_area2(at, bt, ct) == area);
  }
}

TEST_CASE("coordinate range guard") {
  CHECK(in_coord_range(Point{coord_limit - 1, -(coord_limit - 1)}));
  CHECK_FALSE(in_coord_range(Point{coord_limit, 0}));
  CHECK_FALSE(in_coord_range(Point{0, -coord_limit}));
  CHECK(in_coord_range(Point{lattice_max, lattice_max}));
}

TEST_CASE("segment conflicts") {
  auto seg = [](Coord ax, Coord ay, Coord bx, Coord by) {
    return Segment{Point{ax, ay}, Point{bx, by}};
  };

  SECTION("proper crossing") {
    CHECK(segments_conflict(seg(0, 0, 2, 2), seg(0, 2, 2, 0)));
  }
  SECTION("disjoint") {
    CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(0, 1, 1, 1)));
  }
  SECTION("endpoint touches interior") {
    CHECK(segments_conflict(seg(0, 0, 4, 0), seg(2, 0, 2, 3)));
    CHECK(segments_conflict(seg(2, 0, 2, 3), seg(0, 0, 4, 0)));
  }
  SECTION("shared endpoint, diverging") {
    CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(0, 0, 0, 1)));
    CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(1, 0, 2, 1)));
  }
  SECTION("shared endpoint, collinear opposite directions") {
    CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(0, 0, -1, 0)));
  }
  SECTION("shared endpoint, collinear overlap") {
    CHECK(segments_conflict(seg(0, 0, 2, 0), seg(0, 0, 1, 0)));
    CHECK(segments_conflict(seg(0, 0, 2, 0), seg(0, 0, 3, 0)));
  }
  SECTION("identical segments") {
    CHECK(segments_conflict(seg(0, 0, 2, 0), seg(0, 0, 2, 0)));
    CHECK(segments_conflict(seg(0, 0, 2, 0), seg(2, 0, 0, 0)));
  }
  SECTION("collinear disjoint") {
    CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(2, 0, 3, 0)));
  }
  SECTION("collinear touching end to end") {
    CHECK_FALSE(segments_conflict(seg(0, 0, 1, 0), seg(1, 0, 2, 0)));
  }
  SECTION("interior overlap without shared endpoints") {
    CHECK(segments_conflict(seg(0, 0, 3, 0), seg(1, 0, 2, 0)));
    CHECK(segments_conflict(seg(0, 0, 2, 0), seg(1, 0, 3, 0)));
  }
}

TEST_CASE("triangle membership") {
  const Triangle t{Point{0, 0}, Point{4, 0}, Point{0, 4}};
  CHECK(point_in_triangle(Point{1, 1}, t) == Containment::INSIDE);
  CHECK(point_in_triangle(Point{2, 0}, t) == Containment::BOUNDARY);
  CHECK(point_in_triangle(Point{0, 0}, t) == Containment::BOUNDARY);
  CHECK(point_in_triangle(Point{3, 3}, t) == Containment::OUTSIDE);
  CHECK(point_in_triangle(Point{-1, 0}, t) == Containment::OUTSIDE);

  // Clockwise vertex order must classify identically.
  const Triangle cw{Point{0, 0}, Point{0, 4}, Point{4, 0}};
  CHECK(point_in_triangle(Point{1, 1}, cw) == Containment::INSIDE);
  CHECK(point_in_triangle(Point{2, 0}, cw) == Containment::BOUNDARY);
}

TEST_CASE("degenerate shapes raise") {
  CHECK_THROWS_AS(Triangle(Point{0, 0}, Point{1, 1}, Point{2, 2}), Error);
  CHECK_THROWS_AS(Box(0, 0, 1, 5), Error);
  CHECK_THROWS_AS(Box(3, 5, 1, 1), Error);
}

TEST_CASE("boxes and nesting") {
  const Triangle outer{Point{0, 0}, Point{10, 0}, Point{0, 10}};
  const Triangle inner{Point{1, 1}, Point{3, 1}, Point{1, 3}};
  CHECK(triangle_strictly_inside(inner, outer));
  CHECK_FALSE(triangle_strictly_inside(outer, inner));

  const Box ob = bounding_box(outer);
  const Box ib = bounding_box(inner);
  CHECK(ob.xmin == 0);
  CHECK(ob.xmax == 10);
  CHECK(ob.ymin == 0);
  CHECK(ob.ymax == 10);
  CHECK(box_nested(ib, ob));
  CHECK_FALSE(box_nested(ob, ib));
  CHECK(box_nested(ob, ob));

  // Touching one side still does not count as strictly inside.
  const Triangle touching{Point{0, 1}, Point{3, 1}, Point{1, 3}};
  CHECK_FALSE(triangle_strictly_inside(touching, outer));
}

TEST_CASE("point CSV round trip") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "upset_geometry_rt.csv";

  PointSet set;
  set.lattice_bits = 12;
  set.points = {{0, 9}, {17, 3}, {4095, 4094}};
  write_point_csv(path.string(), set);

  const PointSet back = read_point_csv(path.string());
  CHECK(back.lattice_bits == 12);
  CHECK(back.points == set.points);
  fs::remove(path);
}

TEST_CASE("point CSV accepts comments and blank lines") {
  std::istringstream in(
      "lattice_bits=4\n"
      "# a comment\n"
      "\n"
      "1,2\n"
      "# another\n"
      "3,4\n");
  const PointSet set = read_point_csv(in, "<test>");
  CHECK(set.lattice_bits == 4);
  REQUIRE(set.size() == 2);
  CHECK(set.points[1] == Point{3, 4});
}

TEST_CASE("point CSV rejects malformed input") {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_point_csv(in, "<test>");
  };
  CHECK_THROWS_AS(parse(""), Error);
  CHECK_THROWS_AS(parse("1,2\n"), Error);                  // missing header
  CHECK_THROWS_AS(parse("lattice_bits=4\n1;2\n"), Error);  // bad separator
  CHECK_THROWS_AS(parse("lattice_bits=4\n1,2,3\n"), Error);  // extra field
  CHECK_THROWS_AS(parse("lattice_bits=4\n4611686018427387904,0\n"),
                  Error);  // beyond the predicate range
  CHECK_THROWS_AS(parse("lattice_bits=99\n"), Error);
  CHECK_THROWS_AS(parse("lattice_bits=-1\n"), Error);
}

TEST_CASE("distinct coordinate detection") {
  std::vector<Point> points = {{0, 0}, {1, 1}, {2, 2}};
  CHECK(has_distinct_coordinates(points));
  points.push_back({1, 5});  // repeated x
  CHECK_FALSE(has_distinct_coordinates(points));
  CHECK_THROWS_AS(require_distinct_coordinates(points), Error);
  points.back() = {5, 2};  // repeated y
  CHECK_FALSE(has_distinct_coordinates(points));
  points.back() = {5, 7};
  CHECK(has_distinct_coordinates(points));
}
