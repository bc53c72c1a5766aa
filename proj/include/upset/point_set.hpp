#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "upset/error.hpp"
#include "upset/geometry.hpp"

namespace upset {

// A finite planar point set. lattice_bits records the denominator exponent of
// the unit-square lattice the coordinates were drawn from (40 for sampled
// sets, 0 for plain integer grids). Predicates never look at it.
struct PointSet {
  std::vector<Point> points;
  int lattice_bits = lattice_bits_default;

  std::size_t size() const { return points.size(); }
};

inline bool has_distinct_coordinates(const std::vector<Point>& points) {
  std::unordered_set<Coord> xs, ys;
  for (const Point& p : points) {
    if (!xs.insert(p.x).second || !ys.insert(p.y).second) return false;
  }
  return true;
}

inline void require_distinct_coordinates(const std::vector<Point>& points) {
  if (!has_distinct_coordinates(points))
    raise(ErrorCode::DuplicateCoordinate,
          "point set has a repeated x or y coordinate");
}

// Format: header line "lattice_bits=<b>", then one "x,y" pair per line.
inline void write_point_csv(std::ostream& out, const PointSet& set) {
  out << "lattice_bits=" << set.lattice_bits << "\n";
  for (const Point& p : set.points) out << p.x << "," << p.y << "\n";
}

inline void write_point_csv(const std::string& path, const PointSet& set) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::IoError, "cannot open for writing: " + path);
  write_point_csv(out, set);
}

inline PointSet read_point_csv(std::istream& in, const std::string& origin) {
  PointSet set;
  std::string line;
  if (!std::getline(in, line))
    raise(ErrorCode::FormatError, origin + ": empty point file");
  if (line.rfind("lattice_bits=", 0) != 0)
    raise(ErrorCode::FormatError,
          origin + ": expected 'lattice_bits=<b>' header, got '" + line + "'");
  try {
    set.lattice_bits = std::stoi(line.substr(13));
  } catch (const std::exception&) {
    raise(ErrorCode::FormatError, origin + ": bad lattice_bits header");
  }
  if (set.lattice_bits < 0 || set.lattice_bits > 62)
    raise(ErrorCode::FormatError, origin + ": lattice_bits out of range");

  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    Point p;
    char comma = 0;
    std::string rest;
    if (!(row >> p.x >> comma >> p.y) || comma != ',' || row >> rest)
      raise(ErrorCode::FormatError,
            origin + ":" + std::to_string(lineno) + ": expected 'x,y'");
    if (!in_coord_range(p))
      raise(ErrorCode::FormatError,
            origin + ":" + std::to_string(lineno) + ": coordinate too large");
    set.points.push_back(p);
  }
  return set;
}

inline PointSet read_point_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoError, "cannot open for reading: " + path);
  return read_point_csv(in, path);
}

}  // namespace upset
