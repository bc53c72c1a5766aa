#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <vector>

#include "upset/error.hpp"
#include "upset/point_set.hpp"

namespace upset {

// A permutation of {1..m}, stored as its one-line notation.
struct Permutation {
  std::vector<int> values;

  Permutation() = default;
  explicit Permutation(std::vector<int> v) : values(std::move(v)) {
    validate();
  }

  int size() const { return static_cast<int>(values.size()); }

  void validate() const {
    const int m = size();
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : values) {
      if (v < 1 || v > m || seen[v])
        raise(ErrorCode::InvalidPermutation,
              "sequence is not a permutation of 1..m");
      seen[v] = 1;
    }
  }
};

// Rank permutation of a point set: order the points by x, then record the
// rank (1 = lowest) of each y coordinate.
inline Permutation perm_of(const std::vector<Point>& points) {
  require_distinct_coordinates(points);
  const int m = static_cast<int>(points.size());

  std::vector<int> by_x(m);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](int i, int j) { return points[i].x < points[j].x; });

  std::vector<int> by_y(m);
  std::iota(by_y.begin(), by_y.end(), 0);
  std::sort(by_y.begin(), by_y.end(),
            [&](int i, int j) { return points[i].y < points[j].y; });
  std::vector<int> y_rank(m);
  for (int r = 0; r < m; ++r) y_rank[by_y[r]] = r + 1;

  Permutation perm;
  perm.values.reserve(m);
  for (int i = 0; i < m; ++i) perm.values.push_back(y_rank[by_x[i]]);
  return perm;
}

inline Permutation perm_of(const PointSet& set) { return perm_of(set.points); }

// Longest strictly increasing subsequence via patience sorting: pile tops are
// kept sorted, each value replaces the first top >= itself.
inline int lis_length(std::span<const int> seq) {
  std::vector<int> tops;
  tops.reserve(seq.size());
  for (int v : seq) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end())
      tops.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tops.size());
}

inline int lds_length(std::span<const int> seq) {
  std::vector<int> reversed(seq.rbegin(), seq.rend());
  return lis_length(reversed);
}

inline int lis(const Permutation& p) { return lis_length(p.values); }
inline int lds(const Permutation& p) { return lds_length(p.values); }

inline int max_monotone(const Permutation& p) {
  return std::max(lis(p), lds(p));
}

}  // namespace upset
