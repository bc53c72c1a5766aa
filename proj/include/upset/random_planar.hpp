#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <vector>

#include "upset/error.hpp"
#include "upset/graph.hpp"
#include "upset/rng.hpp"

namespace upset {

namespace detail {

// Splice `value` right after `after` in a cyclic neighbor list. The caller
// states which neighbor it expects to find there, as a consistency check on
// the face bookkeeping.
inline void insert_after(std::vector<int>& rotation, int after, int value,
                         int expect_next) {
  auto it = std::find(rotation.begin(), rotation.end(), after);
  assert(it != rotation.end());
  auto nx = std::next(it) == rotation.end() ? rotation.begin() : std::next(it);
  assert(*nx == expect_next);
  (void)nx;
  (void)expect_next;
  rotation.insert(std::next(it), value);
}

}  // namespace detail

// Incremental triangulation generator: start from a triangle and repeatedly
// drop a new vertex into a uniformly chosen face (the outer face included;
// when it is split, one of its children takes over as outer face). The result
// always has 3n-6 edges and carries the rotation system of its construction.
// Face choice is biased toward regions that were subdivided often, which is
// fine for a test corpus.
inline PlanarGraph random_maximal_planar(int n, std::uint64_t seed) {
  if (n < 3) raise(ErrorCode::InvalidArgument, "need at least 3 vertices");
  PlanarGraph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);

  std::vector<std::vector<int>> rot(n);
  rot[0] = {1, 2};
  rot[1] = {2, 0};
  rot[2] = {0, 1};

  // Faces in trace order (inner faces counterclockwise, outer clockwise).
  std::vector<std::array<int, 3>> faces{{1, 2, 0}, {0, 2, 1}};
  std::size_t outer_index = 1;

  Xoshiro256StarStar rng(seed);
  for (int x = 3; x < n; ++x) {
    const std::size_t f = rng.next_below(faces.size());
    const auto [a, b, c] = faces[f];

    g.add_edge(x, a);
    g.add_edge(x, b);
    g.add_edge(x, c);

    // New vertex sees the face corners in their trace order; each corner
    // gains x between its face-successor and face-predecessor.
    rot[x] = {a, b, c};
    detail::insert_after(rot[a], b, x, c);
    detail::insert_after(rot[b], c, x, a);
    detail::insert_after(rot[c], a, x, b);

    faces[f] = {a, b, x};
    faces.push_back({b, c, x});
    faces.push_back({c, a, x});
    // When f is the outer face, its slot now holds child (a, b, x), which
    // keeps outer_index valid.
  }

  CombinatorialEmbedding embedding;
  embedding.rotations = std::move(rot);
  embedding.outer_face = faces[outer_index];
  g.set_embedding(std::move(embedding));
  return g;
}

}  // namespace upset
