#pragma once

#include <cassert>
#include <vector>

#include "upset/embedding.hpp"
#include "upset/error.hpp"
#include "upset/geometry.hpp"
#include "upset/graph.hpp"

namespace upset {

// order[0], order[1] are the base outer edge, order[2] the apex of the first
// triangle, and each later vertex has its earlier neighbors on a contiguous
// stretch of the partial graph's boundary path.
struct CanonicalOrder {
  std::vector<int> order;
};

// Computes a canonical ordering of a triangulation by peeling: repeatedly
// delete a boundary vertex (never the two base vertices) that has no chord to
// a non-consecutive boundary vertex, numbering vertices n, n-1, ..., 4 in
// deletion order. The boundary cycle is kept as a linked list in the outer
// face's trace direction; a deleted vertex is replaced by its remaining
// neighbors, read counterclockwise from its boundary predecessor.
inline CanonicalOrder canonical_ordering(const PlanarGraph& g) {
  const int n = g.n();
  if (n < 3) raise(ErrorCode::NotMaximalPlanar, "need at least 3 vertices");
  if (g.m() != 3 * n - 6)
    raise(ErrorCode::NotMaximalPlanar, "edge count is not 3n-6");
  if (!g.embedding())
    raise(ErrorCode::NotMaximalPlanar, "graph carries no rotation system");
  const auto& emb = *g.embedding();
  const auto& rot = emb.rotations;

  // Outer face trace (clockwise) reads v1 -> vn -> v2.
  const int v1 = emb.outer_face[0];
  const int v2 = emb.outer_face[2];

  std::vector<char> removed(n, 0), on_outer(n, 0), in_batch(n, 0);
  std::vector<int> next(n, -1), prev(n, -1), chords(n, 0);
  for (int i = 0; i < 3; ++i) {
    const int a = emb.outer_face[i];
    const int b = emb.outer_face[(i + 1) % 3];
    if (!g.has_edge(a, b))
      raise(ErrorCode::NotMaximalPlanar, "outer face is not a triangle");
    next[a] = b;
    prev[b] = a;
    on_outer[a] = 1;
  }

  std::vector<int> removal_order;
  removal_order.reserve(n - 3);
  for (int step = 0; step < n - 3; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (on_outer[u] && u != v1 && u != v2 && chords[u] == 0) {
        v = u;
        break;
      }
    }
    if (v == -1)
      raise(ErrorCode::NotMaximalPlanar, "no chord-free boundary vertex");

    const int a = prev[v], b = next[v];
    const auto& rv = rot[v];
    const int deg = static_cast<int>(rv.size());
    int pos_a = -1;
    for (int i = 0; i < deg; ++i)
      if (rv[i] == a) pos_a = i;
    if (pos_a == -1)
      raise(ErrorCode::NotMaximalPlanar, "rotation system inconsistent");

    // Non-removed neighbors strictly between a and b, counterclockwise.
    std::vector<int> path;
    int idx = pos_a;
    bool reached_b = false;
    for (int i = 1; i < deg; ++i) {
      idx = (pos_a + i) % deg;
      if (rv[idx] == b) {
        reached_b = true;
        break;
      }
      if (!removed[rv[idx]]) path.push_back(rv[idx]);
    }
    if (!reached_b)
      raise(ErrorCode::NotMaximalPlanar, "rotation system inconsistent");
    for (int i = idx + 1; i - idx < deg; ++i) {
      const int w = rv[i % deg];
      if (w == a) break;
      if (!removed[w])
        raise(ErrorCode::NotMaximalPlanar,
              "boundary neighbors of a peeled vertex are not consecutive");
    }

    removed[v] = 1;
    on_outer[v] = 0;
    int cur = a;
    for (int w : path) {
      next[cur] = w;
      prev[w] = cur;
      on_outer[w] = 1;
      cur = w;
    }
    next[cur] = b;
    prev[b] = cur;

    if (path.empty()) {
      // a and b just became consecutive, so edge a-b is no longer a chord.
      chords[a] -= 1;
      chords[b] -= 1;
      assert(chords[a] >= 0 && chords[b] >= 0);
    } else {
      for (int w : path) in_batch[w] = 1;
      for (int w : path) {
        for (int x : g.neighbors(w)) {
          if (!on_outer[x]) continue;
          if (x == prev[w] || x == next[w]) continue;
          chords[w] += 1;
          if (!in_batch[x]) chords[x] += 1;
        }
      }
      for (int w : path) in_batch[w] = 0;
    }
    removal_order.push_back(v);
  }

  const int v3 = next[v1];
  if (v3 == v2 || next[v3] != v2)
    raise(ErrorCode::NotMaximalPlanar, "peeling left a non-triangle core");

  CanonicalOrder co;
  co.order = {v1, v2, v3};
  co.order.insert(co.order.end(), removal_order.rbegin(),
                  removal_order.rend());
  return co;
}

// Straight-line drawing on the (2n-4) x (n-2) grid by the shift method: walk
// the canonical order, keep the boundary contour, and when a vertex arrives
// spread the contour apart (covered stretch by 1, right part by 2) so the
// newcomer lands on a lattice point at the intersection of the slope +1 and
// slope -1 diagonals through its leftmost and rightmost lower neighbors.
// Every shift drags along the set L(w) of vertices previously covered under
// w, which is what keeps earlier layers planar.
inline StraightLineEmbedding grid_embed(const PlanarGraph& g) {
  const int n = g.n();
  const CanonicalOrder co = canonical_ordering(g);
  const auto& ord = co.order;

  std::vector<Coord> x(n, 0), y(n, 0);
  std::vector<std::vector<int>> shift_set(n);
  const int v1 = ord[0], v2 = ord[1], v3 = ord[2];
  x[v1] = 0;
  y[v1] = 0;
  x[v2] = 2;
  y[v2] = 0;
  x[v3] = 1;
  y[v3] = 1;
  shift_set[v1] = {v1};
  shift_set[v2] = {v2};
  shift_set[v3] = {v3};
  std::vector<int> contour{v1, v3, v2};

  for (int k = 3; k < n; ++k) {
    const int vk = ord[k];
    const int t = static_cast<int>(contour.size());
    int p = -1, q = -1;
    for (int i = 0; i < t; ++i) {
      if (g.has_edge(vk, contour[i])) {
        if (p == -1) p = i;
        q = i;
      }
    }
    if (p == -1 || q == p)
      raise(ErrorCode::NotMaximalPlanar, "vertex sees fewer than 2 contour vertices");
    for (int i = p; i <= q; ++i)
      if (!g.has_edge(vk, contour[i]))
        raise(ErrorCode::NotMaximalPlanar, "contour neighbors not contiguous");

    for (int i = p + 1; i <= q - 1; ++i)
      for (int w : shift_set[contour[i]]) x[w] += 1;
    for (int i = q; i < t; ++i)
      for (int w : shift_set[contour[i]]) x[w] += 2;

    const Coord xp = x[contour[p]], yp = y[contour[p]];
    const Coord xq = x[contour[q]], yq = y[contour[q]];
    assert((xq + xp + yq - yp) % 2 == 0);
    x[vk] = (xq + xp + yq - yp) / 2;
    y[vk] = (xq - xp + yq + yp) / 2;

    shift_set[vk] = {vk};
    for (int i = p + 1; i <= q - 1; ++i) {
      auto& covered = shift_set[contour[i]];
      shift_set[vk].insert(shift_set[vk].end(), covered.begin(),
                           covered.end());
      covered = {};
    }

    std::vector<int> new_contour(contour.begin(), contour.begin() + p + 1);
    new_contour.push_back(vk);
    new_contour.insert(new_contour.end(), contour.begin() + q, contour.end());
    contour = std::move(new_contour);
  }

  StraightLineEmbedding result{g, {}};
  result.placement.resize(n);
  for (int v = 0; v < n; ++v) {
    assert(0 <= x[v] && x[v] <= 2 * n - 4);
    assert(0 <= y[v] && y[v] <= n - 2);
    result.placement[v] = {x[v], y[v]};
  }
  return result;
}

}  // namespace upset
