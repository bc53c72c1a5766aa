#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "upset/error.hpp"

namespace upset {

using Edge = std::pair<int, int>;  // normalized u < v

// Rotation system: for each vertex, its neighbors in counterclockwise order,
// plus one face designated as outer. Only graphs produced by this library's
// generators carry one; plain edge lists do not.
struct CombinatorialEmbedding {
  std::vector<std::vector<int>> rotations;
  std::array<int, 3> outer_face{};
};

// Simple undirected graph. The planarity-related invariants (m <= 3n-6,
// realizability) are established by the validators, not the container, so
// that over-full graphs like K5 can still be constructed and then rejected.
class PlanarGraph {
 public:
  explicit PlanarGraph(int n) : adj_(checked_count(n)) {}

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) raise(ErrorCode::InvalidArgument, "self-loops are not allowed");
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
      raise(ErrorCode::InvalidArgument, "parallel edges are not allowed");
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& shorter = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  std::vector<Edge> edges() const {
    std::vector<Edge> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }

  const std::optional<CombinatorialEmbedding>& embedding() const {
    return embedding_;
  }

  void set_embedding(CombinatorialEmbedding embedding) {
    if (static_cast<int>(embedding.rotations.size()) != n())
      raise(ErrorCode::InvalidArgument, "rotation system size mismatch");
    embedding_ = std::move(embedding);
  }

 private:
  static std::size_t checked_count(int n) {
    if (n < 0) raise(ErrorCode::InvalidArgument, "vertex count must be >= 0");
    return static_cast<std::size_t>(n);
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n())
      raise(ErrorCode::InvalidArgument,
            "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::optional<CombinatorialEmbedding> embedding_;
};

inline bool graphs_equal(const PlanarGraph& a, const PlanarGraph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}

namespace detail {

inline int component_count_without(const PlanarGraph& g, int skip1, int skip2) {
  const int n = g.n();
  std::vector<char> visited(n, 0);
  if (skip1 >= 0) visited[skip1] = 1;
  if (skip2 >= 0) visited[skip2] = 1;
  int components = 0;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    ++components;
    visited[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

}  // namespace detail

// Exhaustive check over all vertex pairs: O(n^2 (n + m)). Removing any pair
// from a 3-connected graph on n >= 4 vertices leaves it connected, and
// conversely any cut of size <= 2 shows up as some disconnecting pair.
inline bool is_three_connected(const PlanarGraph& g) {
  const int n = g.n();
  if (n < 4) raise(ErrorCode::InvalidArgument, "3-connectivity needs n >= 4");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (detail::component_count_without(g, u, v) != 1) return false;
  return true;
}

// Walks every face of the rotation system. Next edge of the face left of
// u->v: v->w where w immediately precedes u in v's counterclockwise rotation.
// With counterclockwise rotations this traces inner faces counterclockwise
// and the outer face clockwise.
inline std::vector<std::vector<int>> trace_faces(const PlanarGraph& g) {
  if (!g.embedding())
    raise(ErrorCode::InvalidArgument, "graph carries no rotation system");
  const auto& rot = g.embedding()->rotations;

  std::set<std::pair<int, int>> unused;
  for (int v = 0; v < g.n(); ++v) {
    for (int u : rot[v]) unused.insert({u, v});
    if (static_cast<int>(rot[v].size()) != g.degree(v))
      raise(ErrorCode::InvalidArgument, "rotation size != degree");
  }

  auto prev_around = [&](int v, int u) {
    const auto& r = rot[v];
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end())
      raise(ErrorCode::InvalidArgument, "rotation system inconsistent");
    return it == r.begin() ? r.back() : *std::prev(it);
  };

  std::vector<std::vector<int>> faces;
  while (!unused.empty()) {
    auto [u0, v0] = *unused.begin();
    std::vector<int> face;
    int u = u0, v = v0;
    do {
      unused.erase({u, v});
      face.push_back(v);
      const int w = prev_around(v, u);
      u = v;
      v = w;
    } while (!(u == u0 && v == v0));
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace upset
