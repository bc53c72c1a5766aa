#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "upset/embedding.hpp"
#include "upset/geometry.hpp"
#include "upset/graph.hpp"
#include "upset/point_set.hpp"

namespace upset {

enum class EmbedOutcome { FOUND, IMPOSSIBLE, BUDGET_EXCEEDED };

inline constexpr std::uint64_t default_embed_budget = 20'000'000;

struct EmbedSearchResult {
  EmbedOutcome outcome = EmbedOutcome::IMPOSSIBLE;
  std::optional<StraightLineEmbedding> embedding;
  std::uint64_t nodes_expanded = 0;
};

namespace detail {

class EmbedSearch {
 public:
  EmbedSearch(const PlanarGraph& g, const std::vector<Point>& points,
              std::uint64_t budget)
      : g_(g),
        points_(points),
        budget_(budget),
        assigned_(g.n(), -1),
        used_(points.size(), 0),
        placed_neighbors_(g.n(), 0) {}

  EmbedSearchResult run() {
    EmbedSearchResult result;
    if (static_cast<int>(points_.size()) < g_.n()) {
      result.outcome = EmbedOutcome::IMPOSSIBLE;
      return result;
    }
    const bool found = extend(0);
    result.nodes_expanded = nodes_;
    if (found) {
      result.outcome = EmbedOutcome::FOUND;
      StraightLineEmbedding e{g_, {}};
      e.placement.resize(g_.n());
      for (int v = 0; v < g_.n(); ++v) e.placement[v] = points_[assigned_[v]];
      result.embedding = std::move(e);
    } else {
      result.outcome = over_budget_ ? EmbedOutcome::BUDGET_EXCEEDED
                                    : EmbedOutcome::IMPOSSIBLE;
    }
    return result;
  }

 private:
  // Most constrained vertex first: maximize placed neighbors, then degree,
  // then take the smallest id so runs are reproducible.
  int pick_vertex() const {
    int best = -1;
    for (int v = 0; v < g_.n(); ++v) {
      if (assigned_[v] != -1) continue;
      if (best == -1) {
        best = v;
        continue;
      }
      const int a = placed_neighbors_[v], b = placed_neighbors_[best];
      if (a > b || (a == b && g_.degree(v) > g_.degree(best))) best = v;
    }
    return best;
  }

  bool conflicts(int v, const Point& p) const {
    // Injectivity by value, so duplicate input points cannot be used twice.
    for (int z = 0; z < g_.n(); ++z)
      if (assigned_[z] != -1 && points_[assigned_[z]] == p) return true;

    // The new point must not sit inside any placed edge.
    for (const auto& [a, b] : placed_edges_)
      if (detail::strictly_inside_segment(points_[assigned_[a]],
                                          points_[assigned_[b]], p))
        return true;

    for (int w : g_.neighbors(v)) {
      if (assigned_[w] == -1) continue;
      const Segment fresh{p, points_[assigned_[w]]};
      for (int z = 0; z < g_.n(); ++z) {
        if (z == v || z == w || assigned_[z] == -1) continue;
        if (detail::strictly_inside_segment(fresh.a, fresh.b,
                                            points_[assigned_[z]]))
          return true;
      }
      for (const auto& [a, b] : placed_edges_) {
        const Segment old{points_[assigned_[a]], points_[assigned_[b]]};
        if (segments_conflict(fresh, old)) return true;
      }
    }
    return false;
  }

  bool extend(int depth) {
    if (depth == g_.n()) return true;
    const int v = pick_vertex();
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (used_[i]) continue;
      if (++nodes_ > budget_) {
        over_budget_ = true;
        return false;
      }
      if (conflicts(v, points_[i])) continue;

      assigned_[v] = static_cast<int>(i);
      used_[i] = 1;
      const std::size_t edges_before = placed_edges_.size();
      for (int w : g_.neighbors(v)) {
        ++placed_neighbors_[w];
        if (assigned_[w] != -1) placed_edges_.push_back({v, w});
      }

      if (extend(depth + 1)) return true;

      placed_edges_.resize(edges_before);
      for (int w : g_.neighbors(v)) --placed_neighbors_[w];
      used_[i] = 0;
      assigned_[v] = -1;
      if (over_budget_) return false;
    }
    return false;
  }

  const PlanarGraph& g_;
  const std::vector<Point>& points_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool over_budget_ = false;
  std::vector<int> assigned_;
  std::vector<char> used_;
  std::vector<int> placed_neighbors_;
  std::vector<std::pair<int, int>> placed_edges_;
};

}  // namespace detail

// Exhaustive backtracking over injective vertex-to-point assignments with
// incremental crossing checks; complete up to the node budget. A point set
// smaller than the graph is immediately impossible.
inline EmbedSearchResult embeddable(
    const PlanarGraph& g, const PointSet& u,
    std::uint64_t budget = default_embed_budget) {
  return detail::EmbedSearch(g, u.points, budget).run();
}

}  // namespace upset
