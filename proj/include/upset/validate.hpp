#pragma once

#include <string>

#include "upset/embedding.hpp"
#include "upset/error.hpp"
#include "upset/graph.hpp"
#include "upset/grid_embed.hpp"

namespace upset {

struct ValidationReport {
  bool edge_count_ok = false;
  bool embedding_ok = false;
  std::string detail;

  bool valid() const { return edge_count_ok && embedding_ok; }
};

// Maximal planarity is certified constructively: the edge count must be
// exactly 3n-6 and the shift algorithm must produce a drawing that passes the
// geometric verifier. Failures land in the report instead of throwing.
inline ValidationReport validate_maximal_planar(const PlanarGraph& g) {
  if (g.n() < 4)
    raise(ErrorCode::InvalidArgument, "validation needs n >= 4");
  ValidationReport report;
  report.edge_count_ok = g.m() == 3 * g.n() - 6;
  if (!report.edge_count_ok) {
    report.detail = "edge count " + std::to_string(g.m()) + " != 3n-6 = " +
                    std::to_string(3 * g.n() - 6);
    return report;
  }
  try {
    const StraightLineEmbedding drawing = grid_embed(g);
    report.embedding_ok = verify_embedding(drawing);
    if (!report.embedding_ok)
      report.detail = "grid drawing failed geometric verification";
  } catch (const Error& e) {
    report.embedding_ok = false;
    report.detail = e.what();
  }
  return report;
}

}  // namespace upset
