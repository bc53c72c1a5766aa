#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "upset/error.hpp"
#include "upset/gadget.hpp"
#include "upset/graph.hpp"

namespace upset {

struct LoadedGraph {
  PlanarGraph graph;
  std::optional<int> gadget_k;
};

inline void write_edge_list(std::ostream& os, const PlanarGraph& g) {
  os << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline void write_edge_list(std::ostream& os, const GadgetGraph& g) {
  write_edge_list(os, g.graph);
  os << "# gadget k=" << g.k << '\n';
  for (int v = 0; v < g.graph.n(); ++v) {
    const GadgetLabel label = GadgetGraph::label_of(v);
    os << "# gadget vertex=" << v << " cycle=" << label.cycle
       << " position=" << label.position << '\n';
  }
}

inline LoadedGraph read_edge_list(std::istream& is) {
  std::optional<int> gadget_k;
  std::string line;
  int n = -1, m = -1;
  int edges_read = 0;
  std::optional<PlanarGraph> graph;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream comment(line.substr(1));
      std::string word;
      comment >> word;
      if (word == "gadget") {
        comment >> word;
        if (word.rfind("k=", 0) == 0) {
          try {
            gadget_k = std::stoi(word.substr(2));
          } catch (const std::exception&) {
            raise(ErrorCode::FormatError, "bad gadget comment: " + line);
          }
        }
      }
      continue;
    }
    std::istringstream fields(line);
    if (!graph) {
      if (!(fields >> n >> m) || n < 0 || m < 0)
        raise(ErrorCode::FormatError, "expected header line `n m`");
      graph.emplace(n);
      continue;
    }
    int u = -1, v = -1;
    if (!(fields >> u >> v))
      raise(ErrorCode::FormatError, "expected edge line `u v`, got: " + line);
    if (edges_read == m) raise(ErrorCode::FormatError, "more edges than m");
    graph->add_edge(u, v);
    ++edges_read;
  }
  if (!graph) raise(ErrorCode::FormatError, "missing header line `n m`");
  if (edges_read != m)
    raise(ErrorCode::FormatError, "expected " + std::to_string(m) +
                                      " edges, found " +
                                      std::to_string(edges_read));
  return {std::move(*graph), gadget_k};
}

inline LoadedGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoError, "cannot open " + path);
  return read_edge_list(in);
}

template <typename GraphLike>
inline void write_edge_list_file(const std::string& path, const GraphLike& g) {
  std::ofstream out(path);
  if (!out) raise(ErrorCode::IoError, "cannot open " + path + " for writing");
  write_edge_list(out, g);
  if (!out) raise(ErrorCode::IoError, "write to " + path + " failed");
}

}  // namespace upset
