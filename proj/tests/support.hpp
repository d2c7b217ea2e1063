#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "topoclique/certificate.hpp"
#include "topoclique/graph.hpp"

namespace support {

inline topoclique::Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> e(edges);
  return topoclique::Graph::from_edges(n, e);
}

inline std::vector<std::pair<std::pair<int, int>, std::vector<int>>> raw_paths(
    const topoclique::SubdivisionCertificate& c) {
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> out;
  for (const auto& p : c.paths) out.push_back({p.pair, p.path.vertices});
  return out;
}

// Certificate check through the test oracle only.
inline bool oracle_accepts(const topoclique::Graph& g, const topoclique::SubdivisionCertificate& c) {
  return oracle::subdivision_ok(g, c.cores, raw_paths(c));
}

}  // namespace support
