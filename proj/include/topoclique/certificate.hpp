#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "topoclique/graph.hpp"

namespace topoclique {

using CorePair = std::pair<Vertex, Vertex>;

struct CertificatePath {
  CorePair pair;
  Path path;
};

struct CertificateMeta {
  std::string route;  // highdeg | units | sparse | oracle | trivial
  nlohmann::json params = nlohmann::json::object();
};

/// Core vertices plus one path per unordered core pair. Paths are kept as a
/// list so that malformed inputs (repeated or missing pairs) stay
/// representable and can be reported by the verifier.
struct SubdivisionCertificate {
  std::vector<Vertex> cores;
  std::vector<CertificatePath> paths;
  CertificateMeta meta;

  int order() const { return static_cast<int>(cores.size()); }

  /// Maps every vertex through `to_parent` (subgraph id -> parent id).
  SubdivisionCertificate lifted(const std::vector<Vertex>& to_parent) const;
};

nlohmann::json to_json(const SubdivisionCertificate& cert);

/// Throws InputError on schema violations (wrong types, missing keys).
SubdivisionCertificate certificate_from_json(const nlohmann::json& j);

/// Compact JSON with a trailing newline; object keys come out sorted.
std::string dump_certificate(const SubdivisionCertificate& cert);

}  // namespace topoclique
