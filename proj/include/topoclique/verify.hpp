#pragma once

#include <optional>
#include <string>

#include "topoclique/certificate.hpp"
#include "topoclique/graph.hpp"

namespace topoclique {

enum class FailureKind {
  none,
  vertex_out_of_range,
  duplicate_core,
  foreign_pair,    // a pair whose ends are not two distinct cores
  duplicate_pair,
  missing_pair,
  not_a_path,      // consecutive vertices not adjacent, or a repeated vertex
  bad_endpoints,
  core_in_interior,
  shared_interior,
};

std::string to_string(FailureKind kind);

struct Verdict {
  bool valid = false;
  int order = 0;
  FailureKind kind = FailureKind::none;
  std::optional<Vertex> vertex;   // offending vertex, when there is one
  std::optional<CorePair> pair;   // offending pair, when there is one
  std::string message;
};

/// Checks the certificate against g and stops at the first failure.
Verdict verify_subdivision(const Graph& g, const SubdivisionCertificate& cert);

struct OracleResult {
  int order = 0;
  SubdivisionCertificate witness;
};

inline constexpr int kDefaultOracleLimit = 10;

/// Largest t such that g contains a K_t-subdivision, by exhaustive search.
/// Throws SizeRefused when g has more than `limit_n` vertices.
OracleResult oracle_max_subdivision(const Graph& g, int limit_n = kDefaultOracleLimit);

}  // namespace topoclique
