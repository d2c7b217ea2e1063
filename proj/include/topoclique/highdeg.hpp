#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topoclique/certificate.hpp"
#include "topoclique/graph.hpp"
#include "topoclique/mode.hpp"
#include "topoclique/rational.hpp"

namespace topoclique {

struct HighDegConfig {
  ParamMode mode = ParamMode::practical;
  double c0 = 0.1;
  double eps1 = 0.1;
  double eps2 = 0.1;
  int s = 2;
  int t = 2;
  double delta_factor = 2.0;  // practical threshold: delta = delta_factor * d

  // Algorithm P limits. Non-positive values mean "derive from the formulas"
  // in paper mode and "derive from delta" in practical mode.
  int star_size = 0;
  int lprime_deg_cap = 0;
  int path_cap = 0;
  int discard_cap = 0;
  int target = 2;  // smallest order worth reporting
};

/// Quantities the formulas attach to a graph with n vertices and average
/// degree d.
struct HighDegDerived {
  double ell = 0;    // c0 d^{s/(2(s-1))}
  double m = 0;      // ln(15n / (eps2 d^{s/(s-1)}))
  double delta = 0;  // high-degree threshold
  int star_size = 0;
  int lprime_deg_cap = 0;
  int path_cap = 0;
  int discard_cap = 0;
};

/// Resolves every limit of cfg against (d, n). Paper mode uses
/// delta = max(d/8, c0 d m^{10s}); practical mode delta_factor * d.
HighDegDerived derive_highdeg(const HighDegConfig& cfg, double d, int n);

struct DegreeSplit {
  VertexSet high;  // degree >= delta
  VertexSet rest;
};

DegreeSplit split_by_degree(const Graph& g, double delta);

struct ReduceReport {
  int removed = 0;
  int min_degree = 0;
  bool min_degree_ok = false;        // delta(H) >= d/16, exact
  int max_degree = 0;
  double max_degree_bound = 0;       // d ln^{10s}(|H| / d^{s/(s-1)})
  bool max_degree_ok = false;
  bool max_degree_gates = false;     // only in paper mode
  std::string reason;
};

/// H = G - L for L the vertices of degree >= delta. Absent when delta(H) <
/// d/16, or, in paper mode, when Delta(H) exceeds its bound.
std::optional<Subgraph> reduce_max_degree(const Graph& g, const Rational& d, const HighDegConfig& cfg,
                                          ReduceReport* report = nullptr);

struct StarSystem {
  std::vector<Vertex> cores;   // L'
  std::vector<VertexSet> s1;   // s1[i] = S1(cores[i])
};

/// S1(v) = the star_size lowest-id neighbours of v outside L' having at most
/// lprime_deg_cap neighbours in L'. Throws ConstructionError naming the
/// first core with too few such neighbours.
StarSystem build_star_system(const Graph& g, const std::vector<Vertex>& lprime, int star_size, int lprime_deg_cap);

struct AlgorithmPDiagnostics {
  int passes = 0;
  int pairs_attempted = 0;
  int connections = 0;
  long long interior_total = 0;
  int invariant_violations = 0;
  std::vector<Vertex> discarded;
  std::vector<std::pair<CorePair, std::string>> failures;  // last pass only
};

/// Greedy lexicographic passes connecting core pairs through their stars
/// until a pass adds nothing. Returns a certificate on a largest set of
/// undiscarded, pairwise connected cores when it has at least cfg.target
/// cores. Uses cfg.path_cap and cfg.discard_cap as given (resolve first).
std::optional<SubdivisionCertificate> run_algorithm_p(const Graph& g, const StarSystem& stars,
                                                      const HighDegConfig& cfg,
                                                      AlgorithmPDiagnostics* diag = nullptr);

}  // namespace topoclique
