#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topoclique/certificate.hpp"
#include "topoclique/expander.hpp"
#include "topoclique/graph.hpp"
#include "topoclique/mode.hpp"

namespace topoclique {

struct SparseConfig {
  ParamMode mode = ParamMode::practical;
  int r = 1;            // inner radius; 0 only in the relaxed fallback
  int k_outer = 1;      // outer radius
  int far_dist = 2;     // minimum pairwise core distance
  int path_cap = 1;     // longest accepted connection
  int core_target = 2;
  bool practical_regime = true;  // some formula value was floored
  std::vector<Vertex> scan_order;  // core scan order; empty means by id
};

/// Formula values with natural logs, each rounded and floored at 1:
/// r = (ln ln n)^5, k = ln n / (100 s ln ln n), far = ln n / (50 s ln ln n),
/// cap = 2 ln^4 n, core target = c1 d.
SparseConfig paper_sparse_config(int n, int s, double c1, double d);

/// Desk defaults: r = 1, k = 1, far = 2k, cap = n, core target d + 1.
SparseConfig practical_sparse_config(int n, double d);

/// Greedy maximal set with pairwise distance >= dist, scanning `order` (all
/// vertices by id when empty). Stops at `target`.
std::vector<Vertex> far_apart_vertices(const Graph& g, int dist, int target, const std::vector<Vertex>& order = {});

/// Each path starts at v, stays in W, and is a shortest path between its
/// ends in G[(W minus interiors of the earlier paths) + v].
bool is_consecutive_shortest(const Graph& g, Vertex v, const VertexSet& w, const std::vector<Path>& paths);

/// Ball of radius r around v in G - P + v, P the union of the stub vertices.
VertexSet grow_inner_ball(const Graph& g, Vertex v, const std::vector<Path>& stubs, int r);

/// Ball of radius k around Y in G - W. Throws InputError if Y meets W.
VertexSet grow_outer_ball(const Graph& g, const VertexSet& y, const VertexSet& w, int k);

struct DowngradeReport {
  ExpansionReport expansion;
  ExpanderParams params;         // (eps1, eps2 d)
  bool hypothesis_ok = false;    // min degree >= d/16
  int min_degree = 0;
  int mid_sets_tested = 0;       // sets in [eps2 d/2, eps2 d^{s/(s-1)}/2]
  int mid_failures = 0;          // of those, |N(X)| < |X|
};

/// Checks (eps1, eps2 d)-expansion, exact up to `threshold` vertices and
/// sampled above, plus the |N(X)| >= |X| mechanism on sampled sets of the
/// intermediate size range.
DowngradeReport downgrade_expansion_check(const Graph& g, double d, double eps1, double eps2, int s, int t,
                                          int threshold = kDefaultExactThreshold, int trials = 200,
                                          std::uint64_t seed = 1);

/// The bookkeeping of the greedy connection loop.
struct CoreLedger {
  std::vector<Vertex> cores;
  std::map<std::pair<int, int>, Path> paths;  // (i, j), i < j, path v_i ... v_j
  std::vector<std::vector<Path>> stubs;       // per core, in acceptance order
};

/// Conditions (i) length cap, (ii) disjointness up to shared ends, (iii)
/// stubs consecutive shortest inside B^r(v_i), (iv) paths avoid the inner
/// balls of cores they do not join. Reports the first failure in `why`.
bool check_ledger(const Graph& g, const SparseConfig& cfg, const CoreLedger& ledger, std::string* why = nullptr);

struct SparseReport {
  int cores = 0;
  int passes = 0;
  int pairs_attempted = 0;
  int connections = 0;
  int rejected_candidates = 0;  // shortest paths failing (i)-(iv)
  int ledger_violations = 0;    // failed re-assertions after acceptance
  std::vector<int> inner_sizes;
  std::vector<int> outer_sizes;
  bool practical_regime = true;
};

/// The greedy connection loop. Certificate on a largest pairwise connected
/// core set; absent only when no core exists.
std::optional<SubdivisionCertificate> run_sparse_connect(const Graph& g, const SparseConfig& cfg,
                                                         SparseReport* report = nullptr);

}  // namespace topoclique
