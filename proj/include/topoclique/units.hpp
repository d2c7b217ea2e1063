#pragma once

#include <optional>
#include <string>
#include <vector>

#include "topoclique/certificate.hpp"
#include "topoclique/graph.hpp"
#include "topoclique/mode.hpp"

namespace topoclique {

/// Center u, first layer S1(u) and one disjoint second layer per S1 vertex.
struct Hub {
  Vertex center = -1;
  VertexSet s1;
  std::vector<VertexSet> leaves;  // leaves[i] = S1(s1[i])

  VertexSet b1() const;  // {u} u S1(u)
  VertexSet s2() const;  // union of the leaves
  VertexSet vertices() const;
};

/// Independent structural check of an (h1, h2)-hub.
bool check_hub(const Graph& g, const Hub& hub, int h1, int h2, std::string* why = nullptr);

/// Core v joined by spokes[j] (v ... hubs[j].center) to vertex-disjoint hubs.
struct Unit {
  Vertex core = -1;
  std::vector<Hub> hubs;
  std::vector<Path> spokes;

  VertexSet exterior() const;  // second layers of the hubs
  VertexSet interior() const;  // everything else
  VertexSet vertices() const;
};

bool check_unit(const Graph& g, const Unit& unit, int h0, int h1, int h2, int h3, std::string* why = nullptr);

struct HubSearchReport {
  int found = 0;
  int refined_size = 0;  // vertices left after the last degree refinement
  std::string reason;
};

/// Greedy disjoint hubs avoiding W. Each round refines G - W - (hubs so far)
/// by stripping vertices below half the average degree, then grows hubs from
/// centers by refined degree, highest first. May return fewer than `count`.
std::vector<Hub> find_disjoint_hubs(const Graph& g, const VertexSet& w, int h1, int h2, int count,
                                    HubSearchReport* report = nullptr);

struct UnitsConfig {
  ParamMode mode = ParamMode::practical;
  double c = 0.1;
  double c0 = 0.1;
  double eps2 = 0.1;
  int s = 2;

  // Non-positive values are derived by derive_units.
  int h0 = 0;            // hubs per unit
  int h1 = 0;            // unit hub profile after pruning
  int h2 = 0;
  int w_h1 = 0;          // candidate core hubs
  int w_h2 = 0;
  int u_h1 = 0;          // candidate unit hubs before pruning
  int u_h2 = 0;
  int w_count = 0;
  int u_count = 0;
  int q_path_cap = 0;    // Algorithm Q connection length
  int r_path_cap = 0;    // Algorithm R connection length
  int r4_cap = 0;        // interior vertices a unit may lose before discard
  int units_wanted = 0;
  int target = 2;
};

/// Fills every non-positive field of cfg from (d, n): the formula ladder in
/// paper mode, degree-scaled desk values in practical mode.
UnitsConfig derive_units(const UnitsConfig& cfg, double d, int n);

/// Spoke length bound h3 implied by the Algorithm Q cap.
int spoke_cap(const UnitsConfig& cfg);

struct UnitBuildReport {
  int units = 0;
  std::vector<int> best_tally;  // per attempt: most connections of any core hub
  int hub_checks_failed = 0;
  std::string reason;
};

/// Algorithm Q repeated: each unit is built in G minus the vertices of the
/// units before it, so the returned units are pairwise vertex-disjoint.
std::vector<Unit> build_units(const Graph& g, const UnitsConfig& cfg, UnitBuildReport* report = nullptr);

struct ConnectReport {
  int passes = 0;
  int connections = 0;
  long long connection_vertices = 0;
  int rule_violations = 0;  // R2/R3 or disjointness breaches detected post hoc
  std::vector<Vertex> discarded;
};

/// Algorithm R over the given units; certificate on a largest set of
/// surviving, pairwise connected units. Absent when no unit survives.
std::optional<SubdivisionCertificate> connect_units(const Graph& g, const std::vector<Unit>& units,
                                                    const UnitsConfig& cfg, ConnectReport* report = nullptr);

/// Removes repeated vertices by cutting out the loop between occurrences.
Path splice_repeats(const Path& p);

}  // namespace topoclique
