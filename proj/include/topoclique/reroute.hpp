#pragma once

#include <optional>
#include <vector>

#include "topoclique/certificate.hpp"
#include "topoclique/graph.hpp"

namespace topoclique {

// Negotiated-congestion routing of all core pairs at once. Every pair is
// rerouted each round along a cheapest path through non-core vertices, where
// a vertex costs more the more other paths use it now and the more often it
// was overused before. Stops when the paths are internally disjoint.
struct RerouteConfig {
  int rounds = 60;
  double present_start = 0.5;
  double present_growth = 1.6;
  double history_step = 1.0;
  double work_budget = 2e8;  // star_reroute skips core counts costing more
};

struct RerouteReport {
  int rounds = 0;
  int overused = 0;  // vertices shared in the last round
};

/// Certificate on exactly `cores`, or nothing if the rounds run out.
std::optional<SubdivisionCertificate> reroute_connect(const Graph& g, const std::vector<Vertex>& cores,
                                                      const RerouteConfig& cfg = {}, RerouteReport* report = nullptr);

struct StarRerouteReport {
  int centres_tried = 0;
  int runs = 0;
};

/// Cores are a vertex and some of its neighbours, the neighbours taken by
/// degree (then id). Tries the highest-degree centres first, at most
/// `centres` of them, and for each the largest core count above `floor`
/// that routes. Returns the largest certificate found.
std::optional<SubdivisionCertificate> star_reroute(const Graph& g, int floor, int centres = 4,
                                                   const RerouteConfig& cfg = {}, StarRerouteReport* report = nullptr);

}  // namespace topoclique
