#include "topoclique/reroute.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <utility>

namespace topoclique {

namespace {

// Cheapest u-w path whose interior avoids cores; cost is the sum of the
// interior vertex costs. Ties go to the lower id, so results are repeatable.
Path cheapest_path(const Graph& g, Vertex u, Vertex w, const std::vector<char>& is_core,
                   const std::vector<double>& cost) {
  const int n = g.num_vertices();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(static_cast<std::size_t>(n), inf);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[u] = 0;
  pq.push({0, u});
  while (!pq.empty()) {
    auto [du, x] = pq.top();
    pq.pop();
    if (du > dist[x]) continue;
    if (x == w) break;
    for (Vertex y : g.neighbors(x)) {
      if (y != w && is_core[y]) continue;
      const double dy = du + (y == w ? 0.0 : cost[y]);
      if (dy < dist[y]) {
        dist[y] = dy;
        parent[y] = x;
        pq.push({dy, y});
      }
    }
  }
  Path p;
  if (dist[w] == inf) return p;
  for (Vertex x = w; x != -1; x = parent[x]) p.vertices.push_back(x);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace

std::optional<SubdivisionCertificate> reroute_connect(const Graph& g, const std::vector<Vertex>& cores,
                                                      const RerouteConfig& cfg, RerouteReport* report) {
  const int n = g.num_vertices();
  RerouteReport local;
  RerouteReport& rep = report ? *report : local;
  rep = {};
  std::vector<char> is_core(static_cast<std::size_t>(n), 0);
  for (Vertex v : cores) is_core[v] = 1;

  std::vector<CorePair> pairs;
  for (std::size_t i = 0; i < cores.size(); ++i) {
    for (std::size_t j = i + 1; j < cores.size(); ++j) pairs.push_back({cores[i], cores[j]});
  }
  std::vector<Path> route(pairs.size());
  std::vector<int> occupancy(static_cast<std::size_t>(n), 0);
  std::vector<double> history(static_cast<std::size_t>(n), 0.0);
  std::vector<double> cost(static_cast<std::size_t>(n), 1.0);
  auto occupy = [&](const Path& p, int delta) {
    for (std::size_t k = 1; k + 1 < p.vertices.size(); ++k) occupancy[p.vertices[k]] += delta;
  };

  double present = cfg.present_start;
  for (int round = 0; round < cfg.rounds; ++round) {
    rep.rounds = round + 1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      occupy(route[i], -1);
      for (Vertex x = 0; x < n; ++x) cost[x] = (1.0 + history[x]) * (1.0 + present * occupancy[x]);
      route[i] = cheapest_path(g, pairs[i].first, pairs[i].second, is_core, cost);
      if (route[i].vertices.empty()) return std::nullopt;
      occupy(route[i], +1);
    }
    rep.overused = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (occupancy[x] > 1) {
        ++rep.overused;
        history[x] += cfg.history_step;
      }
    }
    if (rep.overused == 0) {
      SubdivisionCertificate cert;
      cert.cores = cores;
      for (std::size_t i = 0; i < pairs.size(); ++i) cert.paths.push_back({pairs[i], route[i]});
      cert.meta.route = "reroute";
      return cert;
    }
    present *= cfg.present_growth;
  }
  return std::nullopt;
}

std::optional<SubdivisionCertificate> star_reroute(const Graph& g, int floor, int centres, const RerouteConfig& cfg,
                                                   StarRerouteReport* report) {
  const int n = g.num_vertices();
  StarRerouteReport local;
  StarRerouteReport& rep = report ? *report : local;
  rep = {};
  auto by_degree = [&](Vertex a, Vertex b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  };
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), by_degree);

  // Each round costs about one search per pair over the whole graph.
  const double per_pair = static_cast<double>(cfg.rounds) * (n + 2.0 * g.num_edges());
  std::optional<SubdivisionCertificate> best;
  for (int c = 0; c < std::min(centres, n); ++c) {
    const Vertex v = order[c];
    std::vector<Vertex> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(nbrs.begin(), nbrs.end(), by_degree);
    int hi = static_cast<int>(nbrs.size()) + 1;
    while (hi > 2 && per_pair * hi * (hi - 1) / 2 > cfg.work_budget) --hi;
    int lo = std::max(floor, best ? best->order() : 0);
    if (hi <= lo) continue;
    ++rep.centres_tried;
    // Largest routable core count in (lo, hi], assuming rough monotonicity.
    while (lo < hi) {
      const int k = lo + (hi - lo + 1) / 2;
      std::vector<Vertex> cores{v};
      cores.insert(cores.end(), nbrs.begin(), nbrs.begin() + (k - 1));
      ++rep.runs;
      auto cert = reroute_connect(g, cores, cfg);
      if (cert) {
        best = std::move(cert);
        lo = k;
      } else {
        hi = k - 1;
      }
    }
  }
  if (best) best->meta.route = "star-reroute";
  return best;
}

}  // namespace topoclique
