#include "topoclique/sparse.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>

#include "topoclique/clique.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/random.hpp"

namespace topoclique {

namespace {

int floor_one(double x, bool* floored) {
  if (!(x >= 1.0)) {
    *floored = true;
    return 1;
  }
  if (x > static_cast<double>(INT_MAX / 2)) return INT_MAX / 2;
  return static_cast<int>(std::lround(x)) < 1 ? 1 : static_cast<int>(std::lround(x));
}

}  // namespace

SparseConfig paper_sparse_config(int n, int s, double c1, double d) {
  SparseConfig cfg;
  cfg.mode = ParamMode::paper;
  cfg.practical_regime = false;
  const double ln = std::log(std::max(n, 1));
  const double lnln = ln > 0 ? std::log(ln) : 0.0;
  bool floored = false;
  if (lnln > 0) {
    cfg.r = floor_one(std::pow(lnln, 5.0), &floored);
    cfg.k_outer = floor_one(ln / (100.0 * s * lnln), &floored);
    cfg.far_dist = floor_one(ln / (50.0 * s * lnln), &floored);
  } else {
    floored = true;
    cfg.r = cfg.k_outer = cfg.far_dist = 1;
  }
  cfg.path_cap = floor_one(2.0 * std::pow(ln, 4.0), &floored);
  cfg.core_target = floor_one(c1 * d, &floored);
  cfg.practical_regime = floored;
  return cfg;
}

SparseConfig practical_sparse_config(int n, double d) {
  SparseConfig cfg;
  cfg.r = 1;
  cfg.k_outer = 1;
  cfg.far_dist = 2 * cfg.k_outer;
  cfg.path_cap = std::max(n, 1);
  cfg.core_target = std::max(2, static_cast<int>(std::floor(d)) + 1);
  cfg.practical_regime = true;
  return cfg;
}

std::vector<Vertex> far_apart_vertices(const Graph& g, int dist, int target, const std::vector<Vertex>& order) {
  if (dist < 1) throw InputError("far_apart_vertices needs dist >= 1");
  const int n = g.num_vertices();
  std::vector<Vertex> scan = order;
  if (scan.empty()) {
    scan.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) scan[v] = v;
  }
  VertexMask near(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> chosen;
  for (Vertex v : scan) {
    if (static_cast<int>(chosen.size()) >= target) break;
    if (!g.contains(v)) throw InputError("scan order holds non-vertex " + std::to_string(v));
    if (near[v]) continue;
    chosen.push_back(v);
    Vertex src[] = {v};
    auto d = bfs_distances(g, src, nullptr, dist - 1);
    for (Vertex u = 0; u < n; ++u) {
      if (d[u] >= 0) near[u] = 1;
    }
  }
  return chosen;
}

bool is_consecutive_shortest(const Graph& g, Vertex v, const VertexSet& w, const std::vector<Path>& paths) {
  const int n = g.num_vertices();
  VertexMask host = to_mask(n, w);
  for (const Path& p : paths) {
    if (p.vertices.empty() || p.front() != v || !is_simple_path(g, p)) return false;
    host[v] = 1;
    for (Vertex x : p.vertices) {
      if (!host[x]) return false;
    }
    VertexMask blocked(static_cast<std::size_t>(n), 0);
    for (Vertex x = 0; x < n; ++x) blocked[x] = !host[x];
    Vertex src[] = {v};
    auto d = bfs_distances(g, src, &blocked, -1);
    if (d[p.back()] != static_cast<int>(p.length())) return false;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) host[p.vertices[i]] = 0;
  }
  return true;
}

VertexSet grow_inner_ball(const Graph& g, Vertex v, const std::vector<Path>& stubs, int r) {
  VertexMask blocked(static_cast<std::size_t>(g.num_vertices()), 0);
  for (const Path& p : stubs) {
    for (Vertex x : p.vertices) blocked[x] = 1;
  }
  blocked[v] = 0;
  Vertex src[] = {v};
  auto d = bfs_distances(g, src, &blocked, r);
  VertexSet out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (d[u] >= 0) out.push_back(u);
  }
  return out;
}

VertexSet grow_outer_ball(const Graph& g, const VertexSet& y, const VertexSet& w, int k) {
  VertexMask blocked = to_mask(g.num_vertices(), w);
  for (Vertex x : y) {
    if (blocked[x]) throw InputError("outer ball seed meets the deletion set at " + std::to_string(x));
  }
  auto d = bfs_distances(g, y, &blocked, k);
  VertexSet out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (d[u] >= 0) out.push_back(u);
  }
  return out;
}

DowngradeReport downgrade_expansion_check(const Graph& g, double d, double eps1, double eps2, int s, int t,
                                          int threshold, int trials, std::uint64_t seed) {
  if (s < 2 || t < s) throw InputError("downgrade check needs 2 <= s <= t");
  DowngradeReport rep;
  const int n = g.num_vertices();
  rep.min_degree = g.min_degree();
  rep.hypothesis_ok = n > 0 && 16.0 * rep.min_degree >= d;
  rep.params = ExpanderParams{eps1, std::max(eps2 * d, 1e-9)};
  if (n <= threshold) {
    rep.expansion = verify_expander_exact(g, rep.params, threshold);
  } else {
    rep.expansion = verify_expander_sampled(g, rep.params, std::max(trials, 1), seed);
  }
  const double exponent = static_cast<double>(s) / (s - 1);
  int lo = std::max(1, static_cast<int>(std::ceil(eps2 * d / 2.0)));
  int hi = std::min(n / 2, static_cast<int>(std::floor(eps2 * std::pow(d, exponent) / 2.0)));
  if (lo <= hi && n > 0) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int trial = 0; trial < trials; ++trial) {
      int size = rng.between(lo, hi);
      Vertex start = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      Vertex src[] = {start};
      auto dist = bfs_distances(g, src, nullptr, -1);
      std::vector<Vertex> order;
      for (Vertex u = 0; u < n; ++u) {
        if (dist[u] >= 0) order.push_back(u);
      }
      std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
      if (static_cast<int>(order.size()) < size) continue;
      order.resize(static_cast<std::size_t>(size));
      ++rep.mid_sets_tested;
      if (static_cast<int>(external_neighborhood(g, normalize(order)).size()) < size) ++rep.mid_failures;
    }
  }
  return rep;
}

namespace {

// Longest prefix of p (from its front) lying inside `inside`.
Path prefix_within(const Path& p, const VertexMask& inside) {
  Path out;
  for (Vertex x : p.vertices) {
    if (!inside[x]) break;
    out.vertices.push_back(x);
  }
  return out;
}

Path reversed(const Path& p) { return Path{std::vector<Vertex>(p.vertices.rbegin(), p.vertices.rend())}; }

std::vector<VertexMask> inner_balls(const Graph& g, const std::vector<Vertex>& cores, int r) {
  std::vector<VertexMask> out;
  for (Vertex v : cores) {
    Vertex src[] = {v};
    out.push_back(to_mask(g.num_vertices(), ball(g, src, r)));
  }
  return out;
}

bool path_conditions(const Graph& g, const SparseConfig& cfg, const std::vector<Vertex>& cores,
                     const std::vector<VertexMask>& balls, std::pair<int, int> e, const Path& p, std::string* why) {
  auto bad = [&](const std::string& msg) {
    if (why) *why = "path (" + std::to_string(cores[e.first]) + "," + std::to_string(cores[e.second]) + "): " + msg;
    return false;
  };
  if (!is_simple_path(g, p) || p.front() != cores[e.first] || p.back() != cores[e.second]) return bad("malformed");
  if (static_cast<int>(p.length()) > cfg.path_cap) return bad("condition (i): longer than cap");
  for (std::size_t c = 0; c < cores.size(); ++c) {
    if (static_cast<int>(c) == e.first || static_cast<int>(c) == e.second) continue;
    for (Vertex x : p.vertices) {
      if (balls[c][x]) return bad("condition (iv): enters the inner ball of " + std::to_string(cores[c]));
    }
  }
  return true;
}

}  // namespace

bool check_ledger(const Graph& g, const SparseConfig& cfg, const CoreLedger& ledger, std::string* why) {
  const int n = g.num_vertices();
  const auto balls = inner_balls(g, ledger.cores, cfg.r);
  std::vector<std::vector<std::pair<int, int>>> on(static_cast<std::size_t>(n));
  for (const auto& [e, p] : ledger.paths) {
    if (!path_conditions(g, cfg, ledger.cores, balls, e, p, why)) return false;
    for (Vertex x : p.vertices) on[x].push_back(e);
  }
  for (Vertex x = 0; x < n; ++x) {
    if (on[x].size() < 2) continue;
    for (auto e : on[x]) {
      if (ledger.cores[e.first] != x && ledger.cores[e.second] != x) {
        if (why) *why = "condition (ii): vertex " + std::to_string(x) + " shared by two paths";
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < ledger.cores.size(); ++i) {
    VertexSet w;
    for (Vertex x = 0; x < n; ++x) {
      if (balls[i][x]) w.push_back(x);
    }
    if (i < ledger.stubs.size() && !is_consecutive_shortest(g, ledger.cores[i], w, ledger.stubs[i])) {
      if (why) *why = "condition (iii): stubs at " + std::to_string(ledger.cores[i]) + " not consecutive shortest";
      return false;
    }
  }
  return true;
}

std::optional<SubdivisionCertificate> run_sparse_connect(const Graph& g, const SparseConfig& cfg,
                                                         SparseReport* report) {
  SparseReport local;
  SparseReport& rep = report ? *report : local;
  rep = SparseReport{};
  rep.practical_regime = cfg.practical_regime;
  if (cfg.r < 0 || cfg.k_outer < 0 || cfg.far_dist < 1 || cfg.path_cap < 1) throw InputError("sparse config out of range");
  const int n = g.num_vertices();

  CoreLedger ledger;
  ledger.cores = far_apart_vertices(g, cfg.far_dist, cfg.core_target, cfg.scan_order);
  const int q = static_cast<int>(ledger.cores.size());
  rep.cores = q;
  if (q == 0) return std::nullopt;
  ledger.stubs.assign(static_cast<std::size_t>(q), {});
  const auto balls = inner_balls(g, ledger.cores, cfg.r);
  VertexMask on_path(static_cast<std::size_t>(n), 0);

  bool progress = true;
  while (progress) {
    progress = false;
    ++rep.passes;
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) {
        if (ledger.paths.count({i, j})) continue;
        ++rep.pairs_attempted;
        const Vertex vi = ledger.cores[i], vj = ledger.cores[j];
        VertexSet w;
        for (Vertex x = 0; x < n; ++x) {
          if (on_path[x] && x != vi && x != vj) w.push_back(x);
        }
        VertexMask w_mask = to_mask(n, w);

        // Telemetry: the two-stage balls the routing argument relies on.
        for (int c : {i, j}) {
          VertexSet inner = grow_inner_ball(g, ledger.cores[c], ledger.stubs[c], cfg.r);
          VertexSet seed;
          for (Vertex x : inner) {
            if (!w_mask[x]) seed.push_back(x);
          }
          rep.inner_sizes.push_back(static_cast<int>(inner.size()));
          rep.outer_sizes.push_back(static_cast<int>(grow_outer_ball(g, seed, w, cfg.k_outer).size()));
        }

        VertexMask blocked = w_mask;
        for (int p = 0; p < q; ++p) {
          if (p == i || p == j) continue;
          for (Vertex x = 0; x < n; ++x) blocked[x] = blocked[x] || balls[p][x];
        }
        VertexMask target(static_cast<std::size_t>(n), 0);
        target[vj] = 1;
        Vertex src[] = {vi};
        auto path = shortest_path_masked(g, src, target, &blocked, cfg.path_cap);
        if (!path) continue;

        // Tentative acceptance, checked against (i)-(iv) before it sticks.
        CoreLedger trial = ledger;
        trial.paths[{i, j}] = *path;
        trial.stubs[i].push_back(prefix_within(*path, balls[i]));
        trial.stubs[j].push_back(prefix_within(reversed(*path), balls[j]));
        bool ok = path_conditions(g, cfg, ledger.cores, balls, {i, j}, *path, nullptr);
        for (std::size_t k = 1; ok && k + 1 < path->vertices.size(); ++k) ok = !on_path[path->vertices[k]];
        if (ok) {
          std::vector<VertexSet> host(2);
          for (Vertex x = 0; x < n; ++x) {
            if (balls[i][x]) host[0].push_back(x);
            if (balls[j][x]) host[1].push_back(x);
          }
          ok = is_consecutive_shortest(g, vi, host[0], trial.stubs[i]) &&
               is_consecutive_shortest(g, vj, host[1], trial.stubs[j]);
        }
        if (!ok) {
          ++rep.rejected_candidates;
          continue;
        }
        ledger = std::move(trial);
        for (Vertex x : path->vertices) on_path[x] = 1;
        ++rep.connections;
        progress = true;
        if (!check_ledger(g, cfg, ledger)) ++rep.ledger_violations;
      }
    }
  }

  std::vector<std::vector<char>> adj(static_cast<std::size_t>(q), std::vector<char>(static_cast<std::size_t>(q), 0));
  for (const auto& [e, p] : ledger.paths) adj[e.first][e.second] = adj[e.second][e.first] = 1;
  std::vector<int> best = maximum_clique(adj);
  SubdivisionCertificate cert;
  cert.meta.route = "sparse";
  for (int x : best) cert.cores.push_back(ledger.cores[x]);
  for (std::size_t a = 0; a < best.size(); ++a) {
    for (std::size_t b = a + 1; b < best.size(); ++b) {
      cert.paths.push_back({{ledger.cores[best[a]], ledger.cores[best[b]]}, ledger.paths.at({best[a], best[b]})});
    }
  }
  return cert;
}

}  // namespace topoclique
