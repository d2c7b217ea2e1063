#include "topoclique/highdeg.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <memory>

#include "topoclique/clique.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/expander.hpp"

namespace topoclique {

namespace {

int clamp_int(double x, int lo) {
  if (!(x < static_cast<double>(INT_MAX / 2))) return INT_MAX / 2;
  return std::max(lo, static_cast<int>(std::floor(x)));
}

}  // namespace

HighDegDerived derive_highdeg(const HighDegConfig& cfg, double d, int n) {
  HighDegDerived out;
  const double exponent = static_cast<double>(cfg.s) / (cfg.s - 1);
  out.ell = cfg.c0 * std::pow(d, exponent / 2.0);
  out.m = std::log(15.0 * n / (cfg.eps2 * std::pow(d, exponent)));
  if (cfg.mode == ParamMode::paper) {
    out.delta = std::max(d / 8.0, cfg.c0 * d * std::pow(out.m, 10.0 * cfg.s));
    out.star_size = clamp_int(out.delta / 2.0, 1);
    out.lprime_deg_cap = out.ell > 0 ? clamp_int(cfg.c0 * d / out.ell, 0) : 0;
    out.path_cap = clamp_int(std::ceil(2.0 * std::pow(out.m, 4.0)), 2);
    out.discard_cap = clamp_int(out.delta / 4.0, 0);
  } else {
    out.delta = cfg.delta_factor * d;
    out.star_size = clamp_int(out.delta / 2.0, 1);
    out.lprime_deg_cap = std::max(n, 1);
    out.path_cap = std::max(n + 1, 2);
    out.discard_cap = out.star_size;
  }
  if (cfg.star_size > 0) out.star_size = cfg.star_size;
  if (cfg.lprime_deg_cap > 0) out.lprime_deg_cap = cfg.lprime_deg_cap;
  if (cfg.path_cap > 0) out.path_cap = cfg.path_cap;
  if (cfg.discard_cap > 0) out.discard_cap = cfg.discard_cap;
  return out;
}

DegreeSplit split_by_degree(const Graph& g, double delta) {
  DegreeSplit out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    (g.degree(v) >= delta ? out.high : out.rest).push_back(v);
  }
  return out;
}

std::optional<Subgraph> reduce_max_degree(const Graph& g, const Rational& d, const HighDegConfig& cfg,
                                          ReduceReport* report) {
  ReduceReport local;
  ReduceReport& rep = report ? *report : local;
  rep = ReduceReport{};
  const double dd = d.to_double();
  const HighDegDerived der = derive_highdeg(cfg, dd, g.num_vertices());
  DegreeSplit split = split_by_degree(g, der.delta);
  Subgraph h = delete_vertices(g, split.high);
  rep.removed = static_cast<int>(split.high.size());
  rep.min_degree = h.graph.min_degree();
  rep.max_degree = h.graph.max_degree();
  rep.min_degree_ok = h.graph.num_vertices() > 0 && Rational(16) * Rational(rep.min_degree) >= d;
  const double exponent = static_cast<double>(cfg.s) / (cfg.s - 1);
  double inner = std::log(h.graph.num_vertices() / std::pow(dd, exponent));
  rep.max_degree_bound = dd * std::pow(inner, 10.0 * cfg.s);
  rep.max_degree_ok = rep.max_degree <= rep.max_degree_bound;
  rep.max_degree_gates = cfg.mode == ParamMode::paper;
  if (!rep.min_degree_ok) {
    rep.reason = "min degree " + std::to_string(rep.min_degree) + " below d/16";
    return std::nullopt;
  }
  if (rep.max_degree_gates && !rep.max_degree_ok) {
    rep.reason = "max degree " + std::to_string(rep.max_degree) + " above its bound";
    return std::nullopt;
  }
  return h;
}

StarSystem build_star_system(const Graph& g, const std::vector<Vertex>& lprime, int star_size, int lprime_deg_cap) {
  if (star_size < 1) throw InputError("star_size must be positive");
  VertexMask in_l = to_mask(g.num_vertices(), lprime);
  StarSystem out;
  out.cores = lprime;
  for (Vertex v : lprime) {
    VertexSet s1;
    for (Vertex u : g.neighbors(v)) {
      if (in_l[u]) continue;
      int into_l = 0;
      for (Vertex w : g.neighbors(u)) into_l += in_l[w];
      if (into_l <= lprime_deg_cap) s1.push_back(u);
      if (static_cast<int>(s1.size()) == star_size) break;
    }
    if (static_cast<int>(s1.size()) < star_size) {
      throw ConstructionError("core " + std::to_string(v) + " has only " + std::to_string(s1.size()) +
                              " admissible star vertices, needs " + std::to_string(star_size));
    }
    out.s1.push_back(std::move(s1));
  }
  return out;
}

std::optional<SubdivisionCertificate> run_algorithm_p(const Graph& g, const StarSystem& stars,
                                                      const HighDegConfig& cfg, AlgorithmPDiagnostics* diag) {
  AlgorithmPDiagnostics local;
  AlgorithmPDiagnostics& dg = diag ? *diag : local;
  dg = AlgorithmPDiagnostics{};
  const int n = g.num_vertices();
  const int q = static_cast<int>(stars.cores.size());
  if (cfg.path_cap < 2) throw InputError("Algorithm P needs path_cap >= 2");

  VertexMask is_core = to_mask(n, stars.cores);
  VertexMask used(static_cast<std::size_t>(n), 0);
  // star_of[x] = indices of cores whose S1 contains x.
  std::vector<std::vector<int>> star_of(static_cast<std::size_t>(n));
  for (int i = 0; i < q; ++i) {
    for (Vertex x : stars.s1[i]) star_of[x].push_back(i);
  }
  std::vector<int> usage(static_cast<std::size_t>(q), 0);
  std::vector<char> discarded(static_cast<std::size_t>(q), 0);
  std::vector<std::vector<const Path*>> link(q, std::vector<const Path*>(q, nullptr));
  std::vector<std::unique_ptr<Path>> storage;

  bool progress = true;
  while (progress) {
    progress = false;
    ++dg.passes;
    dg.failures.clear();
    for (int i = 0; i < q; ++i) {
      for (int j = i + 1; j < q; ++j) {
        if (discarded[i] || discarded[j] || link[i][j]) continue;
        ++dg.pairs_attempted;
        const Vertex v = stars.cores[i], w = stars.cores[j];
        VertexSet a;
        for (Vertex x : stars.s1[i]) {
          if (!used[x]) a.push_back(x);
        }
        VertexMask target(static_cast<std::size_t>(n), 0);
        bool any_target = false;
        for (Vertex x : stars.s1[j]) {
          if (!used[x]) target[x] = any_target = true;
        }
        if (a.empty() || !any_target) {
          dg.failures.push_back({{v, w}, "star exhausted"});
          continue;
        }
        VertexMask blocked = used;
        for (Vertex c : stars.cores) blocked[c] = 1;
        auto mid = shortest_path_masked(g, a, target, &blocked, cfg.path_cap - 2);
        if (!mid) {
          dg.failures.push_back({{v, w}, "no path within cap"});
          continue;
        }
        auto path = std::make_unique<Path>();
        path->vertices.push_back(v);
        path->vertices.insert(path->vertices.end(), mid->vertices.begin(), mid->vertices.end());
        path->vertices.push_back(w);
        for (Vertex x : mid->vertices) {
          if (used[x] || is_core[x]) ++dg.invariant_violations;
          used[x] = 1;
          for (int c : star_of[x]) ++usage[c];
        }
        dg.interior_total += static_cast<long long>(mid->vertices.size());
        ++dg.connections;
        link[i][j] = link[j][i] = path.get();
        storage.push_back(std::move(path));
        progress = true;
        for (int c = 0; c < q; ++c) {
          if (!discarded[c] && usage[c] > cfg.discard_cap) {
            discarded[c] = 1;
            dg.discarded.push_back(stars.cores[c]);
          }
        }
      }
    }
  }

  // Usage counts must match the actual star intersections.
  for (int c = 0; c < q; ++c) {
    int actual = 0;
    for (Vertex x : stars.s1[c]) actual += used[x];
    if (actual != usage[c]) ++dg.invariant_violations;
  }

  std::vector<int> alive;
  for (int i = 0; i < q; ++i) {
    if (!discarded[i]) alive.push_back(i);
  }
  std::vector<std::vector<char>> adj(alive.size(), std::vector<char>(alive.size(), 0));
  for (std::size_t x = 0; x < alive.size(); ++x) {
    for (std::size_t y = 0; y < alive.size(); ++y) adj[x][y] = x != y && link[alive[x]][alive[y]] != nullptr;
  }
  std::vector<int> best = maximum_clique(adj);
  if (static_cast<int>(best.size()) < std::max(cfg.target, 1)) return std::nullopt;

  SubdivisionCertificate cert;
  cert.meta.route = "highdeg";
  for (int x : best) cert.cores.push_back(stars.cores[alive[x]]);
  for (std::size_t x = 0; x < best.size(); ++x) {
    for (std::size_t y = x + 1; y < best.size(); ++y) {
      int i = alive[best[x]], j = alive[best[y]];
      cert.paths.push_back({{stars.cores[i], stars.cores[j]}, *link[i][j]});
    }
  }
  return cert;
}

}  // namespace topoclique
