#include "topoclique/units.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <unordered_map>

#include "topoclique/clique.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/expander.hpp"

namespace topoclique {

VertexSet Hub::b1() const {
  VertexSet out = s1;
  out.push_back(center);
  return normalize(std::move(out));
}

VertexSet Hub::s2() const {
  VertexSet out;
  for (const auto& l : leaves) out.insert(out.end(), l.begin(), l.end());
  return normalize(std::move(out));
}

VertexSet Hub::vertices() const {
  VertexSet out = s2();
  out.insert(out.end(), s1.begin(), s1.end());
  out.push_back(center);
  return normalize(std::move(out));
}

bool check_hub(const Graph& g, const Hub& hub, int h1, int h2, std::string* why) {
  auto bad = [&](std::string msg) {
    if (why) *why = "hub " + std::to_string(hub.center) + ": " + msg;
    return false;
  };
  if (!g.contains(hub.center)) return bad("center out of range");
  if (static_cast<int>(hub.s1.size()) != h1) return bad("first layer has wrong size");
  if (hub.leaves.size() != hub.s1.size()) return bad("leaf sets do not match first layer");
  VertexMask seen(static_cast<std::size_t>(g.num_vertices()), 0);
  seen[hub.center] = 1;
  for (Vertex z : hub.s1) {
    if (!g.contains(z) || !g.has_edge(hub.center, z)) return bad("first-layer vertex " + std::to_string(z) + " not a neighbour");
    if (seen[z]) return bad("vertex " + std::to_string(z) + " repeated");
    seen[z] = 1;
  }
  for (std::size_t i = 0; i < hub.s1.size(); ++i) {
    if (static_cast<int>(hub.leaves[i].size()) != h2) return bad("second layer has wrong size");
    for (Vertex y : hub.leaves[i]) {
      if (!g.contains(y) || !g.has_edge(hub.s1[i], y)) return bad("leaf " + std::to_string(y) + " not adjacent to its parent");
      if (seen[y]) return bad("vertex " + std::to_string(y) + " repeated");
      seen[y] = 1;
    }
  }
  return true;
}

VertexSet Unit::exterior() const {
  VertexSet out;
  for (const auto& h : hubs) {
    auto s = h.s2();
    out.insert(out.end(), s.begin(), s.end());
  }
  return normalize(std::move(out));
}

VertexSet Unit::vertices() const {
  VertexSet out{core};
  for (const auto& h : hubs) {
    auto s = h.vertices();
    out.insert(out.end(), s.begin(), s.end());
  }
  for (const auto& p : spokes) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  return normalize(std::move(out));
}

VertexSet Unit::interior() const {
  VertexSet all = vertices(), ext = exterior(), out;
  std::set_difference(all.begin(), all.end(), ext.begin(), ext.end(), std::back_inserter(out));
  return out;
}

bool check_unit(const Graph& g, const Unit& unit, int h0, int h1, int h2, int h3, std::string* why) {
  auto bad = [&](std::string msg) {
    if (why) *why = "unit " + std::to_string(unit.core) + ": " + msg;
    return false;
  };
  if (static_cast<int>(unit.hubs.size()) != h0 || unit.spokes.size() != unit.hubs.size()) {
    return bad("expected " + std::to_string(h0) + " hubs with one spoke each");
  }
  const int n = g.num_vertices();
  std::vector<int> hub_owner(static_cast<std::size_t>(n), -1);
  for (std::size_t j = 0; j < unit.hubs.size(); ++j) {
    std::string inner;
    if (!check_hub(g, unit.hubs[j], h1, h2, &inner)) return bad(inner);
    for (Vertex x : unit.hubs[j].vertices()) {
      if (hub_owner[x] >= 0) return bad("hubs share vertex " + std::to_string(x));
      hub_owner[x] = static_cast<int>(j);
    }
  }
  if (unit.core >= 0 && unit.core < n && hub_owner[unit.core] >= 0) return bad("core lies in a hub");
  VertexMask on_spoke(static_cast<std::size_t>(n), 0);
  for (std::size_t j = 0; j < unit.spokes.size(); ++j) {
    const Path& p = unit.spokes[j];
    if (!is_simple_path(g, p)) return bad("spoke " + std::to_string(j) + " is not a path");
    if (p.front() != unit.core || p.back() != unit.hubs[j].center) return bad("spoke " + std::to_string(j) + " has wrong ends");
    if (static_cast<int>(p.length()) > h3) return bad("spoke " + std::to_string(j) + " longer than " + std::to_string(h3));
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
      Vertex x = p.vertices[i];
      if (on_spoke[x]) return bad("spokes meet at " + std::to_string(x));
      on_spoke[x] = 1;
      if (i + 1 < p.vertices.size() && hub_owner[x] >= 0) return bad("spoke passes through hub vertex " + std::to_string(x));
    }
  }
  return true;
}

namespace {

// Batch-strips vertices below half the average degree of the surviving set
// until stable. Removing such vertices never lowers the average.
VertexMask refine(const Graph& g, const VertexMask& blocked) {
  const int n = g.num_vertices();
  VertexMask alive(static_cast<std::size_t>(n), 0);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) alive[v] = !blocked[v];
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Vertex u : g.neighbors(v)) deg[v] += alive[u];
  }
  while (true) {
    long long count = 0, twice_edges = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v]) {
        ++count;
        twice_edges += deg[v];
      }
    }
    if (count == 0) break;
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < n; ++v) {
      // deg < avg/2  <=>  2 deg count < twice_edges
      if (alive[v] && 2LL * deg[v] * count < twice_edges) drop.push_back(v);
    }
    if (drop.empty()) break;
    for (Vertex v : drop) alive[v] = 0;
    for (Vertex v : drop) {
      for (Vertex u : g.neighbors(v)) {
        if (alive[u]) --deg[u];
      }
    }
  }
  return alive;
}

std::optional<Hub> grow_hub(const Graph& g, Vertex v, const VertexMask& allowed, int h1, int h2) {
  Hub hub;
  hub.center = v;
  VertexMask taken(static_cast<std::size_t>(g.num_vertices()), 0);
  VertexMask near(static_cast<std::size_t>(g.num_vertices()), 0);
  taken[v] = 1;
  for (Vertex z : g.neighbors(v)) near[z] = 1;
  for (Vertex z : g.neighbors(v)) {
    if (static_cast<int>(hub.s1.size()) == h1) break;
    if (!allowed[z] || taken[z]) continue;
    VertexSet leaves;
    // Leaves outside N(v) first, so fewer potential centers are spent.
    for (int pass = 0; pass < 2 && static_cast<int>(leaves.size()) < h2; ++pass) {
      for (Vertex y : g.neighbors(z)) {
        if (static_cast<int>(leaves.size()) == h2) break;
        if (!allowed[y] || taken[y] || y == z || (pass == 0) == (near[y] != 0)) continue;
        leaves.push_back(y);
      }
    }
    if (static_cast<int>(leaves.size()) < h2) continue;
    taken[z] = 1;
    for (Vertex y : leaves) taken[y] = 1;
    hub.s1.push_back(z);
    hub.leaves.push_back(normalize(std::move(leaves)));
  }
  if (static_cast<int>(hub.s1.size()) < h1) return std::nullopt;
  return hub;
}

}  // namespace

std::vector<Hub> find_disjoint_hubs(const Graph& g, const VertexSet& w, int h1, int h2, int count,
                                    HubSearchReport* report) {
  if (h1 < 1 || h2 < 0) throw InputError("hub profile needs h1 >= 1 and h2 >= 0");
  HubSearchReport local;
  HubSearchReport& rep = report ? *report : local;
  rep = HubSearchReport{};
  VertexMask blocked = to_mask(g.num_vertices(), w);
  std::vector<Hub> hubs;
  while (static_cast<int>(hubs.size()) < count) {
    VertexMask allowed = refine(g, blocked);
    rep.refined_size = static_cast<int>(std::count(allowed.begin(), allowed.end(), 1));
    // Centres by refined degree, highest first, then lowest id.
    std::vector<std::pair<int, Vertex>> order;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!allowed[v]) continue;
      int deg = 0;
      for (Vertex z : g.neighbors(v)) deg += allowed[z] ? 1 : 0;
      order.push_back({-deg, v});
    }
    std::sort(order.begin(), order.end());
    std::optional<Hub> hub;
    for (std::size_t k = 0; k < order.size() && !hub; ++k) hub = grow_hub(g, order[k].second, allowed, h1, h2);
    if (!hub) {
      rep.reason = "no further center admits an (" + std::to_string(h1) + "," + std::to_string(h2) + ")-hub";
      break;
    }
    for (Vertex x : hub->vertices()) blocked[x] = 1;
    hubs.push_back(std::move(*hub));
  }
  rep.found = static_cast<int>(hubs.size());
  return hubs;
}

namespace {

int at_least_one(double x) {
  if (!(x < static_cast<double>(INT_MAX / 2))) return INT_MAX / 2;
  return std::max(1, static_cast<int>(std::ceil(x)));
}

}  // namespace

UnitsConfig derive_units(const UnitsConfig& cfg, double d, int n) {
  UnitsConfig out = cfg;
  auto fill = [](int& field, int value) {
    if (field <= 0) field = value;
  };
  if (cfg.mode == ParamMode::paper) {
    const double exponent = static_cast<double>(cfg.s) / (cfg.s - 1);
    const double ell = cfg.c0 * std::pow(d, exponent / 2.0);
    const double m = std::max(1.0, std::log(15.0 * n / (cfg.eps2 * std::pow(d, exponent))));
    const double cl = cfg.c * ell;
    fill(out.h0, at_least_one(cl));
    fill(out.h1, at_least_one(m * m));
    fill(out.h2, at_least_one(cl));
    fill(out.w_h1, at_least_one(2 * cl));
    fill(out.w_h2, at_least_one(2 * cl));
    fill(out.u_h1, at_least_one(2 * m * m));
    fill(out.u_h2, at_least_one(2 * cl));
    fill(out.w_count, at_least_one(m * m * m));
    fill(out.u_count, at_least_one(ell * m * m * m));
    fill(out.q_path_cap, at_least_one(2 * m));
    fill(out.r_path_cap, at_least_one(6 * m));
    fill(out.r4_cap, at_least_one(ell * m));
    fill(out.units_wanted, out.h0 + 1);
  } else {
    const int base = std::max(1, static_cast<int>(std::floor(d / 2.0)));
    fill(out.h0, base);
    fill(out.h1, 1);
    fill(out.h2, 1);
    fill(out.w_h1, out.h0);
    fill(out.w_h2, 1);
    fill(out.u_h1, out.h1 + 1);
    fill(out.u_h2, out.h2);
    fill(out.w_count, 3);
    fill(out.u_count, 3 * out.h0);
    fill(out.q_path_cap, std::max(n, 1));
    fill(out.r_path_cap, std::max(n, 1));
    fill(out.r4_cap, std::max(n, 1));
    fill(out.units_wanted, out.h0 + 1);
  }
  return out;
}

int spoke_cap(const UnitsConfig& cfg) { return cfg.q_path_cap; }

namespace {

struct QConnection {
  int u_index;
  Path path;  // w ... u, the spoke
};

std::optional<Unit> algorithm_q(const Graph& g, const std::vector<Hub>& w_hubs, const std::vector<Hub>& u_hubs,
                                const UnitsConfig& cfg, VertexMask blocked_static, int* best_tally) {
  const int n = g.num_vertices();
  for (const auto& h : w_hubs) {
    for (Vertex x : h.b1()) blocked_static[x] = 1;
  }
  for (const auto& h : u_hubs) {
    for (Vertex x : h.vertices()) blocked_static[x] = 1;
  }
  VertexMask used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<QConnection>> conns(w_hubs.size());
  std::vector<std::vector<char>> linked(w_hubs.size(), std::vector<char>(u_hubs.size(), 0));
  int chosen = -1;
  bool progress = true;
  while (progress && chosen < 0) {
    progress = false;
    for (std::size_t i = 0; i < w_hubs.size(); ++i) {
      if (static_cast<int>(conns[i].size()) >= cfg.h0) continue;
      const Vertex w = w_hubs[i].center;
      for (std::size_t j = 0; j < u_hubs.size(); ++j) {
        if (linked[i][j]) continue;
        // Centre to centre. A shortest path meets each endpoint's B1 in at
        // most the centre and one first-layer vertex.
        const Vertex u = u_hubs[j].center;
        VertexMask blocked = blocked_static;
        for (Vertex x = 0; x < n; ++x) blocked[x] = blocked[x] || used[x];
        blocked[w] = blocked[u] = 0;
        for (Vertex x : w_hubs[i].s1) blocked[x] = used[x];
        for (Vertex y : u_hubs[j].s1) blocked[y] = used[y];
        VertexMask target(static_cast<std::size_t>(n), 0);
        target[u] = 1;
        const VertexSet source{w};
        auto p = shortest_path_masked(g, source, target, &blocked, cfg.q_path_cap);
        if (!p) continue;
        for (std::size_t k = 1; k + 1 < p->vertices.size(); ++k) used[p->vertices[k]] = 1;
        linked[i][j] = 1;
        conns[i].push_back({static_cast<int>(j), std::move(*p)});
        progress = true;
        break;
      }
    }
    for (std::size_t i = 0; i < w_hubs.size(); ++i) {
      *best_tally = std::max(*best_tally, static_cast<int>(conns[i].size()));
      if (chosen < 0 && static_cast<int>(conns[i].size()) >= cfg.h0) chosen = static_cast<int>(i);
    }
  }
  if (chosen < 0) return std::nullopt;

  // Only the chosen core's spokes survive; other connections are dropped.
  VertexMask spoke(static_cast<std::size_t>(n), 0);
  for (const auto& c : conns[chosen]) {
    for (Vertex x : c.path.vertices) spoke[x] = 1;
  }
  Unit unit;
  unit.core = w_hubs[chosen].center;
  for (const auto& c : conns[chosen]) {
    if (static_cast<int>(unit.hubs.size()) == cfg.h0) break;
    const Hub& big = u_hubs[c.u_index];
    Hub small;
    small.center = big.center;
    for (std::size_t k = 0; k < big.s1.size() && static_cast<int>(small.s1.size()) < cfg.h1; ++k) {
      if (spoke[big.s1[k]]) continue;
      VertexSet leaves;
      for (Vertex y : big.leaves[k]) {
        if (static_cast<int>(leaves.size()) < cfg.h2 && !spoke[y]) leaves.push_back(y);
      }
      if (static_cast<int>(leaves.size()) < cfg.h2) continue;
      small.s1.push_back(big.s1[k]);
      small.leaves.push_back(std::move(leaves));
    }
    if (static_cast<int>(small.s1.size()) < cfg.h1) continue;
    // Keep s1 sorted with its leaves aligned.
    std::vector<std::size_t> order(small.s1.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return small.s1[a] < small.s1[b]; });
    Hub sorted;
    sorted.center = small.center;
    for (std::size_t k : order) {
      sorted.s1.push_back(small.s1[k]);
      sorted.leaves.push_back(small.leaves[k]);
    }
    unit.hubs.push_back(std::move(sorted));
    unit.spokes.push_back(c.path);
  }
  if (static_cast<int>(unit.hubs.size()) < cfg.h0) return std::nullopt;
  return unit;
}

}  // namespace

std::vector<Unit> build_units(const Graph& g, const UnitsConfig& cfg, UnitBuildReport* report) {
  UnitBuildReport local;
  UnitBuildReport& rep = report ? *report : local;
  rep = UnitBuildReport{};
  if (cfg.h0 < 1 || cfg.h1 < 1 || cfg.h2 < 0 || cfg.w_h1 < cfg.h0 || cfg.u_h1 < cfg.h1 + 1 || cfg.u_h2 < cfg.h2) {
    throw InputError("unit profile inconsistent: need w_h1 >= h0, u_h1 > h1, u_h2 >= h2");
  }
  const int n = g.num_vertices();
  std::vector<Unit> units;
  VertexMask taken(static_cast<std::size_t>(n), 0);
  while (static_cast<int>(units.size()) < cfg.units_wanted) {
    VertexSet w;
    for (Vertex x = 0; x < n; ++x) {
      if (taken[x]) w.push_back(x);
    }
    std::vector<Hub> w_hubs = find_disjoint_hubs(g, w, cfg.w_h1, cfg.w_h2, cfg.w_count);
    VertexSet w2 = w;
    for (const auto& h : w_hubs) {
      auto vs = h.vertices();
      w2.insert(w2.end(), vs.begin(), vs.end());
    }
    std::vector<Hub> u_hubs = find_disjoint_hubs(g, normalize(std::move(w2)), cfg.u_h1, cfg.u_h2, cfg.u_count);
    auto keep_valid = [&](std::vector<Hub>& hubs, int h1, int h2) {
      std::vector<Hub> ok;
      for (auto& h : hubs) {
        if (check_hub(g, h, h1, h2)) {
          ok.push_back(std::move(h));
        } else {
          ++rep.hub_checks_failed;
        }
      }
      hubs = std::move(ok);
    };
    keep_valid(w_hubs, cfg.w_h1, cfg.w_h2);
    keep_valid(u_hubs, cfg.u_h1, cfg.u_h2);
    if (w_hubs.empty() || static_cast<int>(u_hubs.size()) < cfg.h0) {
      rep.reason = "hub harvest too small (" + std::to_string(w_hubs.size()) + " core hubs, " +
                   std::to_string(u_hubs.size()) + " unit hubs)";
      break;
    }
    int tally = 0;
    auto unit = algorithm_q(g, w_hubs, u_hubs, cfg, taken, &tally);
    rep.best_tally.push_back(tally);
    if (!unit) {
      rep.reason = "no core hub reached " + std::to_string(cfg.h0) + " connections (best " + std::to_string(tally) + ")";
      break;
    }
    std::string why;
    if (!check_unit(g, *unit, cfg.h0, cfg.h1, cfg.h2, spoke_cap(cfg), &why)) {
      throw ConstructionError("assembled unit failed its check: " + why);
    }
    for (Vertex x : unit->vertices()) taken[x] = 1;
    units.push_back(std::move(*unit));
  }
  rep.units = static_cast<int>(units.size());
  return units;
}

Path splice_repeats(const Path& p) {
  Path out;
  std::unordered_map<Vertex, std::size_t> at;
  for (Vertex v : p.vertices) {
    auto it = at.find(v);
    if (it != at.end()) {
      for (std::size_t k = it->second + 1; k < out.vertices.size(); ++k) at.erase(out.vertices[k]);
      out.vertices.resize(it->second + 1);
      continue;
    }
    at[v] = out.vertices.size();
    out.vertices.push_back(v);
  }
  return out;
}

std::optional<SubdivisionCertificate> connect_units(const Graph& g, const std::vector<Unit>& units,
                                                    const UnitsConfig& cfg, ConnectReport* report) {
  ConnectReport local;
  ConnectReport& rep = report ? *report : local;
  rep = ConnectReport{};
  if (units.empty()) return std::nullopt;
  const int n = g.num_vertices();
  const int q = static_cast<int>(units.size());

  // Interiors (cores, spokes, first layers) are off limits to connections
  // except for the first-layer vertex a connection starts or ends at.
  VertexMask blocked_static(static_cast<std::size_t>(n), 0);
  std::vector<int> interior_of(static_cast<std::size_t>(n), -1);
  struct HubRef {
    int unit;
    int hub;
  };
  std::vector<HubRef> hub_at(static_cast<std::size_t>(n), HubRef{-1, -1});
  for (int a = 0; a < q; ++a) {
    for (Vertex x : units[a].interior()) {
      blocked_static[x] = 1;
      interior_of[x] = a;
    }
    for (int h = 0; h < static_cast<int>(units[a].hubs.size()); ++h) {
      for (Vertex z : units[a].hubs[h].s1) hub_at[z] = {a, h};
    }
  }

  VertexMask used(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<char>> hub_used(q);
  for (int a = 0; a < q; ++a) hub_used[a].assign(units[a].hubs.size(), 0);
  std::vector<int> interior_usage(static_cast<std::size_t>(q), 0);
  std::vector<char> discarded(static_cast<std::size_t>(q), 0);
  std::vector<std::vector<std::optional<Path>>> link(q, std::vector<std::optional<Path>>(q));

  auto open_first_layer = [&](int a, VertexSet& out) {
    for (int h = 0; h < static_cast<int>(units[a].hubs.size()); ++h) {
      if (hub_used[a][h]) continue;
      for (Vertex z : units[a].hubs[h].s1) {
        if (!used[z]) out.push_back(z);
      }
    }
  };

  bool progress = true;
  while (progress) {
    progress = false;
    ++rep.passes;
    for (int a = 0; a < q; ++a) {
      for (int b = a + 1; b < q; ++b) {
        if (discarded[a] || discarded[b] || link[a][b]) continue;
        VertexSet sources, ends;
        open_first_layer(a, sources);
        open_first_layer(b, ends);
        if (sources.empty() || ends.empty()) continue;
        VertexMask targets = to_mask(n, ends);
        VertexMask blocked = blocked_static;
        for (Vertex x = 0; x < n; ++x) blocked[x] = blocked[x] || used[x];
        for (Vertex x : sources) blocked[x] = 0;
        for (Vertex x : ends) blocked[x] = 0;
        auto c = shortest_path_masked(g, sources, targets, &blocked, cfg.r_path_cap);
        if (!c) continue;
        HubRef from = hub_at[c->front()], to = hub_at[c->back()];
        if (from.unit != a || to.unit != b) {
          ++rep.rule_violations;
          continue;
        }
        for (Vertex x : c->vertices) {
          used[x] = 1;
          if (interior_of[x] >= 0) ++interior_usage[interior_of[x]];
        }
        hub_used[a][from.hub] = hub_used[b][to.hub] = 1;
        rep.connection_vertices += static_cast<long long>(c->vertices.size());
        ++rep.connections;
        Path full = units[a].spokes[from.hub];
        full.vertices.insert(full.vertices.end(), c->vertices.begin(), c->vertices.end());
        const auto& back = units[b].spokes[to.hub].vertices;
        full.vertices.insert(full.vertices.end(), back.rbegin(), back.rend());
        full = splice_repeats(full);
        if (!is_simple_path(g, full) || full.front() != units[a].core || full.back() != units[b].core) {
          ++rep.rule_violations;
        } else {
          link[a][b] = std::move(full);
        }
        progress = true;
        for (int x = 0; x < q; ++x) {
          if (!discarded[x] && interior_usage[x] > cfg.r4_cap) {
            discarded[x] = 1;
            rep.discarded.push_back(units[x].core);
          }
        }
      }
    }
  }

  std::vector<int> alive;
  for (int a = 0; a < q; ++a) {
    if (!discarded[a]) alive.push_back(a);
  }
  if (alive.empty()) return std::nullopt;
  std::vector<std::vector<char>> adj(alive.size(), std::vector<char>(alive.size(), 0));
  for (std::size_t x = 0; x < alive.size(); ++x) {
    for (std::size_t y = x + 1; y < alive.size(); ++y) {
      adj[x][y] = adj[y][x] = link[alive[x]][alive[y]].has_value();
    }
  }
  std::vector<int> best = maximum_clique(adj);
  SubdivisionCertificate cert;
  cert.meta.route = "units";
  for (int x : best) cert.cores.push_back(units[alive[x]].core);
  for (std::size_t x = 0; x < best.size(); ++x) {
    for (std::size_t y = x + 1; y < best.size(); ++y) {
      int a = alive[best[x]], b = alive[best[y]];
      cert.paths.push_back({{units[a].core, units[b].core}, *link[a][b]});
    }
  }
  return cert;
}

}  // namespace topoclique
