#include "topoclique/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "topoclique/errors.hpp"

namespace topoclique {

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::none: return "none";
    case FailureKind::vertex_out_of_range: return "vertex_out_of_range";
    case FailureKind::duplicate_core: return "duplicate_core";
    case FailureKind::foreign_pair: return "foreign_pair";
    case FailureKind::duplicate_pair: return "duplicate_pair";
    case FailureKind::missing_pair: return "missing_pair";
    case FailureKind::not_a_path: return "not_a_path";
    case FailureKind::bad_endpoints: return "bad_endpoints";
    case FailureKind::core_in_interior: return "core_in_interior";
    case FailureKind::shared_interior: return "shared_interior";
  }
  return "unknown";
}

namespace {

std::string pair_text(CorePair p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

Verdict fail(FailureKind kind, std::optional<Vertex> v, std::optional<CorePair> p, std::string msg) {
  Verdict out;
  out.kind = kind;
  out.vertex = v;
  out.pair = p;
  out.message = std::move(msg);
  return out;
}

CorePair canonical(CorePair p) { return p.first < p.second ? p : CorePair{p.second, p.first}; }

}  // namespace

Verdict verify_subdivision(const Graph& g, const SubdivisionCertificate& cert) {
  const int n = g.num_vertices();
  VertexMask is_core(static_cast<std::size_t>(n), 0);
  for (Vertex c : cert.cores) {
    if (!g.contains(c)) return fail(FailureKind::vertex_out_of_range, c, {}, "core " + std::to_string(c) + " is not a vertex");
    if (is_core[c]) return fail(FailureKind::duplicate_core, c, {}, "core " + std::to_string(c) + " listed twice");
    is_core[c] = 1;
  }

  std::set<CorePair> seen;
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t idx = 0; idx < cert.paths.size(); ++idx) {
    const CorePair pair = cert.paths[idx].pair;
    const auto& vs = cert.paths[idx].path.vertices;
    const std::string where = "path for pair " + pair_text(pair);
    if (!g.contains(pair.first) || !g.contains(pair.second) || !is_core[pair.first] || !is_core[pair.second] ||
        pair.first == pair.second) {
      return fail(FailureKind::foreign_pair, {}, pair, where + " does not join two distinct cores");
    }
    if (!seen.insert(canonical(pair)).second) {
      return fail(FailureKind::duplicate_pair, {}, pair, "pair " + pair_text(pair) + " has more than one path");
    }
    for (Vertex v : vs) {
      if (!g.contains(v)) return fail(FailureKind::vertex_out_of_range, v, pair, where + " uses non-vertex " + std::to_string(v));
    }
    if (vs.empty()) return fail(FailureKind::not_a_path, {}, pair, where + " is empty");
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      if (!g.has_edge(vs[i], vs[i + 1])) {
        return fail(FailureKind::not_a_path, vs[i + 1], pair,
                    where + " steps along non-edge " + std::to_string(vs[i]) + "-" + std::to_string(vs[i + 1]));
      }
    }
    {
      std::vector<Vertex> sorted = vs;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        return fail(FailureKind::not_a_path, *dup, pair, where + " repeats vertex " + std::to_string(*dup));
      }
    }
    if (canonical({vs.front(), vs.back()}) != canonical(pair)) {
      return fail(FailureKind::bad_endpoints, {}, pair, where + " has endpoints " + pair_text({vs.front(), vs.back()}));
    }
    for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
      Vertex v = vs[i];
      if (is_core[v]) {
        return fail(FailureKind::core_in_interior, v, pair, where + " passes through core " + std::to_string(v));
      }
      if (owner[v] >= 0) {
        return fail(FailureKind::shared_interior, v, pair,
                    "vertex " + std::to_string(v) + " is interior to the paths for " +
                        pair_text(cert.paths[static_cast<std::size_t>(owner[v])].pair) + " and " + pair_text(pair));
      }
      owner[v] = static_cast<int>(idx);
    }
  }

  for (std::size_t i = 0; i < cert.cores.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.cores.size(); ++j) {
      CorePair p{cert.cores[i], cert.cores[j]};
      if (!seen.count(canonical(p))) return fail(FailureKind::missing_pair, {}, p, "pair " + pair_text(p) + " has no path");
    }
  }

  Verdict ok;
  ok.valid = true;
  ok.order = cert.order();
  return ok;
}

namespace {

// Backtracking search for internally disjoint paths joining every pair of
// a fixed core set. Interiors may only use non-core vertices.
class PathSystemSearch {
 public:
  PathSystemSearch(const Graph& g, const std::vector<Vertex>& cores) : g_(g), blocked_(g.num_vertices(), 0) {
    for (Vertex c : cores) blocked_[c] = 1;
    for (std::size_t i = 0; i < cores.size(); ++i) {
      for (std::size_t j = i + 1; j < cores.size(); ++j) {
        CorePair p{cores[i], cores[j]};
        if (g.has_edge(p.first, p.second)) {
          found_.push_back({p, Path{{p.first, p.second}}});
        } else {
          pending_.push_back(p);
        }
      }
    }
    free_ = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) free_ += !blocked_[v];
  }

  bool run() {
    if (static_cast<int>(pending_.size()) > free_) return false;
    return solve();
  }

  std::vector<CertificatePath> paths() const {
    auto out = found_;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.pair < b.pair; });
    return out;
  }

 private:
  // Simple a-b paths whose interiors avoid blocked_, sorted by length then
  // lexicographically.
  std::vector<Path> routes(CorePair p) const {
    std::vector<Path> out;
    std::vector<Vertex> stack{p.first};
    VertexMask on(blocked_.size(), 0);
    std::function<void(Vertex)> dfs = [&](Vertex v) {
      for (Vertex u : g_.neighbors(v)) {
        if (u == p.second) {
          stack.push_back(u);
          out.push_back(Path{stack});
          stack.pop_back();
        } else if (!blocked_[u] && !on[u]) {
          on[u] = 1;
          stack.push_back(u);
          dfs(u);
          stack.pop_back();
          on[u] = 0;
        }
      }
    };
    dfs(p.first);
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
      if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
      return a.vertices < b.vertices;
    });
    return out;
  }

  bool solve() {
    if (pending_.empty()) return true;
    std::size_t best = 0;
    std::vector<Path> best_routes;
    for (std::size_t i = 0; i < pending_.size(); ++i) {
      auto r = routes(pending_[i]);
      if (r.empty()) return false;
      if (i == 0 || r.size() < best_routes.size()) {
        best = i;
        best_routes = std::move(r);
      }
    }
    CorePair pair = pending_[best];
    pending_.erase(pending_.begin() + static_cast<std::ptrdiff_t>(best));
    for (const Path& path : best_routes) {
      for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) blocked_[path.vertices[i]] = 1;
      found_.push_back({pair, path});
      if (solve()) return true;
      found_.pop_back();
      for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) blocked_[path.vertices[i]] = 0;
    }
    pending_.insert(pending_.begin() + static_cast<std::ptrdiff_t>(best), pair);
    return false;
  }

  const Graph& g_;
  VertexMask blocked_;
  std::vector<CorePair> pending_;
  std::vector<CertificatePath> found_;
  int free_ = 0;
};

// Visits t-subsets of `pool` in lexicographic order until `visit` says stop.
bool for_each_subset(const std::vector<Vertex>& pool, int t, const std::function<bool(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == t) return visit(chosen);
    for (std::size_t i = from; i + (t - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

OracleResult oracle_max_subdivision(const Graph& g, int limit_n) {
  const int n = g.num_vertices();
  if (n > limit_n) {
    throw SizeRefused("oracle refused: " + std::to_string(n) + " vertices exceeds limit " + std::to_string(limit_n));
  }
  OracleResult result;
  result.witness.meta.route = "oracle";
  if (n == 0) return result;

  const auto m = static_cast<long long>(g.num_edges());
  int upper = 1;
  for (int t = 2; t <= n; ++t) {
    int eligible = 0;
    for (Vertex v = 0; v < n; ++v) eligible += g.degree(v) >= t - 1;
    if (static_cast<long long>(t) * (t - 1) / 2 <= m && eligible >= t) upper = t;
  }

  for (int t = upper; t >= 2; --t) {
    std::vector<Vertex> pool;
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) >= t - 1) pool.push_back(v);
    }
    bool done = for_each_subset(pool, t, [&](const std::vector<Vertex>& cores) {
      PathSystemSearch search(g, cores);
      if (!search.run()) return false;
      result.order = t;
      result.witness.cores = cores;
      result.witness.paths = search.paths();
      return true;
    });
    if (done) return result;
  }
  result.order = 1;
  result.witness.cores = {0};
  return result;
}

}  // namespace topoclique
