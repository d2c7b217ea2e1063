#include "topoclique/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

#include "topoclique/errors.hpp"
#include "topoclique/random.hpp"

namespace topoclique {

void ExpanderParams::validate() const {
  if (!(eps1 > 0.0 && eps1 < 1.0)) throw InputError("eps1 must lie in (0,1)");
  if (!(k > 0.0)) throw InputError("k must be positive");
}

std::string to_string(CheckMode mode) { return mode == CheckMode::exact ? "exact" : "sampled"; }

double epsilon(double x, const ExpanderParams& params) {
  if (x < params.k / 5.0) return 0.0;
  double l = std::log(15.0 * x / params.k);
  return params.eps1 / (l * l);
}

double diam_bound(long long n, const ExpanderParams& params) {
  double l = std::log(15.0 * static_cast<double>(n) / params.k);
  return 2.0 / params.eps1 * l * l * l;
}

double epsilon_integral(const ExpanderParams& params) {
  double lower = std::max(1.0, params.k / 5.0);
  return params.eps1 / std::log(15.0 * lower / params.k);
}

SizeRange expansion_size_range(int n, const ExpanderParams& params) {
  SizeRange r;
  r.lo = std::max(1, static_cast<int>(std::ceil(params.k / 2.0)));
  r.hi = n / 2;
  return r;
}

namespace {

bool below_expansion(int boundary, int size, const ExpanderParams& params) {
  return static_cast<double>(boundary) < epsilon(size, params) * size;
}

// Bitmask adjacency for exhaustive enumeration.
std::vector<std::uint64_t> bit_adjacency(const Graph& g) {
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbors(v)) bits[v] |= std::uint64_t{1} << u;
  }
  return bits;
}

VertexSet members(std::uint64_t set) {
  VertexSet out;
  while (set) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

void check_exact_size(const Graph& g, int threshold) {
  if (threshold > 62) threshold = 62;
  if (g.num_vertices() > threshold) {
    throw SizeRefused("exact expansion check refused: " + std::to_string(g.num_vertices()) +
                      " vertices exceeds threshold " + std::to_string(threshold) + "; use sampled mode");
  }
}

// Preorder walk over subsets as sorted sequences, i.e. lexicographic order.
// The visitor returns true to stop.
template <typename Visit>
bool walk_subsets(const std::vector<std::uint64_t>& adj, int start, std::uint64_t set, std::uint64_t reach,
                  int size, int max_size, Visit& visit) {
  const int n = static_cast<int>(adj.size());
  for (int v = start; v < n; ++v) {
    std::uint64_t next = set | (std::uint64_t{1} << v);
    std::uint64_t next_reach = reach | adj[v];
    if (visit(next, next_reach & ~next, size + 1)) return true;
    if (size + 1 < max_size && walk_subsets(adj, v + 1, next, next_reach, size + 1, max_size, visit)) return true;
  }
  return false;
}

}  // namespace

bool violates_expansion(const Graph& g, std::span<const Vertex> x, const ExpanderParams& params) {
  SizeRange range = expansion_size_range(g.num_vertices(), params);
  VertexSet set = normalize(VertexSet(x.begin(), x.end()));
  int size = static_cast<int>(set.size());
  if (size < range.lo || size > range.hi) return false;
  int boundary = static_cast<int>(external_neighborhood(g, set).size());
  return below_expansion(boundary, size, params);
}

ExpansionReport verify_expander_exact(const Graph& g, const ExpanderParams& params, int threshold) {
  params.validate();
  check_exact_size(g, threshold);
  ExpansionReport report;
  report.mode = CheckMode::exact;
  SizeRange range = expansion_size_range(g.num_vertices(), params);
  if (range.empty()) {
    report.vacuous = true;
    return report;
  }
  auto adj = bit_adjacency(g);
  std::uint64_t found = 0;
  auto visit = [&](std::uint64_t set, std::uint64_t boundary, int size) {
    if (size < range.lo) return false;
    if (below_expansion(std::popcount(boundary), size, params)) {
      found = set;
      return true;
    }
    return false;
  };
  if (walk_subsets(adj, 0, 0, 0, 0, range.hi, visit)) {
    report.is_expander = false;
    report.witness = members(found);
  }
  return report;
}

double max_certified_eps1(const Graph& g, double k, int threshold) {
  check_exact_size(g, threshold);
  ExpanderParams shape{0.5, k};
  SizeRange range = expansion_size_range(g.num_vertices(), shape);
  double best = std::numeric_limits<double>::infinity();
  if (range.empty()) return best;
  auto adj = bit_adjacency(g);
  auto visit = [&](std::uint64_t, std::uint64_t boundary, int size) {
    if (size < range.lo) return false;
    double l = std::log(15.0 * size / k);
    best = std::min(best, std::popcount(boundary) * l * l / size);
    return false;
  };
  walk_subsets(adj, 0, 0, 0, 0, range.hi, visit);
  return best;
}

namespace {

// Grows X one vertex at a time, tracking |N(X)| incrementally.
class GrowingSet {
 public:
  explicit GrowingSet(const Graph& g) : g_(g), in_(g.num_vertices(), 0), touch_(g.num_vertices(), 0) {}

  void add(Vertex v) {
    in_[v] = 1;
    members_.push_back(v);
    if (touch_[v] > 0) --boundary_;
    for (Vertex u : g_.neighbors(v)) {
      if (!in_[u] && touch_[u] == 0) ++boundary_;
      ++touch_[u];
    }
  }
  bool contains(Vertex v) const { return in_[v]; }
  int size() const { return static_cast<int>(members_.size()); }
  int boundary() const { return boundary_; }
  VertexSet sorted() const { return normalize(members_); }

 private:
  const Graph& g_;
  std::vector<char> in_;
  std::vector<int> touch_;
  std::vector<Vertex> members_;
  int boundary_ = 0;
};

}  // namespace

ExpansionReport verify_expander_sampled(const Graph& g, const ExpanderParams& params, int trials,
                                        std::uint64_t seed) {
  params.validate();
  if (trials < 1) throw InputError("sampled expansion check needs at least one trial");
  ExpansionReport report;
  report.mode = CheckMode::sampled;
  const int n = g.num_vertices();
  SizeRange range = expansion_size_range(n, params);
  if (range.empty()) {
    report.vacuous = true;
    return report;
  }
  Rng rng(seed);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int trial = 0; trial < trials; ++trial) {
    int target = rng.between(range.lo, range.hi);
    GrowingSet x(g);
    if (trial % 2 == 0) {
      // BFS from a random seed; every prefix is a connected set.
      std::deque<Vertex> queue{static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)))};
      std::vector<char> queued(static_cast<std::size_t>(n), 0);
      queued[queue.front()] = 1;
      while (!queue.empty() && x.size() < range.hi) {
        Vertex v = queue.front();
        queue.pop_front();
        x.add(v);
        if (x.size() >= range.lo && below_expansion(x.boundary(), x.size(), params)) {
          report.is_expander = false;
          report.witness = x.sorted();
          return report;
        }
        for (Vertex u : g.neighbors(v)) {
          if (!queued[u]) {
            queued[u] = 1;
            queue.push_back(u);
          }
        }
      }
    } else {
      std::iota(order.begin(), order.end(), 0);
      for (int i = 0; i < target; ++i) {
        std::size_t j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
        std::swap(order[i], order[j]);
        x.add(order[i]);
      }
      if (below_expansion(x.boundary(), x.size(), params)) {
        report.is_expander = false;
        report.witness = x.sorted();
        return report;
      }
    }
  }
  return report;
}

namespace {

Subgraph compose(const Subgraph& outer, const Subgraph& inner, int root_n) {
  Subgraph out;
  out.graph = inner.graph;
  out.to_parent.reserve(inner.to_parent.size());
  out.from_parent.assign(static_cast<std::size_t>(root_n), -1);
  for (std::size_t i = 0; i < inner.to_parent.size(); ++i) {
    Vertex root = outer.parent_of(inner.parent_of(static_cast<Vertex>(i)));
    out.to_parent.push_back(root);
    out.from_parent[root] = static_cast<Vertex>(i);
  }
  return out;
}

// Removes, one at a time, the lowest-id vertex of degree < d/2. Each removal
// keeps the average degree from decreasing.
Subgraph strip_low_degree(const Graph& g, int* stripped) {
  const int n = g.num_vertices();
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::int64_t alive_n = n;
  std::int64_t twice_m = 2 * static_cast<std::int64_t>(g.num_edges());
  bool changed = true;
  while (changed && alive_n > 0) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      // deg < d/2  <=>  2 deg n < 2m
      if (alive[v] && 2 * deg[v] * alive_n < twice_m) {
        alive[v] = 0;
        --alive_n;
        twice_m -= 2 * deg[v];
        for (Vertex u : g.neighbors(v)) {
          if (alive[u]) --deg[u];
        }
        ++*stripped;
        changed = true;
        break;
      }
    }
  }
  VertexSet keep;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

}  // namespace

ExtractedExpander extract_expander(const Graph& g, const ExpanderParams& params, const ExtractOptions& options) {
  params.validate();
  const Rational floor_degree = average_degree(g) / Rational(2);
  ExtractedExpander out;
  VertexSet all(static_cast<std::size_t>(g.num_vertices()));
  std::iota(all.begin(), all.end(), 0);
  Subgraph current = induced_subgraph(g, all);

  std::optional<VertexSet> last_witness;
  for (;;) {
    current = compose(current, strip_low_degree(current.graph, &out.stripped), g.num_vertices());
    const Graph& h = current.graph;
    bool exact = h.num_vertices() <= options.exact_threshold;
    ExpansionReport report =
        exact ? verify_expander_exact(h, params, options.exact_threshold)
              : verify_expander_sampled(h, params, options.sampled_trials, options.seed + out.recursions);
    out.mode = report.mode;
    if (report.is_expander) {
      last_witness.reset();
      break;
    }
    const VertexSet& x = *report.witness;
    VertexSet closed = x;
    for (Vertex v : external_neighborhood(h, x)) closed.push_back(v);
    Subgraph inside = induced_subgraph(h, normalize(closed));
    Subgraph outside = delete_vertices(h, x);
    Rational d_inside = average_degree(inside.graph);
    Rational d_outside = average_degree(outside.graph);
    const Subgraph& pick = d_inside >= d_outside ? inside : outside;
    if (std::max(d_inside, d_outside) < floor_degree) {
      last_witness = x;
      break;
    }
    current = compose(current, pick, g.num_vertices());
    ++out.recursions;
  }

  const Graph& h = current.graph;
  Rational dh = average_degree(h);
  if (dh < floor_degree || Rational(2 * static_cast<std::int64_t>(h.min_degree())) < dh) {
    throw std::logic_error("extract_expander: degree contract violated");
  }

  out.certified = params;
  if (!last_witness) {
    out.expansion_verified = true;
  } else if (h.num_vertices() <= options.exact_threshold) {
    // Back off eps1 to the largest value h provably satisfies.
    double best = max_certified_eps1(h, params.k, options.exact_threshold) * (1.0 - 1e-9);
    out.certified.eps1 = std::min(params.eps1, best);
    out.expansion_verified = out.certified.eps1 > 0.0;
  } else {
    int size = static_cast<int>(last_witness->size());
    double l = std::log(15.0 * size / params.k);
    double ratio = static_cast<double>(external_neighborhood(h, *last_witness).size()) * l * l / size;
    out.certified.eps1 = std::min(params.eps1, ratio * (1.0 - 1e-9));
    out.expansion_verified = false;
  }
  out.sub = std::move(current);
  return out;
}

std::optional<Path> shortest_path_masked(const Graph& g, std::span<const Vertex> sources, const VertexMask& targets,
                                         const VertexMask* blocked, int max_len) {
  const int n = g.num_vertices();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue;
  VertexSet ordered = normalize(VertexSet(sources.begin(), sources.end()));
  for (Vertex s : ordered) {
    if (!g.contains(s)) throw InputError("vertex " + std::to_string(s) + " out of range");
    if (blocked && (*blocked)[s]) continue;
    if (targets[s]) return Path{{s}};
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] >= max_len) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] >= 0 || (blocked && (*blocked)[u])) continue;
      dist[u] = dist[v] + 1;
      parent[u] = v;
      if (targets[u]) {
        Path p;
        for (Vertex w = u; w >= 0; w = parent[w]) p.vertices.push_back(w);
        std::reverse(p.vertices.begin(), p.vertices.end());
        return p;
      }
      queue.push_back(u);
    }
  }
  return std::nullopt;
}

std::optional<Path> short_path_avoiding(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                        std::span<const Vertex> w, int max_len) {
  if (a.empty() || b.empty()) throw InputError("short_path_avoiding needs non-empty endpoint sets");
  VertexMask blocked = to_mask(g.num_vertices(), w);
  VertexMask targets = to_mask(g.num_vertices(), b);
  for (Vertex v : a) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (blocked[v]) throw InputError("deletion set meets A at vertex " + std::to_string(v));
  }
  for (Vertex v : b) {
    if (blocked[v]) throw InputError("deletion set meets B at vertex " + std::to_string(v));
  }
  return shortest_path_masked(g, a, targets, &blocked, max_len);
}

}  // namespace topoclique
