#include "topoclique/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "topoclique/errors.hpp"

namespace topoclique {

VertexSet normalize(VertexSet set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

VertexMask to_mask(int n, std::span<const Vertex> members) {
  VertexMask mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
    mask[static_cast<std::size_t>(v)] = 1;
  }
  return mask;
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (!b.add_edge(u, v)) {
      throw InputError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
  return std::move(b).build();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices(); ++v) best = v == 0 ? degree(v) : std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  int n = num_vertices();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" +
                     std::to_string(n));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  adj_[static_cast<std::size_t>(u)].push_back(v);
  adj_[static_cast<std::size_t>(v)].push_back(u);
  return true;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  const auto& shorter = a.size() <= b.size() ? a : b;
  Vertex other = a.size() <= b.size() ? v : u;
  return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
}

Graph GraphBuilder::build() && {
  Graph g;
  std::size_t twice = 0;
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    twice += nb.size();
  }
  g.adj_ = std::move(adj_);
  g.edge_count_ = twice / 2;
  return g;
}

Rational average_degree(const Graph& g) {
  if (g.num_vertices() == 0) return Rational(0);
  return Rational(2 * static_cast<std::int64_t>(g.num_edges()), g.num_vertices());
}

VertexSet external_neighborhood(const Graph& g, std::span<const Vertex> x) {
  VertexMask in_x = to_mask(g.num_vertices(), x);
  VertexMask seen(in_x.size(), 0);
  VertexSet out;
  for (Vertex v : x) {
    for (Vertex u : g.neighbors(v)) {
      if (!in_x[u] && !seen[u]) {
        seen[u] = 1;
        out.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources, const VertexMask* blocked,
                               int max_dist) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (!g.contains(s)) throw InputError("vertex " + std::to_string(s) + " out of range");
    if (blocked && (*blocked)[s]) continue;
    if (dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (max_dist >= 0 && dist[v] >= max_dist) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] >= 0 || (blocked && (*blocked)[u])) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, std::span<const Vertex> x, int r) {
  if (r < 0) throw InputError("ball radius must be non-negative");
  auto dist = bfs_distances(g, x, nullptr, r);
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] >= 0) out.push_back(v);
  }
  return out;
}

VertexSet iterated_neighborhood(const Graph& g, std::span<const Vertex> x, int i) {
  if (i < 1) throw InputError("iterated neighbourhood needs i >= 1");
  VertexSet current = external_neighborhood(g, x);
  for (int step = 1; step < i; ++step) current = external_neighborhood(g, current);
  return current;
}

namespace {

std::vector<int> parity_colouring(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.num_vertices()), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        }
      }
    }
  }
  return side;
}

}  // namespace

bool is_bipartite(const Graph& g, std::vector<int>* side) {
  auto colour = parity_colouring(g);
  for (auto [u, v] : g.edges()) {
    if (colour[u] == colour[v]) return false;
  }
  if (side) *side = std::move(colour);
  return true;
}

BipartiteHalf bipartite_half(const Graph& g) {
  auto side = parity_colouring(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      int same = 0;
      for (Vertex u : g.neighbors(v)) same += side[u] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] = 1 - side[v];
        changed = true;
      }
    }
  }
  GraphBuilder b(g.num_vertices());
  for (auto [u, v] : g.edges()) {
    if (side[u] != side[v]) b.add_edge(u, v);
  }
  BipartiteHalf out{std::move(b).build(), side, {}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.parts[side[v]].push_back(v);
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  Subgraph sub;
  sub.from_parent.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  VertexMask mask = to_mask(g.num_vertices(), keep);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (mask[v]) {
      sub.from_parent[v] = static_cast<Vertex>(sub.to_parent.size());
      sub.to_parent.push_back(v);
    }
  }
  GraphBuilder b(static_cast<int>(sub.to_parent.size()));
  for (auto [u, v] : g.edges()) {
    if (mask[u] && mask[v]) b.add_edge(sub.from_parent[u], sub.from_parent[v]);
  }
  sub.graph = std::move(b).build();
  return sub;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> w) {
  VertexMask removed = to_mask(g.num_vertices(), w);
  VertexSet keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

bool is_simple_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return false;
  VertexSet sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (Vertex v : p.vertices) {
    if (!g.contains(v)) return false;
  }
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    if (!g.has_edge(p.vertices[i - 1], p.vertices[i])) return false;
  }
  return true;
}

Path lift_path(const Subgraph& sub, const Path& p) {
  Path out;
  out.vertices.reserve(p.vertices.size());
  for (Vertex v : p.vertices) out.vertices.push_back(sub.parent_of(v));
  return out;
}

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line)) throw InputError("edge list: missing header line");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0) {
      throw InputError("edge list: bad header '" + line + "'");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line)) {
      throw InputError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream es(line);
    long long u = -1, v = -1;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra)) throw InputError("edge list: bad edge line '" + line + "'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("edge list: vertex out of range in '" + line + "'");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_data_line(in, line)) throw InputError("edge list: trailing data '" + line + "'");
  return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace topoclique
