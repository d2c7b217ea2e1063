#pragma once

// Brute-force references for the tests. Nothing here calls into the library
// beyond Graph accessors, so a bug in a routine cannot hide in its oracle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <vector>

#include "topoclique/graph.hpp"

namespace oracle {

using topoclique::Graph;
using topoclique::Vertex;

// Adjacency matrix from the edge list.
inline std::vector<std::vector<char>> matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> a(n, std::vector<char>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

// All-pairs distances by Floyd-Warshall; -1 unreachable. Vertices in
// `removed` are treated as absent.
inline std::vector<std::vector<int>> distances(const Graph& g, const std::vector<char>& removed = {}) {
  const int n = g.num_vertices();
  const int inf = 1 << 28;
  auto a = matrix(g);
  auto gone = [&](int v) { return !removed.empty() && removed[v]; };
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    if (gone(i)) continue;
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (a[i][j] && !gone(j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

inline std::set<int> neighbourhood(const Graph& g, const std::set<int>& x) {
  auto a = matrix(g);
  std::set<int> out;
  for (int v : x)
    for (int u = 0; u < g.num_vertices(); ++u)
      if (a[v][u] && !x.count(u)) out.insert(u);
  return out;
}

inline double eps(double x, double eps1, double k) {
  if (x < k / 5) return 0;
  const double l = std::log(15 * x / k);
  return eps1 / (l * l);
}

// Exhaustive expansion check straight from the definition.
inline bool is_expander(const Graph& g, double eps1, double k) {
  const int n = g.num_vertices();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < std::ceil(k / 2) || size > n / 2) continue;
    std::set<int> x;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) x.insert(v);
    if (static_cast<double>(neighbourhood(g, x).size()) < eps(size, eps1, k) * size) return false;
  }
  return true;
}

// K_{s,t} containment by trying every s-set and counting common neighbours.
inline bool has_kst(const Graph& g, int s, int t) {
  const int n = g.num_vertices();
  auto a = matrix(g);
  std::vector<int> pick(s);
  std::function<bool(int, int)> rec = [&](int idx, int from) -> bool {
    if (idx == s) {
      int common = 0;
      for (int u = 0; u < n; ++u) {
        bool all = true;
        for (int v : pick) all = all && a[u][v];
        common += all;
      }
      return common >= t;
    }
    for (int v = from; v < n; ++v) {
      pick[idx] = v;
      if (rec(idx + 1, v + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

// Girth by BFS from every vertex; 0 for forests.
inline int girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), par(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          par[u] = v;
          q.push_back(u);
        } else if (par[v] != u) {
          int c = dist[u] + dist[v] + 1;
          if (best == 0 || c < best) best = c;
        }
      }
    }
  }
  return best;
}

// Independent certificate check on raw data.
inline bool subdivision_ok(const Graph& g, const std::vector<int>& cores,
                           const std::vector<std::pair<std::pair<int, int>, std::vector<int>>>& paths) {
  auto a = matrix(g);
  const int n = g.num_vertices();
  std::set<int> core_set(cores.begin(), cores.end());
  if (core_set.size() != cores.size()) return false;
  for (int c : cores)
    if (c < 0 || c >= n) return false;
  std::set<std::pair<int, int>> seen;
  std::vector<int> used(n, 0);
  for (const auto& [pair, verts] : paths) {
    auto key = std::minmax(pair.first, pair.second);
    if (!core_set.count(pair.first) || !core_set.count(pair.second) || pair.first == pair.second) return false;
    if (!seen.insert(key).second) return false;
    if (verts.size() < 2) return false;
    bool fwd = verts.front() == pair.first && verts.back() == pair.second;
    bool bwd = verts.front() == pair.second && verts.back() == pair.first;
    if (!fwd && !bwd) return false;
    std::set<int> distinct(verts.begin(), verts.end());
    if (distinct.size() != verts.size()) return false;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
      if (verts[i] < 0 || verts[i] >= n || verts[i + 1] < 0 || verts[i + 1] >= n) return false;
      if (!a[verts[i]][verts[i + 1]]) return false;
    }
    for (std::size_t i = 1; i + 1 < verts.size(); ++i) {
      if (core_set.count(verts[i]) || used[verts[i]]++) return false;
    }
  }
  return seen.size() == cores.size() * (cores.size() - 1) / 2;
}

}  // namespace oracle
