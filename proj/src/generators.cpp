#include "topoclique/generators.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "topoclique/errors.hpp"
#include "topoclique/random.hpp"

namespace topoclique {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int f = 2; f * f <= q; ++f) {
    if (q % f == 0) return false;
  }
  return true;
}

Graph incidence_graph_pg2(int q) {
  if (!is_prime(q)) throw InputError("PG(2,q) needs prime q, got " + std::to_string(q));
  // Normalized homogeneous coordinates: first nonzero entry is 1.
  std::vector<std::array<int, 3>> pts;
  pts.push_back({0, 0, 1});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  for (int y = 0; y < q; ++y) {
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  }
  const int n = static_cast<int>(pts.size());
  GraphBuilder b(2 * n);
  for (int p = 0; p < n; ++p) {
    for (int l = 0; l < n; ++l) {
      int dot = pts[p][0] * pts[l][0] + pts[p][1] * pts[l][1] + pts[p][2] * pts[l][2];
      if (dot % q == 0) b.add_edge(p, n + l);
    }
  }
  return std::move(b).build();
}

JungUnion jung_union(int d, int copies) {
  if (d < 2 || d % 2 != 0) throw InputError("jung_union needs even d >= 2");
  if (copies < 1) throw InputError("jung_union needs copies >= 1");
  const int half = d / 2;
  GraphBuilder b(copies * d);
  for (int c = 0; c < copies; ++c) {
    for (int i = 0; i < half; ++i) {
      for (int j = 0; j < half; ++j) b.add_edge(c * d + i, c * d + half + j);
    }
  }
  return {std::move(b).build(), Rational(half)};
}

Graph random_regular(int n, int r, std::uint64_t seed) {
  bool feasible = n >= 0 && r >= 0 && (n == 0 ? r == 0 : r < n) && (static_cast<long long>(n) * r) % 2 == 0;
  if (!feasible) {
    throw InputError("no simple " + std::to_string(r) + "-regular graph on " + std::to_string(n) + " vertices");
  }
  Rng rng(seed);
  constexpr int kMaxRestarts = 1000;
  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    GraphBuilder b(n);
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), static_cast<std::size_t>(r), v);
    int misses = 0;
    bool stuck = false;
    while (!points.empty()) {
      auto i = static_cast<std::size_t>(rng.below(points.size()));
      auto j = static_cast<std::size_t>(rng.below(points.size()));
      Vertex u = points[i], v = points[j];
      if (i != j && u != v && !b.has_edge(u, v)) {
        b.add_edge(u, v);
        if (i < j) std::swap(i, j);
        points[i] = points.back();
        points.pop_back();
        points[j] = points.back();
        points.pop_back();
        misses = 0;
        continue;
      }
      if (++misses < 64) continue;
      // Many misses in a row: restart unless some legal pair remains.
      bool any = false;
      for (std::size_t x = 0; x < points.size() && !any; ++x) {
        for (std::size_t y = x + 1; y < points.size() && !any; ++y) {
          any = points[x] != points[y] && !b.has_edge(points[x], points[y]);
        }
      }
      if (!any) {
        stuck = true;
        break;
      }
      misses = 0;
    }
    if (!stuck) return std::move(b).build();
  }
  throw ConstructionError("random_regular: no simple pairing after " + std::to_string(kMaxRestarts) + " restarts");
}

Graph counterexample_blowup(int h, int r, int blowup, std::uint64_t seed) {
  if (blowup < 1) throw InputError("blowup must be >= 1");
  if (r >= h || (static_cast<long long>(h) * r) % 2 != 0) throw InputError("blowup base needs r < h and h*r even");
  Graph base = random_regular(h, r, seed);
  GraphBuilder b(h * blowup);
  for (auto [u, v] : base.edges()) {
    for (int i = 0; i < blowup; ++i) {
      for (int j = 0; j < blowup; ++j) b.add_edge(u * blowup + i, v * blowup + j);
    }
  }
  return std::move(b).build();
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("gnp needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gnp needs 0 <= p <= 1");
  Rng rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.unit() < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

Graph complete_bipartite(int a, int c) {
  GraphBuilder b(a + c);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = 0; v < c; ++v) b.add_edge(u, a + v);
  }
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph empty_graph(int n) { return GraphBuilder(n).build(); }

Graph petersen_graph() {
  GraphBuilder b(10);
  for (Vertex v = 0; v < 5; ++v) {
    b.add_edge(v, (v + 1) % 5);
    b.add_edge(v, v + 5);
    b.add_edge(5 + v, 5 + (v + 2) % 5);
  }
  return std::move(b).build();
}

Graph grid_graph(int rows, int cols) {
  GraphBuilder b(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) b.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) b.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& c) {
  const int shift = a.num_vertices();
  GraphBuilder b(shift + c.num_vertices());
  for (auto [u, v] : a.edges()) b.add_edge(u, v);
  for (auto [u, v] : c.edges()) b.add_edge(u + shift, v + shift);
  return std::move(b).build();
}

}  // namespace topoclique
