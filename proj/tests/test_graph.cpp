#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/generators.hpp"
#include "topoclique/graph.hpp"
#include "topoclique/random.hpp"

using namespace topoclique;
using support::make;

TEST_CASE("average degree") {
  CHECK(average_degree(complete_graph(4)) == Rational(3));
  CHECK(average_degree(path_graph(3)) == Rational(4, 3));
  CHECK(average_degree(empty_graph(5)) == Rational(0));
  CHECK(average_degree(Graph()) == Rational(0));
}

TEST_CASE("external neighbourhood") {
  Graph star = complete_bipartite(1, 3);
  CHECK(external_neighborhood(star, VertexSet{0}) == VertexSet{1, 2, 3});
  Graph c4 = cycle_graph(4);
  CHECK(external_neighborhood(c4, VertexSet{0, 1, 2, 3}).empty());
  CHECK(external_neighborhood(c4, VertexSet{0}) == VertexSet{1, 3});
  CHECK_THROWS_AS(external_neighborhood(c4, VertexSet{7}), InputError);
}

TEST_CASE("external neighbourhood matches the matrix oracle") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gnp(12, 0.3, 100 + trial);
    std::set<int> x;
    for (int v = 0; v < 12; ++v)
      if (rng.unit() < 0.3) x.insert(v);
    VertexSet xs(x.begin(), x.end());
    auto want = oracle::neighbourhood(g, x);
    CHECK(external_neighborhood(g, xs) == VertexSet(want.begin(), want.end()));
  }
}

TEST_CASE("balls") {
  Graph p5 = path_graph(5);
  CHECK(ball(p5, VertexSet{2}, 0) == VertexSet{2});
  CHECK(ball(p5, VertexSet{2}, 1) == VertexSet{1, 2, 3});
  CHECK(ball(cycle_graph(6), VertexSet{0}, 3) == VertexSet{0, 1, 2, 3, 4, 5});
  Graph g = gnp(15, 0.2, 9);
  auto d = oracle::distances(g);
  for (int r = 0; r < 4; ++r) {
    VertexSet want;
    for (int v = 0; v < 15; ++v)
      if (d[0][v] >= 0 && d[0][v] <= r) want.push_back(v);
    CHECK(ball(g, VertexSet{0}, r) == want);
  }
}

TEST_CASE("iterated neighbourhood is not a sphere") {
  CHECK(iterated_neighborhood(path_graph(3), VertexSet{0}, 2) == VertexSet{0, 2});
  CHECK(iterated_neighborhood(complete_graph(2), VertexSet{0}, 1) == VertexSet{1});
  CHECK(iterated_neighborhood(empty_graph(4), VertexSet{1, 2}, 1).empty());
}

TEST_CASE("bipartite half") {
  Graph c6 = cycle_graph(6);
  BipartiteHalf h = bipartite_half(c6);
  CHECK(h.graph == c6);

  // K3: every bipartition keeps 2 of 3 edges.
  BipartiteHalf k3 = bipartite_half(complete_graph(3));
  CHECK(k3.graph.num_edges() == 2);
  CHECK(average_degree(k3.graph) == Rational(4, 3));

  // K4: the best bipartition is 2+2, leaving C4.
  BipartiteHalf k4 = bipartite_half(complete_graph(4));
  CHECK(k4.graph.num_edges() == 4);
  CHECK(average_degree(k4.graph) == Rational(2));

  for (int seed = 0; seed < 20; ++seed) {
    Graph g = gnp(20, 0.4, seed);
    BipartiteHalf b = bipartite_half(g);
    CHECK(is_bipartite(b.graph));
    CHECK(Rational(2) * average_degree(b.graph) >= average_degree(g));
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(2 * b.graph.degree(v) >= g.degree(v));
  }
}

TEST_CASE("vertex deletion") {
  Graph k4 = complete_graph(4);
  CHECK(delete_vertices(k4, VertexSet{}).graph == k4);
  CHECK(delete_vertices(k4, VertexSet{0}).graph == complete_graph(3));
  Subgraph s = delete_vertices(cycle_graph(5), VertexSet{0, 2});
  CHECK(s.to_parent == std::vector<Vertex>{1, 3, 4});
  CHECK(s.graph.num_edges() == 1);
  CHECK(s.graph.has_edge(1, 2));  // 3-4 in parent ids
  CHECK(s.graph.degree(0) == 0);  // vertex 1 is isolated
}

TEST_CASE("edge list round trip and errors") {
  Graph g = petersen_graph();
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(read_edge_list(ss) == g);

  std::stringstream comments("# a triangle\n3 3\n0 1\n# middle\n1 2\n0 2\n");
  CHECK(read_edge_list(comments) == complete_graph(3));
  std::stringstream trailing("3 3\n0 1\n1 2 # trailing\n0 2\n");
  CHECK_THROWS_AS(read_edge_list(trailing), InputError);

  std::stringstream loop("2 1\n0 0\n");
  CHECK_THROWS_AS(read_edge_list(loop), InputError);
  std::stringstream range("2 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(range), InputError);
  std::stringstream shortfile("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(shortfile), InputError);
  CHECK_THROWS_AS(make(3, {{0, 1}, {1, 0}}), InputError);
}

TEST_CASE("simple paths") {
  Graph p = path_graph(4);
  CHECK(is_simple_path(p, Path{{0, 1, 2, 3}}));
  CHECK_FALSE(is_simple_path(p, Path{{0, 2}}));
  CHECK_FALSE(is_simple_path(p, Path{{0, 1, 0}}));
  CHECK_FALSE(is_simple_path(p, Path{}));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(7, 3).to_string() == "7/3");
  CHECK(Rational(3, 2) > Rational(4, 3));
  CHECK_THROWS(Rational(1, 0));
}
