#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/expander.hpp"
#include "topoclique/generators.hpp"

using namespace topoclique;
using support::make;

TEST_CASE("epsilon values") {
  ExpanderParams p{0.5, 10};
  CHECK(epsilon(1.0, p) == 0.0);  // k/10
  CHECK(epsilon(10.0, p) == doctest::Approx(0.5 / std::pow(std::log(15.0), 2)));
  CHECK(epsilon(2.0, p) > 0.0);  // k/5 is the switch
  CHECK(epsilon(1.99, p) == 0.0);
}

TEST_CASE("x eps(x) is nondecreasing above k/2 and eps nonincreasing above k/5") {
  for (double k : {1.0, 7.0, 40.0, 1000.0}) {
    ExpanderParams p{0.3, k};
    double prev_prod = -1, prev_eps = 1e9;
    for (int i = 0; i <= 1000; ++i) {
      double x = k / 2 + (100 * k - k / 2) * i / 1000.0;
      double prod = x * epsilon(x, p);
      CHECK(prod >= prev_prod);
      CHECK(epsilon(x, p) <= prev_eps);
      prev_prod = prod;
      prev_eps = epsilon(x, p);
    }
  }
}

TEST_CASE("diameter bound") {
  // The formula is evaluated as written, even at eps1 outside (0,1).
  CHECK(diam_bound(10, ExpanderParams{2, 10}) == doctest::Approx(std::pow(std::log(15.0), 3)));
  CHECK(diam_bound(100, ExpanderParams{1, 10}) == doctest::Approx(2 * std::pow(std::log(150.0), 3)));
  ExpanderParams p{0.2, 3};
  for (long long n = 1; n < 1'000'000; n *= 2) CHECK(diam_bound(2 * n, p) > diam_bound(n, p));
}

TEST_CASE("exact expansion check") {
  ExpanderParams p{0.1, 2};
  auto k6 = verify_expander_exact(complete_graph(6), p);
  CHECK(k6.is_expander);
  CHECK(k6.mode == CheckMode::exact);

  Graph two = disjoint_union(complete_graph(5), complete_graph(5));
  auto r = verify_expander_exact(two, p);
  REQUIRE_FALSE(r.is_expander);
  CHECK(*r.witness == VertexSet{0, 1, 2, 3, 4});

  auto vac = verify_expander_exact(complete_graph(3), ExpanderParams{0.1, 20});
  CHECK(vac.is_expander);
  CHECK(vac.vacuous);

  CHECK_THROWS_AS(verify_expander_exact(cycle_graph(19), p), SizeRefused);
}

TEST_CASE("exact check agrees with the brute-force definition") {
  for (int seed = 0; seed < 25; ++seed) {
    Graph g = gnp(10, 0.35, 300 + seed);
    for (double k : {1.0, 2.0, 4.0}) {
      ExpanderParams p{0.4, k};
      auto r = verify_expander_exact(g, p);
      CHECK(r.is_expander == oracle::is_expander(g, p.eps1, p.k));
      if (!r.is_expander) {
        std::set<int> x(r.witness->begin(), r.witness->end());
        CHECK(static_cast<double>(oracle::neighbourhood(g, x).size()) < oracle::eps(x.size(), p.eps1, p.k) * x.size());
      }
    }
  }
}

TEST_CASE("sampled expansion check") {
  Graph two = disjoint_union(complete_graph(5), complete_graph(5));
  for (std::uint64_t seed : {1, 2, 3, 99}) {
    auto r = verify_expander_sampled(two, ExpanderParams{0.1, 2}, 100, seed);
    REQUIRE_FALSE(r.is_expander);
    CHECK(r.mode == CheckMode::sampled);
    CHECK(r.witness->size() == 5);
  }
  // Soundness: graphs the exact check accepts are never rejected.
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = gnp(12, 0.5, seed);
    ExpanderParams p{0.2, 2};
    if (verify_expander_exact(g, p).is_expander) CHECK(verify_expander_sampled(g, p, 200, seed).is_expander);
  }
  CHECK_THROWS_AS(verify_expander_sampled(two, ExpanderParams{0.1, 2}, 0, 1), InputError);
}

TEST_CASE("expander extraction") {
  Graph many = complete_graph(6);
  for (int i = 0; i < 4; ++i) many = disjoint_union(many, complete_graph(6));
  auto ex = extract_expander(many, ExpanderParams{0.1, 2});
  CHECK(ex.sub.graph.num_vertices() == 6);
  CHECK(ex.sub.graph == complete_graph(6));

  Graph pet = petersen_graph();
  auto fixed = extract_expander(pet, ExpanderParams{0.1, 2});
  CHECK(fixed.sub.graph == pet);

  // K5 plus a pendant on vertex 0.
  Graph k5p = make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {0, 5}});
  auto stripped = extract_expander(k5p, ExpanderParams{0.1, 2});
  CHECK(stripped.sub.graph == complete_graph(5));
  CHECK(stripped.sub.to_parent == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("short path avoiding") {
  Graph p5 = path_graph(5);
  auto path = short_path_avoiding(p5, VertexSet{0}, VertexSet{4}, VertexSet{}, 4);
  REQUIRE(path);
  CHECK(path->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK_FALSE(short_path_avoiding(p5, VertexSet{0}, VertexSet{4}, VertexSet{2}, 4));
  CHECK_FALSE(short_path_avoiding(p5, VertexSet{0}, VertexSet{4}, VertexSet{}, 3));

  auto c6 = short_path_avoiding(cycle_graph(6), VertexSet{0}, VertexSet{3}, VertexSet{1}, 3);
  REQUIRE(c6);
  CHECK(c6->vertices == std::vector<Vertex>{0, 5, 4, 3});

  CHECK_THROWS_AS(short_path_avoiding(p5, VertexSet{}, VertexSet{4}, VertexSet{}, 4), InputError);
  CHECK_THROWS_AS(short_path_avoiding(p5, VertexSet{0}, VertexSet{4}, VertexSet{4}, 4), InputError);
}

TEST_CASE("short paths are shortest against all-pairs distances") {
  for (int seed = 0; seed < 15; ++seed) {
    Graph g = gnp(30, 0.1, 700 + seed);
    std::vector<char> removed(30, 0);
    removed[5] = removed[11] = 1;
    auto d = oracle::distances(g, removed);
    for (int a = 0; a < 30; a += 3) {
      for (int b = 1; b < 30; b += 4) {
        if (removed[a] || removed[b] || a == b) continue;
        auto p = short_path_avoiding(g, VertexSet{a}, VertexSet{b}, VertexSet{5, 11}, 50);
        if (d[a][b] < 0) {
          CHECK_FALSE(p);
        } else {
          REQUIRE(p);
          CHECK(static_cast<int>(p->length()) == d[a][b]);
          CHECK(is_simple_path(g, *p));
        }
      }
    }
  }
}
