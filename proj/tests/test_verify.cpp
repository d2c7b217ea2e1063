#include "doctest.h"
#include "support.hpp"
#include "topoclique/certificate.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/generators.hpp"
#include "topoclique/random.hpp"
#include "topoclique/verify.hpp"

using namespace topoclique;

namespace {

SubdivisionCertificate k4_cert() {
  SubdivisionCertificate c;
  c.cores = {0, 1, 2, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) c.paths.push_back({{i, j}, Path{{i, j}}});
  c.meta.route = "sparse";
  return c;
}

}  // namespace

TEST_CASE("valid certificate") {
  Verdict v = verify_subdivision(complete_graph(4), k4_cert());
  CHECK(v.valid);
  CHECK(v.order == 4);
  CHECK(v.kind == FailureKind::none);

  // Reversed orientation is fine.
  auto c = k4_cert();
  c.paths[0].path.vertices = {1, 0};
  CHECK(verify_subdivision(complete_graph(4), c).valid);
}

TEST_CASE("shared interior vertex is named") {
  // C6 plus chord-free wiring: cores 0 and 2 and 4, paths through 1, 3, 5.
  Graph g = cycle_graph(6);
  SubdivisionCertificate c;
  c.cores = {0, 2, 4};
  c.paths = {{{0, 2}, Path{{0, 1, 2}}}, {{2, 4}, Path{{2, 3, 4}}}, {{0, 4}, Path{{0, 5, 4}}}};
  CHECK(verify_subdivision(g, c).valid);

  Graph k = complete_graph(5);
  SubdivisionCertificate bad;
  bad.cores = {0, 1, 2};
  bad.paths = {{{0, 1}, Path{{0, 3, 1}}}, {{1, 2}, Path{{1, 3, 2}}}, {{0, 2}, Path{{0, 2}}}};
  Verdict v = verify_subdivision(k, bad);
  CHECK_FALSE(v.valid);
  CHECK(v.kind == FailureKind::shared_interior);
  REQUIRE(v.vertex);
  CHECK(*v.vertex == 3);
}

TEST_CASE("one path per pair") {
  Graph c6 = cycle_graph(6);
  SubdivisionCertificate c;
  c.cores = {0, 3};
  c.paths = {{{0, 3}, Path{{0, 1, 2, 3}}}, {{0, 3}, Path{{0, 5, 4, 3}}}};
  Verdict v = verify_subdivision(c6, c);
  CHECK_FALSE(v.valid);
  CHECK(v.kind == FailureKind::duplicate_pair);
  REQUIRE(v.pair);
  CHECK(*v.pair == CorePair{0, 3});
}

TEST_CASE("failure kinds") {
  Graph k4 = complete_graph(4);
  auto missing = k4_cert();
  missing.paths.pop_back();
  Verdict m = verify_subdivision(k4, missing);
  CHECK(m.kind == FailureKind::missing_pair);
  REQUIRE(m.pair);
  CHECK(*m.pair == CorePair{2, 3});

  auto range = k4_cert();
  range.cores.push_back(9);
  CHECK(verify_subdivision(k4, range).kind == FailureKind::vertex_out_of_range);

  auto dup = k4_cert();
  dup.cores.push_back(0);
  CHECK(verify_subdivision(k4, dup).kind == FailureKind::duplicate_core);

  Graph p4 = path_graph(4);
  SubdivisionCertificate jump;
  jump.cores = {0, 3};
  jump.paths = {{{0, 3}, Path{{0, 3}}}};
  CHECK(verify_subdivision(p4, jump).kind == FailureKind::not_a_path);

  SubdivisionCertificate ends;
  ends.cores = {0, 3};
  ends.paths = {{{0, 3}, Path{{0, 1, 2}}}};
  CHECK(verify_subdivision(p4, ends).kind == FailureKind::bad_endpoints);

  SubdivisionCertificate through;
  through.cores = {0, 1, 3};
  through.paths = {{{0, 1}, Path{{0, 1}}}, {{0, 3}, Path{{0, 1, 2, 3}}}, {{1, 3}, Path{{1, 2, 3}}}};
  CHECK(verify_subdivision(p4, through).kind == FailureKind::core_in_interior);

  SubdivisionCertificate foreign;
  foreign.cores = {0, 1};
  foreign.paths = {{{0, 1}, Path{{0, 1}}}, {{1, 2}, Path{{1, 2}}}};
  CHECK(verify_subdivision(p4, foreign).kind == FailureKind::foreign_pair);
}

TEST_CASE("verifier agrees with the independent checker on mutated certificates") {
  Graph g = complete_graph(6);
  auto good = oracle_max_subdivision(g).witness;
  REQUIRE(support::oracle_accepts(g, good));
  Graph sparse = gnp(10, 0.5, 3);
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    auto c = good;
    auto& p = c.paths[rng.below(c.paths.size())].path.vertices;
    switch (rng.below(3)) {
      case 0: p.insert(p.begin() + 1, static_cast<Vertex>(rng.below(6))); break;
      case 1: if (p.size() > 2) p.erase(p.begin() + 1); break;
      default: c.cores[rng.below(c.cores.size())] = static_cast<Vertex>(rng.below(7)); break;
    }
    CHECK(verify_subdivision(g, c).valid == support::oracle_accepts(g, c));
    CHECK(verify_subdivision(sparse, c).valid == support::oracle_accepts(sparse, c));
  }
}

TEST_CASE("certificate json round trip") {
  auto c = k4_cert();
  c.meta.params = {{"seed", 3}};
  auto back = certificate_from_json(nlohmann::json::parse(dump_certificate(c)));
  CHECK(back.cores == c.cores);
  CHECK(back.paths.size() == c.paths.size());
  CHECK(back.paths[4].path == c.paths[4].path);
  CHECK(back.meta.route == "sparse");
  CHECK(back.meta.params["seed"] == 3);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"cores": "x"})")), InputError);
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(R"({"cores": [1], "paths": [{"pair": [1]}]})")),
                  InputError);
}

TEST_CASE("oracle spot values") {
  CHECK(oracle_max_subdivision(complete_graph(5)).order == 5);
  CHECK(oracle_max_subdivision(complete_bipartite(3, 3)).order == 4);
  CHECK(oracle_max_subdivision(cycle_graph(5)).order == 3);
  CHECK(oracle_max_subdivision(petersen_graph()).order == 4);
  CHECK(oracle_max_subdivision(path_graph(4)).order == 2);
  CHECK(oracle_max_subdivision(empty_graph(3)).order == 1);
  CHECK_THROWS_AS(oracle_max_subdivision(cycle_graph(11)), SizeRefused);
  CHECK(oracle_max_subdivision(cycle_graph(11), 11).order == 3);
}

TEST_CASE("oracle witnesses verify and the oracle is monotone under edge deletion") {
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = gnp(8, 0.5, 900 + seed);
    auto r = oracle_max_subdivision(g);
    CHECK(r.witness.order() == r.order);
    CHECK(verify_subdivision(g, r.witness).valid);
    CHECK(support::oracle_accepts(g, r.witness));
    auto edges = g.edges();
    if (edges.empty()) continue;
    edges.erase(edges.begin() + seed % static_cast<int>(edges.size()));
    Graph sub = Graph::from_edges(8, edges);
    CHECK(oracle_max_subdivision(sub).order <= r.order);
  }
}
