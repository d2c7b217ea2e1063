// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Usage: acceptance [growth_baseline.csv]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "topoclique/certificate.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/expander.hpp"
#include "topoclique/generators.hpp"
#include "topoclique/kst.hpp"
#include "topoclique/pipeline.hpp"
#include "topoclique/random.hpp"
#include "topoclique/verify.hpp"

#ifndef TOPOCLIQUE_BASELINE
#define TOPOCLIQUE_BASELINE "tests/data/growth_baseline.csv"
#endif

using namespace topoclique;

namespace {

struct Named {
  std::string name;
  Graph graph;
};

std::vector<Named> corpus() {
  std::vector<Named> c;
  for (int q : {2, 3, 5, 7, 11, 13}) c.push_back({"pg2_" + std::to_string(q), incidence_graph_pg2(q)});
  for (auto [d, k] : {std::pair{4, 1}, {4, 3}, {6, 1}, {6, 2}, {8, 2}})
    c.push_back({"jung_" + std::to_string(d) + "x" + std::to_string(k), jung_union(d, k).graph});
  for (auto [h, r, b, seed] : {std::tuple{10, 3, 2, 1}, {10, 3, 2, 2}, {12, 4, 3, 1}, {8, 3, 1, 2}, {20, 5, 2, 3},
                               {6, 2, 4, 4}})
    c.push_back({"blowup_" + std::to_string(h) + "_" + std::to_string(r) + "_" + std::to_string(b) + "_" +
                     std::to_string(seed),
                 counterexample_blowup(h, r, b, seed)});
  for (auto [n, d, seed] : {std::tuple{8, 3, 1}, {10, 3, 2}, {20, 3, 3}, {30, 4, 4}, {50, 3, 5}, {60, 5, 6},
                            {100, 4, 7}, {150, 6, 8}, {200, 3, 9}, {200, 8, 10}, {120, 10, 11}, {10, 4, 12}})
    c.push_back({"rr_" + std::to_string(n) + "_" + std::to_string(d) + "_" + std::to_string(seed),
                 random_regular(n, d, seed)});
  for (int seed = 0; seed < 6; ++seed) c.push_back({"gnp_8_" + std::to_string(seed), gnp(8, 0.5, seed)});
  for (int seed = 0; seed < 4; ++seed) c.push_back({"gnp_10_" + std::to_string(seed), gnp(10, 0.4, 50 + seed)});
  c.push_back({"gnp_40", gnp(40, 0.15, 60)});
  c.push_back({"gnp_80", gnp(80, 0.08, 61)});
  c.push_back({"gnp_120", gnp(120, 0.06, 62)});
  for (int k = 3; k <= 7; ++k) c.push_back({"K" + std::to_string(k), complete_graph(k)});
  c.push_back({"K33", complete_bipartite(3, 3)});
  c.push_back({"K34", complete_bipartite(3, 4)});
  c.push_back({"K15", complete_bipartite(1, 5)});
  c.push_back({"C5", cycle_graph(5)});
  c.push_back({"C7", cycle_graph(7)});
  c.push_back({"P4", path_graph(4)});
  c.push_back({"petersen", petersen_graph()});
  c.push_back({"grid4x4", grid_graph(4, 4)});
  c.push_back({"grid3x5", grid_graph(3, 5)});
  c.push_back({"empty3", empty_graph(3)});
  return c;
}

struct Line {
  int id;
  bool pass;
  std::string detail;
};

void print(const Line& l) { std::printf("criterion %d: %s  %s\n", l.id, l.pass ? "PASS" : "FAIL", l.detail.c_str()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CorpusRun {
  std::vector<RunReport> reports;
  std::string dump;  // every certificate, in corpus order
  double seconds = 0;
};

CorpusRun run_corpus(const std::vector<Named>& graphs) {
  CorpusRun out;
  auto t0 = std::chrono::steady_clock::now();
  PipelineConfig cfg;
  for (const auto& g : graphs) {
    out.reports.push_back(run_pipeline(g.graph, cfg));
    out.dump += g.name + " " + dump_certificate(out.reports.back().certificate) + "\n";
  }
  out.seconds = seconds_since(t0);
  return out;
}

// Criterion 1: certificates survive serialisation and verify.
Line certificates(const std::vector<Named>& graphs, const CorpusRun& run) {
  int failures = 0;
  std::string first;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto back = certificate_from_json(nlohmann::json::parse(dump_certificate(run.reports[i].certificate)));
    Verdict v = verify_subdivision(graphs[i].graph, back);
    if (!v.valid) {
      ++failures;
      if (first.empty()) first = graphs[i].name + ": " + v.message;
    }
  }
  const bool pass = graphs.size() >= 50 && failures == 0 && run.seconds < 300;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu graphs, %d invalid, %.1fs", graphs.size(), failures, run.seconds);
  return {1, pass, buf + (first.empty() ? "" : "; first: " + first)};
}

// Criterion 2: pipeline order against the exhaustive oracle.
Line oracle_consistency(const std::vector<Named>& graphs, const CorpusRun& run) {
  int checked = 0, failures = 0;
  std::string first;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i].graph;
    if (g.num_vertices() > 10) continue;
    ++checked;
    auto o = oracle_max_subdivision(g);
    const bool ok = run.reports[i].order <= o.order && verify_subdivision(g, o.witness).valid &&
                    o.witness.order() == o.order;
    if (!ok) {
      ++failures;
      if (first.empty()) first = graphs[i].name;
    }
  }
  const bool spots = oracle_max_subdivision(complete_graph(5)).order == 5 &&
                     oracle_max_subdivision(complete_bipartite(3, 3)).order == 4 &&
                     oracle_max_subdivision(cycle_graph(5)).order == 3;
  std::string detail = std::to_string(checked) + " graphs with n <= 10, " + std::to_string(failures) +
                       " failures, spot values " + (spots ? "ok" : "wrong");
  if (!first.empty()) detail += "; first: " + first;
  return {2, failures == 0 && spots && checked > 0, detail};
}

ExpanderParams pipeline_params(double d) { return {0.1, std::max(0.1 * d * d, 1e-9)}; }

// Criterion 3: extraction contracts on random graphs.
Line expander_contracts() {
  int failures = 0, exact_checked = 0;
  for (int i = 0; i < 50; ++i) {
    const int n = 10 + (i * 37) % 191;
    Graph g = i % 2 ? gnp(n, std::min(0.9, 6.0 / n), 700 + i) : random_regular(n + n % 2, 3 + i % 5, 700 + i);
    const Rational dg = average_degree(g);
    if (dg == Rational(0)) continue;
    auto ex = extract_expander(g, pipeline_params(dg.to_double()));
    const Graph& h = ex.sub.graph;
    const Rational dh = average_degree(h);
    if (!(Rational(2) * dh >= dg && Rational(2) * Rational(h.min_degree()) >= dh)) ++failures;
    if (h.num_vertices() <= kDefaultExactThreshold) {
      ++exact_checked;
      if (!verify_expander_exact(h, ex.certified).is_expander) ++failures;
    }
  }
  return {3, failures == 0,
          "50 graphs, " + std::to_string(failures) + " failures, " + std::to_string(exact_checked) + " exact checks"};
}

VertexSet sample(Rng& rng, const std::vector<Vertex>& pool, int size) {
  std::vector<Vertex> p = pool;
  for (int i = 0; i < size; ++i) std::swap(p[i], p[i + rng.below(p.size() - i)]);
  VertexSet out(p.begin(), p.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

// Criterion 4: short paths between large sets survive small deletions.
Line diameter_property(const std::vector<Named>& graphs) {
  int expanders = 0, configs = 0, with_deletions = 0, failures = 0;
  Rng rng(44);
  for (const auto& named : graphs) {
    if (named.graph.num_edges() == 0) continue;
    const double d = average_degree(named.graph).to_double();
    Graph half = bipartite_half(named.graph).graph;
    auto ex = extract_expander(half, pipeline_params(d));
    if (ex.mode != CheckMode::exact || !ex.expansion_verified) continue;
    const Graph& h = ex.sub.graph;
    const int n = h.num_vertices();
    const int lo = std::max(1, static_cast<int>(std::ceil(ex.certified.k)));
    if (lo > n) continue;
    ++expanders;
    const int cap = static_cast<int>(std::ceil(diam_bound(n, ex.certified)));
    for (int trial = 0; trial < 100; ++trial) {
      const int x = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, n / 2 - lo + 1))));
      const int deletions = static_cast<int>(std::floor(x * epsilon(x, ex.certified) / 4));
      std::vector<Vertex> all(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) all[v] = v;
      if (deletions + x > n) continue;
      VertexSet w = sample(rng, all, deletions);
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v)
        if (!std::binary_search(w.begin(), w.end(), v)) rest.push_back(v);
      VertexSet a = sample(rng, rest, x), b = sample(rng, rest, x);
      ++configs;
      with_deletions += deletions > 0 ? 1 : 0;
      if (!short_path_avoiding(h, a, b, w, cap)) ++failures;
    }
  }
  return {4, failures == 0 && configs > 0,
          std::to_string(expanders) + " exact expanders, " + std::to_string(configs) + " configurations (" +
              std::to_string(with_deletions) + " with deletions), " + std::to_string(failures) + " failures"};
}

// Criterion 5: counting inequality on side-free bipartite graphs, and the
// monotonicity of eps(x) x.
Line kst_audit() {
  Rng rng(505);
  int audited = 0, failures = 0;
  for (int s = 2; s <= 3; ++s) {
    for (int t = 2; t <= 3; ++t) {
      for (int done = 0; done < 50;) {
        const int a = rng.between(3, 20), b = rng.between(3, 20);
        GraphBuilder gb(a + b);
        const double p = 0.05 + 0.5 * rng.unit();
        for (int u = 0; u < a; ++u)
          for (int v = 0; v < b; ++v)
            if (rng.unit() < p) gb.add_edge(u, a + v);
        Graph g = std::move(gb).build();
        VertexSet sa, sb;
        for (int u = 0; u < a; ++u) sa.push_back(u);
        for (int v = a; v < a + b; ++v) sb.push_back(v);
        if (!kst_side_free(g, sa, sb, s, t)) continue;
        ++done;
        ++audited;
        if (!audit_count_inequality(g, sa, sb, s, t).holds) ++failures;
      }
    }
  }
  int grid_failures = 0;
  for (double k : {1.0, 7.5, 40.0}) {
    for (double eps1 : {0.05, 0.1, 0.5}) {
      ExpanderParams p{eps1, k};
      double prev = -1;
      for (int i = 0; i < 1000; ++i) {
        const double x = k / 2 + (100 * k - k / 2) * i / 999.0;
        const double v = epsilon(x, p) * x;
        if (v < prev) ++grid_failures;
        prev = v;
      }
    }
  }
  return {5, failures == 0 && grid_failures == 0 && audited == 200,
          std::to_string(audited) + " audits, " + std::to_string(failures) + " failures; monotonicity grid " +
              std::to_string(grid_failures) + " failures"};
}

// Criterion 6: sparse ledger re-assertions never fire.
Line sparse_ledger(const CorpusRun& run) {
  int runs = 0, violations = 0;
  for (const auto& r : run.reports) {
    runs += r.sparse_runs;
    violations += r.sparse_ledger_violations;
  }
  return {6, violations == 0 && runs > 0,
          std::to_string(runs) + " sparse runs, " + std::to_string(violations) + " violations"};
}

struct BaselineRow {
  int q;
  double per_d;
};

std::vector<BaselineRow> read_baseline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open baseline " + path);
  std::vector<BaselineRow> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() < 5) throw InputError("bad baseline line: " + line);
    rows.push_back({std::stoi(cells[0]), std::stod(cells[4])});
  }
  return rows;
}

// Criterion 7: growth on incidence graphs against the stored baseline.
Line growth(const std::string& baseline_path, std::string* table) {
  auto t0 = std::chrono::steady_clock::now();
  auto rows = experiment_linear_growth({2, 3, 5, 7, 11, 13}, PipelineConfig{});
  const double secs = seconds_since(t0);
  *table = growth_csv(rows);
  std::vector<BaselineRow> base;
  try {
    base = read_baseline(baseline_path);
  } catch (const std::exception& e) {
    return {7, false, e.what()};
  }
  bool nondecreasing = true, increasing = true, above = base.size() == rows.size();
  std::string orders;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    orders += (i ? "," : "") + std::to_string(rows[i].order);
    if (i > 0) {
      nondecreasing = nondecreasing && rows[i].order >= rows[i - 1].order;
      increasing = increasing && rows[i].per_sqrt_d() > rows[i - 1].per_sqrt_d();
    }
    if (i < base.size()) above = above && base[i].q == rows[i].q && rows[i].per_d() >= 0.8 * base[i].per_d;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "; %.1fs", secs);
  return {7, nondecreasing && increasing && above && secs < 600,
          "orders " + orders + "; nondecreasing " + (nondecreasing ? "yes" : "no") + ", order/sqrt(d) increasing " +
              (increasing ? "yes" : "no") + ", within 80% of baseline " + (above ? "yes" : "no") + buf};
}

// Criterion 8: a second run reproduces everything byte for byte.
Line determinism(const std::vector<Named>& graphs, const CorpusRun& first, const std::string& table) {
  CorpusRun second = run_corpus(graphs);
  std::string again = growth_csv(experiment_linear_growth({2, 3, 5, 7, 11, 13}, PipelineConfig{}));
  const bool certs = first.dump == second.dump;
  const bool tables = table == again;
  return {8, certs && tables,
          std::string("certificates ") + (certs ? "identical" : "differ") + ", tables " +
              (tables ? "identical" : "differ")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string baseline = argc > 1 ? argv[1] : TOPOCLIQUE_BASELINE;
  try {
    auto graphs = corpus();
    CorpusRun run = run_corpus(graphs);
    std::string table;
    std::vector<Line> lines;
    lines.push_back(certificates(graphs, run));
    lines.push_back(oracle_consistency(graphs, run));
    lines.push_back(expander_contracts());
    lines.push_back(diameter_property(graphs));
    lines.push_back(kst_audit());
    lines.push_back(sparse_ledger(run));
    lines.push_back(growth(baseline, &table));
    lines.push_back(determinism(graphs, run, table));
    bool all = true;
    for (const auto& l : lines) {
      print(l);
      all = all && l.pass;
    }
    std::printf("%s\n", all ? "all criteria pass" : "some criteria fail");
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
    return 2;
  }
}
