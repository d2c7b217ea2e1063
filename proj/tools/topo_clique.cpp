// Command-line front end: generate, find, verify, oracle, audit, experiment.
// Exit codes: 0 ok, 1 invalid certificate or failed check, 2 usage or
// parse error, 3 size refusal.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "topoclique/certificate.hpp"
#include "topoclique/errors.hpp"
#include "topoclique/generators.hpp"
#include "topoclique/graph.hpp"
#include "topoclique/kst.hpp"
#include "topoclique/pipeline.hpp"
#include "topoclique/verify.hpp"

using namespace topoclique;

namespace {

constexpr int kInvalid = 1;
constexpr int kUsage = 2;
constexpr int kRefused = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_edge_list(in);
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("bad list entry '" + item + "'");
    }
  }
  return out;
}

struct GenerateArgs {
  std::string family;
  int q = 2, d = 4, copies = 1, h = 10, r = 3, blowup = 2, n = 10, a = 3, b = 3, rows = 3, cols = 3;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string out;
};

Graph generate(const GenerateArgs& g) {
  if (g.family == "pg2") return incidence_graph_pg2(g.q);
  if (g.family == "jung") return jung_union(g.d, g.copies).graph;
  if (g.family == "blowup") return counterexample_blowup(g.h, g.r, g.blowup, g.seed);
  if (g.family == "regular") return random_regular(g.n, g.r, g.seed);
  if (g.family == "gnp") return gnp(g.n, g.p, g.seed);
  if (g.family == "complete") return complete_graph(g.n);
  if (g.family == "cycle") return cycle_graph(g.n);
  if (g.family == "path") return path_graph(g.n);
  if (g.family == "bipartite") return complete_bipartite(g.a, g.b);
  if (g.family == "petersen") return petersen_graph();
  if (g.family == "grid") return grid_graph(g.rows, g.cols);
  if (g.family == "empty") return empty_graph(g.n);
  throw InputError("unknown family '" + g.family + "'");
}

struct FindArgs {
  std::string input, output = "-", params_file, mode, report;
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
};

PipelineConfig build_config(const std::string& params_file, const std::string& mode, const std::vector<std::string>& sets,
                            const CLI::Option* seed_opt, std::uint64_t seed) {
  PipelineConfig cfg;
  if (!params_file.empty()) apply_params(cfg, slurp(params_file));
  if (const char* env = std::getenv("TOPO_CLIQUE_SEED"); env && seed_opt->count() == 0) {
    set_param(cfg, "seed", env);
  }
  if (seed_opt->count() > 0) cfg.seed = seed;
  if (!mode.empty()) cfg.mode = parse_mode(mode);
  for (const auto& kv : sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InputError("--set expects key=value, got '" + kv + "'");
    set_param(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and certify clique subdivisions"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a graph from a named family as an edge list");
  generate_cmd->add_option("family", gen.family,
                           "pg2 | jung | blowup | regular | gnp | complete | cycle | path | bipartite | petersen | grid | empty")
      ->required();
  generate_cmd->add_option("--q", gen.q, "prime order of the projective plane");
  generate_cmd->add_option("--d", gen.d, "even degree for jung");
  generate_cmd->add_option("--copies", gen.copies);
  generate_cmd->add_option("--base", gen.h, "base vertices for blowup");
  generate_cmd->add_option("--r", gen.r, "regular degree");
  generate_cmd->add_option("--blowup", gen.blowup);
  generate_cmd->add_option("--n", gen.n);
  generate_cmd->add_option("--p", gen.p);
  generate_cmd->add_option("--a", gen.a);
  generate_cmd->add_option("--b", gen.b);
  generate_cmd->add_option("--rows", gen.rows);
  generate_cmd->add_option("--cols", gen.cols);
  generate_cmd->add_option("--seed", gen.seed);
  generate_cmd->add_option("-o,--output", gen.out, "output file (stdout when absent)");

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Run the pipeline and write a certificate");
  find_cmd->add_option("-i,--input", find.input)->required();
  find_cmd->add_option("-o,--output", find.output);
  find_cmd->add_option("--mode", find.mode, "practical | paper");
  auto* find_seed = find_cmd->add_option("--seed", find.seed);
  find_cmd->add_option("--params", find.params_file, "key=value or JSON parameter file");
  find_cmd->add_option("--set", find.sets, "override one parameter, key=value");
  find_cmd->add_option("--report", find.report, "write the run report as JSON");

  std::string verify_graph, verify_cert;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("-i,--input", verify_graph)->required();
  verify_cmd->add_option("-c,--cert", verify_cert)->required();

  std::string oracle_graph, oracle_witness;
  int oracle_limit = kDefaultOracleLimit;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive largest clique subdivision");
  oracle_cmd->add_option("-i,--input", oracle_graph)->required();
  oracle_cmd->add_option("--limit", oracle_limit);
  oracle_cmd->add_option("-w,--witness", oracle_witness, "write the witness certificate");

  auto* audit_cmd = app.add_subcommand("audit", "Audits");
  audit_cmd->require_subcommand(1);
  std::string audit_graph;
  int audit_s = 2, audit_t = 2;
  bool audit_force = false;
  auto* kst_cmd = audit_cmd->add_subcommand("kst", "K_{s,t}-freeness and the counting inequality");
  kst_cmd->add_option("-i,--input", audit_graph)->required();
  kst_cmd->add_option("--s", audit_s);
  kst_cmd->add_option("--t", audit_t);
  kst_cmd->add_flag("--force", audit_force, "run exhaustive search beyond the size guard");

  auto* experiment_cmd = app.add_subcommand("experiment", "Experiments");
  experiment_cmd->require_subcommand(1);
  std::string growth_qs = "2,3,5,7,11,13", growth_out = "-", growth_json_out, growth_mode, growth_params;
  std::vector<std::string> growth_sets;
  bool growth_runtime = false;
  std::uint64_t growth_seed = 0;
  auto* growth_cmd = experiment_cmd->add_subcommand("growth", "Order against degree on projective planes");
  growth_cmd->add_option("--qs", growth_qs);
  growth_cmd->add_option("-o,--output", growth_out, "CSV table");
  growth_cmd->add_option("--json", growth_json_out, "JSON table");
  growth_cmd->add_option("--mode", growth_mode);
  growth_cmd->add_option("--params", growth_params);
  growth_cmd->add_option("--set", growth_sets);
  auto* growth_seed_opt = growth_cmd->add_option("--seed", growth_seed);
  growth_cmd->add_flag("--runtime", growth_runtime, "include wall-clock time per row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate_cmd) {
      std::ostringstream out;
      write_edge_list(out, generate(gen));
      emit(gen.out, out.str());
      return 0;
    }
    if (*find_cmd) {
      PipelineConfig cfg = build_config(find.params_file, find.mode, find.sets, find_seed, find.seed);
      Graph g = load_graph(find.input);
      RunReport rep = run_pipeline(g, cfg);
      emit(find.output, dump_certificate(rep.certificate));
      if (!find.report.empty()) emit(find.report, rep.to_json().dump(2) + "\n");
      std::cerr << "order " << rep.order << " via " << rep.certificate.meta.route << "\n";
      return rep.verdict.valid ? 0 : kInvalid;
    }
    if (*verify_cmd) {
      Graph g = load_graph(verify_graph);
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(slurp(verify_cert));
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("certificate is not JSON: ") + e.what());
      }
      Verdict v = verify_subdivision(g, certificate_from_json(j));
      if (!v.valid) {
        std::cerr << "invalid: " << to_string(v.kind) << ": " << v.message << "\n";
        return kInvalid;
      }
      std::cout << "valid order " << v.order << "\n";
      return 0;
    }
    if (*oracle_cmd) {
      Graph g = load_graph(oracle_graph);
      OracleResult r = oracle_max_subdivision(g, oracle_limit);
      std::cout << r.order << "\n";
      if (!oracle_witness.empty()) emit(oracle_witness, dump_certificate(r.witness));
      return 0;
    }
    if (*kst_cmd) {
      Graph g = load_graph(audit_graph);
      KstParams p{audit_s, audit_t};
      KstSearchLimits limits;
      limits.force = audit_force;
      KstFreeResult free = is_kst_free(g, p, limits);
      nlohmann::json out = {{"s", p.s}, {"t", p.t}, {"free", free.free}};
      if (free.witness) out["witness"] = {{"s_side", free.witness->s_side}, {"t_side", free.witness->t_side}};
      bool holds = true;
      std::vector<int> side;
      if (is_bipartite(g, &side)) {
        VertexSet part[2];
        for (Vertex v = 0; v < g.num_vertices(); ++v) part[side[v]].push_back(v);
        nlohmann::json audits = nlohmann::json::array();
        for (int a = 0; a < 2; ++a) {
          nlohmann::json entry = {{"a_side", a}};
          try {
            CountAudit ca = audit_count_inequality(g, part[a], part[1 - a], p.s, p.t);
            entry["lhs"] = ca.lhs.to_string();
            entry["rhs"] = ca.rhs.to_string();
            entry["holds"] = ca.holds;
            holds = holds && ca.holds;
          } catch (const KstAuditRefused& e) {
            entry["refused"] = e.what();
          }
          audits.push_back(entry);
        }
        out["count_audits"] = audits;
      }
      std::cout << out.dump(2) << "\n";
      return holds ? 0 : kInvalid;
    }
    if (*growth_cmd) {
      PipelineConfig cfg = build_config(growth_params, growth_mode, growth_sets, growth_seed_opt, growth_seed);
      auto rows = experiment_linear_growth(parse_list(growth_qs), cfg);
      emit(growth_out, growth_csv(rows, growth_runtime));
      if (!growth_json_out.empty()) emit(growth_json_out, growth_json(rows, growth_runtime).dump(2) + "\n");
      return 0;
    }
  } catch (const SizeRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kRefused;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
