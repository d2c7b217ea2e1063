#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "topoclique/certificate.hpp"
#include "topoclique/graph.hpp"
#include "topoclique/highdeg.hpp"
#include "topoclique/mode.hpp"
#include "topoclique/units.hpp"
#include "topoclique/verify.hpp"

namespace topoclique {

struct PipelineConfig {
  ParamMode mode = ParamMode::practical;
  int s = 2;
  int t = 2;
  double eps1 = 0.1;
  double eps2 = 0.1;
  double c0 = 0.1;
  double c1 = 1.0;
  double c = 0.1;
  std::uint64_t seed = 1;

  int exact_threshold = 18;
  int sampled_trials = 200;
  double delta_factor = 2.0;        // practical high-degree threshold, times d
  double density_threshold = 16.0;  // practical: units route when d >= this

  // Overrides; non-positive means derived.
  int sparse_r = -1;
  int sparse_far = 0;
  int sparse_cap = 0;
  int sparse_core_target = 0;
  bool relaxed_fallback = true;
  bool reroute = true;      // practical mode: star-reroute after the ladder
  int reroute_centres = 4;

  HighDegConfig highdeg;  // limits only; mode and constants come from above
  UnitsConfig units;

  /// Throws InputError on out-of-range constants.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Reads key=value lines ('#' comments) or a JSON object into cfg. Unknown
/// keys are rejected with InputError.
void apply_params(PipelineConfig& cfg, const std::string& text);

/// Sets one key; the same names apply_params accepts.
void set_param(PipelineConfig& cfg, const std::string& key, const std::string& value);

struct Attempt {
  std::string route;
  int order = 0;
  bool valid = false;
  std::string note;
};

struct RunReport {
  Rational d;
  nlohmann::json stages = nlohmann::json::array();
  std::string case_taken;   // highdeg | dense | sparse | trivial
  std::string paper_case;   // the branch the formulas pick
  std::vector<Attempt> attempts;
  SubdivisionCertificate certificate;
  Verdict verdict;
  int order = 0;
  double target_power = 0;   // d^{s/(2(s-1))}
  double target_linear = 0;  // c1 d
  int sparse_ledger_violations = 0;
  int sparse_runs = 0;
  bool contracts_ok = true;  // every exact stage contract held

  nlohmann::json to_json() const;
};

/// Halving, extraction, dichotomy, constructors, verification. The returned
/// certificate is in g's ids and has been verified against g.
RunReport run_pipeline(const Graph& g, const PipelineConfig& cfg);

struct GrowthRow {
  int q = 0;
  int n = 0;
  int d = 0;
  int order = 0;
  std::string route;
  double runtime_ms = 0;
  double per_d() const { return static_cast<double>(order) / d; }
  double per_sqrt_d() const;
};

std::vector<GrowthRow> experiment_linear_growth(const std::vector<int>& qs, const PipelineConfig& cfg);

/// Runtime is left out unless asked for, so tables compare byte for byte.
std::string growth_csv(const std::vector<GrowthRow>& rows, bool with_runtime = false);
nlohmann::json growth_json(const std::vector<GrowthRow>& rows, bool with_runtime = false);

}  // namespace topoclique
