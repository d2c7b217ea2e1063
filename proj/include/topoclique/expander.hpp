#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "topoclique/graph.hpp"

namespace topoclique {

/// The (eps1, k) pair of a sublinear expander. Natural logarithms throughout.
struct ExpanderParams {
  double eps1 = 0.1;
  double k = 1.0;

  /// Throws InputError unless 0 < eps1 < 1 and k > 0.
  void validate() const;
};

enum class CheckMode { exact, sampled };

std::string to_string(CheckMode mode);

struct ExpansionReport {
  bool is_expander = true;
  std::optional<VertexSet> witness;  // a violating X when is_expander is false
  CheckMode mode = CheckMode::exact;
  bool vacuous = false;  // no set size lies in [ceil(k/2), floor(n/2)]
};

inline constexpr int kDefaultExactThreshold = 18;

/// 0 below k/5, eps1 / ln^2(15x/k) from k/5 on.
double epsilon(double x, const ExpanderParams& params);

/// (2/eps1) ln^3(15n/k).
double diam_bound(long long n, const ExpanderParams& params);

/// Closed form of the integral of eps(x)/x over [1, inf). Extraction wants
/// this below 1/8; reported, not enforced.
double epsilon_integral(const ExpanderParams& params);

/// Inclusive range of set sizes the expansion condition quantifies over.
struct SizeRange {
  int lo = 1;
  int hi = 0;
  bool empty() const { return lo > hi; }
};
SizeRange expansion_size_range(int n, const ExpanderParams& params);

/// True iff |X| is in range and |N(X)| < eps(|X|)|X|.
bool violates_expansion(const Graph& g, std::span<const Vertex> x, const ExpanderParams& params);

/// Enumerates every qualifying X. Witness is the lexicographically first
/// violating set (sets compared as sorted sequences). Throws SizeRefused
/// above `threshold` vertices.
ExpansionReport verify_expander_exact(const Graph& g, const ExpanderParams& params,
                                      int threshold = kDefaultExactThreshold);

/// Heuristic check: BFS-grown connected sets (every prefix is tested) and
/// uniform random subsets. "true" only means no violation was found.
ExpansionReport verify_expander_sampled(const Graph& g, const ExpanderParams& params, int trials,
                                        std::uint64_t seed);

/// Largest eps1 for which g is an (eps1, k)-expander, by exhaustive search;
/// +infinity when the condition is vacuous. Throws SizeRefused above threshold.
double max_certified_eps1(const Graph& g, double k, int threshold = kDefaultExactThreshold);

struct ExtractOptions {
  int exact_threshold = kDefaultExactThreshold;
  int sampled_trials = 200;
  std::uint64_t seed = 1;
};

struct ExtractedExpander {
  Subgraph sub;                 // the expander H with ids into the input graph
  ExpanderParams certified;     // (eps1', k) H was last checked against
  CheckMode mode = CheckMode::exact;
  bool expansion_verified = false;  // passed the check at `certified`
  int recursions = 0;           // violating-set restrictions performed
  int stripped = 0;             // low-degree vertices removed
};

/// Subgraph H with d(H) >= d(G)/2 and delta(H) >= d(H)/2, both checked in
/// exact arithmetic. Alternates stripping vertices of degree < d/2 with
/// restricting to the denser of G[X u N(X)] and G - X for a violating X.
ExtractedExpander extract_expander(const Graph& g, const ExpanderParams& params,
                                   const ExtractOptions& options = {});

/// Shortest A-B path in G - W, if its length is at most max_len. Throws
/// InputError when A or B is empty or W meets A u B.
std::optional<Path> short_path_avoiding(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                        std::span<const Vertex> w, int max_len);

/// Mask-based core of short_path_avoiding. Sources that are blocked are
/// ignored; a source that is also a target yields a one-vertex path.
std::optional<Path> shortest_path_masked(const Graph& g, std::span<const Vertex> sources,
                                         const VertexMask& targets, const VertexMask* blocked, int max_len);

}  // namespace topoclique
