#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <span>
#include <utility>

#include "topoclique/graph.hpp"
#include "topoclique/rational.hpp"

namespace topoclique {

struct KstParams {
  int s = 2;
  int t = 2;

  /// Throws InputError unless 2 <= s <= t.
  void validate() const;
};

/// A complete join between `s_side` and `t_side`.
struct KstWitness {
  VertexSet s_side;
  VertexSet t_side;
};

/// Raised by audit_count_inequality when its side-freeness precondition fails.
class KstAuditRefused : public std::runtime_error {
 public:
  KstAuditRefused(const std::string& what, KstWitness w) : std::runtime_error(what), witness(std::move(w)) {}
  KstWitness witness;
};

struct KstFreeResult {
  bool free = true;
  std::optional<KstWitness> witness;
};

struct KstSearchLimits {
  int max_vertices = 60;  // exhaustive search with s >= 3 above this is refused
  bool force = false;
};

/// Searches s-subsets in lexicographic order, pruning on common
/// neighbourhood size; the first s-set with >= t common neighbours is the
/// witness. s = 2 is always polynomial and never refused; s >= 3 on more
/// than limits.max_vertices vertices throws SizeRefused unless forced.
KstFreeResult is_kst_free(const Graph& g, const KstParams& p, const KstSearchLimits& limits = {});

/// True iff no t vertices of A and s vertices of B are completely joined.
/// Only A-B edges count. A witness (s-side in B, t-side in A) is stored when
/// the answer is false and `witness` is non-null.
bool kst_side_free(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b, int s, int t,
                   KstWitness* witness = nullptr);

/// x(x-1)...(x-s+1)/s! for rational x; 0 when x < s-1.
Rational generalized_binomial(const Rational& x, int s);

struct CountAudit {
  std::int64_t a_size = 0;
  std::int64_t b_size = 0;
  Rational degree_a;  // average number of B-neighbours over A
  Rational lhs;       // |A| * C(d(A), s)
  Rational rhs;       // t * C(|B|, s)
  bool holds = false;
};

/// Evaluates |A| C(d(A), s) <= t C(|B|, s) exactly. Throws KstAuditRefused
/// when (A, B) is not K_{s,t}-side-free.
CountAudit audit_count_inequality(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b, int s,
                                  int t);

/// delta |A|^{1/s} / (e t): guaranteed size of B when every vertex of A has
/// at least delta neighbours in B.
double cor_kst_lower_bound(double delta, long long a_size, int s, int t);

/// d^{s/(s-1)} / (2t): lower bound on |G| for a K_{s,t}-free G of average
/// degree d.
double kst_min_vertices(double d, int s, int t);

}  // namespace topoclique
