#include "topoclique/kst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "topoclique/errors.hpp"

namespace topoclique {

void KstParams::validate() const {
  if (s < 2 || t < s) throw InputError("K_{s,t} parameters need 2 <= s <= t");
}

namespace {

std::string describe(const KstWitness& w) {
  std::ostringstream os;
  os << "s-side {";
  for (std::size_t i = 0; i < w.s_side.size(); ++i) os << (i ? "," : "") << w.s_side[i];
  os << "} t-side {";
  for (std::size_t i = 0; i < w.t_side.size(); ++i) os << (i ? "," : "") << w.t_side[i];
  os << "}";
  return os.str();
}

// Lexicographic search for s vertices of `s_pool` with >= t common
// neighbours inside `t_pool`. Candidates for the next member are restricted
// to neighbours of the current common neighbourhood, which keeps order.
class JoinSearch {
 public:
  JoinSearch(const Graph& g, const VertexMask& s_pool, const VertexMask& t_pool, int s, int t)
      : g_(g), s_pool_(s_pool), t_pool_(t_pool), s_(s), t_(t), mark_(g.num_vertices(), 0) {}

  std::optional<KstWitness> run() {
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!s_pool_[v]) continue;
      VertexSet common;
      for (Vertex u : g_.neighbors(v)) {
        if (t_pool_[u]) common.push_back(u);
      }
      if (static_cast<int>(common.size()) < t_) continue;
      chosen_ = {v};
      if (extend(common)) return result_;
    }
    return std::nullopt;
  }

 private:
  bool extend(const VertexSet& common) {
    if (static_cast<int>(chosen_.size()) == s_) {
      result_ = KstWitness{chosen_, VertexSet(common.begin(), common.begin() + t_)};
      return true;
    }
    Vertex last = chosen_.back();
    VertexSet candidates;
    for (Vertex c : common) {
      for (Vertex w : g_.neighbors(c)) {
        if (w > last && s_pool_[w] && !mark_[w]) {
          mark_[w] = 1;
          candidates.push_back(w);
        }
      }
    }
    for (Vertex w : candidates) mark_[w] = 0;
    std::sort(candidates.begin(), candidates.end());
    for (Vertex w : candidates) {
      VertexSet next;
      auto nb = g_.neighbors(w);
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
      if (static_cast<int>(next.size()) < t_) continue;
      chosen_.push_back(w);
      if (extend(next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const VertexMask& s_pool_;
  const VertexMask& t_pool_;
  int s_, t_;
  VertexMask mark_;
  VertexSet chosen_;
  KstWitness result_;
};

}  // namespace

KstFreeResult is_kst_free(const Graph& g, const KstParams& p, const KstSearchLimits& limits) {
  p.validate();
  if (p.s >= 3 && g.num_vertices() > limits.max_vertices && !limits.force) {
    throw SizeRefused("K_{" + std::to_string(p.s) + "," + std::to_string(p.t) + "} search refused on " +
                      std::to_string(g.num_vertices()) + " vertices (limit " +
                      std::to_string(limits.max_vertices) + ")");
  }
  VertexMask all(static_cast<std::size_t>(g.num_vertices()), 1);
  KstFreeResult out;
  if (auto w = JoinSearch(g, all, all, p.s, p.t).run()) {
    out.free = false;
    out.witness = std::move(w);
  }
  return out;
}

bool kst_side_free(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b, int s, int t,
                   KstWitness* witness) {
  if (s < 1 || t < 1) throw InputError("kst_side_free needs s, t >= 1");
  VertexMask in_a = to_mask(g.num_vertices(), a);
  VertexMask in_b = to_mask(g.num_vertices(), b);
  auto found = JoinSearch(g, in_b, in_a, s, t).run();
  if (found && witness) *witness = *found;
  return !found;
}

Rational generalized_binomial(const Rational& x, int s) {
  if (s < 0) throw InputError("binomial needs s >= 0");
  if (x < Rational(s - 1)) return Rational(0);
  Rational out(1);
  for (int i = 0; i < s; ++i) out = out * (x - Rational(i)) / Rational(i + 1);
  return out;
}

CountAudit audit_count_inequality(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b, int s,
                                  int t) {
  KstWitness w;
  if (!kst_side_free(g, a, b, s, t, &w)) {
    throw KstAuditRefused("audit refused: complete join found, " + describe(w), w);
  }
  VertexSet set_a = normalize(VertexSet(a.begin(), a.end()));
  VertexSet set_b = normalize(VertexSet(b.begin(), b.end()));
  VertexMask in_b = to_mask(g.num_vertices(), set_b);
  std::int64_t cross = 0;
  for (Vertex v : set_a) {
    for (Vertex u : g.neighbors(v)) cross += in_b[u];
  }
  CountAudit audit;
  audit.a_size = static_cast<std::int64_t>(set_a.size());
  audit.b_size = static_cast<std::int64_t>(set_b.size());
  audit.degree_a = audit.a_size == 0 ? Rational(0) : Rational(cross, audit.a_size);
  audit.lhs = Rational(audit.a_size) * generalized_binomial(audit.degree_a, s);
  audit.rhs = Rational(t) * generalized_binomial(Rational(audit.b_size), s);
  audit.holds = audit.lhs <= audit.rhs;
  return audit;
}

double cor_kst_lower_bound(double delta, long long a_size, int s, int t) {
  if (delta < 0 || a_size < 1 || s < 1 || t < 1) throw InputError("cor_kst_lower_bound: bad arguments");
  return delta * std::pow(static_cast<double>(a_size), 1.0 / s) / (std::numbers::e * t);
}

double kst_min_vertices(double d, int s, int t) {
  if (d < 0 || s < 2 || t < 1) throw InputError("kst_min_vertices: bad arguments");
  return std::pow(d, static_cast<double>(s) / (s - 1)) / (2.0 * t);
}

}  // namespace topoclique
