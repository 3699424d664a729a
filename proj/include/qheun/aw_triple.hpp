#ifndef QHEUN_AW_TRIPLE_HPP
#define QHEUN_AW_TRIPLE_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qheun/errors.hpp"
#include "qheun/families.hpp"
#include "qheun/mpoly.hpp"
#include "qheun/quadratic_field.hpp"

namespace qheun {

/// Unknowns of the triple, in solver order.
enum TripleVar : std::size_t { kTau1, kTau3, kTau0, kTau1p, kTau3p, kTau0p, kAlpha, kBeta, kOmega1, kOmega2, kOmega3, kTripleVars };

inline const std::vector<std::string>& triple_variable_names() {
  static const std::vector<std::string> names{"tau1", "tau3", "tau0", "tau1'", "tau3'", "tau0'",
                                              "alpha", "beta", "omega1", "omega2", "omega3"};
  return names;
}

struct AwTripleConfig {
  /// Search nodes (simplify/branch steps) before giving up with SolverBlowup.
  std::size_t node_budget = 4000;
  /// Total stored terms across the live equation set.
  std::size_t term_budget = 200000;
};

enum class TripleStatus { Solved, NoSolution };

struct AwTripleResult {
  TripleStatus status = TripleStatus::NoSolution;
  /// Values in TripleVar order; elements of Q or of Q(sqrt field).
  std::array<QuadraticNumber, kTripleVars> values{};
  std::optional<Rational> field;
  /// Variables fixed by free choice rather than forced by an equation.
  int free_parameters = 0;
  std::size_t nodes = 0;
  std::string reason;
  std::vector<std::string> log;
  bool verified = false;
  std::array<std::string, 3> residuals;
};

namespace detail {

using TripleMono = MPoly<Rational>::Monomial;
using OpPoly = std::map<TripleMono, SkewOperator>;

inline TripleMono triple_mono(std::initializer_list<std::size_t> vars) {
  TripleMono m(kTripleVars, 0);
  for (auto v : vars) ++m[v];
  return m;
}

inline void op_add(OpPoly& acc, const TripleMono& m, const SkewOperator& op) {
  if (op.is_zero()) return;
  auto [it, fresh] = acc.try_emplace(m, op);
  if (!fresh) {
    it->second += op;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline OpPoly op_mul(const OpPoly& a, const OpPoly& b) {
  OpPoly out;
  for (const auto& [ma, oa] : a)
    for (const auto& [mb, ob] : b) {
      TripleMono m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      op_add(out, m, oa * ob);
    }
  return out;
}

inline OpPoly op_lin(std::initializer_list<std::pair<Rational, const OpPoly*>> parts) {
  OpPoly out;
  for (const auto& [s, p] : parts)
    for (const auto& [m, op] : *p) op_add(out, m, s * op);
  return out;
}

}  // namespace detail

/// Coefficient equations of the three relations
///   Yt W1 - q W1 Yt = W2 + omega1,  W1 W2 - q W2 W1 = Yt + omega2,  W2 Yt - q Yt W2 = W1 + omega3
/// with W1 = tau1 (XY - q YX) + tau3 X + tau0, W2 = tau1' (XY - YX/q) + tau3' X + tau0',
/// Yt = alpha Y + beta. Each entry is (relation index, polynomial).
inline std::vector<std::pair<int, MPoly<Rational>>> aw_triple_equations(const Params& p) {
  using namespace detail;
  const Rational& q = p.q;
  const SkewOperator x = position_operator(q), y = big_qjacobi_operator(p), id = SkewOperator::identity(q);
  const SkewOperator xy = x * y, yx = y * x;
  const OpPoly w1{{triple_mono({kTau1}), xy - q * yx}, {triple_mono({kTau3}), x}, {triple_mono({kTau0}), id}};
  const OpPoly w2{{triple_mono({kTau1p}), xy - q.inverse() * yx}, {triple_mono({kTau3p}), x}, {triple_mono({kTau0p}), id}};
  const OpPoly yt{{triple_mono({kAlpha}), y}, {triple_mono({kBeta}), id}};
  const OpPoly om1{{triple_mono({kOmega1}), id}}, om2{{triple_mono({kOmega2}), id}}, om3{{triple_mono({kOmega3}), id}};
  const Rational one(1), mq = -q;
  const OpPoly a = op_mul(yt, w1), b = op_mul(w1, yt), c = op_mul(w1, w2), d = op_mul(w2, w1), e = op_mul(w2, yt),
               f = op_mul(yt, w2);
  const std::array<OpPoly, 3> rels{op_lin({{one, &a}, {mq, &b}, {-one, &w2}, {-one, &om1}}),
                                   op_lin({{one, &c}, {mq, &d}, {-one, &yt}, {-one, &om2}}),
                                   op_lin({{one, &e}, {mq, &f}, {-one, &w1}, {-one, &om3}})};
  std::vector<std::pair<int, MPoly<Rational>>> out;
  for (int r = 0; r < 3; ++r) {
    std::map<std::pair<int, int>, MPoly<Rational>> eqs;
    for (const auto& [m, op] : rels[static_cast<std::size_t>(r)]) {
      for (const auto& [k, coeff] : op.coeffs()) {
        const auto lp = coeff.as_laurent();
        if (!lp) throw InvalidParameters("triple operators must have Laurent coefficients");
        for (const auto& [ex, val] : lp->terms()) {
          auto [it, fresh] = eqs.try_emplace({k, ex}, MPoly<Rational>(kTripleVars));
          it->second.add_term(m, val);
        }
      }
    }
    for (auto& [key, poly] : eqs)
      if (!poly.is_zero()) out.emplace_back(r, std::move(poly));
  }
  return out;
}

namespace detail {

/// Depth-first elimination with branching over roots and free choices.
template <ExactField K>
class TripleSearch {
 public:
  using Poly = MPoly<K>;
  using Binding = std::pair<std::size_t, Poly>;

  struct Outcome {
    std::optional<std::vector<K>> values;
    std::optional<mpz_class> extension;
    std::string reason;
    int free_parameters = 0;
  };

  TripleSearch(const AwTripleConfig& cfg, std::vector<std::string>& log) : cfg_(cfg), log_(log) {}

  Outcome run(std::vector<Poly> eqs) {
    Outcome out;
    std::vector<Binding> bindings;
    search(std::move(eqs), bindings, 0, out);
    return out;
  }

  [[nodiscard]] std::size_t nodes() const { return nodes_; }

 private:
  static constexpr std::array<std::size_t, 3> kNonzero{kTau1, kTau1p, kAlpha};
  // W2 parameters and omega1 first: relation 1 is linear in them.
  static constexpr std::array<std::size_t, kTripleVars> kLinearOrder{
      kTau1p, kTau3p, kTau0p, kOmega1, kOmega2, kOmega3, kTau3, kTau0, kAlpha, kBeta, kTau1};
  static constexpr std::array<std::size_t, kTripleVars> kFreeOrder{
      kTau0p, kTau0, kTau3, kTau3p, kOmega3, kOmega2, kOmega1, kBeta, kTau1, kTau1p, kAlpha};

  // Returns false when the branch is dead; fills `out.values` on success.
  bool search(std::vector<Poly> eqs, std::vector<Binding>& bindings, int free_used, Outcome& out) {
    if (++nodes_ > cfg_.node_budget)
      throw SolverBlowup("triple search exceeded " + std::to_string(cfg_.node_budget) + " nodes (" +
                         std::to_string(bindings.size()) + " unknowns fixed, " + std::to_string(eqs.size()) +
                         " equations left)");
    if (!normalize(eqs, out)) return false;
    if (eqs.empty()) return finish(bindings, free_used, out);

    // Linear equations with a constant coefficient, fewest terms first.
    std::optional<std::pair<std::size_t, std::size_t>> lin;  // (equation, variable)
    for (std::size_t v : kLinearOrder) {
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (!eqs[i].constant_linear_coeff(v)) continue;
        if (!lin || eqs[i].terms().size() < eqs[lin->first].terms().size()) lin = {{i, v}};
      }
      if (lin) break;
    }
    if (lin) {
      const auto [i, v] = *lin;
      const K c = *eqs[i].constant_linear_coeff(v);
      const Poly expr = (K(-1) / c) * (eqs[i] - c * Poly::variable(kTripleVars, v));
      return bind(std::move(eqs), bindings, v, expr, free_used, out);
    }

    // Univariate equations: branch over roots in the field.
    for (const auto& e : eqs) {
      const auto vars = e.variables();
      if (vars.size() != 1) continue;
      const auto fr = roots_in_field(e.as_univariate(vars[0]));
      if (fr.roots.empty()) {
        // Remember the first extension that would help, but keep looking
        // for a branch that stays in the current field.
        if (fr.extension && !out.extension) {
          out.extension = fr.extension;
          log_.push_back("would need sqrt(" + fr.extension->get_str() + ") for " + triple_variable_names()[vars[0]]);
        }
        out.reason = "no root in the field for " + e.to_string(triple_variable_names());
        return false;
      }
      for (const auto& r : fr.roots) {
        log_.push_back("root " + triple_variable_names()[vars[0]] + " = " + r.to_string());
        if (bind(eqs, bindings, vars[0], Poly(kTripleVars, r), free_used, out)) return true;
      }
      return false;
    }

    // Free choice: fixing the variable of highest degree tends to leave the
    // rest linear.
    std::vector<std::size_t> order(kFreeOrder.begin(), kFreeOrder.end());
    auto max_degree = [&](std::size_t v) {
      int d = 0;
      for (const auto& e : eqs) d = std::max(d, e.degree_in(v));
      return d;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return max_degree(l) > max_degree(r); });
    for (std::size_t v : order) {
      if (max_degree(v) == 0) continue;
      for (long num : {1L, -1L, 2L, -2L, 3L}) {
        for (long den : {1L, 2L}) {
          if (den == 2 && num != 1) continue;
          const K val = K(Rational(num, den));
          log_.push_back("choose " + triple_variable_names()[v] + " = " + val.to_string());
          if (bind(eqs, bindings, v, Poly(kTripleVars, val), free_used + 1, out)) return true;
        }
      }
      return false;
    }
    out.reason = "no elimination step applies";
    return false;
  }

  bool bind(std::vector<Poly> eqs, std::vector<Binding>& bindings, std::size_t v, const Poly& expr, int free_used,
            Outcome& out) {
    for (auto& e : eqs) e = e.substitute(v, expr);
    bindings.emplace_back(v, expr);
    const bool ok = search(std::move(eqs), bindings, free_used, out);
    if (!ok) bindings.pop_back();
    return ok;
  }

  bool normalize(std::vector<Poly>& eqs, Outcome& out) {
    std::set<Poly> seen;
    std::vector<Poly> next;
    std::size_t terms = 0;
    const std::vector<std::size_t> nz(kNonzero.begin(), kNonzero.end());
    for (auto& e : eqs) {
      Poly s = e.strip_content(nz);
      if (s.is_zero()) continue;
      if (s.is_constant()) {
        out.reason = "contradiction " + s.to_string(triple_variable_names());
        return false;
      }
      s = s.monic();
      if (!seen.insert(s).second) continue;
      terms += s.terms().size();
      next.push_back(std::move(s));
    }
    if (terms > cfg_.term_budget)
      throw SolverBlowup("triple equations grew to " + std::to_string(terms) + " terms");
    eqs = std::move(next);
    return true;
  }

  bool finish(const std::vector<Binding>& bindings, int free_used, Outcome& out) {
    std::vector<std::optional<K>> val(kTripleVars);
    std::vector<bool> bound(kTripleVars, false);
    for (const auto& b : bindings) bound[b.first] = true;
    int extra = 0;
    std::vector<K> point(kTripleVars, K(0));
    for (std::size_t v = 0; v < kTripleVars; ++v) {
      if (bound[v]) continue;
      const bool needs_nonzero = std::find(kNonzero.begin(), kNonzero.end(), v) != kNonzero.end();
      point[v] = needs_nonzero ? K(1) : K(0);
      ++extra;
    }
    // Later bindings only mention variables that were still free at that
    // point, so evaluating in reverse order resolves everything.
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) point[it->first] = it->second.evaluate(point);
    for (std::size_t v : kNonzero)
      if (point[v].is_zero()) {
        out.reason = triple_variable_names()[v] + " vanished";
        return false;
      }
    out.values = point;
    out.free_parameters = free_used + extra;
    return true;
  }

  const AwTripleConfig& cfg_;
  std::vector<std::string>& log_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Evaluates the three relations with the given values over Q(sqrt D) by
/// direct operator arithmetic; empty strings mean exact zero.
inline std::array<std::string, 3> aw_triple_residuals(const Params& p,
                                                      const std::array<QuadraticNumber, kTripleVars>& v) {
  using QOp = BasicSkewOperator<QuadraticNumber>;
  auto embed = [](const Rational& r) { return QuadraticNumber(r); };
  const QOp x = position_operator(p.q).map_field<QuadraticNumber>(embed);
  const QOp y = big_qjacobi_operator(p).map_field<QuadraticNumber>(embed);
  const QuadraticNumber q(p.q);
  const QOp id = QOp::identity(q);
  const QOp xy = x * y, yx = y * x;
  const QOp w1 = v[kTau1] * (xy - q * yx) + v[kTau3] * x + v[kTau0] * id;
  const QOp w2 = v[kTau1p] * (xy - (QuadraticNumber(1) / q) * yx) + v[kTau3p] * x + v[kTau0p] * id;
  const QOp yt = v[kAlpha] * y + v[kBeta] * id;
  const std::array<QOp, 3> res{yt * w1 - q * (w1 * yt) - w2 - v[kOmega1] * id,
                               w1 * w2 - q * (w2 * w1) - yt - v[kOmega2] * id,
                               w2 * yt - q * (yt * w2) - w1 - v[kOmega3] * id};
  std::array<std::string, 3> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = res[i].is_zero() ? "" : res[i].to_string();
  return out;
}

/// Finds tau-sets for W1 and W2, the affine map Y -> alpha Y + beta and the
/// omegas. Works over Q and, if a quadratic obstruction appears, over the
/// quadratic field it names. Every returned solution is re-verified.
inline AwTripleResult solve_aw_triple(const Params& p, const AwTripleConfig& cfg = {}) {
  if (p.a.is_zero() || p.b.is_zero() || p.c.is_zero())
    throw InvalidParameters("the triple needs nonzero a, b, c");
  if ((Rational(1) + p.a * p.b * p.q).is_zero()) throw InvalidParameters("the triple needs 1 + abq != 0");
  AwTripleResult res;
  std::vector<MPoly<Rational>> eqs;
  for (auto& [rel, e] : aw_triple_equations(p)) eqs.push_back(std::move(e));

  detail::TripleSearch<Rational> over_q(cfg, res.log);
  auto outcome = over_q.run(eqs);
  res.nodes = over_q.nodes();
  if (outcome.values) {
    for (std::size_t i = 0; i < kTripleVars; ++i) res.values[i] = QuadraticNumber((*outcome.values)[i]);
    res.free_parameters = outcome.free_parameters;
    res.status = TripleStatus::Solved;
  } else if (outcome.extension) {
    const Rational d((*outcome.extension));
    res.field = d;
    auto dptr = std::make_shared<const Rational>(d);
    res.log.push_back("restart over Q(sqrt(" + d.to_string() + "))");
    std::vector<MPoly<QuadraticNumber>> lifted;
    for (const auto& e : eqs) {
      MPoly<QuadraticNumber> l(kTripleVars);
      for (const auto& [m, c] : e.terms()) l.add_term(m, QuadraticNumber(c, Rational(0), dptr));
      lifted.push_back(std::move(l));
    }
    // Coefficients carry the field so sqrt() can land on sqrt(D).
    detail::TripleSearch<QuadraticNumber> over_ext(cfg, res.log);
    auto ext = over_ext.run(std::move(lifted));
    res.nodes += over_ext.nodes();
    if (ext.values) {
      for (std::size_t i = 0; i < kTripleVars; ++i) res.values[i] = (*ext.values)[i];
      res.free_parameters = ext.free_parameters;
      res.status = TripleStatus::Solved;
    } else {
      res.reason = ext.extension ? "needs a second quadratic extension sqrt(" + ext.extension->get_str() + ")"
                                 : ext.reason;
    }
  } else {
    res.reason = outcome.reason;
  }
  if (res.status == TripleStatus::Solved) {
    res.residuals = aw_triple_residuals(p, res.values);
    res.verified = res.residuals[0].empty() && res.residuals[1].empty() && res.residuals[2].empty();
  }
  return res;
}

}  // namespace qheun

#endif  // QHEUN_AW_TRIPLE_HPP
