#ifndef QHEUN_RELATIONS_HPP
#define QHEUN_RELATIONS_HPP

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qheun/errors.hpp"
#include "qheun/families.hpp"
#include "qheun/heun.hpp"
#include "qheun/linear_system.hpp"
#include "qheun/report.hpp"

namespace qheun {

/// Fit with no exact solution. Carries an irreducible inconsistent subset of
/// the coefficient equations, each labelled by shift degree and x-power.
class InconsistentFit : public Error {
 public:
  InconsistentFit(const std::string& what, LinSystem<Rational> core, std::vector<std::string> labels)
      : Error(what), core_(std::move(core)), labels_(std::move(labels)) {}
  [[nodiscard]] const LinSystem<Rational>& subsystem() const { return core_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

 private:
  LinSystem<Rational> core_;
  std::vector<std::string> labels_;
};

/// Named operators that words are spelled in, one letter per generator.
using Alphabet = std::map<char, SkewOperator>;

/// Product of the letters of `word`, left to right; the empty word is I.
inline SkewOperator word_operator(const Alphabet& gens, std::string_view word, const Rational& q) {
  SkewOperator out = SkewOperator::identity(q);
  for (char ch : word) {
    auto it = gens.find(ch);
    if (it == gens.end()) throw InvalidParameters(std::string("unknown generator ") + ch);
    out = out * it->second;
  }
  return out;
}

/// One right-hand-side term: a sum of words times a fixed or unknown coefficient.
struct RelationTerm {
  std::vector<std::string> words;
  std::variant<Rational, std::size_t> slot;
};

/// lhs = sum of terms, with the unknowns numbered 0..unknowns-1.
struct RelationTemplate {
  std::string name;
  SkewOperator lhs;
  std::vector<RelationTerm> terms;
};

struct FitResult {
  SolveKind kind = SolveKind::Inconsistent;
  std::vector<Rational> values;
  std::size_t null_dim = 0;
  std::vector<std::string> infeasible;
  bool residual_zero = false;

  [[nodiscard]] bool consistent() const { return kind != SolveKind::Inconsistent; }
};

namespace detail {

// Sum of the words of a term as one operator.
inline SkewOperator term_operator(const Alphabet& gens, const RelationTerm& t, const Rational& q) {
  SkewOperator out(q);
  for (const auto& w : t.words) out += word_operator(gens, w, q);
  return out;
}

// Equations "coefficient of x^e in shift k" over a common denominator per k.
struct CoefficientEquations {
  LinSystem<Rational> sys;
  std::vector<std::string> labels;
};

inline CoefficientEquations coefficient_equations(const SkewOperator& constant,
                                                  const std::vector<SkewOperator>& columns) {
  std::map<int, Poly> den;  // lcm of denominators per shift
  auto absorb = [&](const SkewOperator& op) {
    for (const auto& [k, c] : op.coeffs()) {
      auto [it, fresh] = den.try_emplace(k, c.denominator());
      if (!fresh && !(it->second == c.denominator())) {
        const Poly g = gcd(it->second, c.denominator());
        it->second = divmod(it->second * c.denominator(), g).first;
      }
    }
  };
  absorb(constant);
  for (const auto& col : columns) absorb(col);

  CoefficientEquations out{LinSystem<Rational>(columns.size()), {}};
  auto scaled = [&](const SkewOperator& op, int k) {
    const RatFunc c = op.coeff(k);
    if (c.is_zero()) return Poly();
    return c.numerator() * divmod(den.at(k), c.denominator()).first;
  };
  for (const auto& [k, d] : den) {
    const Poly rhs = scaled(constant, k);
    std::vector<Poly> cols;
    int top = rhs.is_zero() ? 0 : rhs.degree();
    for (const auto& col : columns) {
      cols.push_back(scaled(col, k));
      if (!cols.back().is_zero()) top = std::max(top, cols.back().degree());
    }
    for (int e = 0; e <= top; ++e) {
      std::vector<Rational> row;
      bool any = !rhs.coeff(e).is_zero();
      for (const auto& cp : cols) {
        row.push_back(cp.coeff(e));
        any = any || !row.back().is_zero();
      }
      if (!any) continue;
      out.sys.add_equation(row, rhs.coeff(e));
      out.labels.push_back("T^" + std::to_string(k) + " x^" + std::to_string(e));
    }
  }
  return out;
}

}  // namespace detail

/// lhs - sum(fixed terms) - sum(value_i * unknown terms) as an operator.
inline SkewOperator relation_residual(const Alphabet& gens, const RelationTemplate& rel,
                                      const std::vector<Rational>& values) {
  const Rational& q = rel.lhs.q();
  SkewOperator res = rel.lhs;
  for (const auto& t : rel.terms) {
    const Rational c = std::holds_alternative<Rational>(t.slot) ? std::get<Rational>(t.slot)
                                                                : values.at(std::get<std::size_t>(t.slot));
    if (!c.is_zero()) res -= c * detail::term_operator(gens, t, q);
  }
  return res;
}

/// Solves for the unknown slots of several relations at once by equating
/// every (shift, x-power) coefficient. Parametric fits pick the free
/// variables as zero; the null dimension is reported alongside.
inline FitResult fit_relations(const Alphabet& gens, const std::vector<RelationTemplate>& rels, std::size_t unknowns,
                               bool reverse_order = false) {
  LinSystem<Rational> sys(unknowns);
  std::vector<std::string> labels;
  for (const auto& rel : rels) {
    const Rational& q = rel.lhs.q();
    SkewOperator constant = rel.lhs;
    std::vector<SkewOperator> cols(unknowns, SkewOperator(q));
    for (const auto& t : rel.terms) {
      const SkewOperator op = detail::term_operator(gens, t, q);
      if (std::holds_alternative<Rational>(t.slot)) constant -= std::get<Rational>(t.slot) * op;
      else cols.at(std::get<std::size_t>(t.slot)) += op;
    }
    auto eqs = detail::coefficient_equations(constant, cols);
    for (std::size_t i = 0; i < eqs.sys.equations(); ++i) {
      sys.add_equation(eqs.sys.matrix.row(i), eqs.sys.rhs[i]);
      labels.push_back(rel.name + ": " + eqs.labels[i]);
    }
  }
  if (reverse_order) {
    LinSystem<Rational> rev(unknowns);
    std::vector<std::string> rl;
    for (std::size_t i = sys.equations(); i-- > 0;) {
      auto row = sys.matrix.row(i);
      std::reverse(row.begin(), row.end());
      rev.add_equation(row, sys.rhs[i]);
      rl.push_back(labels[i]);
    }
    sys = std::move(rev);
    labels = std::move(rl);
  }
  const auto sol = solve_exact(sys);
  FitResult out;
  out.kind = sol.kind;
  if (!sol.consistent()) {
    const auto core = minimal_infeasible_rows(sys);
    for (auto i : core) out.infeasible.push_back(labels[i]);
    throw InconsistentFit("relation fit is inconsistent (" + std::to_string(core.size()) + " conflicting equations)",
                          subsystem(sys, core), out.infeasible);
  }
  out.values = sol.particular;
  if (reverse_order) std::reverse(out.values.begin(), out.values.end());
  out.null_dim = sol.null_basis.size();
  out.residual_zero = true;
  for (const auto& rel : rels) out.residual_zero = out.residual_zero && relation_residual(gens, rel, out.values).is_zero();
  return out;
}

/// 2 - q - 1/q.
inline Rational structure_r(const Rational& q) { return Rational(2) - q - q.inverse(); }

/// Structure constants of the q-Hahn relations in the X, Y realization.
struct QHahnConstants {
  Rational r, xi1, xi3, xi4, xi5, xi6, xi7;
};

inline QHahnConstants qhahn_constants(const Params& p) {
  const Rational& q = p.q;
  const Rational one(1), qm = (q - one) * (q - one);
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  return {structure_r(q),
          -qm * (a * b + q.inverse()),
          qm * (a * b + a * c + a + c),
          qm * (a * b - one) * (q.inverse() - q * a * b),
          qm * (a * b - one) * (a * q * (b + c) - a - c),
          Rational(0),
          -a * c * qm * (q + one)};
}

/// K1 = X, K2 = Y, K3 = [K1, K2]:
///   [K2,K3] = r K2K1K2 + xi1 {K1,K2} + xi3 K2 + xi4 K1 + xi5,
///   [K3,K1] = r K1K2K1 + xi1 K1^2 + xi3 K1 + xi6 K2 + xi7.
inline Report verify_qhahn(const Params& p) {
  const Rational& q = p.q;
  const SkewOperator k1 = position_operator(q), k2 = big_qjacobi_operator(p), k3 = commutator(k1, k2);
  const SkewOperator id = SkewOperator::identity(q);
  const auto c = qhahn_constants(p);
  const SkewOperator res1 = commutator(k2, k3) - (c.r * (k2 * k1 * k2) + c.xi1 * anticommutator(k1, k2) + c.xi3 * k2 +
                                                  c.xi4 * k1 + c.xi5 * id);
  const SkewOperator res2 =
      commutator(k3, k1) - (c.r * (k1 * k2 * k1) + c.xi1 * (k1 * k1) + c.xi3 * k1 + c.xi6 * k2 + c.xi7 * id);
  Report rep;
  const std::vector<std::pair<std::string, std::string>> in{{"params", p.to_string()}};
  rep.add("qhahn relation [K2,K3]", res1.is_zero(), res1.is_zero() ? "" : res1.serialize(), in);
  rep.add("qhahn relation [K3,K1]", res2.is_zero(), res2.is_zero() ? "" : res2.serialize(), in);
  return rep;
}

/// Extra coefficients e1..e4 of the Heun-AW relations as printed in the source.
inline std::array<Rational, 4> heun_aw_extras_published(const Params& p, const TauSet& t) {
  const Rational& q = p.q;
  const Rational one(1), qi = q.inverse();
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational e1 = -t.t4 * structure_r(q);
  const Rational e2 = t.t4 * (one - qi) * (q.pow(3) - one);
  const Rational e3 = -t.t4 * t.t4 * (one + q * q) * (one - qi) * (one - qi);
  const Rational e4 = t.t4 * t.t4 * (a * b * q + one) * (Rational(2) - q + q * q) +
                      t.t4 * (one + q + q * q) * (t.t0 + q * (t.t1 + t.t2) * (a + c + a * c + a * b)) +
                      a * c * (q + one) * (q * q + q + one) * (q * t.t1 + t.t2) * (t.t1 + q * t.t2);
  return {e1, e2, e3, e4};
}

/// e1..e4 as forced by the realization. e1 and e3 agree with the printed
/// values; e2 carries an extra 1/q and e4 an overall -(1 - 1/q)^2 with
/// 2 - q + 2q^2 in the tau4^2 term.
inline std::array<Rational, 4> heun_aw_extras_corrected(const Params& p, const TauSet& t) {
  const Rational& q = p.q;
  const Rational one(1), qi = q.inverse();
  const Rational& a = p.a;
  const Rational& b = p.b;
  const Rational& c = p.c;
  const Rational e1 = -t.t4 * structure_r(q);
  const Rational e2 = t.t4 * (one - qi) * (q.pow(3) - one) * qi;
  const Rational e3 = -t.t4 * t.t4 * (one + q * q) * (one - qi) * (one - qi);
  const Rational bracket = t.t4 * t.t4 * (a * b * q + one) * (Rational(2) - q + Rational(2) * q * q) +
                           t.t4 * (one + q + q * q) * (t.t0 + q * (t.t1 + t.t2) * (a + c + a * c + a * b)) +
                           a * c * (q + one) * (q * q + q + one) * (q * t.t1 + t.t2) * (t.t1 + q * t.t2);
  const Rational e4 = -(one - qi) * (one - qi) * bracket;
  return {e1, e2, e3, e4};
}

/// How the extra coefficients enter the Heun-AW fit.
enum class ExtrasMode {
  Published,  // e1..e4 fixed to the printed closed forms
  Corrected,  // e1..e4 fixed to the realization-derived closed forms
  Zero,       // e1..e4 = 0: the pure AW relations
  Free        // e1..e4 and r are unknowns as well
};

inline const char* to_string(ExtrasMode m) {
  switch (m) {
    case ExtrasMode::Published: return "published";
    case ExtrasMode::Corrected: return "corrected";
    case ExtrasMode::Zero: return "zero";
    case ExtrasMode::Free: return "free";
  }
  return "?";
}

struct HeunAwFit {
  ExtrasMode mode = ExtrasMode::Published;
  FitResult fit;
  std::array<Rational, 10> s{};
  std::array<Rational, 4> e{};
  Rational r;
};

/// Builds both Heun-AW relations for W = algebraic_heun(p, t):
///   [Y,[W,Y]] = e1 Y^3 + r YWY + s1 Y^2 + s2 {Y,W} + s3 W + s4 Y + s5,
///   [W,[Y,W]] = e2 YWY + e3 Y^3 + e4 Y^2 + r WYW + s6 W^2 + s7 {Y,W} + s8 W + s9 Y + s10.
/// Unknown indices: s1..s10 -> 0..9; in Free mode e1..e4 -> 10..13 and r -> 14.
inline std::pair<Alphabet, std::vector<RelationTemplate>> heun_aw_templates(const Params& p, const TauSet& t,
                                                                             ExtrasMode mode) {
  const Rational& q = p.q;
  const SkewOperator y = big_qjacobi_operator(p), w = algebraic_heun(p, t);
  Alphabet gens{{'Y', y}, {'W', w}};
  std::array<std::variant<Rational, std::size_t>, 4> e;
  std::variant<Rational, std::size_t> r = structure_r(q);
  switch (mode) {
    case ExtrasMode::Published: {
      const auto v = heun_aw_extras_published(p, t);
      for (std::size_t i = 0; i < 4; ++i) e[i] = v[i];
      break;
    }
    case ExtrasMode::Corrected: {
      const auto v = heun_aw_extras_corrected(p, t);
      for (std::size_t i = 0; i < 4; ++i) e[i] = v[i];
      break;
    }
    case ExtrasMode::Zero:
      for (auto& x : e) x = Rational(0);
      break;
    case ExtrasMode::Free:
      for (std::size_t i = 0; i < 4; ++i) e[i] = std::size_t{10 + i};
      r = std::size_t{14};
      break;
  }
  auto s = [](std::size_t i) { return std::variant<Rational, std::size_t>(i - 1); };
  const std::vector<std::string> anti{"YW", "WY"};
  RelationTemplate rel1{"[Y,[W,Y]]",
                        commutator(y, commutator(w, y)),
                        {{{"YYY"}, e[0]}, {{"YWY"}, r}, {{"YY"}, s(1)}, {anti, s(2)}, {{"W"}, s(3)}, {{"Y"}, s(4)},
                         {{""}, s(5)}}};
  RelationTemplate rel2{"[W,[Y,W]]",
                        commutator(w, commutator(y, w)),
                        {{{"YWY"}, e[1]}, {{"YYY"}, e[2]}, {{"YY"}, e[3]}, {{"WYW"}, r}, {{"WW"}, s(6)}, {anti, s(7)},
                         {{"W"}, s(8)}, {{"Y"}, s(9)}, {{""}, s(10)}}};
  return {std::move(gens), {std::move(rel1), std::move(rel2)}};
}

/// Exact fit of s1..s10 (and, in Free mode, e1..e4 and r). Throws
/// InconsistentFit when the chosen extras admit no solution.
inline HeunAwFit fit_heun_aw(const Params& p, const TauSet& t, ExtrasMode mode = ExtrasMode::Published,
                             bool reverse_order = false) {
  auto [gens, rels] = heun_aw_templates(p, t, mode);
  const std::size_t unknowns = mode == ExtrasMode::Free ? 15 : 10;
  HeunAwFit out;
  out.mode = mode;
  out.fit = fit_relations(gens, rels, unknowns, reverse_order);
  for (std::size_t i = 0; i < 10; ++i) out.s[i] = out.fit.values[i];
  switch (mode) {
    case ExtrasMode::Published: out.e = heun_aw_extras_published(p, t); break;
    case ExtrasMode::Corrected: out.e = heun_aw_extras_corrected(p, t); break;
    case ExtrasMode::Zero: out.e = {}; break;
    case ExtrasMode::Free:
      for (std::size_t i = 0; i < 4; ++i) out.e[i] = out.fit.values[10 + i];
      break;
  }
  out.r = mode == ExtrasMode::Free ? out.fit.values[14] : structure_r(p.q);
  return out;
}

/// Parameter specialization for each of the four vanishing cases.
struct DegenerationCase {
  std::string name;
  Params params;
  TauSet taus;
};

inline std::vector<DegenerationCase> degeneration_cases(const Params& p, const TauSet& t) {
  TauSet base = t;
  base.t4 = Rational(0);
  TauSet i = base, ii = base;
  i.t2 = -p.q * t.t1;
  ii.t2 = -t.t1 / p.q;
  return {{"(i) t4=0, t2=-q t1", p, i},
          {"(ii) t4=0, t2=-t1/q", p, ii},
          {"(iii) t4=0, c=0", Params(p.q, p.a, p.b, Rational(0)), base},
          {"(iv) t4=0, a=0", Params(p.q, Rational(0), p.b, p.c), base}};
}

/// In each case the printed and corrected e1..e4 vanish and the pure AW fit
/// is consistent with zero residual.
inline Report check_degenerations(const Params& p, const TauSet& t) {
  Report rep;
  for (const auto& dc : degeneration_cases(p, t)) {
    const std::vector<std::pair<std::string, std::string>> in{{"params", dc.params.to_string()},
                                                              {"taus", dc.taus.to_string()}};
    const auto pub = heun_aw_extras_published(dc.params, dc.taus);
    const auto cor = heun_aw_extras_corrected(dc.params, dc.taus);
    std::string nonzero;
    for (std::size_t k = 0; k < 4; ++k) {
      if (!pub[k].is_zero()) nonzero += " printed e" + std::to_string(k + 1) + "=" + pub[k].to_string();
      if (!cor[k].is_zero()) nonzero += " corrected e" + std::to_string(k + 1) + "=" + cor[k].to_string();
    }
    rep.add(dc.name + ": extras vanish", nonzero.empty(), nonzero, in);
    try {
      const auto fit = fit_heun_aw(dc.params, dc.taus, ExtrasMode::Zero);
      rep.add(dc.name + ": pure AW fit", fit.fit.residual_zero,
              fit.fit.residual_zero ? "" : "nonzero residual after fit", in);
    } catch (const InconsistentFit& e) {
      rep.add(dc.name + ": pure AW fit", false, e.what(), in);
    }
  }
  return rep;
}

}  // namespace qheun

#endif  // QHEUN_RELATIONS_HPP
