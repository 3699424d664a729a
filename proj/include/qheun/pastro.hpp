#ifndef QHEUN_PASTRO_HPP
#define QHEUN_PASTRO_HPP

#include <string>
#include <utility>

#include "qheun/checks.hpp"
#include "qheun/families.hpp"
#include "qheun/report.hpp"

namespace qheun {

struct PastroParams {
  Rational a, b, q;

  PastroParams(Rational a_, Rational b_, Rational q_) : a(std::move(a_)), b(std::move(b_)), q(std::move(q_)) {
    if (a.is_zero() || b.is_zero()) throw InvalidParameters("Pastro parameters a and b must be nonzero");
    Params::check_base(q);
  }

  [[nodiscard]] std::string to_string() const {
    return "a=" + a.to_string() + " b=" + b.to_string() + " q=" + q.to_string();
  }
};

/// ((b^2 x - q)/((q-1) x)) T^+ + (q - b x)/((q-1) x).
inline SkewOperator pastro_l1(const PastroParams& pp) {
  const Poly x = Poly::x();
  const Poly den = (pp.q - Rational(1)) * x;
  return SkewOperator(pp.q, {{1, RatFunc::make(pp.b * pp.b * x - Poly(pp.q), den)},
                             {0, RatFunc::make(Poly(pp.q) - pp.b * x, den)}});
}

/// ((a q - b^2 x)/(b x)) T^- + (b^3 x - a q)/(b x).
inline SkewOperator pastro_l2(const PastroParams& pp) {
  const Poly x = Poly::x();
  const Poly den = pp.b * x;
  return SkewOperator(pp.q, {{-1, RatFunc::make(Poly(pp.a * pp.q) - pp.b * pp.b * x, den)},
                             {0, RatFunc::make(pp.b.pow(3) * x - Poly(pp.a * pp.q), den)}});
}

/// q^n/(q - 1).
inline Rational pastro_lambda(const Rational& q, int n) { return q.pow(n) / (q - Rational(1)); }

/// (L1 - lambda_n L2) P_n = 0 for n <= n_max.
inline Report pastro_gevp_check(const PastroParams& pp, int n_max) {
  Report rep;
  const SkewOperator l1 = pastro_l1(pp), l2 = pastro_l2(pp);
  for (int n = 0; n <= n_max; ++n) {
    const std::string name = "pastro gevp n=" + std::to_string(n);
    const std::vector<std::pair<std::string, std::string>> in{{"params", pp.to_string()}};
    try {
      const Poly pn = pastro_poly(pp.a, pp.b, pp.q, n);
      const Poly res = (l1 - pastro_lambda(pp.q, n) * l2).apply(pn);
      rep.add(name, res.is_zero(),
              res.is_zero() ? "" : "residual " + res.to_string() + " (check the 2phi1 convention first)", in);
    } catch (const Error& e) {
      rep.add(name, false, e.what(), in);
    }
  }
  return rep;
}

/// (g_n, e_n) with P_(n+1) + g_n P_n = x (P_n + e_n P_(n-1)), matched over
/// every coefficient. For n = 0 the e term is absent and returned as 0.
inline std::pair<Rational, Rational> pastro_recurrence_fit(const PastroParams& pp, int n) {
  const Poly x = Poly::x();
  const Poly next = pastro_poly(pp.a, pp.b, pp.q, n + 1), cur = pastro_poly(pp.a, pp.b, pp.q, n);
  const Poly prev = n > 0 ? pastro_poly(pp.a, pp.b, pp.q, n - 1) : Poly();
  // g_n P_n - e_n x P_(n-1) = x P_n - P_(n+1).
  const Poly rhs = x * cur - next;
  LinSystem<Rational> sys(n > 0 ? 2 : 1);
  for (int e = 0; e <= n + 1; ++e) {
    std::vector<Rational> row{cur.coeff(e)};
    if (n > 0) row.push_back(-(x * prev).coeff(e));
    sys.add_equation(row, rhs.coeff(e));
  }
  const auto sol = solve_exact(sys);
  if (sol.kind != SolveKind::Unique)
    throw FitFailure(std::string("Pastro recurrence fit is ") + to_string(sol.kind) + " at n = " + std::to_string(n) +
                     "; suspect the 2phi1 convention");
  return {sol.particular[0], n > 0 ? sol.particular[1] : Rational(0)};
}

/// P_0..P_n regenerated from P_0, P_1 and the fitted recurrence.
inline std::vector<Poly> pastro_by_recurrence(const PastroParams& pp, int n) {
  const Poly x = Poly::x();
  std::vector<Poly> out{pastro_poly(pp.a, pp.b, pp.q, 0)};
  if (n >= 1) out.push_back(pastro_poly(pp.a, pp.b, pp.q, 1));
  for (int m = 1; m < n; ++m) {
    const auto [g, e] = pastro_recurrence_fit(pp, m);
    const auto mi = static_cast<std::size_t>(m);
    out.push_back(x * (out[mi] + e * out[mi - 1]) - g * out[mi]);
  }
  return out;
}

}  // namespace qheun

#endif  // QHEUN_PASTRO_HPP
