#ifndef QHEUN_CHECKS_HPP
#define QHEUN_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qheun/families.hpp"
#include "qheun/heun.hpp"
#include "qheun/linear_system.hpp"
#include "qheun/report.hpp"

namespace qheun {

/// deg(W x^n) <= n + 1 for n <= n_max; with `closed`, also W x^n against the
/// closed big q-Heun formula.
inline Report check_degree_raising(const SkewOperator& w, int n_max, const std::optional<HeunData>& closed = {}) {
  Report rep;
  for (int n = 0; n <= n_max; ++n) {
    const std::string name = "degree_raising n=" + std::to_string(n);
    Poly img;
    try {
      img = w.apply(Poly::monomial(Rational(1), n));
    } catch (const NonPolynomialResult& e) {
      rep.add(name, false, "non-polynomial image " + e.witness());
      continue;
    }
    if (!img.is_polynomial()) {
      rep.add(name, false, "negative powers in " + img.to_string());
      continue;
    }
    const int deg = img.is_zero() ? -1 : img.degree();
    if (deg > n + 1) {
      rep.add(name, false, "degree " + std::to_string(deg) + ": " + img.to_string());
      continue;
    }
    if (closed) {
      const Poly expect = big_qheun_on_monomial(*closed, n);
      if (!(expect == img)) {
        rep.add(name, false, "closed form mismatch, residual " + (img - expect).to_string());
        continue;
      }
    }
    rep.add(name, true);
  }
  return rep;
}

/// Coefficients of W P_n on P_(n-1), P_n, P_(n+1).
struct TridiagonalRow {
  int n = 0;
  Rational sub, diag, super;
};

struct TridiagonalReport {
  Report report;
  std::vector<TridiagonalRow> table;
};

/// Expands W P_n in the family for n <= n_max and checks that only
/// P_(n-1), P_n, P_(n+1) appear. When `expected` is given and the family is
/// big q-Jacobi, also compares against the closed xi/eta/zeta entries.
inline TridiagonalReport check_tridiagonal(const SkewOperator& w, const PolyFamily& basis, int n_max,
                                           const std::optional<TauSet>& expected = {}) {
  TridiagonalReport out;
  const bool compare = expected && basis.kind() == FamilyKind::BigQJacobi;
  const Params& p = basis.params();
  for (int n = 0; n <= n_max; ++n) {
    const std::string name = "tridiagonal n=" + std::to_string(n);
    const auto c = basis.expand(w.apply(basis.poly(n)));
    auto at = [&](int m) { return m >= 0 && m < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(m)] : Rational(0); };
    std::string stray;
    for (int m = 0; m < static_cast<int>(c.size()); ++m)
      if ((m < n - 1 || m > n + 1) && !c[static_cast<std::size_t>(m)].is_zero())
        stray += " P" + std::to_string(m) + ":" + c[static_cast<std::size_t>(m)].to_string();
    out.table.push_back({n, at(n - 1), at(n), at(n + 1)});
    if (!stray.empty()) {
      out.report.add(name, false, "entries outside the band:" + stray);
      continue;
    }
    if (compare) {
      const TauSet& t = *expected;
      const Rational ln = lambda_n(p, n), lnext = lambda_n(p, n + 1);
      const auto [bn, un] = recurrence_coeffs(p, n);
      const Rational xi = t.t1 * ln + t.t2 * lnext + t.t3;
      const Rational eta = (t.t1 + t.t2) * ln * bn + t.t3 * bn + t.t4 * ln + t.t0;
      const Rational zeta_u = n > 0 ? (t.t2 * lambda_n(p, n - 1) + t.t1 * ln + t.t3) * un : Rational(0);
      std::string bad;
      if (at(n + 1) != xi) bad += " xi: got " + at(n + 1).to_string() + " want " + xi.to_string();
      if (at(n) != eta) bad += " eta: got " + at(n).to_string() + " want " + eta.to_string();
      if (at(n - 1) != zeta_u) bad += " zeta*u: got " + at(n - 1).to_string() + " want " + zeta_u.to_string();
      if (!bad.empty()) {
        out.report.add(name, false, bad.substr(1));
        continue;
      }
    }
    out.report.add(name, true);
  }
  return out;
}

/// Grid point x_s = q^-s.
inline Rational grid_point(const Rational& q, int s) { return q.pow(-s); }

/// Matrix of W on samples f(x_0), ..., f(x_N): (W f)(x_s) = sum_s' M[s][s'] f(x_s').
/// Shifts leaving the grid must carry a vanishing coefficient.
inline Matrix<Rational> finite_restriction_matrix(const SkewOperator& w, const Params& p, int n) {
  if (n < 0) throw InvalidParameters("grid size N must be nonnegative");
  if (p.c != p.q.pow(-n - 1)) throw BoundaryLeak("grid restriction needs c = q^-(N+1), got c = " + p.c.to_string());
  const auto size = static_cast<std::size_t>(n) + 1;
  Matrix<Rational> m(size, size);
  for (int s = 0; s <= n; ++s) {
    const Rational xs = grid_point(p.q, s);
    for (const auto& [k, c] : w.coeffs()) {
      const Rational v = c.evaluate(xs);
      if (v.is_zero()) continue;
      // (T^k f)(x_s) = f(q^k q^-s) = f(x_(s-k)).
      const int target = s - k;
      if (target < 0 || target > n)
        throw BoundaryLeak("coefficient of T^" + std::to_string(k) + " is " + v.to_string() + " at x_" +
                           std::to_string(s) + ", which would leave the grid");
      m(static_cast<std::size_t>(s), static_cast<std::size_t>(target)) =
          m(static_cast<std::size_t>(s), static_cast<std::size_t>(target)) + v;
    }
  }
  return m;
}

/// Samples f(x_0..x_N).
inline std::vector<Rational> grid_samples(const Poly& f, const Rational& q, int n) {
  std::vector<Rational> out;
  for (int s = 0; s <= n; ++s) out.push_back(f.evaluate(grid_point(q, s)));
  return out;
}

}  // namespace qheun

#endif  // QHEUN_CHECKS_HPP
