#ifndef QHEUN_HEUN_HPP
#define QHEUN_HEUN_HPP

#include <array>
#include <optional>
#include <string>

#include "qheun/errors.hpp"
#include "qheun/families.hpp"
#include "qheun/params.hpp"
#include "qheun/skew_operator.hpp"

namespace qheun {

/// Polynomial data (p3, p2, p1) of a big q-Heun operator.
struct HeunData {
  Poly p3, p2, p1;
  Rational q;

  HeunData(Poly p3_, Poly p2_, Poly p1_, Rational q_)
      : p3(std::move(p3_)), p2(std::move(p2_)), p1(std::move(p1_)), q(std::move(q_)) {
    auto check = [](const Poly& p, int bound, const char* name) {
      if (!p.is_polynomial() || (!p.is_zero() && p.degree() > bound))
        throw NotHeunShape(std::string(name) + " must be a polynomial of degree <= " + std::to_string(bound) +
                           " (got " + p.to_string() + ")");
    };
    check(p3, 3, "p3");
    check(p2, 2, "p2");
    check(p1, 1, "p1");
  }

  friend bool operator==(const HeunData& a, const HeunData& b) {
    return a.p3 == b.p3 && a.p2 == b.p2 && a.p1 == b.p1 && a.q == b.q;
  }
};

/// A1 = p3/x^2, A2 = (q p3 + x p2)/x^2, A0 = -A1 - A2 + p1.
inline SkewOperator big_qheun(const HeunData& d) {
  const Poly x = Poly::x();
  const RatFunc a1 = RatFunc::make(d.p3, x * x);
  const RatFunc a2 = RatFunc::make(d.q * d.p3 + x * d.p2, x * x);
  return SkewOperator(d.q, {{1, a1}, {-1, a2}, {0, RatFunc(d.p1) - a1 - a2}});
}

/// (q^n - 1){(1 - q^(1-n)) p3 - q^-n x p2} x^(n-2) + p1 x^n.
inline Poly big_qheun_on_monomial(const HeunData& d, int n) {
  const Poly x = Poly::x();
  const Rational qn = d.q.pow(n);
  const Poly inner = (Rational(1) - d.q.pow(1 - n)) * d.p3 - d.q.pow(-n) * (x * d.p2);
  return ((qn - Rational(1)) * inner).shifted(n - 2) + d.p1.shifted(n);
}

/// Inverse of big_qheun; throws NotHeunShape outside the class.
inline HeunData extract_heun_data(const SkewOperator& w) {
  for (int k : w.support())
    if (k < -1 || k > 1) throw NotHeunShape("shift degree " + std::to_string(k) + " outside {-1, 0, 1}");
  const Poly x = Poly::x();
  auto as_poly = [](const RatFunc& f, const char* what) {
    auto lp = f.as_laurent();
    if (!lp || !lp->is_polynomial())
      throw NotHeunShape(std::string(what) + " is not a polynomial: " + f.to_string());
    return *lp;
  };
  const RatFunc a1 = w.coeff(1), a2 = w.coeff(-1), a0 = w.coeff(0);
  const Poly p3 = as_poly(RatFunc(x * x) * a1, "x^2 A1");
  const Poly p2 = as_poly(RatFunc::make(as_poly(RatFunc(x * x) * a2, "x^2 A2") - w.q() * p3, x), "(x^2 A2 - q p3)/x");
  const Poly p1 = as_poly(a0 + a1 + a2, "A0 + A1 + A2");
  return {p3, p2, p1, w.q()};
}

/// (s1/x) T^+ + (s2/x) T^- + (s0/x). With `enforce`, conjugates by the
/// rational mu that makes the constant term of s0 + s1 + s2 vanish, which is
/// what keeps the operator degree-raising by at most one.
inline SkewOperator little_qheun(const Poly& s0, const Poly& s1, const Poly& s2, const Rational& q, bool enforce) {
  for (const Poly* s : {&s0, &s1, &s2})
    if (!s->is_polynomial() || (!s->is_zero() && s->degree() > 2))
      throw NotHeunShape("little q-Heun coefficients must be quadratic polynomials");
  const Poly x = Poly::x();
  SkewOperator w(q, {{1, RatFunc::make(s1, x)}, {-1, RatFunc::make(s2, x)}, {0, RatFunc::make(s0, x)}});
  if (!enforce) return w;
  const Rational c0 = s0.coeff(0), c1 = s1.coeff(0), c2 = s2.coeff(0);
  if ((c0 + c1 + c2).is_zero()) return w;
  // mu c1 + c0 + c2/mu = 0, i.e. c1 mu^2 + c0 mu + c2 = 0.
  std::optional<Rational> mu;
  if (c1.is_zero()) {
    if (!c0.is_zero() && !c2.is_zero()) mu = -c2 / c0;
  } else if (auto r = (c0 * c0 - Rational(4) * c1 * c2).sqrt()) {
    for (const Rational& cand : {(-c0 + *r) / (Rational(2) * c1), (-c0 - *r) / (Rational(2) * c1)})
      if (!cand.is_zero()) {
        mu = cand;
        break;
      }
  }
  if (!mu)
    throw NoRationalScale("no rational mu with " + c1.to_string() + " mu^2 + " + c0.to_string() + " mu + " +
                          c2.to_string() + " = 0");
  return w.conjugate_shiftscale(*mu);
}

/// t1 XY + t2 YX + t3 X + t4 Y + t0, built by composition.
inline SkewOperator algebraic_heun(const Params& p, const TauSet& t) {
  const SkewOperator x = position_operator(p.q), y = big_qjacobi_operator(p);
  return t.t1 * (x * y) + t.t2 * (y * x) + t.t3 * x + t.t4 * y + t.t0 * SkewOperator::identity(p.q);
}

/// The same operator from its closed-form A1, A2 and p1.
inline SkewOperator algebraic_heun_closed(const Params& p, const TauSet& t) {
  const Poly x = Poly::x();
  const Rational& q = p.q;
  const Rational qi = q.inverse();
  const RatFunc a1 = RatFunc::make(
      p.a * q * (x - 1) * (p.b * x - Poly(p.c)) * ((t.t1 + q * t.t2) * x + Poly(t.t4)), x * x);
  const RatFunc a2 = RatFunc::make(
      (x - Poly(p.a * q)) * (x - Poly(p.c * q)) * ((t.t1 + qi * t.t2) * x + Poly(t.t4)), x * x);
  const Rational one(1);
  const Poly p1 = (t.t2 * (q - one) * (q * p.a * p.b - qi) + t.t3) * x +
                  Poly(t.t0 + (one - q) * (q * p.a * (p.b + p.c) - p.a - p.c) * t.t2);
  return SkewOperator(q, {{1, a1}, {-1, a2}, {0, RatFunc(p1) - a1 - a2}});
}

/// W1: t2 = -q t1, t4 = 0, so the T^- part drops out.
inline SkewOperator specialize_w1(const Params& p, const Rational& t1, const Rational& t3, const Rational& t0) {
  return algebraic_heun(p, {t0, t1, -p.q * t1, t3, Rational(0)});
}

/// W2: t2 = -t1/q, t4 = 0, so the T^+ part drops out.
inline SkewOperator specialize_w2(const Params& p, const Rational& t1, const Rational& t3, const Rational& t0) {
  return algebraic_heun(p, {t0, t1, -t1 / p.q, t3, Rational(0)});
}

namespace detail {

inline Poly root_product(const std::array<Rational, 3>& r, std::size_t count) {
  Poly out(Rational(1));
  for (std::size_t i = 0; i < count; ++i) out = out * (Poly::x() - Poly(r[i]));
  return out;
}

}  // namespace detail

/// Third q-Heun operator with pre-exponentiated parameters u_n = q^(h_n+1/2) t_n,
/// w_n = q^(l_n-1/2) t_n and kappa the x^-1 coefficient. root_q is a rational
/// square root of q; the zero-shift part needs q^(1/2) + q^(-1/2).
inline SkewOperator takemura_a3(const std::array<Rational, 3>& u, const std::array<Rational, 3>& w,
                                const Rational& kappa, const Rational& q, const Rational& root_q) {
  if (root_q * root_q != q) throw InvalidParameters("root_q^2 must equal q");
  const Poly x = Poly::x();
  Rational lin;
  for (std::size_t i = 0; i < 3; ++i) lin += u[i] / root_q + root_q * w[i];
  const Poly zero_shift =
      -(root_q + root_q.inverse()) * Poly::monomial(Rational(1), 3) + lin * x * x + Poly(kappa);
  return SkewOperator(q, {{-1, RatFunc::make(detail::root_product(u, 3), x)},
                          {1, RatFunc::make(detail::root_product(w, 3), x)},
                          {0, RatFunc::make(zero_shift, x)}});
}

/// Fourth q-Heun operator with u_n, w_n as above, rho = q^(a1+a2),
/// sigma_i = q^(a_i) and kappa the x^-1 coefficient.
inline SkewOperator takemura_a4(const Rational& u1, const Rational& u2, const Rational& w1, const Rational& w2,
                                const Rational& rho, const Rational& sigma1, const Rational& sigma2,
                                const Rational& kappa, const Rational& q) {
  const Poly x = Poly::x();
  const Poly um = (x - Poly(u1)) * (x - Poly(u2));
  const Poly wm = (x - Poly(w1)) * (x - Poly(w2));
  return SkewOperator(q, {{-1, RatFunc::make(um, x)},
                          {1, RatFunc::make(rho * wm, x)},
                          {0, RatFunc::make(-(sigma1 + sigma2) * x * x - Poly(kappa), x)}});
}

/// Brings an operator of the third Takemura shape (cubic/x shift parts,
/// x^2, x, x^-1 zero-shift part) into big q-Heun form: conjugation by mu with
/// U(0) = q mu^2 W(0), then theta = 1/x and the beta that clears the x^-1 term.
/// Throws NoRationalScale when mu is irrational and NotHeunShape when the
/// x^-2 remainder (kappa off the equivalence locus) survives.
inline SkewOperator normalize_takemura_a3(const SkewOperator& a3) {
  const Poly x = Poly::x();
  auto numer = [&](int k) {
    auto lp = (RatFunc(x) * a3.coeff(k)).as_laurent();
    if (!lp || !lp->is_polynomial()) throw NotHeunShape("coefficient of T^" + std::to_string(k) + " is not poly/x");
    return *lp;
  };
  const Poly um = numer(-1), wm = numer(1), zero = numer(0);
  if (wm.coeff(0).is_zero() || um.coeff(0).is_zero())
    throw NotHeunShape("shift numerators must not vanish at 0");
  const auto mu = (um.coeff(0) / (a3.q() * wm.coeff(0))).sqrt();
  if (!mu) throw NoRationalScale("mu^2 = U(0)/(q W(0)) has no rational root");
  const SkewOperator conj = a3.conjugate_shiftscale(*mu);
  // x-coefficient of x*(sum of coefficients) + beta x must vanish.
  const Rational beta = -(*mu * wm.coeff(1) + um.coeff(1) / *mu + zero.coeff(1));
  return conj.affine(RatFunc::make(Poly(Rational(1)), x), Rational(0), beta);
}

}  // namespace qheun

#endif  // QHEUN_HEUN_HPP
