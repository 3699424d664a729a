#ifndef QHEUN_FAMILIES_HPP
#define QHEUN_FAMILIES_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qheun/errors.hpp"
#include "qheun/linear_system.hpp"
#include "qheun/params.hpp"
#include "qheun/skew_operator.hpp"

namespace qheun {

/// (x; q)_n = (1 - x)(1 - q x)...(1 - q^(n-1) x).
inline Poly pochhammer_basis(const Rational& q, int n) {
  if (n < 0) throw InvalidParameters("negative Pochhammer index");
  Poly out(Rational(1));
  Rational qj(1);
  for (int j = 0; j < n; ++j) {
    out = out * (Poly(Rational(1)) - Poly::monomial(qj, 1));
    qj *= q;
  }
  return out;
}

/// Coefficients c_n with f = sum_n c_n (x; q)_n, solved from the top degree down.
inline std::vector<Rational> to_pochhammer_coeffs(const Poly& f, const Rational& q) {
  if (!f.is_polynomial()) throw NegativeExponent("Pochhammer expansion needs an ordinary polynomial");
  if (f.is_zero()) return {};
  const int n = f.degree();
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
  Poly rest = f;
  for (int m = n; m >= 0; --m) {
    const Poly phi = pochhammer_basis(q, m);
    const Rational cm = rest.coeff(m) / phi.leading();
    out[static_cast<std::size_t>(m)] = cm;
    if (!cm.is_zero()) rest -= cm * phi;
  }
  return out;
}

/// t-Pochhammer symbol (t; q)_k as a number.
inline Rational qpochhammer_symbol(const Rational& t, const Rational& q, int k) {
  Rational out(1), tq = t;
  for (int j = 0; j < k; ++j) {
    out *= Rational(1) - tq;
    tq *= q;
  }
  return out;
}

/// Multiplication by x.
inline SkewOperator position_operator(const Rational& q) {
  return SkewOperator::multiplication(q, RatFunc(Poly::x()));
}

/// Coefficient of T^+ in the big q-Jacobi operator: aq x^-2 (x - 1)(bx - c).
inline RatFunc big_qjacobi_b(const Params& p) {
  const Poly x = Poly::x();
  return RatFunc::make(p.a * p.q * (x - 1) * (p.b * x - Poly(p.c)), x * x);
}

/// Coefficient of T^-: x^-2 (x - aq)(x - cq).
inline RatFunc big_qjacobi_d(const Params& p) {
  const Poly x = Poly::x();
  return RatFunc::make((x - Poly(p.a * p.q)) * (x - Poly(p.c * p.q)), x * x);
}

/// Y = B T^+ + D T^- - (B + D).
inline SkewOperator big_qjacobi_operator(const Params& p) {
  const RatFunc b = big_qjacobi_b(p), d = big_qjacobi_d(p);
  return SkewOperator(p.q, {{1, b}, {-1, d}, {0, -(b + d)}});
}

/// (q^-n - 1)(1 - ab q^(n+1)).
inline Rational lambda_n(const Params& p, int n) {
  return (p.q.pow(-n) - Rational(1)) * (Rational(1) - p.a * p.b * p.q.pow(n + 1));
}

/// (1 - q^-n)(a q^n - 1)(c q^n - 1).
inline Rational mu_n(const Params& p, int n) {
  const Rational qn = p.q.pow(n);
  return (Rational(1) - p.q.pow(-n)) * (p.a * qn - Rational(1)) * (p.c * qn - Rational(1));
}

namespace detail {

// Eigenpolynomial of an operator that maps degree m into degree <= m with
// diagonal entries eig(m): monic, found by back-substitution in the monomials.
template <typename Eig>
Poly triangular_eigenpolynomial(const SkewOperator& op, int n, Eig eig) {
  const Rational ln = eig(n);
  std::vector<Poly> images;
  images.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) images.push_back(op.apply(Poly::monomial(Rational(1), j)));
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = Rational(1);
  for (int m = n - 1; m >= 0; --m) {
    const Rational lm = eig(m);
    if (lm == ln)
      throw DegenerateSpectrum("eigenvalues at degrees " + std::to_string(m) + " and " + std::to_string(n) +
                               " coincide (" + ln.to_string() + ")");
    Rational acc;
    for (int j = m + 1; j <= n; ++j) acc += c[static_cast<std::size_t>(j)] * images[static_cast<std::size_t>(j)].coeff(m);
    c[static_cast<std::size_t>(m)] = -acc / (lm - ln);
  }
  return Poly::from_coeffs(c);
}

}  // namespace detail

/// Monic P_n with Y P_n = lambda_n P_n.
inline Poly big_qjacobi_poly(const Params& p, int n) {
  return detail::triangular_eigenpolynomial(big_qjacobi_operator(p), n, [&](int m) { return lambda_n(p, m); });
}

/// Fits x P_n = P_{n+1} + b_n P_n + u_n P_{n-1} coefficientwise over the whole
/// identity. The n = 0 case has no u term and returns u = 0.
inline std::pair<Rational, Rational> fit_three_term(const Poly& prev, const Poly& cur, const Poly& next, int n) {
  const Poly lhs = Poly::x() * cur - next;
  const int top = std::max(lhs.is_zero() ? 0 : lhs.degree(), cur.degree());
  LinSystem<Rational> sys(n == 0 ? 1 : 2);
  for (int e = 0; e <= top; ++e) {
    std::vector<Rational> row{cur.coeff(e)};
    if (n > 0) row.push_back(prev.coeff(e));
    sys.add_equation(row, lhs.coeff(e));
  }
  const auto sol = solve_exact(sys);
  if (sol.kind != SolveKind::Unique)
    throw FitFailure(std::string("three-term recurrence fit is ") + to_string(sol.kind) + " at n = " + std::to_string(n));
  return {sol.particular[0], n == 0 ? Rational(0) : sol.particular[1]};
}

/// (b_n, u_n) of the monic big q-Jacobi recurrence.
inline std::pair<Rational, Rational> recurrence_coeffs(const Params& p, int n) {
  const Poly prev = n > 0 ? big_qjacobi_poly(p, n - 1) : Poly();
  return fit_three_term(prev, big_qjacobi_poly(p, n), big_qjacobi_poly(p, n + 1), n);
}

/// Terminating 2phi1(q^-n, b; (b/a) q^(1-n); q, z b^2 / a), rescaled to be monic.
inline Poly pastro_poly(const Rational& a, const Rational& b, const Rational& q, int n) {
  if (a.is_zero() || b.is_zero()) throw SingularParameters("Pastro parameters a and b must be nonzero");
  const Rational lower = b / a * q.pow(1 - n);
  const Rational qn = q.pow(-n);
  const Rational arg = b * b / a;
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  Rational ratio(1), argk(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      const Rational den = (Rational(1) - lower * q.pow(k - 1)) * (Rational(1) - q.pow(k));
      if (den.is_zero())
        throw SingularParameters("lower factor ((b/a) q^(1-n); q)_k vanishes at n = " + std::to_string(n) +
                                 ", k = " + std::to_string(k));
      ratio *= (Rational(1) - qn * q.pow(k - 1)) * (Rational(1) - b * q.pow(k - 1)) / den;
      argk *= arg;
    }
    c[static_cast<std::size_t>(k)] = ratio * argk;
  }
  const Rational lead = c[static_cast<std::size_t>(n)];
  if (lead.is_zero()) throw SingularParameters("leading coefficient of the Pastro sum vanishes at n = " + std::to_string(n));
  return (Rational(1) / lead) * Poly::from_coeffs(c);
}

enum class FamilyKind { Pochhammer, BigQJacobi, Pastro };

/// A basis P_0, P_1, ... with lazily built, mutex-guarded cache.
class PolyFamily {
 public:
  static PolyFamily pochhammer(const Rational& q) { return PolyFamily(FamilyKind::Pochhammer, Params(q, 0, 0, 0)); }
  static PolyFamily big_qjacobi(const Params& p) { return PolyFamily(FamilyKind::BigQJacobi, p); }
  /// Pastro family; stores (a, b) in the a and b slots.
  static PolyFamily pastro(const Rational& a, const Rational& b, const Rational& q) {
    return PolyFamily(FamilyKind::Pastro, Params(q, a, b, 0));
  }

  PolyFamily(const PolyFamily& o) : kind_(o.kind_), params_(o.params_) {
    std::lock_guard lock(o.mutex_);
    cache_ = o.cache_;
  }

  [[nodiscard]] FamilyKind kind() const { return kind_; }
  [[nodiscard]] const Params& params() const { return params_; }

  [[nodiscard]] Poly poly(int n) const {
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    Poly built = build(n);
    std::lock_guard lock(mutex_);
    return cache_.emplace(n, std::move(built)).first->second;
  }

  /// Coefficients of f in this basis.
  [[nodiscard]] std::vector<Rational> expand(const Poly& f) const {
    if (!f.is_polynomial()) throw NegativeExponent("basis expansion needs an ordinary polynomial");
    if (kind_ == FamilyKind::Pochhammer) return to_pochhammer_coeffs(f, params_.q);
    if (f.is_zero()) return {};
    const int n = f.degree();
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    Poly rest = f;
    for (int m = n; m >= 0; --m) {
      const Poly pm = poly(m);
      if (pm.is_zero() || pm.degree() != m) throw ExpansionFailure("basis element " + std::to_string(m) + " has wrong degree");
      const Rational cm = rest.coeff(m) / pm.leading();
      out[static_cast<std::size_t>(m)] = cm;
      if (!cm.is_zero()) rest -= cm * pm;
    }
    if (!rest.is_zero()) throw ExpansionFailure("nonzero remainder after basis expansion");
    return out;
  }

 private:
  PolyFamily(FamilyKind kind, Params p) : kind_(kind), params_(std::move(p)) {}

  [[nodiscard]] Poly build(int n) const {
    switch (kind_) {
      case FamilyKind::Pochhammer: return pochhammer_basis(params_.q, n);
      case FamilyKind::BigQJacobi: return big_qjacobi_poly(params_, n);
      case FamilyKind::Pastro: return pastro_poly(params_.a, params_.b, params_.q, n);
    }
    throw InvalidParameters("unknown family");
  }

  FamilyKind kind_;
  Params params_;
  mutable std::mutex mutex_;
  mutable std::map<int, Poly> cache_;
};

}  // namespace qheun

#endif  // QHEUN_FAMILIES_HPP
