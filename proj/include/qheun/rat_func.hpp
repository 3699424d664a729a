#ifndef QHEUN_RAT_FUNC_HPP
#define QHEUN_RAT_FUNC_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>

#include "qheun/errors.hpp"
#include "qheun/laurent_poly.hpp"

namespace qheun {

/// Reduced quotient num/den of ordinary polynomials with monic den.
///
/// Canonical form makes structural equality coincide with equality of
/// rational functions. Laurent inputs are accepted and folded into powers of x
/// in the denominator.
template <ExactField K = Rational>
class BasicRatFunc {
 public:
  using PolyT = LaurentPoly<K>;

  BasicRatFunc() : den_(K(1)) {}
  BasicRatFunc(const K& c) : num_(c), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  BasicRatFunc(T c) : BasicRatFunc(K(c)) {}  // NOLINT(google-explicit-constructor)
  BasicRatFunc(const PolyT& laurent) { *this = make(laurent, PolyT(K(1))); }  // NOLINT(google-explicit-constructor)

  /// Canonical num/den; throws DivisionByZero when den is zero.
  static BasicRatFunc make(PolyT num, PolyT den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    BasicRatFunc r;
    if (num.is_zero()) return r;
    // Strip x-powers from both sides and keep only their net difference.
    const int e = num.valuation() - den.valuation();
    num = num.shifted(-num.valuation() + std::max(e, 0));
    den = den.shifted(-den.valuation() + std::max(-e, 0));
    if (!den.is_monomial()) {
      PolyT g = gcd(num, den);
      if (!g.is_constant()) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
      }
    }
    const K lead = den.leading();
    if (!(lead == K(1))) {
      const K inv = K(1) / lead;
      num = inv * num;
      den = inv * den;
    }
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  [[nodiscard]] const PolyT& numerator() const { return num_; }
  [[nodiscard]] const PolyT& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }

  /// The Laurent polynomial equal to this function, if den is a power of x.
  [[nodiscard]] std::optional<PolyT> as_laurent() const {
    if (!den_.is_monomial()) return std::nullopt;
    return num_.shifted(-den_.degree());
  }

  /// f(lambda x), renormalized.
  [[nodiscard]] BasicRatFunc scale_substitute(const K& lambda) const {
    if (lambda.is_zero()) {
      const K d0 = den_.coeff(0);
      if (d0.is_zero()) throw ZeroScale("substituting x -> 0 where the denominator vanishes");
      return BasicRatFunc(num_.coeff(0) / d0);
    }
    if (den_.is_monomial()) {
      // Stays canonical up to the monic rescale of x^k.
      BasicRatFunc r;
      const K inv = K(1) / power(lambda, den_.degree());
      r.num_ = inv * num_.scale_substitute(lambda);
      r.den_ = den_;
      return r;
    }
    return make(num_.scale_substitute(lambda), den_.scale_substitute(lambda));
  }

  [[nodiscard]] K evaluate(const K& x0) const {
    const K d = den_.evaluate(x0);
    if (d.is_zero()) throw DivisionByZero("rational function evaluated at a pole");
    return num_.evaluate(x0) / d;
  }

  friend BasicRatFunc operator+(const BasicRatFunc& a, const BasicRatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_monomial()) return raw(a.num_ + b.num_, a.den_);
      return make(a.num_ + b.num_, a.den_);
    }
    if (a.den_.is_monomial() && b.den_.is_monomial()) {
      const int da = a.den_.degree();
      const int db = b.den_.degree();
      const int d = std::max(da, db);
      return raw(a.num_.shifted(d - da) + b.num_.shifted(d - db), PolyT::monomial(K(1), d));
    }
    return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend BasicRatFunc operator-(const BasicRatFunc& a) {
    BasicRatFunc r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend BasicRatFunc operator-(const BasicRatFunc& a, const BasicRatFunc& b) { return a + (-b); }
  friend BasicRatFunc operator*(const BasicRatFunc& a, const BasicRatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_monomial() && b.den_.is_monomial())
      return raw(a.num_ * b.num_, PolyT::monomial(K(1), a.den_.degree() + b.den_.degree()));
    return make(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend BasicRatFunc operator*(const K& s, const BasicRatFunc& a) {
    if (s.is_zero() || a.is_zero()) return {};
    BasicRatFunc r;
    r.num_ = s * a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend BasicRatFunc operator/(const BasicRatFunc& a, const BasicRatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return make(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const BasicRatFunc& a, const BasicRatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] std::string to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  // num/x^k with k = deg den: only the common x-power needs cancelling.
  static BasicRatFunc raw(PolyT num, const PolyT& den) {
    BasicRatFunc r;
    if (num.is_zero()) return r;
    const int k = std::min(num.valuation(), den.degree());
    r.num_ = num.shifted(-k);
    r.den_ = PolyT::monomial(K(1), den.degree() - k);
    return r;
  }

  PolyT num_;
  PolyT den_;
};

using RatFunc = BasicRatFunc<Rational>;

}  // namespace qheun

#endif  // QHEUN_RAT_FUNC_HPP
