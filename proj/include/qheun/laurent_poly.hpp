#ifndef QHEUN_LAURENT_POLY_HPP
#define QHEUN_LAURENT_POLY_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qheun/errors.hpp"
#include "qheun/rational.hpp"

namespace qheun {

/// Finite Laurent polynomial sum_e c_e x^e over an exact field. Zero
/// coefficients are never stored, so the empty map is the zero polynomial.
template <ExactField K = Rational>
class LaurentPoly {
 public:
  using Terms = std::map<int, K>;

  LaurentPoly() = default;
  LaurentPoly(const K& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(0, c);
  }
  template <std::integral T>
  LaurentPoly(T c) : LaurentPoly(K(c)) {}  // NOLINT(google-explicit-constructor)

  explicit LaurentPoly(Terms terms) : terms_(std::move(terms)) { prune(); }

  static LaurentPoly monomial(const K& c, int exponent) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(exponent, c);
    return p;
  }
  static LaurentPoly x() { return monomial(K(1), 1); }

  /// Coefficients listed in ascending exponent order starting at `start`.
  static LaurentPoly from_coeffs(const std::vector<K>& ascending, int start = 0) {
    LaurentPoly p;
    for (std::size_t i = 0; i < ascending.size(); ++i)
      if (!ascending[i].is_zero()) p.terms_.emplace(start + static_cast<int>(i), ascending[i]);
    return p;
  }
  static LaurentPoly from_coeffs(std::initializer_list<K> ascending, int start = 0) {
    return from_coeffs(std::vector<K>(ascending), start);
  }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  /// Highest exponent; the zero polynomial has no degree.
  [[nodiscard]] int degree() const {
    if (is_zero()) throw InvalidParameters("degree of the zero polynomial");
    return terms_.rbegin()->first;
  }
  [[nodiscard]] int valuation() const {
    if (is_zero()) throw InvalidParameters("valuation of the zero polynomial");
    return terms_.begin()->first;
  }
  [[nodiscard]] const K& leading() const {
    if (is_zero()) throw InvalidParameters("leading coefficient of the zero polynomial");
    return terms_.rbegin()->second;
  }
  [[nodiscard]] K coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? K(0) : it->second;
  }
  [[nodiscard]] bool is_polynomial() const { return is_zero() || valuation() >= 0; }
  [[nodiscard]] bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  [[nodiscard]] bool is_monomial() const { return terms_.size() == 1; }

  /// Dense ascending coefficients c_0..c_deg; requires a polynomial.
  [[nodiscard]] std::vector<K> dense() const {
    if (!is_polynomial()) throw NegativeExponent("dense coefficients of a Laurent polynomial");
    if (is_zero()) return {};
    std::vector<K> out(static_cast<std::size_t>(degree()) + 1, K(0));
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e)] = c;
    return out;
  }

  /// Multiplication by x^k.
  [[nodiscard]] LaurentPoly shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
    return p;
  }

  /// f(lambda x): the coefficient of x^k picks up lambda^k.
  [[nodiscard]] LaurentPoly scale_substitute(const K& lambda) const {
    if (lambda.is_zero()) {
      if (!is_polynomial()) throw ZeroScale("substituting x -> 0 into a negative power");
      return LaurentPoly(coeff(0));
    }
    if (is_zero()) return {};
    LaurentPoly p;
    const int lo = valuation();
    K factor = power(lambda, lo);
    int e_prev = lo;
    for (const auto& [e, c] : terms_) {
      for (; e_prev < e; ++e_prev) factor = factor * lambda;
      p.terms_.emplace_hint(p.terms_.end(), e, c * factor);
    }
    return p;
  }

  [[nodiscard]] K evaluate(const K& x0) const {
    if (x0.is_zero()) {
      if (!is_polynomial()) throw DivisionByZero("evaluating a negative power at 0");
      return coeff(0);
    }
    K acc(0);
    for (const auto& [e, c] : terms_) acc = acc + c * power(x0, e);
    return acc;
  }

  [[nodiscard]] LaurentPoly derivative() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_)
      if (e != 0) p.terms_.emplace(e - 1, c * K(e));
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace_hint(p.terms_.end(), e, -c);
    return p;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
  }
  friend LaurentPoly operator*(const K& s, const LaurentPoly& a) {
    if (s.is_zero()) return {};
    LaurentPoly p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace_hint(p.terms_.end(), e, s * c);
    return p;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.to_string();
      if (!out.empty()) out += (cs[0] == '-') ? " - " : " + ";
      else if (cs[0] == '-') out += "-";
      if (cs[0] == '-') cs = cs.substr(1);
      const bool unit = (cs == "1");
      if (e == 0) {
        out += cs;
      } else {
        if (!unit) out += (cs.find_first_of("+-*") != std::string::npos ? "(" + cs + ")" : cs) + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  void add_term(int e, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero()) it = terms_.erase(it);
      else ++it;
    }
  }

  Terms terms_;
};

using Poly = LaurentPoly<Rational>;

/// Euclidean division of ordinary polynomials: f = quot*g + rem, deg rem < deg g.
template <ExactField K>
std::pair<LaurentPoly<K>, LaurentPoly<K>> divmod(const LaurentPoly<K>& f, const LaurentPoly<K>& g) {
  if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!f.is_polynomial() || !g.is_polynomial()) throw NegativeExponent("divmod needs ordinary polynomials");
  LaurentPoly<K> quot;
  LaurentPoly<K> rem = f;
  const int dg = g.degree();
  const K inv_lead = K(1) / g.leading();
  while (!rem.is_zero() && rem.degree() >= dg) {
    const int shift = rem.degree() - dg;
    const K factor = rem.leading() * inv_lead;
    auto step = LaurentPoly<K>::monomial(factor, shift);
    quot += step;
    rem -= step * g;
  }
  return {std::move(quot), std::move(rem)};
}

template <ExactField K>
LaurentPoly<K> make_monic(const LaurentPoly<K>& f) {
  if (f.is_zero()) return f;
  return (K(1) / f.leading()) * f;
}

/// Monic gcd of ordinary polynomials; gcd(0, 0) = 0.
template <ExactField K>
LaurentPoly<K> gcd(LaurentPoly<K> a, LaurentPoly<K> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

}  // namespace qheun

#endif  // QHEUN_LAURENT_POLY_HPP
