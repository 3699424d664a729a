#ifndef QHEUN_QUADRATIC_FIELD_HPP
#define QHEUN_QUADRATIC_FIELD_HPP

#include <memory>
#include <optional>
#include <string>

#include "qheun/errors.hpp"
#include "qheun/rational.hpp"

namespace qheun {

/// Strips square factors from a nonzero rational, returning a squarefree
/// integer D with r = s^2 * D for some rational s. Trial division is bounded;
/// whatever square part survives the bound simply stays inside D.
inline mpz_class squarefree_kernel(const Rational& r) {
  mpz_class n = r.numerator() * r.denominator();
  const int sign = sgn(n);
  n = abs(n);
  mpz_class out = 1;
  for (unsigned long p = 2; p < 20000 && p * p <= n; ++p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++e;
    }
    if (e & 1U) out *= p;
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) out *= n;
  return sign < 0 ? mpz_class(-out) : out;
}

/// Element a + b*sqrt(D) of the quadratic field Q(sqrt D).
///
/// D is shared between elements of one field. Elements built from plain
/// rationals carry no D and combine with any field; mixing two different D
/// values throws.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  template <std::integral T>
  QuadraticNumber(T v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational v) : re_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational re, Rational im, std::shared_ptr<const Rational> d)
      : re_(std::move(re)), im_(std::move(im)), d_(std::move(d)) {
    if (!im_.is_zero() && !d_) throw InvalidParameters("sqrt part without a field");
  }

  /// The generator sqrt(D) of Q(sqrt D).
  static QuadraticNumber sqrt_of(std::shared_ptr<const Rational> d) {
    return QuadraticNumber(Rational(0), Rational(1), std::move(d));
  }

  [[nodiscard]] const Rational& re() const { return re_; }
  [[nodiscard]] const Rational& im() const { return im_; }
  [[nodiscard]] const std::shared_ptr<const Rational>& field() const { return d_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return im_.is_zero(); }

  [[nodiscard]] std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string s = re_.is_zero() ? "" : re_.to_string() + (im_.sign() > 0 ? "+" : "");
    return s + im_.to_string() + "*sqrt(" + d_->to_string() + ")";
  }

  /// Square root inside the same field, when it exists.
  [[nodiscard]] std::optional<QuadraticNumber> sqrt() const {
    if (is_rational()) {
      if (auto r = re_.sqrt()) return QuadraticNumber(*r);
      if (d_) {
        if (auto s = (re_ / *d_).sqrt()) return QuadraticNumber(Rational(0), *s, d_);
      }
      return std::nullopt;
    }
    // (x + y sqrt D)^2 = re + im sqrt D  =>  x^2 + D y^2 = re, 2xy = im.
    const Rational& d = *d_;
    auto n = (re_ * re_ - d * im_ * im_).sqrt();
    if (!n) return std::nullopt;
    for (const Rational& cand : {(re_ + *n) / Rational(2), (re_ - *n) / Rational(2)}) {
      if (auto x = cand.sqrt(); x && !x->is_zero()) {
        return QuadraticNumber(*x, im_ / (Rational(2) * *x), d_);
      }
    }
    return std::nullopt;
  }

  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.re_ + b.re_, a.im_ + b.im_, join(a, b)};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
    return {a.re_ - b.re_, a.im_ - b.im_, join(a, b)};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& a) { return {-a.re_, -a.im_, a.d_}; }
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
    auto d = join(a, b);
    Rational re = a.re_ * b.re_;
    if (!a.im_.is_zero() && !b.im_.is_zero()) re += *d * a.im_ * b.im_;
    return {std::move(re), a.re_ * b.im_ + a.im_ * b.re_, d};
  }
  friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero in Q(sqrt D)");
    if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_, a.d_};
    const Rational norm = b.re_ * b.re_ - *b.d_ * b.im_ * b.im_;
    const QuadraticNumber conj(b.re_ / norm, -b.im_ / norm, b.d_);
    return a * conj;
  }
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  static std::shared_ptr<const Rational> join(const QuadraticNumber& a, const QuadraticNumber& b) {
    if (!a.d_) return b.d_;
    if (!b.d_ || a.d_ == b.d_ || *a.d_ == *b.d_) return a.d_;
    throw BaseMismatch("mixing elements of different quadratic fields");
  }

  Rational re_;
  Rational im_;
  std::shared_ptr<const Rational> d_;
};

}  // namespace qheun

#endif  // QHEUN_QUADRATIC_FIELD_HPP
