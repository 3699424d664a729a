#ifndef QHEUN_RATIONAL_HPP
#define QHEUN_RATIONAL_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "qheun/errors.hpp"

namespace qheun {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (sizeof(T) <= sizeof(long)) {
      if constexpr (std::is_signed_v<T>) {
        value_ = static_cast<long>(v);
      } else {
        value_ = static_cast<unsigned long>(v);
      }
    } else {
      value_ = mpq_class(std::to_string(v));
    }
  }

  template <std::integral T, std::integral U>
  Rational(T num, U den) : Rational(num) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ /= Rational(den).value_;
  }

  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  explicit Rational(const mpz_class& v) : value_(v) {}

  /// Parses "p", "-p", "p/q". Whitespace is not accepted.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto valid_int = [](std::string_view s) {
      if (s.empty()) return false;
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto strip_plus = [](std::string_view s) {
      return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      if (!valid_int(text)) throw ParseError("not a rational: '" + std::string(text) + "'");
      return Rational(mpz_class(strip_plus(text)));
    }
    const auto n = text.substr(0, slash);
    const auto d = text.substr(slash + 1);
    if (!valid_int(n) || !valid_int(d) || d[0] == '-' || d[0] == '+')
      throw ParseError("not a rational: '" + std::string(text) + "'");
    mpz_class den(std::string{d});
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(mpz_class(strip_plus(n)), den));
  }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] std::string to_string() const { return value_.get_str(); }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / value_);
  }

  [[nodiscard]] Rational pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(n, d));
  }

  /// Exact square root when this is the square of a rational.
  [[nodiscard]] std::optional<Rational> sqrt() const {
    if (sign() < 0) return std::nullopt;
    const auto& n = value_.get_num();
    const auto& d = value_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(mpq_class(rn, rd));
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_{0};
};

/// Generic exponentiation by squaring for any exact field element.
template <typename K>
K power(K base, long exponent) {
  if (exponent < 0) return power(K(1) / base, -exponent);
  K result(1);
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// The arithmetic the polynomial and solver templates rely on.
template <typename K>
concept ExactField = requires(const K a, const K b) {
  { K(0) };
  { K(1) };
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

}  // namespace qheun

template <>
struct std::hash<qheun::Rational> {
  std::size_t operator()(const qheun::Rational& r) const noexcept {
    return std::hash<std::string>{}(r.to_string());
  }
};

#endif  // QHEUN_RATIONAL_HPP
