#ifndef QHEUN_TEST_SUPPORT_HPP
#define QHEUN_TEST_SUPPORT_HPP

#include <random>

#include "qheun/params.hpp"
#include "qheun/skew_operator.hpp"

namespace qtest {

using qheun::Poly;
using qheun::Rational;

inline Rational R(long n, long d = 1) { return {n, d}; }

/// Small random rationals: numerator in [-10, 10], denominator in [1, 10].
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    return {num(rng_), den(rng_)};
  }
  Rational nonzero() {
    for (;;)
      if (auto r = rational(); !r.is_zero()) return r;
  }
  Rational base() {
    for (;;) {
      auto r = nonzero();
      if (r != R(1) && r != R(-1)) return r;
    }
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Poly poly(int lo, int hi) {
    Poly::Terms t;
    for (int e = lo; e <= hi; ++e) t[e] = rational();
    return Poly(t);
  }

  /// Generic big q-Jacobi parameters (nonzero a, b, c, 1 - ab q^k != 0).
  qheun::Params params() {
    for (;;) {
      qheun::Params p(base(), nonzero(), nonzero(), nonzero());
      bool ok = true;
      for (int k = 0; k <= 30 && ok; ++k) ok = p.a * p.b * p.q.pow(k) != R(1);
      if (ok) return p;
    }
  }
  qheun::TauSet taus() { return {rational(), nonzero(), nonzero(), nonzero(), nonzero()}; }

  /// Operator with up to `terms` shifts in [-2, 2] and small rational coefficients.
  qheun::SkewOperator op(const Rational& q, int terms) {
    qheun::SkewOperator out(q);
    for (int i = 0; i < terms; ++i) {
      const int k = integer(-2, 2);
      const auto c = qheun::RatFunc::make(poly(integer(-1, 0), integer(0, 2)), poly(0, integer(0, 1)) + Poly(R(11)));
      out += qheun::SkewOperator::term(q, k, c);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qtest

#endif  // QHEUN_TEST_SUPPORT_HPP
