#ifndef QHEUN_PARAMS_HPP
#define QHEUN_PARAMS_HPP

#include <string>

#include "qheun/errors.hpp"
#include "qheun/rational.hpp"

namespace qheun {

/// Base q and the big q-Jacobi parameters a, b, c.
struct Params {
  Rational q, a, b, c;

  Params(Rational q_, Rational a_, Rational b_, Rational c_, int n_max = 12)
      : q(std::move(q_)), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    check_base(q, n_max);
  }

  /// q must avoid 0, +-1 and low-order roots of unity up to 2*n_max.
  static void check_base(const Rational& q, int n_max = 12) {
    if (q.is_zero() || q == Rational(1) || q == Rational(-1))
      throw InvalidParameters("q must avoid 0, 1, -1 (got " + q.to_string() + ")");
    Rational pw = q;
    for (int k = 2; k <= 2 * n_max; ++k) {
      pw *= q;
      if (pw == Rational(1)) throw InvalidParameters("q is a root of unity of order " + std::to_string(k));
    }
  }

  [[nodiscard]] std::string to_string() const {
    return "q=" + q.to_string() + " a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string();
  }
};

/// Coefficients of the bilinear combination t1 XY + t2 YX + t3 X + t4 Y + t0.
struct TauSet {
  Rational t0, t1, t2, t3, t4;

  [[nodiscard]] std::string to_string() const {
    return "t0=" + t0.to_string() + " t1=" + t1.to_string() + " t2=" + t2.to_string() +
           " t3=" + t3.to_string() + " t4=" + t4.to_string();
  }
};

}  // namespace qheun

#endif  // QHEUN_PARAMS_HPP
