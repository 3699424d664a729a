#include <gtest/gtest.h>

#include "qheun/families.hpp"
#include "qheun/skew_operator.hpp"
#include "test_support.hpp"

using namespace qheun;
using qtest::R;

namespace {

const Poly X = Poly::x();

// Oracle: evaluate sum_k C_k(x0) f(q^k x0) directly.
Rational pointwise(const SkewOperator& op, const RatFunc& f, const Rational& x0) {
  Rational acc;
  for (const auto& [k, c] : op.coeffs()) acc += c.evaluate(x0) * f.evaluate(op.q().pow(k) * x0);
  return acc;
}

}  // namespace

TEST(SkewOperator, ApplyShift) {
  const Rational q = R(3, 2);
  EXPECT_EQ(SkewOperator::shift(q, 1).apply(X * X), q * q * X * X);
  const Poly phi1 = pochhammer_basis(q, 1), phi2 = pochhammer_basis(q, 2);
  EXPECT_EQ(position_operator(q).apply(phi1), X - X * X);
  EXPECT_EQ(position_operator(q).apply(phi1), q.inverse() * (phi1 - phi2));
}

TEST(SkewOperator, ApplyRejectsRationalResult) {
  const SkewOperator w = SkewOperator::multiplication(R(2), RatFunc::make(Poly(R(1)), X - 1));
  try {
    (void)w.apply(X);
    FAIL() << "expected NonPolynomialResult";
  } catch (const NonPolynomialResult& e) {
    EXPECT_EQ(e.denominator(), "x - 1");
  }
}

TEST(SkewOperator, CompositionRule) {
  const Rational q = R(5, 3);
  const SkewOperator a = SkewOperator::term(q, 1, RatFunc(X));
  const SkewOperator b = SkewOperator::term(q, -1, RatFunc(X));
  EXPECT_EQ(a * b, SkewOperator::multiplication(q, RatFunc(q * X * X)));
  const SkewOperator t = SkewOperator::shift(q, 1), x = position_operator(q);
  EXPECT_EQ(commutator(t, x), SkewOperator::term(q, 1, RatFunc((q - R(1)) * X)));
  EXPECT_THROW(a * SkewOperator::shift(R(2), 1), BaseMismatch);
  EXPECT_THROW(SkewOperator(R(1)), InvalidParameters);
}

TEST(SkewOperator, AlgebraLaws) {
  qtest::Gen g(101);
  for (int trial = 0; trial < 25; ++trial) {
    const Rational q = g.base();
    const SkewOperator u = g.op(q, 3), v = g.op(q, 3), w = g.op(q, 3);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_TRUE(commutator(u, u).is_zero());
    EXPECT_EQ(anticommutator(SkewOperator::identity(q), u), R(2) * u);
    const SkewOperator jac = commutator(u, commutator(v, w)) + commutator(v, commutator(w, u)) +
                             commutator(w, commutator(u, v));
    EXPECT_TRUE(jac.is_zero());
    const Rational mu = g.nonzero();
    EXPECT_EQ((u * v).conjugate_shiftscale(mu), u.conjugate_shiftscale(mu) * v.conjugate_shiftscale(mu));
    const Rational eps = g.nonzero();
    EXPECT_EQ((u * v).scale_argument(eps), u.scale_argument(eps) * v.scale_argument(eps));
  }
}

TEST(SkewOperator, ModuleActionAgreesPointwise) {
  qtest::Gen g(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Rational q = g.base();
    const SkewOperator u = g.op(q, 2), v = g.op(q, 2);
    const RatFunc f(g.poly(0, 3));
    const Rational x0 = R(7, 13);
    EXPECT_EQ((u * v).apply_rational(f), u.apply_rational(v.apply_rational(f)));
    EXPECT_EQ(u.apply_rational(f).evaluate(x0), pointwise(u, f, x0));
    const Rational eps = g.nonzero();
    // S W S^-1 applied to f(eps x) equals (W f)(eps x).
    EXPECT_EQ(u.scale_argument(eps).apply_rational(f.scale_substitute(eps)), u.apply_rational(f).scale_substitute(eps));
  }
}

TEST(SkewOperator, Transformations) {
  const Rational q = R(2);
  qtest::Gen g(3);
  const SkewOperator w = g.op(q, 3);
  EXPECT_EQ(w.conjugate_shiftscale(R(1)), w);
  EXPECT_EQ(SkewOperator::term(q, 1, RatFunc(X)).conjugate_shiftscale(R(3)), SkewOperator::term(q, 1, RatFunc(R(3) * X)));
  EXPECT_EQ(w.scale_argument(R(1)), w);
  EXPECT_EQ(SkewOperator::term(q, 1, RatFunc(X - 1)).scale_argument(R(2)), SkewOperator::term(q, 1, RatFunc(R(2) * X - 1)));
  EXPECT_EQ(w.affine(RatFunc(R(1)), R(0), R(0)), w);
  EXPECT_EQ(SkewOperator::identity(q).affine(RatFunc(X), R(0), R(1)), SkewOperator::multiplication(q, RatFunc(R(2) * X)));
  EXPECT_THROW(w.affine(RatFunc(), R(0), R(0)), ZeroMultiplier);
  EXPECT_THROW(w.conjugate_shiftscale(R(0)), ZeroScale);
  EXPECT_THROW(w.scale_argument(R(0)), ZeroScale);
}

TEST(SkewOperator, SerializationRoundTrip) {
  qtest::Gen g(19);
  for (int trial = 0; trial < 20; ++trial) {
    const SkewOperator w = g.op(g.base(), 3);
    EXPECT_EQ(parse_operator(w.serialize()), w);
  }
  EXPECT_THROW(parse_operator("k=1 num=[1] den=[1]"), ParseError);
}
