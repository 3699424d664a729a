#include <gtest/gtest.h>

#include <random>

#include "qheun/laurent_poly.hpp"
#include "qheun/linear_system.hpp"
#include "qheun/quadratic_field.hpp"
#include "qheun/rat_func.hpp"

using namespace qheun;

namespace {

Rational R(long n, long d = 1) { return {n, d}; }
const Poly X = Poly::x();

Poly random_laurent(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> coef(-6, 6), den(1, 5);
  Poly::Terms t;
  for (int e = lo; e <= hi; ++e) t[e] = R(coef(rng), den(rng));
  return Poly(t);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(R(6, -4).to_string(), "-3/2");
  EXPECT_EQ(R(0, 7).denominator(), 1);
  EXPECT_EQ(Rational::parse("-10/4"), R(-5, 2));
  EXPECT_EQ(Rational::parse("+3"), R(3));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(R(1) / R(0), DivisionByZero);
  EXPECT_EQ(R(2, 3).pow(-2), R(9, 4));
  EXPECT_EQ(*R(9, 16).sqrt(), R(3, 4));
  EXPECT_FALSE(R(2).sqrt().has_value());
}

TEST(LaurentPoly, Arithmetic) {
  EXPECT_EQ((X + 1) * (X - 1), X * X - 1);
  std::mt19937_64 rng(3);
  const Poly f = random_laurent(rng, -2, 3);
  EXPECT_EQ(Poly() + f, f);
  EXPECT_EQ((1 - X) * (1 - R(2) * X), Poly::from_coeffs({R(1), R(-3), R(2)}));
  EXPECT_EQ(f - f, Poly());
  EXPECT_TRUE((f - f).terms().empty());
}

TEST(LaurentPoly, ScaleSubstitute) {
  EXPECT_EQ((X * X + 1).scale_substitute(R(2)), R(4) * X * X + 1);
  const Poly inv = Poly::monomial(R(1), -1);
  EXPECT_EQ(inv.scale_substitute(R(1, 2)), R(2) * inv);
  EXPECT_THROW(inv.scale_substitute(R(0)), ZeroScale);
  EXPECT_EQ((X + 3).scale_substitute(R(0)), Poly(R(3)));
}

TEST(LaurentPoly, ScaleSubstituteIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly f = random_laurent(rng, -2, 2), g = random_laurent(rng, -1, 3);
    const Rational lam = R(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 6));
    if (lam.is_zero()) continue;
    EXPECT_EQ((f * g).scale_substitute(lam), f.scale_substitute(lam) * g.scale_substitute(lam));
    EXPECT_EQ(f.scale_substitute(R(1)), f);
    // Independent oracle: pointwise evaluation.
    const Rational x0 = R(3, 7);
    EXPECT_EQ(f.scale_substitute(lam).evaluate(x0), f.evaluate(lam * x0));
  }
}

TEST(LaurentPoly, DivmodAndGcd) {
  const Poly a = (X - 1) * (X + 2) * (R(3) * X - 1);
  const Poly b = (X - 1) * (X * X + 1);
  EXPECT_EQ(gcd(a, b), X - 1);
  auto [quot, rem] = divmod(a, b);
  EXPECT_EQ(quot * b + rem, a);
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_THROW(divmod(a, Poly()), DivisionByZero);
}

TEST(RatFunc, Normalize) {
  EXPECT_EQ(RatFunc::make(X * X - 1, X - 1), RatFunc(X + 1));
  const RatFunc half = RatFunc::make(R(2) * X, Poly(R(4)));
  EXPECT_EQ(half.numerator(), R(1, 2) * X);
  EXPECT_TRUE(half.denominator() == Poly(R(1)));
  // (q p3 + x p2)/x^2 with p3 = x^3, p2 = 0, q = 2.
  EXPECT_EQ(RatFunc::make(R(2) * X * X * X, X * X), RatFunc(R(2) * X));
  EXPECT_THROW(RatFunc::make(X, Poly()), DivisionByZero);
}

TEST(RatFunc, CanonicalFormIsIdempotentAndRoundTrips) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly n = random_laurent(rng, -2, 3), d = random_laurent(rng, -1, 2);
    if (d.is_zero()) continue;
    const RatFunc f = RatFunc::make(n * (X - 2), d * (X - 2));
    EXPECT_EQ(RatFunc::make(f.numerator(), f.denominator()), f);
    EXPECT_EQ(f.denominator().leading(), R(1));
    EXPECT_TRUE(f.numerator().is_polynomial());
    EXPECT_TRUE(gcd(f.numerator(), f.denominator()).is_constant());
    const Rational x0 = R(5, 3);
    if (!d.evaluate(x0).is_zero()) EXPECT_EQ(f.evaluate(x0), n.evaluate(x0) / d.evaluate(x0));
  }
}

TEST(RatFunc, FieldArithmeticAgreesPointwise) {
  std::mt19937_64 rng(17);
  const Rational x0 = R(-7, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const RatFunc f = RatFunc::make(random_laurent(rng, -1, 2), X + R(static_cast<long>(trial)));
    const RatFunc g = RatFunc::make(random_laurent(rng, 0, 2), X * X + 1);
    if (f.is_zero() || g.is_zero()) continue;
    EXPECT_EQ((f + g).evaluate(x0), f.evaluate(x0) + g.evaluate(x0));
    EXPECT_EQ((f * g).evaluate(x0), f.evaluate(x0) * g.evaluate(x0));
    EXPECT_EQ((f / g).evaluate(x0), f.evaluate(x0) / g.evaluate(x0));
    EXPECT_EQ(f - f, RatFunc());
    EXPECT_EQ(f.scale_substitute(R(3)).evaluate(x0), f.evaluate(R(3) * x0));
  }
  EXPECT_EQ(RatFunc(Poly::monomial(R(1), -2)).as_laurent().value(), Poly::monomial(R(1), -2));
  EXPECT_FALSE(RatFunc::make(Poly(R(1)), X + 1).as_laurent().has_value());
}

TEST(SolveExact, Unique) {
  LinSystem<Rational> sys({{R(1), R(0)}, {R(0), R(1)}}, {R(3), R(4)});
  auto s = solve_exact(sys);
  ASSERT_EQ(s.kind, SolveKind::Unique);
  EXPECT_EQ(s.particular, (std::vector<Rational>{R(3), R(4)}));
}

TEST(SolveExact, Parametric) {
  LinSystem<Rational> sys({{R(1), R(1)}, {R(2), R(2)}}, {R(1), R(2)});
  auto s = solve_exact(sys);
  ASSERT_EQ(s.kind, SolveKind::Parametric);
  EXPECT_EQ(s.particular, (std::vector<Rational>{R(1), R(0)}));
  ASSERT_EQ(s.null_basis.size(), 1U);
  EXPECT_EQ(s.null_basis[0], (std::vector<Rational>{R(-1), R(1)}));
}

TEST(SolveExact, InconsistentWithCore) {
  LinSystem<Rational> sys({{R(1), R(0)}, {R(1), R(1)}, {R(1), R(1)}}, {R(0), R(1), R(2)});
  EXPECT_EQ(solve_exact(sys).kind, SolveKind::Inconsistent);
  EXPECT_EQ(minimal_infeasible_rows(sys), (std::vector<std::size_t>{1, 2}));
}

TEST(SolveExact, ContainsPlantedSolution) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + trial % 5, cols = 1 + trial % 4;
    Matrix<Rational> a(rows, cols);
    std::vector<Rational> v(cols);
    for (auto& x : v) x = R(d(rng), 1 + (d(rng) + 5) % 4);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = R(d(rng));
    auto s = solve_exact(LinSystem<Rational>(a, a * v));
    ASSERT_TRUE(s.consistent());
    // v - particular must lie in the span of the null basis: solve for it.
    Matrix<Rational> basis(cols, s.null_basis.size());
    for (std::size_t j = 0; j < s.null_basis.size(); ++j)
      for (std::size_t i = 0; i < cols; ++i) basis(i, j) = s.null_basis[j][i];
    std::vector<Rational> diff(cols);
    for (std::size_t i = 0; i < cols; ++i) diff[i] = v[i] - s.particular[i];
    EXPECT_TRUE(solve_exact(LinSystem<Rational>(basis, diff)).consistent());
  }
}

TEST(QuadraticField, Arithmetic) {
  auto d = std::make_shared<const Rational>(15);
  const QuadraticNumber s = QuadraticNumber::sqrt_of(d);
  EXPECT_EQ(s * s, QuadraticNumber(R(15)));
  const QuadraticNumber z(R(1, 2), R(3), d);
  EXPECT_EQ((z / z), QuadraticNumber(R(1)));
  EXPECT_EQ(*(z * z).sqrt() * *(z * z).sqrt(), z * z);
  EXPECT_EQ(squarefree_kernel(R(60, 7)), 105);
  auto other = std::make_shared<const Rational>(2);
  EXPECT_THROW(s + QuadraticNumber::sqrt_of(other), BaseMismatch);
  // Polynomial gcd over the extension.
  using QP = LaurentPoly<QuadraticNumber>;
  const QP x = QP::x();
  const QP a = (x - QP(s)) * (x + QP(QuadraticNumber(R(1))));
  const QP b = (x - QP(s)) * (x - QP(QuadraticNumber(R(2))));
  EXPECT_EQ(gcd(a, b), x - QP(s));
}
