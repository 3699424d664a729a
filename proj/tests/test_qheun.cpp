#include <gtest/gtest.h>

#include "qheun/checks.hpp"
#include "qheun/heun.hpp"
#include "test_support.hpp"

using namespace qheun;
using qtest::R;

namespace {

const Poly X = Poly::x();

HeunData random_heun(qtest::Gen& g, const Rational& q) {
  return {g.poly(0, 3), g.poly(0, 2), g.poly(0, 1), q};
}

}  // namespace

TEST(BigQHeun, Construction) {
  const HeunData mult(Poly(), Poly(), X, R(3));
  EXPECT_EQ(big_qheun(mult), SkewOperator::multiplication(R(3), RatFunc(X)));
  const SkewOperator w = big_qheun({X * X * X, Poly(), Poly(), R(2)});
  EXPECT_EQ(w.coeff(1), RatFunc(X));
  EXPECT_EQ(w.coeff(-1), RatFunc(R(2) * X));
  EXPECT_EQ(w.coeff(0), RatFunc(R(-3) * X));
  EXPECT_TRUE(w.apply(Poly(R(1))).is_zero());
  EXPECT_TRUE(w.apply(X).is_zero());
  EXPECT_THROW(HeunData(X * X * X * X, Poly(), Poly(), R(2)), NotHeunShape);
}

TEST(BigQHeun, DegreeRaisingAndClosedForm) {
  qtest::Gen g(41);
  for (int t = 0; t < 10; ++t) {
    const HeunData d = random_heun(g, g.base());
    EXPECT_TRUE(check_degree_raising(big_qheun(d), 12, d).ok());
    EXPECT_EQ(extract_heun_data(big_qheun(d)), d);
  }
  const Rational q = R(5, 2);
  const auto bad = check_degree_raising(SkewOperator::multiplication(q, RatFunc(X * X)), 3);
  ASSERT_NE(bad.first_failure(), nullptr);
  EXPECT_EQ(bad.first_failure()->name, "degree_raising n=0");
  EXPECT_NE(bad.first_failure()->witness.find("degree 2"), std::string::npos);
  EXPECT_TRUE(check_degree_raising(SkewOperator::identity(q), 6).ok());
}

TEST(BigQHeun, ExtractRejectsOutsideClass) {
  const Rational q = R(2);
  EXPECT_THROW(extract_heun_data(SkewOperator::term(q, 1, RatFunc(Poly::monomial(R(1), 5)))), NotHeunShape);
  EXPECT_THROW(extract_heun_data(SkewOperator::shift(q, 2)), NotHeunShape);
}

TEST(BigQHeun, PochhammerTridiagonal) {
  // (x;q)_n needs p3(1) = 0: T^+ (x;q)_n = (x;q)_(n+1)/(1 - x).
  qtest::Gen g(43);
  for (int t = 0; t < 5; ++t) {
    const Rational q = g.base();
    const HeunData d((X - 1) * g.poly(0, 2), g.poly(0, 2), g.poly(0, 1), q);
    EXPECT_TRUE(check_tridiagonal(big_qheun(d), PolyFamily::pochhammer(q), 8).report.ok());
  }
  // A root of p3 elsewhere is moved to 1 by scaling the argument.
  const Rational q0 = R(5, 3), root = R(-2, 7);
  const HeunData off((X - Poly(root)) * (X * X + 3), X + 1, R(2) * X - 1, q0);
  EXPECT_FALSE(check_tridiagonal(big_qheun(off), PolyFamily::pochhammer(q0), 4).report.ok());
  const SkewOperator moved = big_qheun(off).scale_argument(root);
  EXPECT_TRUE(extract_heun_data(moved).p3.evaluate(R(1)).is_zero());
  EXPECT_TRUE(check_tridiagonal(moved, PolyFamily::pochhammer(q0), 8).report.ok());
  const Rational q = R(3);
  const auto tri = check_tridiagonal(position_operator(q), PolyFamily::pochhammer(q), 6);
  ASSERT_TRUE(tri.report.ok());
  for (const auto& row : tri.table) {
    EXPECT_EQ(row.diag, q.pow(-row.n));
    EXPECT_EQ(row.super, -q.pow(-row.n));
  }
}

TEST(BigQHeun, ConverseFromTridiagonality) {
  // An operator with support {-1, 0, 1} and generic x^-2 coefficients is
  // tridiagonal only after landing in the big q-Heun class.
  const Rational q = R(2);
  const SkewOperator w(q, {{1, RatFunc::make(X * X * X * X, X * X)}, {-1, RatFunc(X)}, {0, RatFunc(R(1))}});
  EXPECT_FALSE(check_tridiagonal(w, PolyFamily::pochhammer(q), 3).report.ok());
  EXPECT_THROW(extract_heun_data(w), NotHeunShape);
}

TEST(LittleQHeun, SumConditionAndEnforcement) {
  const Rational q = R(3, 2);
  qtest::Gen g(5);
  for (int t = 0; t < 5; ++t) {
    const Poly r2 = g.poly(0, 2), p2 = g.poly(0, 2), p1 = g.poly(0, 1);
    const Poly s1 = r2, s2 = q * r2 + p2, s0 = X * p1 - s1 - s2;
    const SkewOperator lit = little_qheun(s0, s1, s2, q, true);
    EXPECT_EQ(lit, little_qheun(s0, s1, s2, q, false));
    EXPECT_EQ(lit, big_qheun({X * r2, p2, p1, q}));
  }
  // Constant terms 1, -5, 6: mu^2 - 5 mu + 6 = 0 has rational roots.
  const Poly s1 = X * X + 1, s0 = X - 5, s2 = R(2) * X * X + 6;
  const SkewOperator fixed = little_qheun(s0, s1, s2, q, true);
  EXPECT_TRUE(check_degree_raising(fixed, 8).ok());
  EXPECT_FALSE(check_degree_raising(little_qheun(s0, s1, s2, q, false), 8).ok());
  // mu^2 + 1 = 0 has none.
  EXPECT_THROW(little_qheun(Poly(), Poly(R(1)), Poly(R(1)), q, true), NoRationalScale);
}

TEST(AlgebraicHeun, ClosedFormMatchesComposition) {
  qtest::Gen g(47);
  for (int t = 0; t < 10; ++t) {
    const Params p = g.params();
    const TauSet tau = g.taus();
    const SkewOperator w = algebraic_heun(p, tau);
    EXPECT_EQ(w, algebraic_heun_closed(p, tau));
    EXPECT_NO_THROW(extract_heun_data(w));
  }
  const Params p(R(2), R(1, 3), R(1, 5), R(1, 7));
  EXPECT_EQ(algebraic_heun(p, {R(0), R(0), R(0), R(0), R(1)}), big_qjacobi_operator(p));
  EXPECT_EQ(algebraic_heun(p, {R(0), R(0), R(0), R(1), R(0)}), position_operator(p.q));
}

TEST(AlgebraicHeun, TridiagonalInBothBases) {
  qtest::Gen g(53);
  for (int t = 0; t < 3; ++t) {
    const Params p = g.params();
    const TauSet tau = g.taus();
    const SkewOperator w = algebraic_heun(p, tau);
    EXPECT_TRUE(check_tridiagonal(w, PolyFamily::pochhammer(p.q), 8).report.ok());
    const auto tri = check_tridiagonal(w, PolyFamily::big_qjacobi(p), 8, tau);
    EXPECT_TRUE(tri.report.ok()) << (tri.report.first_failure() ? tri.report.first_failure()->witness : "");
  }
  const Params p = g.params();
  const auto diag = check_tridiagonal(big_qjacobi_operator(p), PolyFamily::big_qjacobi(p), 6);
  for (const auto& row : diag.table) {
    EXPECT_EQ(row.diag, lambda_n(p, row.n));
    EXPECT_TRUE(row.sub.is_zero() && row.super.is_zero());
  }
}

TEST(AlgebraicHeun, Specializations) {
  qtest::Gen g(59);
  const Params p = g.params();
  const Rational t1 = g.nonzero(), t3 = g.rational(), t0 = g.rational();
  const SkewOperator w1 = specialize_w1(p, t1, t3, t0), w2 = specialize_w2(p, t1, t3, t0);
  EXPECT_EQ(w1.support(), (std::vector<int>{0, 1}));
  EXPECT_EQ(w2.support(), (std::vector<int>{-1, 0}));
  const Rational q = p.q;
  EXPECT_EQ(w1.coeff(1), RatFunc::make(t1 * p.a * q * (R(1) - q * q) * (X - 1) * (p.b * X - Poly(p.c)), X));
  EXPECT_EQ(w2.coeff(-1), RatFunc::make(t1 * (R(1) - q.pow(-2)) * (X - Poly(p.c * q)) * (X - Poly(p.a * q)), X));
  for (const auto& w : {w1, w2}) {
    const auto v = (RatFunc(X) * w.coeff(0)).as_laurent();
    ASSERT_TRUE(v.has_value());
    EXPECT_LE(v->degree(), 2);
    EXPECT_NO_THROW(extract_heun_data(w));
  }
}

TEST(Takemura, A4CollapseAndShape) {
  const Rational q = R(2);
  const SkewOperator a4 = takemura_a4(R(0), R(0), R(0), R(0), R(1), R(1), R(1), R(0), q);
  EXPECT_EQ(a4.coeff(-1), RatFunc(X));
  EXPECT_EQ(a4.coeff(1), RatFunc(X));
  EXPECT_EQ(a4.coeff(0), RatFunc(R(-2) * X));
  qtest::Gen g(61);
  const SkewOperator gen = takemura_a4(g.rational(), g.rational(), g.rational(), g.rational(), g.nonzero(),
                                       g.rational(), g.rational(), g.rational(), q);
  for (int k : {-1, 0, 1}) {
    EXPECT_LE(gen.coeff(k).numerator().degree(), 2);
    EXPECT_EQ(gen.coeff(k).denominator(), X);
  }
}

TEST(Takemura, A4IsLittleHeunAfterConjugation) {
  // Hahn's form: s_k = x * A_k. The sum condition is the constant term of
  // s0 + s1 + s2; conjugation by the rational root mu restores it.
  const Rational q = R(3);
  const SkewOperator a4 = takemura_a4(R(1), R(2), R(1, 2), R(3), R(2), R(1, 3), R(5), R(7), q);
  auto s = [&](int k) { return *(RatFunc(X) * a4.coeff(k)).as_laurent(); };
  const SkewOperator little = little_qheun(s(0), s(1), s(-1), q, true);
  // 3 mu^2 - 7 mu + 2 = 0 at mu = 2.
  EXPECT_EQ(little, a4.conjugate_shiftscale(R(2)));
  EXPECT_TRUE(check_degree_raising(little, 8).ok());
  EXPECT_NO_THROW(extract_heun_data(little));
}

TEST(Takemura, A3NormalizesToBigHeun) {
  // u_prod = q mu^2 w_prod with mu = 2, and kappa on the equivalence locus.
  const Rational q = R(4), rq = R(2), mu = R(2);
  const std::array<Rational, 3> w{R(1), R(3), R(-1, 2)};
  const std::array<Rational, 3> u{R(2), R(-3), q * mu * mu * (w[0] * w[1] * w[2]) / R(-6)};
  const Rational wp = w[0] * w[1] * w[2], up = u[0] * u[1] * u[2];
  const Rational kappa = mu * wp + up / mu;
  const SkewOperator a3 = takemura_a3(u, w, kappa, q, rq);
  const SkewOperator big = normalize_takemura_a3(a3);
  const HeunData d = extract_heun_data(big);
  EXPECT_EQ(big_qheun(d), big);
  EXPECT_TRUE(check_degree_raising(big, 10, d).ok());
  // Off the locus the x^-2 remainder survives.
  EXPECT_THROW(extract_heun_data(normalize_takemura_a3(takemura_a3(u, w, kappa + R(1), q, rq))), NotHeunShape);
  EXPECT_THROW(takemura_a3(u, w, kappa, q, R(3)), InvalidParameters);
}

TEST(FiniteRestriction, GridMatrix) {
  const Rational q = R(3);
  for (int n : {0, 2, 4}) {
    const Params p(q, R(1, 5), R(2, 7), q.pow(-n - 1));
    const SkewOperator y = big_qjacobi_operator(p);
    EXPECT_TRUE(big_qjacobi_b(p).evaluate(grid_point(q, 0)).is_zero());
    EXPECT_TRUE(big_qjacobi_d(p).evaluate(grid_point(q, n)).is_zero());
    const auto m = finite_restriction_matrix(y, p, n);
    EXPECT_EQ(m.rows(), static_cast<std::size_t>(n) + 1);
    EXPECT_TRUE(m.is_banded(1, 1));
    for (int j = 0; j <= n; ++j) {
      const Poly pj = big_qjacobi_poly(p, j);
      EXPECT_EQ(m * grid_samples(pj, q, n), grid_samples(y.apply(pj), q, n));
    }
  }
  const Params wrong(q, R(1, 5), R(2, 7), R(1, 2));
  EXPECT_THROW(finite_restriction_matrix(big_qjacobi_operator(wrong), wrong, 3), BoundaryLeak);
  const Params ok(q, R(1, 5), R(2, 7), q.pow(-4));
  EXPECT_THROW(finite_restriction_matrix(SkewOperator::shift(q, 1), ok, 3), BoundaryLeak);
}
