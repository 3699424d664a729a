#include <gtest/gtest.h>

#include "qheun/aw_triple.hpp"
#include "qheun/mpoly.hpp"
#include "test_support.hpp"

using namespace qheun;
using qtest::R;

namespace {

using MP = MPoly<Rational>;
const std::vector<std::string> kXYZ{"x", "y", "z"};

MP var(std::size_t i) { return MP::variable(3, i); }
MP cst(const Rational& c) { return MP(3, c); }

// beta^2 and alpha/beta forced by the triple, from an independent elimination.
Rational beta_squared(const Params& p) {
  const Rational s = Rational(1) + p.a * p.b * p.q;
  const Rational t = p.q * p.q - Rational(1);
  return s * s / (p.a * p.b * t * t);
}

}  // namespace

TEST(MPoly, SubstituteAndEvaluate) {
  const MP f = var(0) * var(0) * var(1) + R(3) * var(2) - cst(R(1, 2));
  const MP g = f.substitute(0, var(1) + cst(R(2)));
  const std::vector<Rational> pt{R(5), R(-3), R(7, 4)};
  std::vector<Rational> moved = pt;
  moved[0] = pt[1] + R(2);
  EXPECT_EQ(g.evaluate(pt), f.evaluate(moved));
  EXPECT_EQ(g.degree_in(0), 0);
  EXPECT_EQ(g.degree_in(1), 3);
  EXPECT_EQ(f.substitute(2, R(0)).variables(), (std::vector<std::size_t>{0, 1}));
}

TEST(MPoly, StripContentAndLinearCoeff) {
  const MP f = var(0) * var(0) * var(1) + R(2) * var(0) * var(2);
  const MP s = f.strip_content({0});
  EXPECT_EQ(s, var(0) * var(1) + R(2) * var(2));
  EXPECT_EQ(f.strip_content({1}), f);
  EXPECT_EQ(s.constant_linear_coeff(2), R(2));
  EXPECT_FALSE(s.constant_linear_coeff(1).has_value());
  EXPECT_EQ((R(4) * var(1) - cst(R(2))).monic().to_string(kXYZ), "(-1/2) + (1)*y");
}

TEST(MPoly, RootsOverRationals) {
  // (x - 2)(3x + 1)(x^2 + 1)
  const Poly p = (Poly::x() - R(2)) * (R(3) * Poly::x() + R(1)) * (Poly::x() * Poly::x() + R(1));
  auto fr = roots_in_field(p);
  ASSERT_EQ(fr.roots.size(), 2u);
  for (const auto& r : fr.roots) EXPECT_TRUE(p.evaluate(r).is_zero());
  ASSERT_TRUE(fr.extension.has_value());
  EXPECT_EQ(*fr.extension, -1);

  auto q2 = roots_in_field(Poly::from_coeffs({R(-12), R(0), R(1)}));
  EXPECT_TRUE(q2.roots.empty());
  EXPECT_EQ(*q2.extension, 3);
}

TEST(MPoly, RootsOverQuadraticField) {
  auto d = std::make_shared<const Rational>(R(3));
  using QP = LaurentPoly<QuadraticNumber>;
  const QP p(QP::Terms{{0, QuadraticNumber(R(-12), R(0), d)}, {2, QuadraticNumber(R(1))}});
  auto fr = roots_in_field(p);
  ASSERT_EQ(fr.roots.size(), 2u);
  for (const auto& r : fr.roots) {
    EXPECT_FALSE(r.is_rational());
    EXPECT_TRUE(p.evaluate(r).is_zero());
    EXPECT_EQ(r * r, QuadraticNumber(R(12)));
  }
}

TEST(AwTriple, RationalWhenAbIsSquare) {
  const Params p(R(2), R(1, 3), R(3), R(1, 7));
  const auto res = solve_aw_triple(p);
  ASSERT_EQ(res.status, TripleStatus::Solved) << res.reason;
  EXPECT_FALSE(res.field.has_value());
  EXPECT_TRUE(res.verified) << res.residuals[0] << res.residuals[1] << res.residuals[2];
  const auto& beta = res.values[kBeta];
  EXPECT_TRUE(beta.is_rational());
  EXPECT_EQ(beta * beta, QuadraticNumber(beta_squared(p)));
  EXPECT_EQ(res.values[kAlpha] * QuadraticNumber(R(1) + p.a * p.b * p.q), beta);
  EXPECT_GE(res.free_parameters, 1);
  EXPECT_FALSE(res.values[kTau0p].is_zero());
}

TEST(AwTriple, QuadraticFieldWhenAbIsNotSquare) {
  const Params p(R(2), R(1, 3), R(1, 5), R(1, 7));
  const auto res = solve_aw_triple(p);
  ASSERT_EQ(res.status, TripleStatus::Solved) << res.reason;
  ASSERT_TRUE(res.field.has_value());
  EXPECT_EQ(*res.field, R(15));
  EXPECT_TRUE(res.verified);
  const auto& beta = res.values[kBeta];
  EXPECT_FALSE(beta.is_rational());
  EXPECT_EQ(beta * beta, QuadraticNumber(beta_squared(p)));
}

TEST(AwTriple, RandomParametersVerify) {
  qtest::Gen g(41);
  for (int trial = 0; trial < 4; ++trial) {
    Params p = g.params();
    if (p.a.is_zero() || p.c.is_zero()) continue;
    const auto res = solve_aw_triple(p);
    ASSERT_EQ(res.status, TripleStatus::Solved) << p.to_string() << ": " << res.reason;
    EXPECT_TRUE(res.verified) << p.to_string();
    if (res.field) {
      EXPECT_EQ(squarefree_kernel(p.a * p.b), mpz_class(res.field->numerator()));
    }
  }
}

TEST(AwTriple, ShiftingW2BreaksFirstRelation) {
  const Params p(R(2), R(1, 3), R(3), R(1, 7));
  auto res = solve_aw_triple(p);
  ASSERT_TRUE(res.verified);
  auto shifted = res.values;
  shifted[kTau0p] = shifted[kTau0p] + QuadraticNumber(R(5, 2));
  const auto r = aw_triple_residuals(p, shifted);
  using QOp = BasicSkewOperator<QuadraticNumber>;
  EXPECT_EQ(r[0], (QuadraticNumber(R(-5, 2)) * QOp::identity(QuadraticNumber(p.q))).to_string());
  EXPECT_FALSE(r[1].empty());
}

TEST(AwTriple, RejectsDegenerateParameters) {
  EXPECT_THROW(solve_aw_triple(Params(R(2), R(0), R(3), R(1, 7))), InvalidParameters);
  EXPECT_THROW(solve_aw_triple(Params(R(2), R(1), R(-1, 2), R(1, 7))), InvalidParameters);
}

TEST(AwTriple, BudgetExhaustionIsReported) {
  AwTripleConfig tight;
  tight.node_budget = 2;
  EXPECT_THROW(solve_aw_triple(Params(R(2), R(1, 3), R(3), R(1, 7)), tight), SolverBlowup);
}
