#include <gtest/gtest.h>

#include "qheun/relations.hpp"
#include "test_support.hpp"

using namespace qheun;
using qtest::R;

TEST(QHahn, RelationsHold) {
  qtest::Gen g(71);
  for (int t = 0; t < 20; ++t) {
    const Params p = g.params();
    const Report rep = verify_qhahn(p);
    EXPECT_TRUE(rep.ok()) << p.to_string();
  }
  EXPECT_EQ(structure_r(R(2)), R(-1, 2));
  EXPECT_EQ(qhahn_constants(Params(R(3), R(1), R(2), R(5))).xi6, R(0));
}

TEST(QHahn, PerturbedConstantFails) {
  // Oracle for the checker itself: a shifted xi3 must leave a residual.
  const Params p(R(2), R(1, 3), R(1, 5), R(1, 7));
  const SkewOperator k1 = position_operator(p.q), k2 = big_qjacobi_operator(p), k3 = commutator(k1, k2);
  const auto c = qhahn_constants(p);
  const SkewOperator res = commutator(k3, k1) - (c.r * (k1 * k2 * k1) + c.xi1 * (k1 * k1) + (c.xi3 + R(1)) * k1 +
                                                 c.xi7 * SkewOperator::identity(p.q));
  EXPECT_FALSE(res.is_zero());
}

TEST(RelationFit, RecoversPlantedCoefficients) {
  // lhs built from known coefficients; the fit must return them.
  qtest::Gen g(73);
  const Params p = g.params();
  const SkewOperator y = big_qjacobi_operator(p), x = position_operator(p.q);
  Alphabet gens{{'Y', y}, {'X', x}};
  const Rational c0 = g.rational(), c1 = g.rational(), c2 = g.rational();
  RelationTemplate rel{"planted", c0 * (x * y) + c1 * (y * x) + c2 * SkewOperator::identity(p.q),
                       {{{"XY"}, std::size_t{0}}, {{"YX"}, std::size_t{1}}, {{""}, std::size_t{2}}}};
  const auto fit = fit_relations(gens, {rel}, 3);
  ASSERT_EQ(fit.kind, SolveKind::Unique);
  EXPECT_EQ(fit.values, (std::vector<Rational>{c0, c1, c2}));
  EXPECT_TRUE(fit.residual_zero);
  RelationTemplate bad{"impossible", x * x, {{{"Y"}, std::size_t{0}}}};
  EXPECT_THROW(fit_relations(gens, {bad}, 1), InconsistentFit);
}

TEST(HeunAw, ExtrasSpotValues) {
  const Params p(R(2), R(1, 3), R(1, 5), R(1, 7));
  EXPECT_EQ(heun_aw_extras_published(p, {R(0), R(0), R(0), R(0), R(3)})[0], R(3, 2));
  EXPECT_EQ(heun_aw_extras_published(p, {R(0), R(0), R(0), R(0), R(1)})[2], R(-5, 4));
}

TEST(HeunAw, FreeFitIsUniqueAndMatchesCorrectedForms) {
  qtest::Gen g(79);
  for (int t = 0; t < 4; ++t) {
    const Params p = g.params();
    const TauSet tau = g.taus();
    const auto fit = fit_heun_aw(p, tau, ExtrasMode::Free);
    ASSERT_EQ(fit.fit.kind, SolveKind::Unique);
    EXPECT_TRUE(fit.fit.residual_zero);
    EXPECT_EQ(fit.r, structure_r(p.q));
    EXPECT_EQ(fit.e, heun_aw_extras_corrected(p, tau));
    const auto pub = heun_aw_extras_published(p, tau);
    EXPECT_EQ(fit.e[0], pub[0]);
    EXPECT_EQ(fit.e[2], pub[2]);
    const auto cor = fit_heun_aw(p, tau, ExtrasMode::Corrected);
    EXPECT_EQ(cor.s, fit.s);
    EXPECT_EQ(fit_heun_aw(p, tau, ExtrasMode::Corrected, true).s, cor.s);
  }
}

TEST(HeunAw, PrintedExtrasAreInconsistentForGenericParameters) {
  qtest::Gen g(83);
  const Params p = g.params();
  const TauSet tau = g.taus();
  try {
    (void)fit_heun_aw(p, tau, ExtrasMode::Published);
    FAIL() << "printed e2/e4 unexpectedly consistent";
  } catch (const InconsistentFit& e) {
    EXPECT_FALSE(e.labels().empty());
    EXPECT_FALSE(solve_exact(e.subsystem()).consistent());
  }
}

TEST(HeunAw, DegenerationsAndGenericFailure) {
  qtest::Gen g(89);
  for (int t = 0; t < 3; ++t) {
    const Params p = g.params();
    const TauSet tau = g.taus();
    const Report rep = check_degenerations(p, tau);
    EXPECT_EQ(rep.records.size(), 8U);
    EXPECT_TRUE(rep.ok()) << (rep.first_failure() ? rep.first_failure()->name + " " + rep.first_failure()->witness : "");
    EXPECT_THROW(fit_heun_aw(p, tau, ExtrasMode::Zero), InconsistentFit);
  }
}
