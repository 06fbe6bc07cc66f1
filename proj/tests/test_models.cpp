#include <gtest/gtest.h>

#include <cmath>

#include "dyncons/models.hpp"
#include "support/random_params.hpp"

namespace dyncons {
namespace {

const ModelParams kReference{0.7, 0.9, 0.6};

TEST(ModelParams, RejectsNonPositiveValues) {
  EXPECT_THROW(ModelParams(0.0, 0.9, 0.6), ValidationError);
  EXPECT_THROW(ModelParams(0.7, -1.0, 0.6), ValidationError);
  EXPECT_THROW(ModelParams(0.7, 0.9, NAN), ValidationError);
  EXPECT_THROW(ScalarModelParams(3.0, 0.0, 1.0), ValidationError);
}

TEST(RhsPredPrey, VanishesAtRoundedInteriorEquilibrium) {
  const State d = rhs_predprey(kReference, {0.5775, 0.3465});
  EXPECT_LT(std::abs(d.n), 1e-3);
  EXPECT_LT(std::abs(d.p), 1e-3);
}

TEST(RhsPredPrey, VanishesAtPredatorFreeEquilibrium) {
  const State d = rhs_predprey(kReference, {1.0, 0.0});
  EXPECT_LT(std::abs(d.n), 1e-15);
  EXPECT_LT(std::abs(d.p), 1e-15);
}

TEST(RhsPredPrey, MatchesHandEvaluationAtInitialPoint) {
  // 0.2*0.8 - 0.04/0.34 and 0.9*0.2*(0.6 - 1), evaluated with 50 digits.
  const State d = rhs_predprey(kReference, {0.2, 0.2});
  EXPECT_NEAR(d.n, 0.042352941176470588235, 1e-15);
  EXPECT_NEAR(d.p, -0.072, 1e-15);
}

TEST(RhsPredPrey, RejectsNonPositivePrey) {
  EXPECT_THROW((void)rhs_predprey(kReference, {0.0, 0.3}), DomainError);
  EXPECT_THROW((void)rhs_predprey(kReference, {-0.1, 0.3}), DomainError);
  EXPECT_NO_THROW((void)rhs_predprey(kReference, {0.4, 0.0}));
}

TEST(InteriorEquilibrium, ReferenceParameters) {
  const auto eq = interior_equilibrium(kReference);
  ASSERT_TRUE(eq.has_value());
  EXPECT_EQ(eq->kind, EquilibriumKind::Interior);
  EXPECT_NEAR(eq->state.n, 0.5775, 5e-5);
  EXPECT_NEAR(eq->state.p, 0.3465, 5e-5);
  EXPECT_DOUBLE_EQ(eq->state.n, 0.82 / 1.42);
}

TEST(InteriorEquilibrium, AbsentOnExistenceBoundary) {
  // 1 + 0.5 * 2 == 2: N* = 0.
  EXPECT_FALSE(interior_equilibrium(ModelParams(0.5, 1.0, 2.0)).has_value());
  EXPECT_FALSE(interior_equilibrium(ModelParams(0.1, 1.0, 2.0)).has_value());
  EXPECT_THROW((void)require_interior(ModelParams(0.5, 1.0, 2.0)), ExistenceError);
}

TEST(InteriorEquilibrium, ClosedFormExample) {
  const auto eq = interior_equilibrium(ModelParams(1.0, 1.0, 3.0));
  ASSERT_TRUE(eq.has_value());
  EXPECT_DOUBLE_EQ(eq->state.n, 0.25);
  EXPECT_DOUBLE_EQ(eq->state.p, 0.75);
}

TEST(InteriorEquilibrium, PredatorFree) {
  const auto e1 = predator_free_equilibrium();
  EXPECT_EQ(e1.kind, EquilibriumKind::PredatorFree);
  EXPECT_EQ(e1.state, (State{1.0, 0.0}));
}

TEST(InteriorEquilibrium, ZeroesRightHandSideForRandomParameters) {
  auto rng = testing::make_rng();
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const ModelParams p = testing::random_params(rng);
    const auto eq = interior_equilibrium(p);
    ASSERT_EQ(eq.has_value(), p.one_plus_alpha_delta() > p.delta());
    if (!eq) continue;
    ++checked;
    const State d = rhs_predprey(p, eq->state);
    EXPECT_LT(std::abs(d.n), 1e-12);
    EXPECT_LT(std::abs(d.p), 1e-12);
  }
  EXPECT_GT(checked, 1000);
}

TEST(InteriorEquilibrium, IndependentOfBeta) {
  for (double beta : {1e-6, 0.3, 0.9, 17.0, 1e4}) {
    const auto eq = interior_equilibrium(ModelParams(0.7, beta, 0.6));
    ASSERT_TRUE(eq.has_value());
    EXPECT_EQ(eq->state, interior_equilibrium(kReference)->state);
  }
}

TEST(ScalarModels, Logistic) {
  const ScalarModelParams sp(3.0, 50.0, 1.0);
  EXPECT_EQ(rhs_logistic(sp, 50.0), 0.0);
  EXPECT_EQ(rhs_logistic(sp, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(rhs_logistic(sp, 25.0), 37.5);
}

TEST(ScalarModels, Decay) {
  EXPECT_EQ(rhs_decay(ScalarModelParams(3.0, 50.0, 1.0), 0.0), 0.0);
  EXPECT_DOUBLE_EQ(rhs_decay(ScalarModelParams(3.0, 50.0, 2.0), 3.0), -6.0);
  EXPECT_DOUBLE_EQ(rhs_decay(ScalarModelParams(3.0, 50.0, 1.0), 1.0), -1.0);
}

}  // namespace
}  // namespace dyncons
