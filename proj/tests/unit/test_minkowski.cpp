#include <gtest/gtest.h>

#include <cmath>

#include "twr/errors.hpp"
#include "twr/minkowski.hpp"
#include "twr/sampling.hpp"

namespace twr {
namespace {

constexpr std::uint64_t kSeed = 20240607;

TEST(Signature, OnlyDimensionsThreeAndFour) {
  EXPECT_EQ(Signature(3).dim(), 3);
  EXPECT_EQ(Signature(4).dim(), 4);
  EXPECT_THROW(Signature(2), DimensionError);
  EXPECT_THROW(Signature(5), DimensionError);
  EXPECT_EQ(Signature::sign(0), -1.0);
  EXPECT_EQ(Signature::sign(1), 1.0);
  EXPECT_EQ(Signature::sign(3), 1.0);
}

TEST(SpacetimeVector, RejectsNonFiniteComponents) {
  EXPECT_THROW((SpacetimeVector{1.0, NAN, 0.0, 0.0}), DomainError);
  EXPECT_THROW((SpacetimeVector{1.0, INFINITY, 0.0}), DomainError);
  EXPECT_THROW((SpacetimeVector{1.0, 0.0}), DimensionError);
}

TEST(Inner, Examples) {
  const int n = 4;
  EXPECT_EQ(inner(SpacetimeVector::basis(n, 0), SpacetimeVector::basis(n, 0)), -1.0);
  EXPECT_EQ(inner(SpacetimeVector::basis(n, 1), SpacetimeVector::basis(n, 2)), 0.0);
  const SpacetimeVector x{1.0, 0.6, 0.0, 0.0};
  EXPECT_NEAR(inner(x, x), -0.64, 1e-15);
}

TEST(Inner, DimensionMismatchIsUsageError) {
  EXPECT_THROW(inner(SpacetimeVector(3), SpacetimeVector(4)), DimensionError);
}

TEST(Inner, SymmetricExactlyAndBilinear) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CaseRng rng(kSeed, i);
    const int n = 3 + static_cast<int>(i % 2);
    const auto u = random_vector(rng, n, -10, 10);
    const auto v = random_vector(rng, n, -10, 10);
    const auto w = random_vector(rng, n, -10, 10);
    const double a = rng.uniform(-10, 10);
    const double b = rng.uniform(-10, 10);
    ASSERT_EQ(inner(u, v), inner(v, u));
    const double lhs = inner(a * u + b * w, v);
    const double rhs = a * inner(u, v) + b * inner(w, v);
    // Components up to 10 and coefficients up to 10: terms reach ~4e3.
    ASSERT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(a * inner(u, v)) + std::abs(b * inner(w, v)) + 4e3))
        << "case " << i;
  }
}

TEST(CausalClass, Examples) {
  EXPECT_EQ(causal_class(SpacetimeVector{1, 0, 0, 0}), CausalClass::Timelike);
  EXPECT_EQ(causal_class(SpacetimeVector{1, 1, 0, 0}), CausalClass::Null);
  EXPECT_EQ(causal_class(SpacetimeVector{0, 0, 0, 0}), CausalClass::Zero);
  EXPECT_EQ(causal_class(SpacetimeVector{0, 1, 0}), CausalClass::Spacelike);
}

TEST(CausalClass, ZeroIsSpacelikeInTheWideSense) {
  EXPECT_TRUE(is_spacelike_paper(SpacetimeVector(4)));
  EXPECT_TRUE(is_spacelike_paper(SpacetimeVector{0, 0, 2, 0}));
  EXPECT_FALSE(is_spacelike_paper(SpacetimeVector{1, 1, 0, 0}));
  EXPECT_FALSE(is_spacelike_paper(SpacetimeVector{2, 1, 0, 0}));
}

TEST(CausalClass, ToleranceBand) {
  EXPECT_EQ(causal_class(SpacetimeVector{1.0, 1.0 + 1e-12, 0, 0}), CausalClass::Null);
  EXPECT_EQ(causal_class(SpacetimeVector{1.0, 1.0 + 1e-6, 0, 0}), CausalClass::Spacelike);
  EXPECT_EQ(causal_class(SpacetimeVector{1.0, 1.0 + 1e-6, 0, 0}, 1e-3), CausalClass::Null);
}

TEST(GammaFactor, Examples) {
  const auto u = SpacetimeVector::rest(4);
  EXPECT_NEAR(gamma_factor(u, four_velocity({0.6, 0.0, 0.0})), 1.25, 1e-15);
  EXPECT_EQ(gamma_factor(u, u), 1.0);
  EXPECT_NEAR(gamma_factor(u, four_velocity({0.5, 0.0, 0.0})), 2.0 / std::sqrt(3.0), 1e-15);
}

TEST(GammaFactor, Errors) {
  const auto u = SpacetimeVector::rest(4);
  EXPECT_THROW(gamma_factor(u, SpacetimeVector{2, 0, 0, 0}), DomainError);
  EXPECT_THROW(gamma_factor(u, SpacetimeVector{0, 1, 0, 0}), DomainError);
  EXPECT_THROW(gamma_factor(u, -u), OrientationError);
}

TEST(GammaFactor, MatchesLorentzFactorOfFourVelocity) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CaseRng rng(kSeed, i, 1);
    const auto vs = random_velocity(rng, 3, 0.99);
    double s2 = 0;
    for (double x : vs) s2 += x * x;
    ASSERT_NEAR(gamma_factor(four_velocity(vs), SpacetimeVector::rest(4)),
                1.0 / std::sqrt(1.0 - s2), 1e-12);
  }
}

TEST(FourVelocity, Examples) {
  EXPECT_EQ(four_velocity({0.0, 0.0, 0.0}), (SpacetimeVector{1, 0, 0, 0}));
  const auto v = four_velocity({0.6, 0.0, 0.0});
  EXPECT_NEAR(max_abs_diff(v, SpacetimeVector{1.25, 0.75, 0, 0}), 0.0, 1e-15);
  const auto h = four_velocity({0.5, 0.0, 0.0});
  EXPECT_NEAR(h[0], 1.1547005383792515, 1e-15);
  EXPECT_NEAR(h[1], 0.57735026918962576, 1e-15);
  EXPECT_TRUE(is_unit_timelike(h));
}

TEST(FourVelocity, Superluminal) {
  EXPECT_THROW(four_velocity({1.0, 0.0, 0.0}), DomainError);
  EXPECT_THROW(four_velocity({0.8, 0.8}), DomainError);
  try {
    four_velocity({0.0, 1.5, 0.0});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("superluminal"), std::string::npos);
  }
  EXPECT_THROW(four_velocity({0.1}), DimensionError);
}

TEST(Decompose, Examples) {
  const SpacetimeVector x{1, 0, 0, 0};
  auto s = decompose(x, x);
  EXPECT_EQ(s.parallel, x);
  EXPECT_EQ(s.perpendicular, SpacetimeVector(4));

  const SpacetimeVector y{0, 0, 3, 0};
  s = decompose(y, x);
  EXPECT_EQ(s.parallel, SpacetimeVector(4));
  EXPECT_EQ(s.perpendicular, y);

  s = decompose(SpacetimeVector{1.25, 0.75, 0, 0}, x);
  EXPECT_NEAR(max_abs_diff(s.parallel, SpacetimeVector{1.25, 0, 0, 0}), 0.0, 1e-15);
  EXPECT_NEAR(max_abs_diff(s.perpendicular, SpacetimeVector{0, 0.75, 0, 0}), 0.0, 1e-15);
}

TEST(Decompose, NullOrZeroReference) {
  const SpacetimeVector y{1, 2, 3, 4};
  EXPECT_THROW(decompose(y, SpacetimeVector{1, 1, 0, 0}), DomainError);
  EXPECT_THROW(decompose(y, SpacetimeVector(4)), DomainError);
}

TEST(Decompose, OrthogonalAndReconstructs) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CaseRng rng(kSeed, i, 2);
    const int n = 3 + static_cast<int>(i % 2);
    const auto x = random_non_null(rng, n);
    const auto y = random_vector(rng, n);
    const auto s = decompose(y, x);
    ASSERT_LE(std::abs(inner(s.parallel, s.perpendicular)), 1e-12) << "case " << i;
    ASSERT_LE(max_abs_diff(s.parallel + s.perpendicular, y), 1e-12) << "case " << i;
  }
}

TEST(HyperbolicAngle, Examples) {
  const auto u = SpacetimeVector::rest(4);
  EXPECT_EQ(hyperbolic_angle(u, u), 0.0);
  EXPECT_NEAR(hyperbolic_angle(u, four_velocity({0.6, 0, 0})), std::log(2.0), 1e-15);
  EXPECT_NEAR(hyperbolic_angle(u, four_velocity({0, std::tanh(1.0), 0})), 1.0, 1e-14);
}

TEST(HyperbolicAngle, IndependentOfLength) {
  const auto u = SpacetimeVector::rest(3) * 3.0;
  const auto v = four_velocity({0.6, 0.0}) * 0.25;
  EXPECT_NEAR(hyperbolic_angle(u, v), std::log(2.0), 1e-15);
}

TEST(HyperbolicAngle, RoundOffBelowOneClampsToZero) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CaseRng rng(kSeed, i, 4);
    const auto u = random_unit_timelike(rng, 4, 0.99);
    const double a = hyperbolic_angle(u, u * rng.uniform(0.5, 2.0));
    ASSERT_GE(a, 0.0);
    ASSERT_LE(a, 1e-5) << "case " << i;
  }
}

TEST(HyperbolicAngle, Errors) {
  const auto u = SpacetimeVector::rest(4);
  EXPECT_THROW(hyperbolic_angle(u, SpacetimeVector{1, 2, 0, 0}), DomainError);
  EXPECT_THROW(hyperbolic_angle(u, SpacetimeVector{1, 1, 0, 0}), DomainError);
  EXPECT_THROW(hyperbolic_angle(u, -u), OrientationError);
}

TEST(GramDet, Examples) {
  const auto e1 = SpacetimeVector::basis(4, 1);
  const auto e2 = SpacetimeVector::basis(4, 2);
  EXPECT_EQ(gram_det(e1, e2), 1.0);
  EXPECT_EQ(gram_det(e1, e1), 0.0);
  EXPECT_EQ(gram_det(SpacetimeVector{0, 2, 0, 0}, SpacetimeVector{0, 1, 1, 0}), 4.0);
}

TEST(GramDet, InvariantUnderShear) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CaseRng rng(kSeed, i, 3);
    const auto p = random_vector(rng, 4);
    const auto q = random_vector(rng, 4);
    const double lambda = rng.uniform(-3, 3);
    const double g = gram_det(p, q);
    // Relative to the size of the individual terms, which is what round-off scales with.
    const double scale = std::abs(norm_sq(p) * norm_sq(q + lambda * p)) + std::pow(inner(p, q + lambda * p), 2);
    ASSERT_NEAR(gram_det(p, q + lambda * p), g, 1e-9 * std::max(scale, 1e-300)) << "case " << i;
  }
}

}  // namespace
}  // namespace twr
