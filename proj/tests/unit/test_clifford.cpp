#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "oracles.hpp"
#include "twr/clifford.hpp"
#include "twr/errors.hpp"
#include "twr/lorentz.hpp"
#include "twr/sampling.hpp"

namespace twr {
namespace {

constexpr std::uint64_t kSeed = 99173;

Multivector e(int dim, int mu) { return Multivector::blade(dim, 1u << mu); }

TEST(SignTable, MatchesFactorSorting) {
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      const auto [sign, idx] = oracle::blade_product(oracle::indices_of(a), oracle::indices_of(b));
      ASSERT_EQ(oracle::mask_of(idx), a ^ b);
      ASSERT_EQ(blade_product_sign(a, b), sign) << "a=" << a << " b=" << b;
    }
  }
}

TEST(Gp, GeneratorSquares) {
  for (int n : {3, 4}) {
    EXPECT_EQ(gp(e(n, 0), e(n, 0)), Multivector::scalar(n, -1.0));
    for (int i = 1; i < n; ++i) EXPECT_EQ(gp(e(n, i), e(n, i)), Multivector::scalar(n, 1.0));
  }
}

TEST(Gp, Examples) {
  const int n = 4;
  const auto e01 = Multivector::blade(n, 0b0011);
  EXPECT_EQ(gp(e(n, 0), e(n, 1)), e01);
  EXPECT_EQ(gp(e(n, 1), e(n, 0)), -e01);
  // (e0 e1)^2 = +1: a boost generator.
  EXPECT_EQ(gp(e01, e01), Multivector::scalar(n, 1.0));
  // (e1 e2)^2 = -1: a rotation generator.
  const auto e12 = Multivector::blade(n, 0b0110);
  EXPECT_EQ(gp(e12, e12), Multivector::scalar(n, -1.0));
  // Pseudoscalar in 3+1 squares to -1.
  const auto i4 = Multivector::blade(n, 0b1111);
  EXPECT_EQ(gp(i4, i4), Multivector::scalar(n, -1.0));
}

TEST(Gp, DimensionMismatch) {
  EXPECT_THROW(gp(Multivector(3), Multivector(4)), DimensionError);
  EXPECT_THROW(Multivector(5), DimensionError);
  EXPECT_THROW(Multivector::blade(3, 0b1000), DimensionError);
}

TEST(Gp, Associative) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    CaseRng rng(kSeed, i);
    const int n = 3 + static_cast<int>(i % 2);
    const auto a = random_multivector(rng, n);
    const auto b = random_multivector(rng, n);
    const auto c = random_multivector(rng, n);
    ASSERT_LE(max_abs_diff(gp(gp(a, b), c), gp(a, gp(b, c))), 1e-12) << "case " << i;
  }
}

TEST(Gp, Distributive) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    CaseRng rng(kSeed, i, 1);
    const auto a = random_multivector(rng, 4);
    const auto b = random_multivector(rng, 4);
    const auto c = random_multivector(rng, 4);
    ASSERT_LE(max_abs_diff(gp(a, b + c), gp(a, b) + gp(a, c)), 1e-13);
    ASSERT_LE(max_abs_diff(gp(a + b, c), gp(a, c) + gp(b, c)), 1e-13);
  }
}

TEST(Gp, CliffordRelation) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CaseRng rng(kSeed, i, 2);
    const int n = 3 + static_cast<int>(i % 2);
    const auto x = random_vector(rng, n);
    const auto y = random_vector(rng, n);
    const auto ac = anticommutator(embed(x), embed(y));
    ASSERT_LE(ac.max_abs_outside_grade(0), 1e-15);
    ASSERT_NEAR(ac.scalar_part(), 2.0 * inner(x, y), 1e-14) << "case " << i;
    ASSERT_NEAR(gp(embed(x), embed(x)).scalar_part(), norm_sq(x), 1e-15);
  }
}

TEST(Commute, IffCollinear) {
  const int n = 4;
  // Includes null vectors: x commutes with its multiples regardless of norm.
  for (std::uint64_t i = 0; i < 500; ++i) {
    CaseRng rng(kSeed, i, 3);
    const auto x = (i % 2) ? random_null(rng, n) : random_vector(rng, n);
    const auto y = rng.uniform(-2, 2) * x;
    ASSERT_LE(commutator(embed(x), embed(y)).max_abs(), 1e-14);
    const auto z = random_vector(rng, n);
    // Generic z is not collinear with x; the commutator is 2 x^z.
    ASSERT_GT(commutator(embed(x), embed(z)).max_abs(), 1e-6) << "case " << i;
    ASSERT_LE(max_abs_diff(commutator(embed(x), embed(z)), 2.0 * wedge(x, z)), 1e-14);
  }
  const auto l = SpacetimeVector{1, 1, 0, 0};
  const auto m = SpacetimeVector{1, -1, 0, 0};
  EXPECT_GT(commutator(embed(l), embed(m)).max_abs(), 1.0);
}

TEST(Anticommute, IffOrthogonal) {
  const int n = 4;
  const auto l = SpacetimeVector{1, 1, 0, 0};
  // A null vector is orthogonal to itself but commutes with itself; l l = 0.
  EXPECT_EQ(gp(embed(l), embed(l)).max_abs(), 0.0);
  for (std::uint64_t i = 0; i < 500; ++i) {
    CaseRng rng(kSeed, i, 4);
    const auto x = random_non_null(rng, n);
    const auto y = random_vector(rng, n);
    const auto y_perp = decompose(y, x).perpendicular;
    ASSERT_LE(anticommutator(embed(x), embed(y_perp)).max_abs(), 1e-13) << "case " << i;
  }
  EXPECT_GT(anticommutator(e(n, 1), e(n, 1)).max_abs(), 1.0);
  EXPECT_EQ(anticommutator(e(n, 1), e(n, 2)).max_abs(), 0.0);
}

TEST(Reverse, GradeSigns) {
  for (unsigned mask = 0; mask < 16; ++mask) {
    const int k = std::popcount(mask);
    const double expected = (k == 2 || k == 3) ? -1.0 : 1.0;
    EXPECT_EQ(reverse(Multivector::blade(4, mask))[mask], expected);
  }
}

TEST(Reverse, AntiHomomorphism) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    CaseRng rng(kSeed, i, 5);
    const int n = 3 + static_cast<int>(i % 2);
    const auto a = random_multivector(rng, n);
    const auto b = random_multivector(rng, n);
    ASSERT_LE(max_abs_diff(reverse(gp(a, b)), gp(reverse(b), reverse(a))), 1e-13);
    ASSERT_EQ(reverse(reverse(a)), a);
  }
}

TEST(VectorInverse, ExamplesAndNull) {
  const int n = 4;
  EXPECT_EQ(vector_inverse(SpacetimeVector::basis(n, 0)), -e(n, 0));
  EXPECT_EQ(vector_inverse(SpacetimeVector{0, 2, 0, 0}), 0.5 * e(n, 1));
  EXPECT_THROW(vector_inverse(SpacetimeVector{1, 1, 0, 0}), DomainError);
  EXPECT_THROW(vector_inverse(SpacetimeVector(4)), DomainError);
}

TEST(VersorInverse, Examples) {
  const int n = 4;
  const auto r = gp(e(n, 1), e(n, 2));
  EXPECT_LE(max_abs_diff(versor_inverse(r), -r), 0.0);
  const auto b = gp(e(n, 0), e(n, 1));
  EXPECT_LE(max_abs_diff(versor_inverse(b), b), 0.0);
  EXPECT_THROW(versor_inverse(Multivector(4)), DomainError);
  EXPECT_THROW(versor_inverse(embed(SpacetimeVector{1, 1, 0, 0})), DomainError);
  // (1 + e1) reverse(1 + e1) = 2 + 2 e1.
  EXPECT_THROW(versor_inverse(Multivector::scalar(n, 1.0) + e(n, 1)), DomainError);
}

TEST(VersorInverse, RandomVectorProducts) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    CaseRng rng(kSeed, i, 6);
    const int n = 3 + static_cast<int>(i % 2);
    Multivector r = Multivector::scalar(n, 1.0);
    const int k = 1 + static_cast<int>(i % 4);
    for (int j = 0; j < k; ++j) r = gp(r, embed(random_non_null(rng, n, 0.2)));
    const auto rinv = versor_inverse(r);
    const double scale = r.max_abs() * rinv.max_abs();
    ASSERT_LE(max_abs_diff(gp(r, rinv), Multivector::scalar(n, 1.0)), 1e-12 * std::max(1.0, scale))
        << "case " << i << " k=" << k;
  }
}

TEST(Sandwich, SingleVectorIsNegatedReflection) {
  for (std::uint64_t i = 0; i < 500; ++i) {
    CaseRng rng(kSeed, i, 7);
    const int n = 3 + static_cast<int>(i % 2);
    const auto x = random_non_null(rng, n, 0.2);
    const auto y = random_vector(rng, n);
    ASSERT_LE(max_abs_diff(sandwich_vector(embed(x), y), -reflect(x, y)), 1e-12) << "case " << i;
  }
}

TEST(Sandwich, IsometryForVersorsOfLengthOneToFour) {
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CaseRng rng(kSeed, i, 8);
    const int n = 3 + static_cast<int>(i % 2);
    Multivector r = Multivector::scalar(n, 1.0);
    const int k = 1 + static_cast<int>((i / 2) % 4);
    for (int j = 0; j < k; ++j) r = gp(r, embed(random_non_null(rng, n, 0.2)));
    const auto x = random_vector(rng, n);
    const auto y = random_vector(rng, n);
    const auto rx = sandwich_vector(r, x, 1e-8);
    const auto ry = sandwich_vector(r, y, 1e-8);
    ASSERT_NEAR(inner(rx, ry), inner(x, y), 1e-9 * std::max(1.0, rx.max_abs() * ry.max_abs()))
        << "case " << i << " k=" << k;
  }
}

TEST(Sandwich, RejectsNonVersor) {
  const int n = 4;
  const auto r = Multivector::scalar(n, 1.0) + Multivector::blade(n, 0b1111, 0.5);
  // r reverse(r) = 0.75 + I.
  EXPECT_THROW(sandwich_vector(r, SpacetimeVector::basis(n, 1)), DomainError);
}

TEST(VersorForm, ToMultivector) {
  const int n = 4;
  const VersorForm vf{2.0, -1.0, SpacetimeVector::basis(n, 1), SpacetimeVector::basis(n, 2)};
  const auto m = vf.to_multivector();
  EXPECT_EQ(m.scalar_part(), 2.0);
  EXPECT_EQ(m[0b0110], -2.0);
  EXPECT_EQ(m.max_abs_outside_grade(0), 2.0);
  EXPECT_EQ(m.grade(1).max_abs(), 0.0);
}

}  // namespace
}  // namespace twr
