#pragma once

// Real 4x4 matrix representation of the Clifford algebra of 3-dimensional
// Minkowski space (mostly plus):
//
//   g0 = [[0, I], [-I, 0]],  g1 = diag(s1, -s1),  g2 = diag(s3, -s3)
//
// with s1, s3 the real Pauli matrices. Relation checks run in exact integer
// arithmetic.

#include <Eigen/Core>
#include <array>

#include "twr/clifford.hpp"

namespace twr::gamma_rep {

using GammaMatrix = Eigen::Matrix<int, 4, 4>;

inline constexpr int kGenerators = 3;

// Throws DimensionError for mu outside 0..2.
GammaMatrix gamma(int mu);

// Image of the blade with the given bitmask (ascending product of gammas).
GammaMatrix blade_image(unsigned mask);

struct RelationCheck {
  int mu;
  int nu;
  // 2 eta_{mu nu}: the anticommutator must equal this times the identity.
  int expected;
  GammaMatrix anticommutator;
  bool ok;
};

// All 9 ordered pairs (mu, nu).
std::array<RelationCheck, kGenerators * kGenerators> check_relations();

// Rank of the 8 blade images as vectors in Z^16, by fraction-free
// elimination.
int blade_image_rank();

// Linear extension of the blade images; requires a 3-dimensional multivector.
Eigen::Matrix4d represent(const Multivector& m);

}  // namespace twr::gamma_rep
