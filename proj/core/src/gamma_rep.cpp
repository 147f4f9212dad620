#include "twr/gamma_rep.hpp"

#include <cstdint>
#include <string>
#include <utility>

#include "twr/errors.hpp"

namespace twr::gamma_rep {

namespace {

using Block = Eigen::Matrix<int, 2, 2>;

Block pauli1() {
  Block s;
  s << 0, 1, 1, 0;
  return s;
}

Block pauli3() {
  Block s;
  s << 1, 0, 0, -1;
  return s;
}

GammaMatrix from_blocks(const Block& a, const Block& b, const Block& c, const Block& d) {
  GammaMatrix m;
  m << a, b, c, d;
  return m;
}

}  // namespace

GammaMatrix gamma(int mu) {
  const Block zero = Block::Zero();
  const Block id = Block::Identity();
  switch (mu) {
    case 0: return from_blocks(zero, id, -id, zero);
    case 1: return from_blocks(pauli1(), zero, zero, -pauli1());
    case 2: return from_blocks(pauli3(), zero, zero, -pauli3());
    default:
      throw DimensionError("gamma index " + std::to_string(mu) + " out of range 0..2");
  }
}

GammaMatrix blade_image(unsigned mask) {
  if (mask >= (1u << kGenerators)) throw DimensionError("blade mask out of range");
  GammaMatrix m = GammaMatrix::Identity();
  for (int mu = 0; mu < kGenerators; ++mu) {
    if (mask & (1u << mu)) m = m * gamma(mu);
  }
  return m;
}

std::array<RelationCheck, kGenerators * kGenerators> check_relations() {
  std::array<RelationCheck, kGenerators * kGenerators> out{};
  std::size_t k = 0;
  for (int mu = 0; mu < kGenerators; ++mu) {
    for (int nu = 0; nu < kGenerators; ++nu) {
      const GammaMatrix ac = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      const int expected = mu == nu ? 2 * static_cast<int>(Signature::sign(mu)) : 0;
      const bool ok = ac == GammaMatrix(expected * GammaMatrix::Identity());
      out[k++] = {mu, nu, expected, ac, ok};
    }
  }
  return out;
}

int blade_image_rank() {
  constexpr int kRows = 1 << kGenerators;
  constexpr int kCols = 16;
  std::array<std::array<std::int64_t, kCols>, kRows> a{};
  for (unsigned mask = 0; mask < kRows; ++mask) {
    const GammaMatrix m = blade_image(mask);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a[mask][4 * i + j] = m(i, j);
  }
  // Bareiss elimination: every intermediate stays an exact integer.
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < kCols && rank < kRows; ++col) {
    int pivot = -1;
    for (int r = rank; r < kRows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < kRows; ++r) {
      for (int c = col + 1; c < kCols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

Eigen::Matrix4d represent(const Multivector& m) {
  if (m.dim() != kGenerators) {
    throw DimensionError("represent: only the 3-dimensional algebra has a matrix image");
  }
  Eigen::Matrix4d out = Eigen::Matrix4d::Zero();
  for (unsigned mask = 0; mask < m.size(); ++mask) {
    if (m[mask] != 0.0) out += m[mask] * blade_image(mask).cast<double>();
  }
  return out;
}

}  // namespace twr::gamma_rep
