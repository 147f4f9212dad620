#pragma once

// Seeded random inputs for verification sweeps.
//
// Every case draws from its own stream derived from (seed, case index), so
// a sweep can be split or reordered without changing any case. Variates are
// produced from raw 64-bit engine output so the streams are identical on
// every standard library.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "twr/clifford.hpp"
#include "twr/lorentz.hpp"
#include "twr/minkowski.hpp"

namespace twr {

class CaseRng {
 public:
  // stream separates independent sweeps sharing one seed.
  CaseRng(std::uint64_t seed, std::uint64_t case_index, std::uint64_t stream = 0);

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Spatial velocity with direction uniform on the sphere (circle for 2
// components) and magnitude uniform in [0, max_speed].
std::vector<double> random_velocity(CaseRng& rng, int spatial_dim, double max_speed);

// Components uniform in [lo, hi].
SpacetimeVector random_vector(CaseRng& rng, int dim, double lo = -1.0, double hi = 1.0);

// Random vector with |eta(x,x)| >= min_ratio |x|^2.
SpacetimeVector random_non_null(CaseRng& rng, int dim, double min_ratio = 0.05);

// Random vector that is exactly null up to round-off: (|s|, s) for random s.
SpacetimeVector random_null(CaseRng& rng, int dim);

// Future-directed unit timelike vector with spatial speed <= max_speed in
// the frame.
SpacetimeVector random_unit_timelike(CaseRng& rng, int dim, double max_speed);

// Boost from rest to a random four-velocity of speed <= max_speed.
LorentzMatrix random_boost(CaseRng& rng, int dim, double max_speed);

// Unit spacelike vectors a, b orthogonal to timelike u, linearly
// independent (gram_det bounded away from 0).
std::pair<SpacetimeVector, SpacetimeVector> random_orthogonal_spacelike_pair(
    CaseRng& rng, const SpacetimeVector& u);

// Coefficients uniform in [-1, 1].
Multivector random_multivector(CaseRng& rng, int dim);

}  // namespace twr
