#include "twr/sampling.hpp"

#include <cmath>
#include <numbers>

namespace twr {

CaseRng::CaseRng(std::uint64_t seed, std::uint64_t case_index, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),       static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(case_index),
                    static_cast<std::uint32_t>(case_index >> 32),
                    static_cast<std::uint32_t>(stream),     static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double CaseRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<double> random_velocity(CaseRng& rng, int spatial_dim, double max_speed) {
  const double speed = rng.uniform(0.0, max_speed);
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  if (spatial_dim == 2) return {speed * std::cos(phi), speed * std::sin(phi)};
  // Archimedes: z uniform in [-1, 1] gives a uniform direction on the sphere.
  const double z = rng.uniform(-1.0, 1.0);
  const double rho = std::sqrt(1.0 - z * z);
  return {speed * rho * std::cos(phi), speed * rho * std::sin(phi), speed * z};
}

SpacetimeVector random_vector(CaseRng& rng, int dim, double lo, double hi) {
  std::array<double, SpacetimeVector::kMaxDim> c{};
  for (int i = 0; i < dim; ++i) c[i] = rng.uniform(lo, hi);
  return SpacetimeVector::from_span({c.data(), static_cast<std::size_t>(dim)});
}

SpacetimeVector random_non_null(CaseRng& rng, int dim, double min_ratio) {
  for (;;) {
    SpacetimeVector x = random_vector(rng, dim);
    const double e = x.euclidean_norm();
    if (e > 0.1 && std::abs(norm_sq(x)) >= min_ratio * e * e) return x;
  }
}

SpacetimeVector random_null(CaseRng& rng, int dim) {
  const auto dir = random_velocity(rng, dim - 1, 1.0);
  double s = 0.0;
  for (double x : dir) s += x * x;
  s = std::sqrt(s);
  std::array<double, SpacetimeVector::kMaxDim> c{};
  const double scale = rng.uniform(0.5, 2.0);
  c[0] = scale;
  for (int i = 1; i < dim; ++i) c[i] = scale * dir[i - 1] / s;
  return SpacetimeVector::from_span({c.data(), static_cast<std::size_t>(dim)});
}

SpacetimeVector random_unit_timelike(CaseRng& rng, int dim, double max_speed) {
  return four_velocity(random_velocity(rng, dim - 1, max_speed));
}

LorentzMatrix random_boost(CaseRng& rng, int dim, double max_speed) {
  return boost_matrix(SpacetimeVector::rest(dim), random_unit_timelike(rng, dim, max_speed));
}

std::pair<SpacetimeVector, SpacetimeVector> random_orthogonal_spacelike_pair(
    CaseRng& rng, const SpacetimeVector& u) {
  const double uu = norm_sq(u);
  auto draw = [&] {
    const SpacetimeVector x = random_vector(rng, u.dim());
    return x - u * (inner(x, u) / uu);
  };
  for (;;) {
    SpacetimeVector a = draw();
    SpacetimeVector b = draw();
    const double aa = norm_sq(a);
    const double bb = norm_sq(b);
    if (aa < 1e-2 || bb < 1e-2) continue;
    a = a / std::sqrt(aa);
    b = b / std::sqrt(bb);
    if (gram_det(a, b) < 1e-2) continue;
    return {a, b};
  }
}

Multivector random_multivector(CaseRng& rng, int dim) {
  Multivector m(dim);
  for (unsigned i = 0; i < m.size(); ++i) m[i] = rng.uniform(-1.0, 1.0);
  return m;
}

}  // namespace twr
