#include "twr/thomas_wigner.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace twr {

namespace detail {

void throw_gamma_below_one() {
  throw DomainError("macfarlane_cos_psi: gamma factors must be >= 1");
}

void throw_cos_out_of_range(double value) {
  throw NumericError("macfarlane_cos_psi: value " + std::to_string(value) +
                     " outside [-1, 1] beyond round-off");
}

}  // namespace detail

namespace {

double speed_sq(std::span<const double> speed) {
  double s = 0.0;
  for (double x : speed) s += x * x;
  return s;
}

void require_speed_pair(std::span<const double> v, std::span<const double> w) {
  if (v.size() != w.size()) {
    throw DimensionError("velocity component counts differ: " + std::to_string(v.size()) +
                         " vs " + std::to_string(w.size()));
  }
}

void require_below_cap(std::span<const double> speed) {
  const double s = std::sqrt(speed_sq(speed));
  if (s >= 1.0) {
    throw DomainError("superluminal speed |v| = " + std::to_string(s) + " (must be < 1)");
  }
  if (s > kMaxSpeed) {
    std::ostringstream msg;
    msg << std::setprecision(17) << "speed " << s << " exceeds the ultra-relativistic cap 1 - 1e-9";
    throw DomainError(msg.str());
  }
}

// Round-off growth in the literal versor product, which passes through
// intermediates of size ~g_uv g_vw g_wu.
double conditioning(const SpacetimeVector& u, const SpacetimeVector& v, const SpacetimeVector& w) {
  return inner(u, v) * inner(v, w) * inner(w, u) * -1.0;
}

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kVersorGrowth = 64.0;
constexpr double kOracleGrowth = 16.0;

double wrap_angle(double a) {
  // atan2 yields [-pi, pi]; fold -pi onto pi.
  return a <= -std::numbers::pi ? a + 2.0 * std::numbers::pi : a;
}

}  // namespace

double gamma_vw(std::span<const double> v_speed, std::span<const double> w_speed) {
  require_speed_pair(v_speed, w_speed);
  const double vv = speed_sq(v_speed);
  const double ww = speed_sq(w_speed);
  if (vv >= 1.0 || ww >= 1.0) throw DomainError("gamma_vw: superluminal speed (must be < 1)");
  double vw = 0.0;
  for (std::size_t i = 0; i < v_speed.size(); ++i) vw += v_speed[i] * w_speed[i];
  const double g = (1.0 - vw) / std::sqrt((1.0 - vv) * (1.0 - ww));
  return std::max(g, 1.0);
}

void require_boost_triple(const SpacetimeVector& u, const SpacetimeVector& v,
                          const SpacetimeVector& w, double tol) {
  if (u.dim() != v.dim() || u.dim() != w.dim()) {
    throw DimensionError("boost triple: dimension mismatch");
  }
  for (const auto* x : {&u, &v, &w}) {
    if (!is_unit_timelike(*x, tol)) throw DomainError("boost triple: vectors must be unit timelike");
  }
  const std::pair<const SpacetimeVector*, const SpacetimeVector*> pairs[] = {
      {&u, &v}, {&v, &w}, {&w, &u}};
  for (auto [a, b] : pairs) {
    if (inner(*a, *b) >= 0.0) {
      throw OrientationError("boost triple: vectors are not consistently time oriented");
    }
    if (std::abs(norm_sq(*a + *b)) <= tol) {
      throw DomainError("boost triple: a pairwise sum is null");
    }
  }
}

Multivector tw_versor(const SpacetimeVector& u, const SpacetimeVector& v,
                      const SpacetimeVector& w, double tol) {
  require_boost_triple(u, v, w, tol);
  const Multivector U = embed(u);
  const Multivector V = embed(v);
  const Multivector W = embed(w);
  const Multivector minus_one = Multivector::scalar(u.dim(), -1.0);
  return gp(gp(minus_one + gp(U, W), minus_one + gp(W, V)), minus_one + gp(V, U));
}

TwVersorParts tw_versor_parts(const SpacetimeVector& u, const SpacetimeVector& v,
                              const SpacetimeVector& w, double tol) {
  require_boost_triple(u, v, w, tol);
  const double alpha = -2.0 * (1.0 - inner(v, u) - inner(w, u) - inner(w, v));
  const SpacetimeVector v_perp = decompose(v, u, tol).perpendicular;
  const SpacetimeVector w_perp = decompose(w, u, tol).perpendicular;
  const double pn = v_perp.euclidean_norm();
  const double qn = w_perp.euclidean_norm();
  const bool degenerate =
      pn <= tol || qn <= tol || !(gram_det(v_perp, w_perp) > kPlaneTol * pn * pn * qn * qn);
  return {alpha, -1.0, v_perp, w_perp, degenerate};
}

double sigma_squared(const SpacetimeVector& u, const SpacetimeVector& v,
                     const SpacetimeVector& w, double tol) {
  const Multivector r = tw_versor(u, v, w, tol);
  const Multivector norm = gp(r, reverse(r));
  const double s = norm.scalar_part();
  const double residue = norm.max_abs_outside_grade(0);
  const double bound = tol + kVersorGrowth * kEps * conditioning(u, v, w);
  if (residue > bound * std::max(1.0, std::abs(s))) {
    throw ConsistencyError("sigma_squared: r r^t has non-scalar residue " +
                           std::to_string(residue));
  }
  return s;
}

LorentzMatrix tw_oracle_matrix(const SpacetimeVector& u, const SpacetimeVector& v,
                               const SpacetimeVector& w, double tol) {
  require_boost_triple(u, v, w, tol);
  // Rightmost acts first: u -> v, then v -> w, then w -> u.
  return boost_matrix(w, u, tol) * boost_matrix(v, w, tol) * boost_matrix(u, v, tol);
}

LorentzMatrix tw_oracle(std::span<const double> v_speed, std::span<const double> w_speed,
                        double tol) {
  require_speed_pair(v_speed, w_speed);
  const SpacetimeVector v = four_velocity(v_speed);
  const SpacetimeVector w = four_velocity(w_speed);
  return tw_oracle_matrix(SpacetimeVector::rest(v.dim()), v, w, tol);
}

TwResult tw_angle(std::span<const double> v_speed, std::span<const double> w_speed,
                  double tol) {
  require_speed_pair(v_speed, w_speed);
  require_below_cap(v_speed);
  require_below_cap(w_speed);

  const SpacetimeVector v = four_velocity(v_speed);
  const SpacetimeVector w = four_velocity(w_speed);
  const SpacetimeVector u = SpacetimeVector::rest(v.dim());

  TwResult res{};
  res.gamma_uv = gamma_factor(u, v, tol);
  res.gamma_uw = gamma_factor(u, w, tol);
  res.gamma_vw = gamma_vw(v_speed, w_speed);
  const double cos_formula = macfarlane_cos_psi(res.gamma_uv, res.gamma_uw, res.gamma_vw);

  const double kappa = res.gamma_uv * res.gamma_uw * res.gamma_vw;
  // The composed boost matrices lose ~(g_uv g_uw)^2 eps, mostly through eta(v, w)
  // when v and w are fast and nearly parallel.
  const double g2 = res.gamma_uv * res.gamma_uw;
  const double oracle_tol = kOracleTol + kOracleGrowth * kEps * g2 * g2;
  const double versor_tol = tol + kVersorGrowth * kEps * kappa;

  const LorentzMatrix rotation = tw_oracle_matrix(u, v, w, tol);
  res.cos_psi_oracle = rotation_cos_from_trace(rotation, u, tol);
  if (std::abs(cos_formula - res.cos_psi_oracle) > oracle_tol) {
    throw ConsistencyError("tw_angle: Macfarlane cos(psi) = " + std::to_string(cos_formula) +
                           " disagrees with oracle " + std::to_string(res.cos_psi_oracle));
  }

  const TwVersorParts parts = tw_versor_parts(u, v, w, tol);
  res.v_perp = parts.v_perp;
  res.w_perp = parts.w_perp;
  res.degenerate = parts.degenerate;

  // |r|^2 from the reduced form alpha + beta [p, q]; the literal product r r^t
  // must agree with it.
  res.sigma_sq = parts.alpha * parts.alpha +
                 4.0 * parts.beta * parts.beta * std::max(0.0, gram_det(parts.v_perp, parts.w_perp));
  const double expected_sigma_sq =
      8.0 * (1.0 + res.gamma_uv) * (1.0 + res.gamma_vw) * (1.0 + res.gamma_uw);
  const double literal_sigma_sq = sigma_squared(u, v, w, tol);
  for (double got : {res.sigma_sq, literal_sigma_sq}) {
    if (std::abs(got - expected_sigma_sq) > versor_tol * expected_sigma_sq) {
      throw ConsistencyError("tw_angle: |r|^2 = " + std::to_string(got) +
                             " disagrees with 8(1+g_uv)(1+g_vw)(1+g_wu) = " +
                             std::to_string(expected_sigma_sq));
    }
  }

  if (parts.degenerate) {
    res.cos_psi = 1.0;
    res.psi_signed = 0.0;
    return res;
  }

  res.cos_psi = cos_formula;
  // The versor rotates the (v_perp, w_perp) plane by -2 theta.
  const RotationReport report = angle_from_versor(parts.form(), tol);
  res.psi_signed = wrap_angle(std::remainder(-2.0 * report.theta, 2.0 * std::numbers::pi));

  const double oracle_psi = signed_rotation_angle(rotation, report.e1, report.e2);
  if (std::abs(std::cos(oracle_psi) - std::cos(res.psi_signed)) > oracle_tol ||
      std::abs(std::sin(oracle_psi) - std::sin(res.psi_signed)) > oracle_tol) {
    throw ConsistencyError("tw_angle: versor angle " + std::to_string(res.psi_signed) +
                           " disagrees with oracle angle " + std::to_string(oracle_psi));
  }
  return res;
}

}  // namespace twr
