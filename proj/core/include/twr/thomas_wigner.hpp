#pragma once

// Thomas-Wigner rotation R = B(u,w) B(w,v) B(v,u) of a closed cycle of
// boosts u -> v -> w -> u.
//
// Two independent routes compute its angle:
//  * Clifford route: R is conjugation by r = (-1 + u w)(-1 + w v)(-1 + v u),
//    which reduces to alpha - [v_perp, w_perp]; with |r|^2 = r r^t this gives
//    Macfarlane's closed form for cos(psi) in terms of the three gammas.
//  * Matrix route (oracle): the product of three explicit boost matrices,
//    each built from two reflections. Never touches the Clifford algebra.

#include <cmath>
#include <span>

#include "twr/clifford.hpp"
#include "twr/errors.hpp"
#include "twr/lorentz.hpp"
#include "twr/minkowski.hpp"

namespace twr {

// Speeds above this lose the sigma^2 identity to gamma overflow.
inline constexpr double kMaxSpeed = 1.0 - 1e-9;

// Maximum allowed disagreement between the formula and the oracle.
inline constexpr double kOracleTol = 1e-9;

struct TwVersorParts {
  double alpha;
  double beta;  // always -1
  SpacetimeVector v_perp;
  SpacetimeVector w_perp;
  // v_perp and w_perp are (numerically) dependent: the boosts are coplanar
  // and R is the identity.
  bool degenerate;

  VersorForm form() const { return {alpha, beta, v_perp, w_perp}; }
};

struct TwResult {
  // Macfarlane's formula, clamped to [-1, 1]; exactly 1 when degenerate.
  double cos_psi;
  // Rotation angle in (-pi, pi], signed in the plane oriented by
  // (v_perp, w_perp); 0 when degenerate.
  double psi_signed;
  // cos(psi) read off the oracle matrix by its trace on u-perp.
  double cos_psi_oracle;
  SpacetimeVector v_perp;
  SpacetimeVector w_perp;
  double gamma_uv;
  double gamma_uw;
  double gamma_vw;
  double sigma_sq;
  bool degenerate;
};

// gamma_uv gamma_uw (1 - v.w) for spatial velocities measured in u's frame.
double gamma_vw(std::span<const double> v_speed, std::span<const double> w_speed);

namespace detail {
[[noreturn]] void throw_gamma_below_one();
[[noreturn]] void throw_cos_out_of_range(double value);
}  // namespace detail

// (1 + g_uv + g_uw + g_vw)^2 / ((1 + g_uv)(1 + g_uw)(1 + g_vw)) - 1
inline double macfarlane_cos_psi(double g_uv, double g_uw, double g_vw) {
  if (!(g_uv >= 1.0 && g_uw >= 1.0 && g_vw >= 1.0)) detail::throw_gamma_below_one();
  const double s = 1.0 + g_uv + g_uw + g_vw;
  double c = s * s / ((1.0 + g_uv) * (1.0 + g_uw) * (1.0 + g_vw)) - 1.0;
  if (c > 1.0 || c < -1.0) {
    if (std::abs(c) > 1.0 + kClampWindow) detail::throw_cos_out_of_range(c);
    c = c > 0.0 ? 1.0 : -1.0;
  }
  return c;
}

// Throws unless u, v, w are unit timelike, pairwise consistently time
// oriented, with no null pairwise sum.
void require_boost_triple(const SpacetimeVector& u, const SpacetimeVector& v,
                          const SpacetimeVector& w, double tol = kDefaultTol);

// (-1 + u w)(-1 + w v)(-1 + v u) as a Clifford product.
Multivector tw_versor(const SpacetimeVector& u, const SpacetimeVector& v,
                      const SpacetimeVector& w, double tol = kDefaultTol);

// alpha = -2(1 - eta(v,u) - eta(w,u) - eta(w,v)), beta = -1,
// p = v_perp, q = w_perp (orthogonal parts relative to u).
TwVersorParts tw_versor_parts(const SpacetimeVector& u, const SpacetimeVector& v,
                              const SpacetimeVector& w, double tol = kDefaultTol);

// Scalar part of r reverse(r); should equal 8(1+g_uv)(1+g_vw)(1+g_wu).
double sigma_squared(const SpacetimeVector& u, const SpacetimeVector& v,
                     const SpacetimeVector& w, double tol = kDefaultTol);

// B(u,w) B(w,v) B(v,u) from boost matrices.
LorentzMatrix tw_oracle_matrix(const SpacetimeVector& u, const SpacetimeVector& v,
                               const SpacetimeVector& w, double tol = kDefaultTol);

// The oracle for u at rest and v, w given by their spatial velocities.
LorentzMatrix tw_oracle(std::span<const double> v_speed, std::span<const double> w_speed,
                        double tol = kDefaultTol);

// Full computation for u at rest. Throws ConsistencyError if the formula
// and the oracle disagree beyond kOracleTol.
TwResult tw_angle(std::span<const double> v_speed, std::span<const double> w_speed,
                  double tol = kDefaultTol);

}  // namespace twr
