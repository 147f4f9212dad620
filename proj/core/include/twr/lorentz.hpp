#pragma once

// Reflections, boosts and rotations as explicit matrices and as versors.

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "twr/clifford.hpp"
#include "twr/minkowski.hpp"

namespace twr {

// Fixed-capacity dynamic matrix; never allocates for n <= 4.
using SmallMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 4, 4>;

// A Lorentz transformation acting on frame components: columns are the
// images of the frame basis vectors.
class LorentzMatrix {
 public:
  // Defect tolerance for eta-preservation, relative to max(1, |entry|^2).
  static constexpr double kMetricTol = 1e-10;

  // Throws DimensionError for non-square or unsupported sizes, DomainError
  // if the matrix does not preserve eta.
  explicit LorentzMatrix(SmallMatrix m);

  static LorentzMatrix identity(int dim);
  static LorentzMatrix from_columns(std::span<const SpacetimeVector> columns);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int row, int col) const { return m_(row, col); }
  const SmallMatrix& matrix() const { return m_; }

  SpacetimeVector apply(const SpacetimeVector& x) const;
  SpacetimeVector column(int col) const;

  // eta Lambda^T eta.
  LorentzMatrix inverse() const;
  double determinant() const;
  double trace() const { return m_.trace(); }

  bool is_proper() const;
  bool is_orthochronous() const;
  // max |(Lambda^T eta Lambda - eta)_{ij}|
  double metric_defect() const;

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b);

 private:
  struct Unchecked {};
  LorentzMatrix(SmallMatrix m, Unchecked) : m_(std::move(m)) {}

  SmallMatrix m_;
};

double max_abs_diff(const LorentzMatrix& a, const LorentzMatrix& b);

// eta = diag(-1, 1, ..., 1).
SmallMatrix metric_matrix(int dim);

// S_x(y) = y - 2 eta(x,y)/eta(x,x) x for non-null, nonzero x.
SpacetimeVector reflect(const SpacetimeVector& x, const SpacetimeVector& y,
                        double tol = kDefaultTol);
LorentzMatrix reflection_matrix(const SpacetimeVector& x, double tol = kDefaultTol);

// (u+v) u: conjugation by it is the boost taking u to v.
Multivector boost_versor(const SpacetimeVector& u, const SpacetimeVector& v,
                         double tol = kDefaultTol);

// The boost taking u to v, built as S_{u+v} S_u applied to each frame vector.
LorentzMatrix boost_matrix(const SpacetimeVector& u, const SpacetimeVector& v,
                           double tol = kDefaultTol);

// [[cosh a, sinh a], [sinh a, cosh a]]
Eigen::Matrix2d boost_matrix_2d(double rapidity);
// [[cos t, -sin t], [sin t, cos t]]
Eigen::Matrix2d rotation_matrix_2d(double theta);

struct RotationReport {
  // In (0, pi); conjugation by the versor rotates Span{p, q} by -2 theta.
  double theta;
  // Positively oriented orthonormal basis of Span{p, q}.
  SpacetimeVector e1;
  SpacetimeVector e2;
  // alpha + beta [p, q] = sigma (cos theta + sin theta e1 e2)
  double sigma;
};

// Degenerate-plane threshold for gram_det(p, q) relative to |p|^2 |q|^2.
inline constexpr double kPlaneTol = 1e-14;

// Orthonormal, positively oriented basis of the spacelike plane Span{p, q}.
// Throws DegeneratePlaneError when p and q are (numerically) dependent.
std::pair<SpacetimeVector, SpacetimeVector> orthonormal_plane(const SpacetimeVector& p,
                                                              const SpacetimeVector& q,
                                                              double tol = kDefaultTol);

RotationReport angle_from_versor(const VersorForm& vf, double tol = kDefaultTol);

// Columns are sandwich_vector(r, e_nu).
LorentzMatrix versor_to_matrix(const Multivector& r, double tol = kDefaultTol);

// Orthonormal basis of the spacelike hyperplane orthogonal to timelike u.
std::vector<SpacetimeVector> orthonormal_complement(const SpacetimeVector& u,
                                                    double tol = kDefaultTol);

// Trace of a transformation restricted to u-perp; requires Lambda u = u.
double restricted_trace(const LorentzMatrix& lambda, const SpacetimeVector& u,
                        double tol = kDefaultTol);

// cos of the rotation angle of a rotation fixing u, from its trace on u-perp.
// In 4 dimensions the rotation axis contributes 1 to the trace.
double rotation_cos_from_trace(const LorentzMatrix& rotation, const SpacetimeVector& u,
                               double tol = kDefaultTol);

// Signed angle of a rotation within the plane oriented by (e1, e2).
double signed_rotation_angle(const LorentzMatrix& rotation, const SpacetimeVector& e1,
                             const SpacetimeVector& e2);

}  // namespace twr
