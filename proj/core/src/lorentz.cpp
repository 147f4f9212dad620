#include "twr/lorentz.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "twr/errors.hpp"

namespace twr {

namespace {

SmallMatrix columns_to_matrix(std::span<const SpacetimeVector> columns) {
  const int n = static_cast<int>(columns.size());
  (void)Signature(n);
  SmallMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    if (columns[j].dim() != n) throw DimensionError("column dimension mismatch");
    for (int i = 0; i < n; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

void require_boost_pair(const SpacetimeVector& u, const SpacetimeVector& v, double tol) {
  if (u.dim() != v.dim()) throw DimensionError("boost: dimension mismatch");
  if (!is_unit_timelike(u, tol) || !is_unit_timelike(v, tol)) {
    throw DomainError("boost: u and v must be unit timelike");
  }
  if (inner(u, v) >= 0.0) {
    throw OrientationError("boost: u and v are not consistently time oriented");
  }
  if (std::abs(norm_sq(u + v)) <= tol) {
    throw DomainError("boost: u + v is null");
  }
}

}  // namespace

SmallMatrix metric_matrix(int dim) {
  SmallMatrix eta = SmallMatrix::Identity(dim, dim);
  eta(0, 0) = -1.0;
  return eta;
}

LorentzMatrix::LorentzMatrix(SmallMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("Lorentz matrix must be square");
  (void)Signature(static_cast<int>(m_.rows()));
  if (!m_.allFinite()) throw DomainError("Lorentz matrix has non-finite entries");
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  if (metric_defect() > kMetricTol * scale * scale) {
    throw DomainError("matrix does not preserve the Minkowski product");
  }
}

LorentzMatrix LorentzMatrix::identity(int dim) {
  return LorentzMatrix(SmallMatrix::Identity(Signature(dim).dim(), dim), Unchecked{});
}

LorentzMatrix LorentzMatrix::from_columns(std::span<const SpacetimeVector> columns) {
  return LorentzMatrix(columns_to_matrix(columns));
}

SpacetimeVector LorentzMatrix::apply(const SpacetimeVector& x) const {
  if (x.dim() != dim()) throw DimensionError("apply: dimension mismatch");
  std::array<double, SpacetimeVector::kMaxDim> c{};
  for (int i = 0; i < dim(); ++i) {
    double s = 0.0;
    for (int j = 0; j < dim(); ++j) s += m_(i, j) * x[j];
    c[i] = s;
  }
  return SpacetimeVector::from_span({c.data(), static_cast<std::size_t>(dim())});
}

SpacetimeVector LorentzMatrix::column(int col) const {
  std::array<double, SpacetimeVector::kMaxDim> c{};
  for (int i = 0; i < dim(); ++i) c[i] = m_(i, col);
  return SpacetimeVector::from_span({c.data(), static_cast<std::size_t>(dim())});
}

LorentzMatrix LorentzMatrix::inverse() const {
  const SmallMatrix eta = metric_matrix(dim());
  return LorentzMatrix(SmallMatrix(eta * m_.transpose() * eta), Unchecked{});
}

double LorentzMatrix::determinant() const { return m_.determinant(); }

bool LorentzMatrix::is_proper() const { return std::abs(determinant() - 1.0) <= 1e-9; }

bool LorentzMatrix::is_orthochronous() const { return m_(0, 0) >= 1.0 - 1e-12; }

double LorentzMatrix::metric_defect() const {
  const SmallMatrix eta = metric_matrix(dim());
  return (m_.transpose() * eta * m_ - eta).cwiseAbs().maxCoeff();
}

LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix product: dimension mismatch");
  return LorentzMatrix(SmallMatrix(a.m_ * b.m_), LorentzMatrix::Unchecked{});
}

double max_abs_diff(const LorentzMatrix& a, const LorentzMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("dimension mismatch");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

SpacetimeVector reflect(const SpacetimeVector& x, const SpacetimeVector& y, double tol) {
  const double xx = norm_sq(x);
  if (std::abs(xx) <= tol) throw DomainError("reflect: mirror vector is null or zero");
  return y - x * (2.0 * inner(x, y) / xx);
}

LorentzMatrix reflection_matrix(const SpacetimeVector& x, double tol) {
  std::vector<SpacetimeVector> cols;
  cols.reserve(static_cast<std::size_t>(x.dim()));
  for (int nu = 0; nu < x.dim(); ++nu) {
    cols.push_back(reflect(x, SpacetimeVector::basis(x.dim(), nu), tol));
  }
  return LorentzMatrix::from_columns(cols);
}

Multivector boost_versor(const SpacetimeVector& u, const SpacetimeVector& v, double tol) {
  require_boost_pair(u, v, tol);
  return gp(embed(u + v), embed(u));
}

LorentzMatrix boost_matrix(const SpacetimeVector& u, const SpacetimeVector& v, double tol) {
  require_boost_pair(u, v, tol);
  // S_{u+v} S_u e expanded: e + eta(u+v, e)/(1 + g) (u+v) - 2 eta(u, e) v.
  // Applying the two reflections literally goes through O(g^2) intermediates
  // and loses ~g^3 eps per entry; the expanded form stays O(g).
  const SpacetimeVector s = u + v;
  const double g = -inner(u, v);
  std::vector<SpacetimeVector> cols;
  cols.reserve(static_cast<std::size_t>(u.dim()));
  for (int nu = 0; nu < u.dim(); ++nu) {
    const auto e = SpacetimeVector::basis(u.dim(), nu);
    cols.push_back(e + s * (inner(s, e) / (1.0 + g)) - v * (2.0 * inner(u, e)));
  }
  return LorentzMatrix::from_columns(cols);
}

Eigen::Matrix2d boost_matrix_2d(double rapidity) {
  const double c = std::cosh(rapidity);
  const double s = std::sinh(rapidity);
  Eigen::Matrix2d m;
  m << c, s, s, c;
  return m;
}

Eigen::Matrix2d rotation_matrix_2d(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d m;
  m << c, -s, s, c;
  return m;
}

std::pair<SpacetimeVector, SpacetimeVector> orthonormal_plane(const SpacetimeVector& p,
                                                              const SpacetimeVector& q,
                                                              double tol) {
  if (p.dim() != q.dim()) throw DimensionError("orthonormal_plane: dimension mismatch");
  const double pn = p.euclidean_norm();
  const double qn = q.euclidean_norm();
  // Relative to the Euclidean size so that short vectors are not mistaken for null ones.
  if (!(norm_sq(p) > tol * pn * pn) || !(norm_sq(q) > tol * qn * qn)) {
    throw DomainError("plane vectors must be spacelike");
  }
  const double g = gram_det(p, q);
  if (!(g > kPlaneTol * pn * pn * qn * qn)) {
    throw DegeneratePlaneError("plane vectors are linearly dependent or span a non-spacelike plane");
  }
  const SpacetimeVector e1 = p / std::sqrt(norm_sq(p));
  const SpacetimeVector q_perp = q - e1 * inner(q, e1);
  const SpacetimeVector e2 = q_perp / std::sqrt(norm_sq(q_perp));
  return {e1, e2};
}

RotationReport angle_from_versor(const VersorForm& vf, double tol) {
  if (vf.beta == 0.0) throw DomainError("angle_from_versor: beta must be nonzero");
  auto [e1, e2] = orthonormal_plane(vf.p, vf.q, tol);
  // With the positively oriented basis (e1, e2), p1 q2 - p2 q1 = sqrt(gram_det).
  const double det = std::sqrt(gram_det(vf.p, vf.q));
  const double bs = 2.0 * vf.beta * det;
  // cot(theta) = alpha / bs with sin(theta) > 0.
  const double theta = std::atan2(std::abs(bs), bs > 0.0 ? vf.alpha : -vf.alpha);
  const double sigma = std::copysign(std::hypot(vf.alpha, bs), vf.beta);
  return {theta, e1, e2, sigma};
}

LorentzMatrix versor_to_matrix(const Multivector& r, double tol) {
  std::vector<SpacetimeVector> cols;
  cols.reserve(static_cast<std::size_t>(r.dim()));
  for (int nu = 0; nu < r.dim(); ++nu) {
    cols.push_back(sandwich_vector(r, SpacetimeVector::basis(r.dim(), nu), tol));
  }
  return LorentzMatrix::from_columns(cols);
}

std::vector<SpacetimeVector> orthonormal_complement(const SpacetimeVector& u, double tol) {
  if (causal_class(u, tol) != CausalClass::Timelike) {
    throw DomainError("orthonormal_complement: u must be timelike");
  }
  const double uu = norm_sq(u);
  std::vector<SpacetimeVector> basis;
  for (int i = 1; i < u.dim(); ++i) {
    const auto e = SpacetimeVector::basis(u.dim(), i);
    SpacetimeVector f = e - u * (inner(e, u) / uu);
    for (const auto& b : basis) f -= b * inner(f, b);
    basis.push_back(f / std::sqrt(norm_sq(f)));
  }
  return basis;
}

double restricted_trace(const LorentzMatrix& lambda, const SpacetimeVector& u, double tol) {
  double tr = 0.0;
  for (const auto& f : orthonormal_complement(u, tol)) tr += inner(f, lambda.apply(f));
  return tr;
}

double rotation_cos_from_trace(const LorentzMatrix& rotation, const SpacetimeVector& u,
                               double tol) {
  const double tr = restricted_trace(rotation, u, tol);
  return rotation.dim() == 4 ? (tr - 1.0) / 2.0 : tr / 2.0;
}

double signed_rotation_angle(const LorentzMatrix& rotation, const SpacetimeVector& e1,
                             const SpacetimeVector& e2) {
  const SpacetimeVector image = rotation.apply(e1);
  return std::atan2(inner(e2, image), inner(e1, image));
}

}  // namespace twr
