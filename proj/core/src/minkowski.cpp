#include "twr/minkowski.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twr/errors.hpp"

namespace twr {

namespace {

void require_same_dim(const SpacetimeVector& a, const SpacetimeVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("vector dimension mismatch: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

Signature::Signature(int dim) : dim_(dim) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw DimensionError("unsupported spacetime dimension " + std::to_string(dim) +
                         " (expected 3 or 4)");
  }
}

SpacetimeVector::SpacetimeVector(int dim) : dim_(Signature(dim).dim()) {}

SpacetimeVector::SpacetimeVector(std::initializer_list<double> components)
    : SpacetimeVector(from_span({components.begin(), components.size()})) {}

SpacetimeVector SpacetimeVector::from_span(std::span<const double> components) {
  SpacetimeVector v(static_cast<int>(components.size()));
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (!std::isfinite(components[i])) {
      throw DomainError("non-finite vector component");
    }
    v.c_[i] = components[i];
  }
  return v;
}

SpacetimeVector SpacetimeVector::basis(int dim, int mu) {
  SpacetimeVector v(dim);
  if (mu < 0 || mu >= dim) {
    throw DimensionError("basis index " + std::to_string(mu) + " out of range");
  }
  v.c_[static_cast<std::size_t>(mu)] = 1.0;
  return v;
}

double SpacetimeVector::euclidean_norm() const {
  double s = 0.0;
  for (double x : components()) s += x * x;
  return std::sqrt(s);
}

double SpacetimeVector::max_abs() const {
  double m = 0.0;
  for (double x : components()) m = std::max(m, std::abs(x));
  return m;
}

SpacetimeVector SpacetimeVector::operator-() const {
  SpacetimeVector r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

SpacetimeVector& SpacetimeVector::operator+=(const SpacetimeVector& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
  return *this;
}

SpacetimeVector& SpacetimeVector::operator-=(const SpacetimeVector& o) {
  require_same_dim(*this, o);
  for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
  return *this;
}

SpacetimeVector& SpacetimeVector::operator*=(double s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string SpacetimeVector::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? ", " : "") << c_[i];
  os << ')';
  return os.str();
}

double max_abs_diff(const SpacetimeVector& a, const SpacetimeVector& b) {
  return (a - b).max_abs();
}

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Null: return "null";
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Zero: return "zero";
  }
  return "?";
}

double inner(const SpacetimeVector& u, const SpacetimeVector& v) {
  require_same_dim(u, v);
  double s = -u[0] * v[0];
  for (int i = 1; i < u.dim(); ++i) s += u[i] * v[i];
  return s;
}

CausalClass causal_class(const SpacetimeVector& u, double tol) {
  if (u.euclidean_norm() <= tol) return CausalClass::Zero;
  const double q = norm_sq(u);
  if (q < -tol) return CausalClass::Timelike;
  if (q > tol) return CausalClass::Spacelike;
  return CausalClass::Null;
}

bool is_spacelike_paper(const SpacetimeVector& u, double tol) {
  const auto c = causal_class(u, tol);
  return c == CausalClass::Spacelike || c == CausalClass::Zero;
}

bool is_unit_timelike(const SpacetimeVector& u, double tol) {
  const double e = u.euclidean_norm();
  return std::abs(norm_sq(u) + 1.0) <= tol * std::max(1.0, e * e);
}

double gamma_factor(const SpacetimeVector& u, const SpacetimeVector& v, double tol) {
  if (!is_unit_timelike(u, tol) || !is_unit_timelike(v, tol)) {
    throw DomainError("gamma_factor: arguments must be unit timelike vectors");
  }
  const double eta = inner(u, v);
  if (eta >= 0.0) {
    throw OrientationError("gamma_factor: vectors are not consistently time oriented");
  }
  // Reverse Cauchy-Schwarz gives -eta >= 1; anything below is round-off.
  return std::max(-eta, 1.0);
}

SpacetimeVector four_velocity(std::span<const double> speed) {
  const int dim = static_cast<int>(speed.size()) + 1;
  (void)Signature(dim);
  double s2 = 0.0;
  for (double x : speed) {
    if (!std::isfinite(x)) throw DomainError("non-finite velocity component");
    s2 += x * x;
  }
  if (s2 >= 1.0) {
    throw DomainError("superluminal speed |v| = " + std::to_string(std::sqrt(s2)) +
                      " (must be < 1)");
  }
  const double gamma = 1.0 / std::sqrt(1.0 - s2);
  std::array<double, SpacetimeVector::kMaxDim> c{};
  c[0] = gamma;
  for (std::size_t i = 0; i < speed.size(); ++i) c[i + 1] = gamma * speed[i];
  return SpacetimeVector::from_span({c.data(), static_cast<std::size_t>(dim)});
}

OrthogonalSplit decompose(const SpacetimeVector& y, const SpacetimeVector& x, double tol) {
  require_same_dim(x, y);
  const double xx = norm_sq(x);
  if (std::abs(xx) <= tol) {
    throw DomainError("decompose: reference vector is null or zero");
  }
  SpacetimeVector parallel = x * (inner(x, y) / xx);
  SpacetimeVector perpendicular = y - parallel;
  return {parallel, perpendicular};
}

double hyperbolic_angle(const SpacetimeVector& u, const SpacetimeVector& v, double tol) {
  const double uu = norm_sq(u);
  const double vv = norm_sq(v);
  if (uu >= -tol || vv >= -tol) {
    throw DomainError("hyperbolic_angle: arguments must be timelike");
  }
  const double uv = inner(u, v);
  if (uv >= 0.0) {
    throw OrientationError("hyperbolic_angle: vectors are not consistently time oriented");
  }
  double arg = -uv / std::sqrt(uu * vv);
  if (arg < 1.0 - kClampWindow) {
    throw NumericError("hyperbolic_angle: arccosh argument " + std::to_string(arg) +
                       " below 1");
  }
  arg = std::max(arg, 1.0);
  return std::acosh(arg);
}

double gram_det(const SpacetimeVector& p, const SpacetimeVector& q) {
  const double pq = inner(p, q);
  return inner(p, p) * inner(q, q) - pq * pq;
}

}  // namespace twr
