#pragma once

// Lorentzian vector space of signature (-,+,...,+) in dimension 3 or 4.
// Components are frame components in units with c = 1.

#include <array>
#include <initializer_list>
#include <span>
#include <string>

namespace twr {

inline constexpr double kDefaultTol = 1e-10;

// Window below 1 inside which arccosh/arccos arguments are clamped.
inline constexpr double kClampWindow = 1e-12;

class Signature {
 public:
  static constexpr int kMinDim = 3;
  static constexpr int kMaxDim = 4;

  // Throws DimensionError unless dim is 3 or 4.
  explicit Signature(int dim);

  int dim() const { return dim_; }
  static constexpr double sign(int mu) { return mu == 0 ? -1.0 : 1.0; }

 private:
  int dim_;
};

class SpacetimeVector {
 public:
  static constexpr int kMaxDim = Signature::kMaxDim;

  // Zero vector in dimension 4.
  SpacetimeVector() = default;
  // Zero vector of the given dimension.
  explicit SpacetimeVector(int dim);
  SpacetimeVector(std::initializer_list<double> components);

  static SpacetimeVector from_span(std::span<const double> components);
  static SpacetimeVector basis(int dim, int mu);
  // (1, 0, ..., 0): the observer at rest in the frame.
  static SpacetimeVector rest(int dim) { return basis(dim, 0); }

  int dim() const { return dim_; }
  double operator[](int mu) const { return c_[static_cast<std::size_t>(mu)]; }
  std::span<const double> components() const {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }
  // Spatial part (components 1..n-1).
  std::span<const double> spatial() const {
    return {c_.data() + 1, static_cast<std::size_t>(dim_ - 1)};
  }

  double euclidean_norm() const;
  double max_abs() const;

  SpacetimeVector operator-() const;
  SpacetimeVector& operator+=(const SpacetimeVector& o);
  SpacetimeVector& operator-=(const SpacetimeVector& o);
  SpacetimeVector& operator*=(double s);

  friend SpacetimeVector operator+(SpacetimeVector a, const SpacetimeVector& b) { return a += b; }
  friend SpacetimeVector operator-(SpacetimeVector a, const SpacetimeVector& b) { return a -= b; }
  friend SpacetimeVector operator*(SpacetimeVector a, double s) { return a *= s; }
  friend SpacetimeVector operator*(double s, SpacetimeVector a) { return a *= s; }
  friend SpacetimeVector operator/(SpacetimeVector a, double s) { return a *= 1.0 / s; }
  friend bool operator==(const SpacetimeVector&, const SpacetimeVector&) = default;

  std::string to_string() const;

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = kMaxDim;
};

// Largest absolute component difference; throws on dimension mismatch.
double max_abs_diff(const SpacetimeVector& a, const SpacetimeVector& b);

enum class CausalClass { Timelike, Null, Spacelike, Zero };

const char* to_string(CausalClass c);

struct OrthogonalSplit {
  SpacetimeVector parallel;
  SpacetimeVector perpendicular;
};

// eta(u, v) = -u^0 v^0 + sum_i u^i v^i. Exactly symmetric.
double inner(const SpacetimeVector& u, const SpacetimeVector& v);

inline double norm_sq(const SpacetimeVector& u) { return inner(u, u); }

CausalClass causal_class(const SpacetimeVector& u, double tol = kDefaultTol);

// Timelike vectors are never spacelike; the zero vector is.
bool is_spacelike_paper(const SpacetimeVector& u, double tol = kDefaultTol);

// |eta(u,u) + 1| within tol relative to the Euclidean size of u.
bool is_unit_timelike(const SpacetimeVector& u, double tol = kDefaultTol);

// gamma_uv = -eta(u, v) for unit timelike, consistently time-oriented u, v.
double gamma_factor(const SpacetimeVector& u, const SpacetimeVector& v,
                    double tol = kDefaultTol);

// gamma (1, v) for a spatial velocity with |v| < 1.
SpacetimeVector four_velocity(std::span<const double> speed);
inline SpacetimeVector four_velocity(std::initializer_list<double> speed) {
  return four_velocity(std::span<const double>(speed.begin(), speed.size()));
}

// Splits y into parts parallel and orthogonal to the non-null vector x.
OrthogonalSplit decompose(const SpacetimeVector& y, const SpacetimeVector& x,
                          double tol = kDefaultTol);

// arccosh(-eta(u,v) / sqrt(eta(u,u) eta(v,v))) for timelike, consistently
// time-oriented u, v.
double hyperbolic_angle(const SpacetimeVector& u, const SpacetimeVector& v,
                        double tol = kDefaultTol);

// eta(p,p) eta(q,q) - eta(p,q)^2.
double gram_det(const SpacetimeVector& p, const SpacetimeVector& q);

}  // namespace twr
