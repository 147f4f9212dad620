#include "twr/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "twr/errors.hpp"

namespace twr {

namespace {

constexpr int compute_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  int sign = (swaps & 1) ? -1 : 1;
  // e_0 e_0 = -1; every other repeated factor squares to +1.
  if ((a & b) & 1u) sign = -sign;
  return sign;
}

constexpr auto kSignTable = [] {
  std::array<std::array<int, Multivector::kMaxBlades>, Multivector::kMaxBlades> t{};
  for (unsigned a = 0; a < Multivector::kMaxBlades; ++a)
    for (unsigned b = 0; b < Multivector::kMaxBlades; ++b) t[a][b] = compute_sign(a, b);
  return t;
}();

void require_same_dim(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("multivector dimension mismatch: " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

constexpr double reverse_sign(unsigned mask) {
  const int k = std::popcount(mask);
  return ((k * (k - 1) / 2) & 1) ? -1.0 : 1.0;
}

}  // namespace

Multivector::Multivector(int dim) : dim_(Signature(dim).dim()) {}

Multivector Multivector::scalar(int dim, double value) {
  Multivector m(dim);
  m.c_[0] = value;
  return m;
}

Multivector Multivector::blade(int dim, unsigned mask, double coeff) {
  Multivector m(dim);
  if (mask >= m.size()) throw DimensionError("blade mask out of range");
  m.c_[mask] = coeff;
  return m;
}

Multivector Multivector::from_coeffs(int dim, std::span<const double> coeffs) {
  Multivector m(dim);
  if (coeffs.size() != m.size()) {
    throw DimensionError("expected " + std::to_string(m.size()) + " coefficients");
  }
  for (unsigned i = 0; i < m.size(); ++i) {
    if (!std::isfinite(coeffs[i])) throw DomainError("non-finite multivector coefficient");
    m.c_[i] = coeffs[i];
  }
  return m;
}

Multivector Multivector::grade(int k) const {
  Multivector r(dim_);
  for (unsigned i = 0; i < size(); ++i) {
    if (std::popcount(i) == k) r.c_[i] = c_[i];
  }
  return r;
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (double x : coeffs()) m = std::max(m, std::abs(x));
  return m;
}

double Multivector::max_abs_outside_grade(int k) const {
  double m = 0.0;
  for (unsigned i = 0; i < size(); ++i) {
    if (std::popcount(i) != k) m = std::max(m, std::abs(c_[i]));
  }
  return m;
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_dim(*this, o);
  for (unsigned i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_dim(*this, o);
  for (unsigned i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string Multivector::to_string() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (unsigned i = 0; i < size(); ++i) {
    if (c_[i] == 0.0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i];
    for (int mu = 0; mu < dim_; ++mu) {
      if (i & (1u << mu)) os << "*e" << mu;
    }
  }
  if (first) os << '0';
  return os.str();
}

double max_abs_diff(const Multivector& a, const Multivector& b) { return (a - b).max_abs(); }

int blade_product_sign(unsigned a, unsigned b) { return kSignTable[a][b]; }

Multivector embed(const SpacetimeVector& u) {
  Multivector m(u.dim());
  for (int mu = 0; mu < u.dim(); ++mu) m[1u << mu] = u[mu];
  return m;
}

Multivector gp(const Multivector& a, const Multivector& b) {
  require_same_dim(a, b);
  Multivector r(a.dim());
  const unsigned n = a.size();
  for (unsigned i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (unsigned j = 0; j < n; ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      r[i ^ j] += kSignTable[i][j] * ai * bj;
    }
  }
  return r;
}

Multivector reverse(const Multivector& a) {
  Multivector r = a;
  for (unsigned i = 0; i < a.size(); ++i) r[i] *= reverse_sign(i);
  return r;
}

Multivector commutator(const Multivector& a, const Multivector& b) {
  return gp(a, b) - gp(b, a);
}

Multivector anticommutator(const Multivector& a, const Multivector& b) {
  return gp(a, b) + gp(b, a);
}

Multivector wedge(const SpacetimeVector& u, const SpacetimeVector& v) {
  return gp(embed(u), embed(v)).grade(2);
}

Multivector vector_inverse(const SpacetimeVector& u, double tol) {
  const double uu = norm_sq(u);
  if (std::abs(uu) <= tol) {
    throw DomainError("vector_inverse: null or zero vector has no inverse");
  }
  return embed(u) / uu;
}

Multivector versor_inverse(const Multivector& r, double tol) {
  const Multivector rev = reverse(r);
  const Multivector norm = gp(r, rev);
  const double s = norm.scalar_part();
  const double scale = r.max_abs();
  if (scale == 0.0 || std::abs(s) <= tol * scale * scale) {
    throw DomainError("versor_inverse: r reverse(r) vanishes; not invertible");
  }
  if (norm.max_abs_outside_grade(0) > tol * std::max(1.0, std::abs(s))) {
    throw DomainError("versor_inverse: r reverse(r) is not a scalar; not a versor");
  }
  return rev / s;
}

SpacetimeVector sandwich_vector(const Multivector& r, const SpacetimeVector& x, double tol) {
  if (r.dim() != x.dim()) throw DimensionError("sandwich_vector: dimension mismatch");
  const Multivector y = gp(gp(r, embed(x)), versor_inverse(r, tol));
  const double residue = y.max_abs_outside_grade(1);
  if (residue > tol * std::max(1.0, x.max_abs())) {
    throw ConsistencyError("sandwich_vector: non-vector residue " + std::to_string(residue) +
                           " exceeds tolerance");
  }
  std::array<double, SpacetimeVector::kMaxDim> c{};
  for (int mu = 0; mu < x.dim(); ++mu) c[mu] = y[1u << mu];
  return SpacetimeVector::from_span({c.data(), static_cast<std::size_t>(x.dim())});
}

Multivector VersorForm::to_multivector() const {
  return Multivector::scalar(p.dim(), alpha) + beta * commutator(embed(p), embed(q));
}

}  // namespace twr
