#pragma once

// Dense Clifford algebra over the Lorentzian space of minkowski.hpp.
//
// A multivector of an n-dimensional space stores 2^n coefficients indexed by
// blade bitmask: bit mu set means e_mu is a factor, and the blade is the
// product of its factors in ascending index order. Mask 0 is the unit.

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "twr/minkowski.hpp"

namespace twr {

class Multivector {
 public:
  static constexpr int kMaxBlades = 1 << Signature::kMaxDim;

  // Zero multivector of dimension 4.
  Multivector() = default;
  explicit Multivector(int dim);

  static Multivector scalar(int dim, double value);
  static Multivector blade(int dim, unsigned mask, double coeff = 1.0);
  static Multivector from_coeffs(int dim, std::span<const double> coeffs);

  int dim() const { return dim_; }
  unsigned size() const { return 1u << dim_; }

  double operator[](unsigned mask) const { return c_[mask]; }
  double& operator[](unsigned mask) { return c_[mask]; }
  std::span<const double> coeffs() const { return {c_.data(), size()}; }

  double scalar_part() const { return c_[0]; }
  // Keeps only blades of the given grade.
  Multivector grade(int k) const;
  double max_abs() const;
  // Largest coefficient outside grade k.
  double max_abs_outside_grade(int k) const;

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a *= 1.0 / s; }
  friend bool operator==(const Multivector&, const Multivector&) = default;

  std::string to_string() const;

 private:
  std::array<double, kMaxBlades> c_{};
  int dim_ = Signature::kMaxDim;
};

double max_abs_diff(const Multivector& a, const Multivector& b);

// Sign of e_A e_B relative to the canonical blade e_{A xor B}: transpositions
// needed to sort the factors, times eta(e_0, e_0) = -1 if e_0 is repeated.
int blade_product_sign(unsigned a, unsigned b);

Multivector embed(const SpacetimeVector& u);

// Geometric product.
Multivector gp(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return gp(a, b); }

// Grade-wise reversal: sign (-1)^{k(k-1)/2} on grade k.
Multivector reverse(const Multivector& a);

Multivector commutator(const Multivector& a, const Multivector& b);
Multivector anticommutator(const Multivector& a, const Multivector& b);

// Grade-2 part of u v.
Multivector wedge(const SpacetimeVector& u, const SpacetimeVector& v);

// u / eta(u, u).
Multivector vector_inverse(const SpacetimeVector& u, double tol = kDefaultTol);

// reverse(r) / (r reverse(r)); requires r reverse(r) to be a nonzero scalar,
// which holds for every product of non-null vectors.
Multivector versor_inverse(const Multivector& r, double tol = kDefaultTol);

// Grade-1 part of r x r^{-1}. A non-vector residue above tol (relative to the
// size of x) means r was not a versor.
SpacetimeVector sandwich_vector(const Multivector& r, const SpacetimeVector& x,
                                double tol = kDefaultTol);

// r = alpha + beta [p, q].
struct VersorForm {
  double alpha;
  double beta;
  SpacetimeVector p;
  SpacetimeVector q;

  Multivector to_multivector() const;
};

}  // namespace twr
