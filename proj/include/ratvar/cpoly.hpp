#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ratvar/errors.hpp"

namespace ratvar {

// Dense polynomial with complex coefficients in ascending order.
// Trailing exact zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  static Polynomial constant(Complex c);
  static Polynomial monomial(std::size_t k, Complex c = 1.0);
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Complex{}; }
  Complex leading() const;
  // max |coeff|, the scale used for residual tests
  double scale() const;

  Complex operator()(Complex z) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(Complex c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Complex c) { return a *= c; }
  friend Polynomial operator*(Complex c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

Complex poly_eval(const Polynomial& poly, Complex z);

// Aberth iteration with companion-matrix fallback; roots sorted by
// (real, imag) rounded at 1e-10.
std::vector<Complex> poly_roots(const Polynomial& poly, double tol = 1e-10);

Polynomial poly_derivative(const Polynomial& poly);

std::vector<Polynomial> lagrange_basis(std::span<const Complex> nodes);

// Quotient of poly by (z - a); the remainder is dropped.
Polynomial deflate(const Polynomial& poly, Complex a);

// Coefficients c_k of poly(a + t) = sum c_k t^k, k <= order.
std::vector<Complex> taylor_shift(const Polynomial& poly, Complex a, std::size_t order);

// p(a z + b).
Polynomial compose_affine(const Polynomial& p, Complex a, Complex b);

void sort_points(std::vector<Complex>& pts);

// Throws CollisionError if two nodes are closer than 1e-8 (max|node| + 1).
void check_distinct(std::span<const Complex> nodes);

}  // namespace ratvar
