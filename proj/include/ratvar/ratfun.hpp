#pragma once

#include <vector>

#include "ratvar/cpoly.hpp"

namespace ratvar {

// r = p/q with deg q < deg p and simple roots Λ of p, none shared with q.
class RationalFunction {
 public:
  // Λ computed by poly_roots, in its deterministic order.
  RationalFunction(Polynomial p, Polynomial q);
  // Caller-supplied ordering of Λ; each value is polished and checked against p.
  RationalFunction(Polynomial p, Polynomial q, std::vector<Complex> lambdas);

  const Polynomial& p() const { return p_; }
  const Polynomial& q() const { return q_; }
  const Polynomial& dp() const { return dp_; }
  const Polynomial& dq() const { return dq_; }
  const std::vector<Complex>& lambdas() const { return lambdas_; }
  std::size_t d() const { return lambdas_.size(); }

  bool is_pole(Complex z) const;
  // Throws PoleError at poles.
  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  // Taylor coefficients of r(a + t) up to t^order.
  std::vector<Complex> taylor(Complex a, std::size_t order) const;

 private:
  void validate();
  Polynomial p_, q_, dp_, dq_;
  std::vector<Complex> lambdas_;
};

Complex rat_eval(const RationalFunction& r, Complex z);

// δ_j(z) = q(λ_j) ℓ_j(z) / q(z), evaluated with the product form of ℓ_j.
class DeltaBasis {
 public:
  explicit DeltaBasis(RationalFunction r);

  const RationalFunction& parent() const { return r_; }
  const std::vector<Complex>& rprime_at_lambda() const { return rprime_; }
  const std::vector<Complex>& q_at_lambda() const { return q_at_; }
  std::size_t d() const { return r_.d(); }

  Complex operator()(std::size_t j, Complex z) const;
  std::vector<Complex> all(Complex z) const;
  // Taylor coefficients of δ_k at a up to t^order.
  std::vector<Complex> taylor(std::size_t k, Complex a, std::size_t order) const;
  const std::vector<Polynomial>& lagrange() const { return lagrange_; }

 private:
  Complex lagrange_product(std::size_t j, Complex z) const;
  RationalFunction r_;
  std::vector<Complex> rprime_, q_at_, lagrange_denom_;
  std::vector<Polynomial> lagrange_;
};

Complex delta_eval(const DeltaBasis& basis, std::size_t j, Complex z);

struct CriticalPoint {
  Complex z;
  Complex w;
};

std::vector<CriticalPoint> critical_points(const RationalFunction& r, double tol = 1e-10);

// The d roots of p - w q, with multiplicity.
std::vector<Complex> fiber(const RationalFunction& r, Complex w, double tol = 1e-10);

}  // namespace ratvar
