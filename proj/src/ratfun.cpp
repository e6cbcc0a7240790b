#include "ratvar/ratfun.hpp"

#include <cmath>

#include "ratvar/series.hpp"

namespace ratvar {

namespace {

double power_scale(Complex z, std::size_t n) { return std::pow(std::max(1.0, std::abs(z)), static_cast<double>(n)); }

}  // namespace

RationalFunction::RationalFunction(Polynomial p, Polynomial q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.is_zero() || *p_.degree() < 1) throw InputError("numerator must have degree >= 1");
  lambdas_ = poly_roots(p_);
  validate();
}

RationalFunction::RationalFunction(Polynomial p, Polynomial q, std::vector<Complex> lambdas)
    : p_(std::move(p)), q_(std::move(q)), lambdas_(std::move(lambdas)) {
  if (p_.is_zero() || *p_.degree() < 1) throw InputError("numerator must have degree >= 1");
  const Polynomial dp = poly_derivative(p_);
  const std::size_t n = *p_.degree();
  for (Complex& l : lambdas_) {
    for (int it = 0; it < 3; ++it) {
      Complex d = dp(l);
      if (d == Complex{}) break;
      Complex next = l - p_(l) / d;
      if (!(std::abs(p_(next)) < std::abs(p_(l)))) break;
      l = next;
    }
    if (!(std::abs(p_(l)) <= 1e-8 * p_.scale() * power_scale(l, n)))
      throw InputError("supplied root is not a zero of p");
  }
  validate();
}

void RationalFunction::validate() {
  if (q_.is_zero()) throw InputError("denominator is the zero polynomial");
  if (*q_.degree() >= *p_.degree()) throw InputError("deg q must be smaller than deg p");
  if (lambdas_.size() != *p_.degree()) throw InputError("number of roots does not match deg p");
  check_distinct(lambdas_);
  const std::size_t m = *q_.degree();
  for (Complex l : lambdas_)
    if (!(std::abs(q_(l)) > 1e-10 * q_.scale() * power_scale(l, m)))
      throw InputError("p and q share a root");
  dp_ = poly_derivative(p_);
  dq_ = poly_derivative(q_);
}

bool RationalFunction::is_pole(Complex z) const {
  if (*q_.degree() == 0) return false;
  return std::abs(q_(z)) <= 1e-14 * q_.scale() * power_scale(z, *q_.degree());
}

Complex RationalFunction::operator()(Complex z) const {
  if (is_pole(z)) throw PoleError(z);
  return p_(z) / q_(z);
}

Complex RationalFunction::derivative(Complex z) const {
  if (is_pole(z)) throw PoleError(z);
  Complex qz = q_(z);
  return (dp_(z) * qz - p_(z) * dq_(z)) / (qz * qz);
}

std::vector<Complex> RationalFunction::taylor(Complex a, std::size_t order) const {
  if (is_pole(a)) throw PoleError(a);
  return series::div(taylor_shift(p_, a, order), taylor_shift(q_, a, order));
}

Complex rat_eval(const RationalFunction& r, Complex z) { return r(z); }

DeltaBasis::DeltaBasis(RationalFunction r) : r_(std::move(r)) {
  const auto& lam = r_.lambdas();
  const std::size_t d = lam.size();
  lagrange_ = lagrange_basis(lam);
  for (std::size_t j = 0; j < d; ++j) {
    Complex qj = r_.q()(lam[j]);
    q_at_.push_back(qj);
    rprime_.push_back(r_.dp()(lam[j]) / qj);
    Complex den = 1.0;
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) den *= lam[j] - lam[k];
    lagrange_denom_.push_back(den);
  }
}

Complex DeltaBasis::lagrange_product(std::size_t j, Complex z) const {
  const auto& lam = r_.lambdas();
  Complex num = 1.0;
  for (std::size_t k = 0; k < lam.size(); ++k)
    if (k != j) num *= z - lam[k];
  return num / lagrange_denom_[j];
}

Complex DeltaBasis::operator()(std::size_t j, Complex z) const {
  if (j >= d()) throw InputError("delta index out of range");
  if (z == r_.lambdas()[j]) return 1.0;
  if (r_.is_pole(z)) throw PoleError(z);
  return q_at_[j] * lagrange_product(j, z) / r_.q()(z);
}

std::vector<Complex> DeltaBasis::all(Complex z) const {
  if (r_.is_pole(z)) throw PoleError(z);
  const Complex qz = r_.q()(z);
  std::vector<Complex> out(d());
  for (std::size_t j = 0; j < d(); ++j)
    out[j] = z == r_.lambdas()[j] ? Complex{1.0} : q_at_[j] * lagrange_product(j, z) / qz;
  return out;
}

std::vector<Complex> DeltaBasis::taylor(std::size_t k, Complex a, std::size_t order) const {
  if (r_.is_pole(a)) throw PoleError(a);
  auto num = taylor_shift(lagrange_[k], a, order);
  for (Complex& c : num) c *= q_at_[k];
  return series::div(num, taylor_shift(r_.q(), a, order));
}

Complex delta_eval(const DeltaBasis& basis, std::size_t j, Complex z) { return basis(j, z); }

std::vector<CriticalPoint> critical_points(const RationalFunction& r, double tol) {
  Polynomial n = r.dp() * r.q() - r.p() * r.dq();
  std::vector<CriticalPoint> out;
  if (n.is_zero() || *n.degree() == 0) return out;
  for (Complex z : poly_roots(n, tol)) {
    if (r.is_pole(z)) continue;
    out.push_back({z, r(z)});
  }
  return out;
}

std::vector<Complex> fiber(const RationalFunction& r, Complex w, double tol) {
  return poly_roots(r.p() - w * r.q(), tol);
}

}  // namespace ratvar
