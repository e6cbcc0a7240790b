#include "ratvar/opcalc.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ratvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ComplexMatrix identity_like(const ComplexMatrix& a) { return ComplexMatrix::Identity(a.rows(), a.cols()); }

void require_square(const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) throw InputError("matrix must be square and nonempty");
  if (!a.allFinite()) throw InputError("matrix has non-finite entries");
}

Eigen::PartialPivLU<ComplexMatrix> factor_q(const RationalFunction& r, const ComplexMatrix& a) {
  ComplexMatrix qa = poly_of_matrix(r.q(), a);
  Eigen::PartialPivLU<ComplexMatrix> lu(qa);
  const double rc = lu.rcond();
  if (!(rc > 1e-14)) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(a, false);
    Complex worst = es.eigenvalues()(0);
    for (Eigen::Index k = 1; k < es.eigenvalues().size(); ++k)
      if (std::abs(r.q()(es.eigenvalues()(k))) < std::abs(r.q()(worst))) worst = es.eigenvalues()(k);
    std::ostringstream os;
    os << "q(A) is singular: eigenvalue near (" << worst.real() << ", " << worst.imag() << ") is a pole";
    throw SingularError(os.str(), rc > 0.0 ? 1.0 / rc : kInf);
  }
  return lu;
}

double eigen_radius(const ComplexMatrix& b) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(b, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

ComplexMatrix poly_of_matrix(const Polynomial& p, const ComplexMatrix& a) {
  require_square(a);
  ComplexMatrix out = ComplexMatrix::Zero(a.rows(), a.cols());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    out = out * a;
    out.diagonal().array() += *it;
  }
  return out;
}

double norm2(const ComplexMatrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

ComplexMatrix mat_rational(const RationalFunction& r, const ComplexMatrix& a) {
  require_square(a);
  return factor_q(r, a).solve(poly_of_matrix(r.p(), a));
}

std::vector<ComplexMatrix> mat_delta(const DeltaBasis& basis, const ComplexMatrix& a) {
  require_square(a);
  const auto& lam = basis.parent().lambdas();
  const std::size_t d = lam.size();
  ComplexMatrix qinv = factor_q(basis.parent(), a).inverse();
  std::vector<ComplexMatrix> out;
  for (std::size_t j = 0; j < d; ++j) {
    ComplexMatrix l = identity_like(a);
    for (std::size_t k = 0; k < d; ++k) {
      if (k == j) continue;
      ComplexMatrix f = a;
      f.diagonal().array() -= lam[k];
      l = l * f / (lam[j] - lam[k]);
    }
    out.push_back(basis.q_at_lambda()[j] * l * qinv);
  }
  return out;
}

SpectralRadiusEstimate spectral_radius_estimate(const ComplexMatrix& b, std::size_t m_max) {
  require_square(b);
  SpectralRadiusEstimate out;
  out.eigen_radius = eigen_radius(b);
  ComplexMatrix p = b;
  double log_scale = 0.0;
  out.estimate = kInf;
  for (std::size_t m = 1; m <= m_max; ++m) {
    if (m > 1) p = p * b;
    const double n = norm2(p);
    double term;
    if (n == 0.0 || log_scale == -kInf) {
      term = 0.0;
      log_scale = -kInf;
    } else {
      log_scale += std::log(n);
      p /= n;
      term = std::exp(log_scale / static_cast<double>(m));
    }
    out.sequence.push_back(term);
    out.estimate = std::min(out.estimate, term);
  }
  return out;
}

FunmatResult mat_apply(const Representation& rep, const ComplexMatrix& a, double tol, bool keep_partial_sums) {
  require_square(a);
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  const ComplexMatrix b = mat_rational(rep.r, a);
  const DeltaBasis basis(rep.r);
  const auto deltas = mat_delta(basis, a);
  FunmatResult out;
  out.rho_hat = eigen_radius(b);
  if (!(out.rho_hat < rep.rho))
    throw ConvergenceError("spectral radius of r(A) is outside the disc of the representation", out.rho_hat);
  double delta_norm = 0.0;
  for (const auto& dm : deltas) delta_norm += norm2(dm);

  const std::size_t d = rep.d(), n_max = rep.order();
  std::vector<ComplexMatrix> sums(d, ComplexMatrix::Zero(a.rows(), a.cols()));
  ComplexMatrix power = identity_like(a);
  double norm_k = 1.0;
  bool done = false;
  out.tail_estimate = kInf;
  auto combine = [&] {
    ComplexMatrix v = ComplexMatrix::Zero(a.rows(), a.cols());
    for (std::size_t j = 0; j < d; ++j) v += deltas[j] * sums[j];
    return v;
  };
  for (std::size_t k = 0; k <= n_max; ++k) {
    for (std::size_t j = 0; j < d; ++j) sums[j] += rep.alpha(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * power;
    if (keep_partial_sums) out.partial_sums.push_back(combine());
    power = power * b;
    const double norm_next = norm2(power);
    out.truncation_order = k;
    if (norm_next == 0.0) {
      out.tail_estimate = 0.0;
      done = true;
      break;
    }
    if (std::isinf(rep.rho)) continue;
    const double theta = std::max(out.rho_hat, norm_k > 0.0 ? norm_next / norm_k : 0.0) / rep.rho;
    norm_k = norm_next;
    if (theta >= 1.0) continue;
    out.tail_estimate =
        delta_norm * rep.tail_bound * norm_next * std::pow(rep.rho, -static_cast<double>(k + 1)) / (1.0 - theta);
    if (out.tail_estimate <= tol) {
      done = true;
      break;
    }
  }
  if (std::isinf(rep.rho)) {
    out.tail_estimate = 0.0;
    done = true;
  }
  if (!done) throw ConvergenceError("series truncation did not reach the tolerance within the stored order", out.tail_estimate);
  out.value = combine();
  return out;
}

double fiber_inverse_sup(const DeltaBasis& basis, double R, std::size_t samples, std::size_t* used, double* s_R) {
  const auto crit = critical_points(basis.parent());
  auto evaluate = [&](std::size_t m, double* dist) {
    double best = 0.0;
    double near = kInf;
    for (std::size_t k = 0; k < m; ++k) {
      const Complex w = std::polar(R, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
      FiberMatrix fm = fiber_matrix(basis, w);
      ComplexMatrix inv = fm.entries.fullPivLu().inverse();
      best = std::max(best, inv.cwiseAbs().rowwise().sum().maxCoeff());
      if (dist)
        for (Complex z : fm.fiber)
          for (const auto& c : crit) near = std::min(near, std::abs(z - c.z));
      if (R == 0.0) break;
    }
    if (dist) *dist = near;
    return best;
  };
  std::size_t m = std::max<std::size_t>(samples, 1);
  double c = evaluate(m, nullptr);
  while (R > 0.0) {
    if (2 * m > 65536) throw ConvergenceError("fiber inverse sup did not stabilise under sample doubling", c);
    double next = evaluate(2 * m, nullptr);
    m *= 2;
    const bool stable = std::abs(next - c) <= 0.01 * next;
    c = std::max(c, next);
    if (stable) break;
  }
  if (used) *used = m;
  if (s_R) evaluate(m, s_R);
  return c;
}

KSpectralReport kspectral(const RationalFunction& r, double R, const ComplexMatrix& a, std::size_t samples) {
  require_square(a);
  if (!(R >= 0.0)) throw InputError("R must be nonnegative");
  std::ostringstream bad;
  for (const auto& c : critical_points(r))
    if (std::abs(c.w) <= R) bad << " (" << c.w.real() << ", " << c.w.imag() << ")";
  if (!bad.str().empty()) throw DomainError("critical values inside |w| <= R:" + bad.str());
  const double nb = norm2(mat_rational(r, a));
  if (nb > R * (1.0 + 1e-10) + 1e-12) throw InputError("requires ||r(A)|| <= R");
  const DeltaBasis basis(r);
  KSpectralReport rep;
  rep.R = R;
  rep.C_rR = fiber_inverse_sup(basis, R, samples, &rep.samples, &rep.s_R);
  double total = 0.0;
  for (const auto& dm : mat_delta(basis, a)) {
    rep.delta_norms.push_back(norm2(dm));
    total += rep.delta_norms.back();
  }
  rep.K = rep.C_rR * total;
  return rep;
}

}  // namespace ratvar
