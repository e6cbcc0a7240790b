#pragma once

#include <vector>

#include "ratvar/mcrepr.hpp"

namespace ratvar {

ComplexMatrix poly_of_matrix(const Polynomial& p, const ComplexMatrix& a);

// Operator 2-norm (largest singular value).
double norm2(const ComplexMatrix& a);

// q(A)^{-1} p(A); throws SingularError if q(A) is singular.
ComplexMatrix mat_rational(const RationalFunction& r, const ComplexMatrix& a);

// δ_j(A) = q(λ_j) ℓ_j(A) q(A)^{-1}.
std::vector<ComplexMatrix> mat_delta(const DeltaBasis& basis, const ComplexMatrix& a);

struct SpectralRadiusEstimate {
  std::vector<double> sequence;  // ‖B^m‖^{1/m}, m = 1..m_max
  double estimate = 0.0;         // smallest term of the sequence
  double eigen_radius = 0.0;     // max |eigenvalue|
};

SpectralRadiusEstimate spectral_radius_estimate(const ComplexMatrix& b, std::size_t m_max = 64);

struct FunmatResult {
  ComplexMatrix value;
  std::size_t truncation_order = 0;
  double tail_estimate = 0.0;
  double rho_hat = 0.0;                     // spectral radius of r(A)
  std::vector<ComplexMatrix> partial_sums;  // filled on request, index = truncation order
};

// φ(A) = Σ_j δ_j(A) Σ_k α_{j,k} r(A)^k truncated once the estimated tail is below tol.
FunmatResult mat_apply(const Representation& rep, const ComplexMatrix& a, double tol, bool keep_partial_sums = false);

struct KSpectralReport {
  double C_rR = 0.0;
  std::vector<double> delta_norms;
  double K = 0.0;
  double R = 0.0;
  double s_R = 0.0;  // distance from the fibers over |w| = R to the critical points
  std::size_t samples = 0;
};

// sup over |w| = R of ‖A(w)^{-1}‖_∞, sampled and doubled until the change is below 1%.
double fiber_inverse_sup(const DeltaBasis& basis, double R, std::size_t samples = 512, std::size_t* used = nullptr,
                         double* s_R = nullptr);

KSpectralReport kspectral(const RationalFunction& r, double R, const ComplexMatrix& a, std::size_t samples = 512);

}  // namespace ratvar
