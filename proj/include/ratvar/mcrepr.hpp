#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "ratvar/lemniscape.hpp"
#include "ratvar/ratfun.hpp"

namespace ratvar {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using ScalarFunction = std::function<Complex(Complex)>;
// φ evaluated on the sublevel component with the given index.
using ComponentFunction = std::function<Complex(std::size_t component, Complex z)>;

// Entries δ_k(z_j(w)) over the fiber z_j(w) of w.
struct FiberMatrix {
  Complex w;
  ComplexMatrix entries;
  std::vector<Complex> fiber;
  double condition = 1.0;
  bool near_critical = false;  // condition above 1e8
};

FiberMatrix fiber_matrix(const DeltaBasis& basis, Complex w);

// f(w) = A(w)^{-1} φ(fiber); throws SingularError near critical values.
ComplexVector represent_pointwise(const DeltaBasis& basis, const ScalarFunction& phi, Complex w);

// f(w) = Σ_k alpha(j, k) w^k, valid for |w| < rho; |alpha(j, k)| <= tail_bound rho^{-k}.
struct Representation {
  RationalFunction r;
  double rho = 0.0;
  ComplexMatrix alpha;
  double tail_bound = 0.0;
  std::vector<double> L;
  double phi_max = 0.0;

  std::size_t d() const { return static_cast<std::size_t>(alpha.rows()); }
  std::size_t order() const { return static_cast<std::size_t>(alpha.cols()) - 1; }
};

struct CauchyOptions {
  std::size_t order = 30;
  double tol = 1e-10;
  std::size_t nodes_per_turn = 64;
  std::size_t max_nodes_per_turn = 8192;
  // Integrate only over the components holding these roots (φ taken as 0 on the others).
  std::optional<std::vector<std::size_t>> support;
};

Representation cauchy_coefficients(const Contour& contour, const ComponentFunction& phi,
                                   const CauchyOptions& options = {});
Representation cauchy_coefficients(const Contour& contour, const ScalarFunction& phi,
                                   const CauchyOptions& options = {});

constexpr std::size_t kMaxDerivativeOrder = 20;

// b(μ, l) = (μ!/l!) [t^μ] R(t)^l for the Taylor series R of r at a root.
std::vector<std::vector<Complex>> bell_table(const std::vector<Complex>& r_series, std::size_t order);

// derivs[j][ν] = φ^(ν)(λ_j); returns Taylor coefficients f_j^(ν)(0)/ν!.
ComplexMatrix taylor_from_derivatives(const DeltaBasis& basis, const std::vector<std::vector<Complex>>& derivs,
                                      std::size_t max_order = 10);

struct Reconstruction {
  Complex value;
  double tail_estimate = 0.0;
};

Reconstruction reconstruct(const Representation& rep, Complex z, std::size_t k_trunc);
Reconstruction reconstruct(const Representation& rep, Complex z);

// Representation in the polynomial variable p: φ(z) = Σ ℓ_j(z) F_j(p(z)).
struct PolyRepresentation {
  Polynomial p;
  std::vector<Complex> lambdas;
  ComplexMatrix coeffs;  // d × (N+1)
};

Complex eval_poly_representation(const PolyRepresentation& F, Complex z);

struct ConvertOptions {
  std::size_t order = 24;
  std::size_t samples = 128;
  std::optional<double> radius;
};

Representation convert_poly_to_rational(const PolyRepresentation& F, const Polynomial& q,
                                        const ConvertOptions& options = {});

// max over z of |Σ ℓ_j(z)(F⊛Q)_j(p(z)) − Σ ℓ_j(z) q(λ_j) f_j(r(z))|.
double conversion_identity_residual(const PolyRepresentation& F, const Representation& f,
                                    std::span<const Complex> zs);

}  // namespace ratvar
