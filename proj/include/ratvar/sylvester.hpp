#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratvar/opcalc.hpp"

namespace ratvar {

// AX − XB = C with A m×m, B n×n, C m×n.
struct SylvesterProblem {
  ComplexMatrix A, B, C;
};

ComplexMatrix build_block(const SylvesterProblem& problem);

enum class ComponentLabel { V1, V2, V0 };

const char* label_name(ComponentLabel label);

struct SeparationPlan {
  RationalFunction r;
  double level = 1.0;           // eigenvalues of A and B lie in |r| < level
  double contour_level = 0.9;   // level of the coefficient contour
  Contour contour;              // traced at contour_level
  std::vector<ComponentLabel> labels;  // per contour component
  double eta = 0.0;             // max |r| over σ(M)
  std::string family;
  std::vector<Complex> eig_A, eig_B;
};

struct PlanOptions {
  std::optional<RationalFunction> r;
  std::optional<double> eps;
  bool require_norm_contraction = false;
  unsigned seed = 7;
  std::size_t resolution = 401;
};

SeparationPlan plan_separation(const SylvesterProblem& problem, const PlanOptions& options = {});

struct SylvesterSolution {
  ComplexMatrix X;
  double residual = 0.0;  // ‖AX − XB − C‖_F
  double residual_bound = 0.0;
  double eta = 0.0;
  std::size_t truncation_order = 0;
  double convergence_ratio = 0.0;  // geometric decay of the truncated residuals
  ComplexMatrix psi;               // ψ(M)
};

SylvesterSolution solve(const SylvesterProblem& problem, const SeparationPlan& plan, double tol = 1e-10);

struct RieszResult {
  ComplexMatrix Q;
  double idempotence_defect = 0.0;  // ‖Q² − Q‖
  double commutator_defect = 0.0;   // ‖QM − MQ‖
};

// Spectral projection for the components carrying `label`.
RieszResult riesz_projection(const ComplexMatrix& m, const SeparationPlan& plan, ComponentLabel label,
                             double tol = 1e-10);

}  // namespace ratvar
