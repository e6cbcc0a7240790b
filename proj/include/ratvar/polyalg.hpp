#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ratvar/mcrepr.hpp"

namespace ratvar {

struct MultiplicationTable {
  ComplexMatrix sigma;  // diagonal unused (zero)
  std::optional<RationalFunction> generated_by;

  std::size_t d() const { return static_cast<std::size_t>(sigma.rows()); }
};

// σ_ij = 1/(r'(λ_j)(λ_i − λ_j)).
MultiplicationTable table_from_rational(const RationalFunction& r);

// (f⊛g)_m = f_m g_m − w Σ_{j≠m} σ_mj (f_m − f_j)(g_m − g_j).
ComplexVector polyproduct_at(const MultiplicationTable& table, Complex w, const ComplexVector& f,
                             const ComplexVector& g);

// T with (f⊛g)(w) = T g(w).
ComplexMatrix multiplication_matrix(const MultiplicationTable& table, Complex w, const ComplexVector& f);

using SampleSet = std::shared_ptr<const std::vector<Complex>>;

SampleSet make_samples(std::vector<Complex> points);

// Function M → C^d stored by its values on a shared sample set (column m holds the value at w_m).
class AlgebraElement {
 public:
  AlgebraElement(SampleSet samples, ComplexMatrix values);

  static AlgebraElement unit(std::size_t d, SampleSet samples);
  static AlgebraElement basis(std::size_t i, std::size_t d, SampleSet samples);
  // Scalar function times the unit.
  static AlgebraElement scalar(std::size_t d, SampleSet samples, const ScalarFunction& alpha);

  const SampleSet& samples() const { return samples_; }
  const ComplexMatrix& values() const { return values_; }
  std::size_t d() const { return static_cast<std::size_t>(values_.rows()); }
  ComplexVector at(std::size_t m) const { return values_.col(static_cast<Eigen::Index>(m)); }
  // |f|_∞ over samples and components.
  double sup_norm() const;

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator*(Complex c) const;

 private:
  SampleSet samples_;
  ComplexMatrix values_;
};

AlgebraElement polyproduct(const AlgebraElement& f, const AlgebraElement& g, const MultiplicationTable& table);

double operator_norm(const AlgebraElement& f, const MultiplicationTable& table);

// max over basis elements of ‖e_i‖ / |e_i|_∞.
double empirical_norm_constant(const MultiplicationTable& table, const SampleSet& samples);

// η^(j)_i = δ_i(z_j(w)) for the fiber points z_j(w).
std::vector<ComplexVector> characters(const DeltaBasis& basis, const MultiplicationTable& table, Complex w);

// max_i |η_i² − η_i + w Σ_{j≠i} (σ_ij η_i + σ_ji η_j)|.
double character_equation_residual(const ComplexVector& eta, const MultiplicationTable& table, Complex w);

// max_{i,j} |η(e_i⊛e_j) − η_i η_j|.
double multiplicativity_defect(const ComplexVector& eta, const MultiplicationTable& table, Complex w);

// f(w) = A(w)^{-1} φ(fiber) at every sample.
AlgebraElement element_from_function(const DeltaBasis& basis, const ScalarFunction& phi, const SampleSet& samples);

// χ_z(f) = Σ_i δ_i(z) f_i(r(z)) for z whose image r(z) is a sample.
Complex gelfand_transform(const DeltaBasis& basis, const AlgebraElement& f, std::size_t sample_index, Complex z);

struct GelfandReport {
  double max_error = 0.0;
  std::vector<Complex> spectrum;  // φ(z) over the sampled fibers
  std::size_t evaluated = 0;
};

// Checks χ_z(f) = φ(z) for every fiber point z of every sample.
GelfandReport gelfand_check(const AlgebraElement& f, const DeltaBasis& basis, const ScalarFunction& phi);

}  // namespace ratvar
