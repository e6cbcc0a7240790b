#include "ratvar/polyalg.hpp"

#include <algorithm>
#include <cmath>

namespace ratvar {

MultiplicationTable table_from_rational(const RationalFunction& r) {
  const DeltaBasis basis(r);
  const auto d = static_cast<Eigen::Index>(r.d());
  MultiplicationTable t{ComplexMatrix::Zero(d, d), r};
  const auto& lam = r.lambdas();
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      if (i != j)
        t.sigma(i, j) = 1.0 / (basis.rprime_at_lambda()[static_cast<std::size_t>(j)] *
                               (lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)]));
  return t;
}

ComplexVector polyproduct_at(const MultiplicationTable& table, Complex w, const ComplexVector& f, const ComplexVector& g) {
  const Eigen::Index d = f.size();
  if (g.size() != d || static_cast<Eigen::Index>(table.d()) != d) throw InputError("dimension mismatch in polyproduct");
  ComplexVector out(d);
  for (Eigen::Index m = 0; m < d; ++m) {
    Complex s{};
    for (Eigen::Index j = 0; j < d; ++j)
      if (j != m) s += table.sigma(m, j) * (f(m) - f(j)) * (g(m) - g(j));
    out(m) = f(m) * g(m) - w * s;
  }
  return out;
}

ComplexMatrix multiplication_matrix(const MultiplicationTable& table, Complex w, const ComplexVector& f) {
  const Eigen::Index d = f.size();
  ComplexMatrix t = ComplexMatrix::Zero(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    Complex diag = f(m);
    for (Eigen::Index n = 0; n < d; ++n) {
      if (n == m) continue;
      const Complex c = w * table.sigma(m, n) * (f(m) - f(n));
      diag -= c;
      t(m, n) = c;
    }
    t(m, m) = diag;
  }
  return t;
}

SampleSet make_samples(std::vector<Complex> points) {
  return std::make_shared<const std::vector<Complex>>(std::move(points));
}

AlgebraElement::AlgebraElement(SampleSet samples, ComplexMatrix values)
    : samples_(std::move(samples)), values_(std::move(values)) {
  if (!samples_ || values_.cols() != static_cast<Eigen::Index>(samples_->size()))
    throw InputError("element values do not match the sample set");
}

AlgebraElement AlgebraElement::unit(std::size_t d, SampleSet samples) {
  const auto n = static_cast<Eigen::Index>(samples->size());
  return AlgebraElement(std::move(samples), ComplexMatrix::Ones(static_cast<Eigen::Index>(d), n));
}

AlgebraElement AlgebraElement::basis(std::size_t i, std::size_t d, SampleSet samples) {
  const auto n = static_cast<Eigen::Index>(samples->size());
  ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), n);
  v.row(static_cast<Eigen::Index>(i)).setOnes();
  return AlgebraElement(std::move(samples), std::move(v));
}

AlgebraElement AlgebraElement::scalar(std::size_t d, SampleSet samples, const ScalarFunction& alpha) {
  const auto n = static_cast<Eigen::Index>(samples->size());
  ComplexMatrix v(static_cast<Eigen::Index>(d), n);
  for (Eigen::Index m = 0; m < n; ++m) v.col(m).setConstant(alpha((*samples)[static_cast<std::size_t>(m)]));
  return AlgebraElement(std::move(samples), std::move(v));
}

double AlgebraElement::sup_norm() const { return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff(); }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (o.samples_ != samples_) throw InputError("elements live on different sample sets");
  return AlgebraElement(samples_, values_ + o.values_);
}

AlgebraElement AlgebraElement::operator*(Complex c) const { return AlgebraElement(samples_, values_ * c); }

AlgebraElement polyproduct(const AlgebraElement& f, const AlgebraElement& g, const MultiplicationTable& table) {
  if (f.samples() != g.samples()) throw InputError("elements live on different sample sets");
  ComplexMatrix out(f.values().rows(), f.values().cols());
  for (std::size_t m = 0; m < f.samples()->size(); ++m)
    out.col(static_cast<Eigen::Index>(m)) = polyproduct_at(table, (*f.samples())[m], f.at(m), g.at(m));
  return AlgebraElement(f.samples(), std::move(out));
}

double operator_norm(const AlgebraElement& f, const MultiplicationTable& table) {
  double best = 0.0;
  for (std::size_t m = 0; m < f.samples()->size(); ++m) {
    ComplexMatrix t = multiplication_matrix(table, (*f.samples())[m], f.at(m));
    best = std::max(best, t.cwiseAbs().rowwise().sum().maxCoeff());
  }
  return best;
}

double empirical_norm_constant(const MultiplicationTable& table, const SampleSet& samples) {
  double c = 0.0;
  for (std::size_t i = 0; i < table.d(); ++i) {
    AlgebraElement e = AlgebraElement::basis(i, table.d(), samples);
    c = std::max(c, operator_norm(e, table) / e.sup_norm());
  }
  return c;
}

std::vector<ComplexVector> characters(const DeltaBasis& basis, const MultiplicationTable&, Complex w) {
  FiberMatrix fm = fiber_matrix(basis, w);
  if (fm.near_critical) throw SingularError("characters coalesce at a critical value", fm.condition);
  std::vector<ComplexVector> out;
  for (Eigen::Index j = 0; j < fm.entries.rows(); ++j) out.emplace_back(fm.entries.row(j).transpose());
  return out;
}

double character_equation_residual(const ComplexVector& eta, const MultiplicationTable& table, Complex w) {
  double worst = 0.0;
  const Eigen::Index d = eta.size();
  for (Eigen::Index i = 0; i < d; ++i) {
    Complex s{};
    for (Eigen::Index j = 0; j < d; ++j)
      if (j != i) s += table.sigma(i, j) * eta(i) + table.sigma(j, i) * eta(j);
    worst = std::max(worst, std::abs(eta(i) * eta(i) - eta(i) + w * s));
  }
  return worst;
}

double multiplicativity_defect(const ComplexVector& eta, const MultiplicationTable& table, Complex w) {
  const Eigen::Index d = eta.size();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      ComplexVector ei = ComplexVector::Unit(d, i), ej = ComplexVector::Unit(d, j);
      Complex lhs = (eta.transpose() * polyproduct_at(table, w, ei, ej))(0);
      worst = std::max(worst, std::abs(lhs - eta(i) * eta(j)));
    }
  return worst;
}

AlgebraElement element_from_function(const DeltaBasis& basis, const ScalarFunction& phi, const SampleSet& samples) {
  ComplexMatrix v(static_cast<Eigen::Index>(basis.d()), static_cast<Eigen::Index>(samples->size()));
  for (std::size_t m = 0; m < samples->size(); ++m)
    v.col(static_cast<Eigen::Index>(m)) = represent_pointwise(basis, phi, (*samples)[m]);
  return AlgebraElement(samples, std::move(v));
}

Complex gelfand_transform(const DeltaBasis& basis, const AlgebraElement& f, std::size_t sample_index, Complex z) {
  auto delta = basis.all(z);
  Complex s{};
  for (std::size_t i = 0; i < basis.d(); ++i) s += delta[i] * f.values()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(sample_index));
  return s;
}

GelfandReport gelfand_check(const AlgebraElement& f, const DeltaBasis& basis, const ScalarFunction& phi) {
  GelfandReport rep;
  for (std::size_t m = 0; m < f.samples()->size(); ++m) {
    for (Complex z : fiber(basis.parent(), (*f.samples())[m])) {
      Complex v = phi(z);
      rep.spectrum.push_back(v);
      rep.max_error = std::max(rep.max_error, std::abs(gelfand_transform(basis, f, m, z) - v));
      ++rep.evaluated;
    }
  }
  return rep;
}

}  // namespace ratvar
