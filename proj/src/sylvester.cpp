#include "ratvar/sylvester.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

namespace ratvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
  if (a.rows() == 0) return {};
  Eigen::ComplexEigenSolver<ComplexMatrix> es(a, false);
  std::vector<Complex> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

Complex centroid(const std::vector<Complex>& pts) {
  Complex c{};
  for (Complex z : pts) c += z;
  return c / static_cast<double>(pts.size());
}

struct Candidate {
  std::string family;
  RationalFunction r;
};

// Rejection reason for a candidate, empty on success.
struct Attempt {
  std::optional<SeparationPlan> plan;
  std::string reason;
};

Attempt validate(const RationalFunction& r, const std::string& family, const std::vector<Complex>& eig_a,
                 const std::vector<Complex>& eig_b, Complex centre, std::size_t resolution) {
  Attempt out;
  double eta = 0.0;
  for (const auto* set : {&eig_a, &eig_b})
    for (Complex e : *set) {
      if (r.is_pole(e)) {
        out.reason = "an eigenvalue is a pole of r";
        return out;
      }
      eta = std::max(eta, std::abs(r(e)));
    }
  if (!(eta < 1.0)) {
    out.reason = "an eigenvalue lies outside |r| < 1";
    return out;
  }
  std::vector<double> crit;
  for (const auto& c : critical_points(r)) crit.push_back(std::abs(c.w));
  const double base = std::min(std::max(0.5 * (1.0 + eta), 0.9), 0.99);
  std::vector<double> levels;
  for (double shift : {0.0, -0.02, 0.02, -0.04, -0.06, 0.04, -0.08})
    levels.push_back(base + shift);
  levels.push_back(0.5 * (eta + base));
  for (double rho : levels) {
    if (!(rho > eta) || !(rho < 1.0)) continue;
    bool near = false;
    for (double m : crit) near = near || std::abs(m - rho) <= 0.01 * rho;
    if (near) continue;
    try {
      const Window window = enclosing_window(r, rho, 1.15, centre);
      TraceOptions topt;
      topt.nx = topt.ny = resolution;
      Contour contour = trace_level_curve(r, rho, window, 1e-12, topt);
      std::vector<ComponentLabel> labels(contour.component_count(), ComponentLabel::V0);
      std::set<int> comp_a, comp_b;
      bool missing = false;
      for (Complex e : eig_a) {
        int c = contour.component_containing(e);
        missing = missing || c < 0;
        comp_a.insert(c);
      }
      for (Complex e : eig_b) {
        int c = contour.component_containing(e);
        missing = missing || c < 0;
        comp_b.insert(c);
      }
      if (missing) {
        out.reason = "an eigenvalue is not enclosed by the traced contour";
        continue;
      }
      for (int c : comp_a)
        if (comp_b.count(c)) {
          out.reason = "a component holds eigenvalues of both A and B";
          return out;
        }
      for (int c : comp_a) labels[static_cast<std::size_t>(c)] = ComponentLabel::V1;
      for (int c : comp_b) labels[static_cast<std::size_t>(c)] = ComponentLabel::V2;
      out.plan.emplace(SeparationPlan{r, 1.0, rho, std::move(contour), std::move(labels), eta, family, eig_a, eig_b});
      return out;
    } catch (const Error& e) {
      out.reason = e.what();
    }
  }
  if (out.reason.empty()) out.reason = "no admissible contour level";
  return out;
}

// Rings of radius `radius` around each point, keeping points at least `keep` from all of `pts`.
std::vector<Complex> rings(const std::vector<Complex>& pts, double radius, std::size_t count, double keep) {
  std::vector<Complex> out;
  for (Complex c : pts)
    for (std::size_t k = 0; k < count; ++k) {
      Complex z = c + std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count));
      bool ok = true;
      for (Complex e : pts) ok = ok && std::abs(z - e) >= keep;
      if (ok) out.push_back(z);
    }
  return out;
}

std::vector<Candidate> search_candidates(const std::vector<Complex>& eig_a, const std::vector<Complex>& eig_b,
                                         double eps) {
  std::vector<Candidate> out;
  const Complex ca = centroid(eig_a), cb = centroid(eig_b);
  const Complex m = 0.5 * (ca + cb), h = 0.5 * (ca - cb);
  // u = (z - m)/h sends the centroids to ±1.
  const Polynomial u2m1 = compose_affine(Polynomial({-1.0, 0.0, 1.0}), 1.0 / h, -m / h);
  out.push_back({"rational-two-point", RationalFunction(u2m1, compose_affine(Polynomial({0.0, 2.0}), 1.0 / h, -m / h))});
  out.push_back({"polynomial-two-point", RationalFunction(u2m1, Polynomial::constant(1.0))});

  for (auto [a, b] : {std::pair{1.4, 1.5}, std::pair{std::sqrt(2.0), std::sqrt(3.0)}}) {
    RationalFunction base = two_segment_family(a, b);
    const double level = 0.98 * axis_minimum(base, 1e3);
    // u = a (z - m)/h puts the A centroid at u = a, between the zeros a ± i.
    Polynomial p = compose_affine(base.p(), a / h, -a * m / h) * (1.0 / level);
    Polynomial q = compose_affine(base.q(), a / h, -a * m / h);
    try {
      out.push_back({"two-segment", RationalFunction(p, q)});
    } catch (const Error&) {
    }
  }

  std::vector<Complex> all = eig_a;
  all.insert(all.end(), eig_b.begin(), eig_b.end());
  std::vector<Complex> inside = all;
  for (Complex z : rings(all, 0.25 * eps, 16, 0.0)) inside.push_back(z);
  std::vector<Complex> outside;
  for (double f : {0.5, 0.75, 1.0})
    for (Complex z : rings(all, f * eps, 64, 0.5 * eps * (1.0 - 1e-9))) outside.push_back(z);
  const std::size_t n = all.size();
  for (std::size_t dp : {n, n + 2, 2 * n}) {
    if (dp > 24 || dp < 2) continue;
    try {
      out.push_back({"fit", fit_separator(inside, outside, dp, dp - 1).r});
    } catch (const Error&) {
    }
  }
  return out;
}

// p̃/qⁿ with p̃ the n-th power of p, roots jittered by 1e-6 relative.
RationalFunction power_perturb(const RationalFunction& r, unsigned n, std::mt19937& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> roots;
  for (Complex l : r.lambdas())
    for (unsigned k = 0; k < n; ++k) roots.push_back(l + 1e-6 * (1.0 + std::abs(l)) * Complex{unit(rng), unit(rng)});
  Polynomial p = Polynomial::from_roots(roots, std::pow(r.p().leading(), static_cast<double>(n)));
  Polynomial q = Polynomial::constant(1.0);
  for (unsigned k = 0; k < n; ++k) q = q * r.q();
  return RationalFunction(p, q, roots);
}

double frob(const ComplexMatrix& m) { return m.norm(); }

}  // namespace

ComplexMatrix build_block(const SylvesterProblem& problem) {
  const auto& a = problem.A;
  const auto& b = problem.B;
  const auto& c = problem.C;
  if (a.rows() != a.cols() || b.rows() != b.cols()) throw InputError("A and B must be square");
  if (c.rows() != a.rows() || c.cols() != b.rows()) throw InputError("C must be m×n for A m×m and B n×n");
  const Eigen::Index m = a.rows(), n = b.rows();
  ComplexMatrix out = ComplexMatrix::Zero(m + n, m + n);
  out.topLeftCorner(m, m) = a;
  out.topRightCorner(m, n) = c;
  out.bottomRightCorner(n, n) = b;
  return out;
}

const char* label_name(ComponentLabel label) {
  switch (label) {
    case ComponentLabel::V1: return "V1";
    case ComponentLabel::V2: return "V2";
    case ComponentLabel::V0: return "V0";
  }
  return "?";
}

SeparationPlan plan_separation(const SylvesterProblem& problem, const PlanOptions& options) {
  const ComplexMatrix mblock = build_block(problem);
  if (problem.A.rows() == 0 || problem.B.rows() == 0) throw InputError("A and B must be nonempty");
  const auto eig_a = eigenvalues(problem.A), eig_b = eigenvalues(problem.B);
  double dist = kInf, scale = 1.0;
  for (Complex x : eig_a)
    for (Complex y : eig_b) {
      dist = std::min(dist, std::abs(x - y));
      scale = std::max({scale, std::abs(x), std::abs(y)});
    }
  if (!(dist > 1e-10 * scale)) throw InputError("spectra of A and B are not disjoint");
  double eps = 0.45 * dist;
  if (options.eps) {
    if (!(*options.eps > 0.0) || !(*options.eps < 0.5 * dist))
      throw InputError("eps must satisfy 0 < eps < dist(σ(A), σ(B))/2");
    eps = *options.eps;
  }
  std::vector<Complex> all = eig_a;
  all.insert(all.end(), eig_b.begin(), eig_b.end());
  const Complex centre = centroid(all);

  std::vector<Candidate> candidates;
  if (options.r)
    candidates.push_back({"given", *options.r});
  else
    candidates = search_candidates(eig_a, eig_b, eps);

  std::string reasons;
  std::mt19937 rng(options.seed);
  for (const auto& cand : candidates) {
    Attempt att = validate(cand.r, cand.family, eig_a, eig_b, centre, options.resolution);
    if (!att.plan) {
      reasons += cand.family + ": " + att.reason + "; ";
      continue;
    }
    if (!options.require_norm_contraction || norm2(mat_rational(att.plan->r, mblock)) < 1.0) return std::move(*att.plan);
    for (unsigned n = 2; n <= 8; ++n) {
      try {
        RationalFunction rt = power_perturb(cand.r, n, rng);
        if (!(norm2(mat_rational(rt, mblock)) < 1.0)) continue;
        Attempt pt = validate(rt, cand.family + "-power", eig_a, eig_b, centre, options.resolution);
        if (pt.plan) return std::move(*pt.plan);
      } catch (const Error&) {
      }
    }
    reasons += cand.family + ": ‖r(M)‖ >= 1 after power-and-perturb; ";
  }
  throw SeparationError("no validated separator: " + reasons);
}

SylvesterSolution solve(const SylvesterProblem& problem, const SeparationPlan& plan, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  const ComplexMatrix mblock = build_block(problem);
  const Eigen::Index m = problem.A.rows(), n = problem.B.rows();
  const auto& contour = plan.contour;
  ComponentFunction psi = [&](std::size_t c, Complex) -> Complex {
    switch (plan.labels.at(c)) {
      case ComponentLabel::V1: return 1.0;
      case ComponentLabel::V2: return -1.0;
      case ComponentLabel::V0: return 0.0;
    }
    return 0.0;
  };
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < plan.r.d(); ++j)
    if (plan.labels.at(contour.component_of_root(j)) != ComponentLabel::V0) support.push_back(j);

  const double theta = std::max(plan.eta, 0.02) / plan.contour_level;
  std::size_t order = static_cast<std::size_t>(std::ceil(std::log(1e-3 * tol) / std::log(theta))) + 10;
  order = std::clamp<std::size_t>(order, 10, 200);

  const double na = frob(problem.A), nb = frob(problem.B), nc = frob(problem.C);
  SylvesterSolution out;
  out.eta = plan.eta;
  double series_tol = 0.1 * tol;
  for (int attempt = 0;; ++attempt) {
    CauchyOptions copt;
    copt.order = order;
    copt.tol = std::clamp(1e-2 * tol, 1e-13, 1e-8);
    copt.support = support;
    const Representation rep = cauchy_coefficients(contour, psi, copt);
    FunmatResult fm;
    try {
      fm = mat_apply(rep, mblock, series_tol, true);
    } catch (const ConvergenceError& e) {
      if (order >= 200 || attempt >= 4) throw;
      order = std::min<std::size_t>(2 * order, 200);
      continue;
    }
    out.psi = fm.value;
    out.X = fm.value.topRightCorner(m, n) / 2.0;
    out.truncation_order = fm.truncation_order;
    out.residual = frob(problem.A * out.X - out.X * problem.B - problem.C);
    out.residual_bound = tol * (na + nb) * frob(out.X) + tol * nc;

    std::vector<double> res;
    for (const auto& ps : fm.partial_sums) {
      ComplexMatrix xk = ps.topRightCorner(m, n) / 2.0;
      res.push_back(frob(problem.A * xk - xk * problem.B - problem.C));
    }
    // Log-linear fit over the terms dominated by truncation.
    const double floor = std::max(out.residual, 1e-13 * (1.0 + (na + nb) * frob(out.X) + nc));
    std::vector<double> ks, ls;
    for (std::size_t k = 0; k < res.size(); ++k)
      if (res[k] > 1e3 * floor) {
        ks.push_back(static_cast<double>(k));
        ls.push_back(std::log(res[k]));
      }
    out.convergence_ratio = 0.0;
    if (ks.size() >= 2) {
      const double km = std::accumulate(ks.begin(), ks.end(), 0.0) / static_cast<double>(ks.size());
      const double lm = std::accumulate(ls.begin(), ls.end(), 0.0) / static_cast<double>(ls.size());
      double sxy = 0.0, sxx = 0.0;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        sxy += (ks[i] - km) * (ls[i] - lm);
        sxx += (ks[i] - km) * (ks[i] - km);
      }
      out.convergence_ratio = std::exp(sxy / sxx);
    }
    if (out.residual <= out.residual_bound) return out;
    if (attempt >= 4) throw ConvergenceError("Sylvester residual check failed", out.residual);
    series_tol *= 1e-2;
    order = std::min<std::size_t>(order + 20, 200);
  }
}

RieszResult riesz_projection(const ComplexMatrix& m, const SeparationPlan& plan, ComponentLabel label, double tol) {
  if (m.rows() != m.cols()) throw InputError("matrix must be square");
  const auto& contour = plan.contour;
  ComponentFunction ind = [&](std::size_t c, Complex) -> Complex {
    return plan.labels.at(c) == label ? 1.0 : 0.0;
  };
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < plan.r.d(); ++j)
    if (plan.labels.at(contour.component_of_root(j)) == label) support.push_back(j);

  const double theta = std::max(plan.eta, 0.02) / plan.contour_level;
  std::size_t order = static_cast<std::size_t>(std::ceil(std::log(1e-3 * tol) / std::log(theta))) + 10;
  order = std::clamp<std::size_t>(order, 10, 200);
  CauchyOptions copt;
  copt.order = order;
  copt.tol = std::clamp(1e-2 * tol, 1e-13, 1e-8);
  copt.support = support;
  for (;;) {
    try {
      const Representation rep = cauchy_coefficients(contour, ind, copt);
      FunmatResult fm = mat_apply(rep, m, tol);
      RieszResult out;
      out.Q = fm.value;
      out.idempotence_defect = norm2(out.Q * out.Q - out.Q);
      out.commutator_defect = norm2(out.Q * m - m * out.Q);
      return out;
    } catch (const ConvergenceError&) {
      if (copt.order >= 200) throw;
      copt.order = std::min<std::size_t>(2 * copt.order, 200);
    }
  }
}

}  // namespace ratvar
