#include "ratvar/mcrepr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "ratvar/polyalg.hpp"
#include "ratvar/series.hpp"

namespace ratvar {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Fiber of w ordered by continuation from Λ along t ↦ t·w; falls back to the sorted order.
std::vector<Complex> ordered_fiber(const RationalFunction& r, Complex w) {
  std::vector<Complex> roots = fiber(r, w);
  std::vector<Complex> z = r.lambdas();
  const int steps = 64;
  for (int s = 1; s <= steps; ++s) {
    const Complex wt = w * (static_cast<double>(s) / steps);
    for (Complex& x : z) {
      for (int it = 0; it < 8; ++it) {
        Complex g = r.p()(x) - wt * r.q()(x);
        Complex dg = r.dp()(x) - wt * r.dq()(x);
        if (dg == Complex{}) break;
        x -= g / dg;
      }
    }
  }
  std::vector<Complex> out(z.size());
  std::set<std::size_t> taken;
  for (std::size_t j = 0; j < z.size(); ++j) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < roots.size(); ++k) {
      double dist = std::abs(roots[k] - z[j]);
      if (dist < bd) {
        bd = dist;
        best = k;
      }
    }
    if (!(bd <= 1e-6 * (1.0 + std::abs(z[j]))) || taken.contains(best)) return roots;
    taken.insert(best);
    out[j] = roots[best];
  }
  return out;
}

double condition_number(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const auto& s = svd.singularValues();
  if (s(s.size() - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(s.size() - 1);
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

double binomial(std::size_t n, std::size_t k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

FiberMatrix fiber_matrix(const DeltaBasis& basis, Complex w) {
  const std::size_t d = basis.d();
  FiberMatrix fm;
  fm.w = w;
  fm.fiber = ordered_fiber(basis.parent(), w);
  fm.entries.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) {
    auto row = basis.all(fm.fiber[j]);
    for (std::size_t k = 0; k < d; ++k) fm.entries(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = row[k];
  }
  fm.condition = condition_number(fm.entries);
  fm.near_critical = !(fm.condition <= 1e8);
  return fm;
}

ComplexVector represent_pointwise(const DeltaBasis& basis, const ScalarFunction& phi, Complex w) {
  FiberMatrix fm = fiber_matrix(basis, w);
  if (fm.near_critical) throw SingularError("fiber matrix is singular at a critical value", fm.condition);
  ComplexVector rhs(static_cast<Eigen::Index>(basis.d()));
  for (std::size_t j = 0; j < basis.d(); ++j) rhs(static_cast<Eigen::Index>(j)) = phi(fm.fiber[j]);
  return fm.entries.fullPivLu().solve(rhs);
}

Representation cauchy_coefficients(const Contour& contour, const ComponentFunction& phi,
                                   const CauchyOptions& options) {
  const RationalFunction& r = contour.r();
  const std::size_t d = r.d();
  const std::size_t n = options.order;
  if (n > 200) throw InputError("series order is capped at 200");
  const double rho = contour.level();

  // Only the loops are restricted; rows outside the support stay nonzero in general,
  // since the residues of 1/r(λ)^k inside γ_J feed every δ_j.
  std::vector<std::size_t> loops;
  if (options.support) {
    std::set<std::size_t> comps;
    for (std::size_t j : *options.support) {
      if (j >= d) throw InputError("support index out of range");
      comps.insert(contour.component_of_root(j));
    }
    for (std::size_t li = 0; li < contour.loops().size(); ++li)
      if (comps.contains(contour.loops()[li].component)) loops.push_back(li);
  }

  struct Pass {
    ComplexMatrix alpha;
    std::vector<double> L;
    double phi_max = 0.0;
  };
  auto integrate = [&](std::size_t per_turn) {
    Quadrature q = contour_quadrature(contour, per_turn, loops);
    Pass out;
    out.alpha = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n + 1));
    out.L.assign(d, 0.0);
    const Complex two_pi_i{0.0, kTwoPi};
    for (std::size_t m = 0; m < q.nodes.size(); ++m) {
      const Complex lam = q.nodes[m];
      const Complex f = phi(contour.loops()[q.loop[m]].component, lam);
      out.phi_max = std::max(out.phi_max, std::abs(f));
      const Complex inv = 1.0 / r(lam);
      for (std::size_t j = 0; j < d; ++j) {
        out.L[j] += q.ds[m] / std::abs(lam - r.lambdas()[j]) / kTwoPi;
        Complex term = f * q.dz[m] / ((lam - r.lambdas()[j]) * two_pi_i);
        for (std::size_t k = 0; k <= n; ++k) {
          out.alpha(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) += term;
          term *= inv;
        }
      }
    }
    return out;
  };

  std::size_t per_turn = std::max<std::size_t>(options.nodes_per_turn, 8);
  Pass prev = integrate(per_turn);
  double change = std::numeric_limits<double>::infinity();
  while (true) {
    if (2 * per_turn > options.max_nodes_per_turn)
      throw ConvergenceError("contour quadrature did not converge under node doubling", change);
    per_turn *= 2;
    Pass next = integrate(per_turn);
    change = 0.0;
    for (Eigen::Index j = 0; j < next.alpha.rows(); ++j)
      for (Eigen::Index k = 0; k < next.alpha.cols(); ++k)
        change = std::max(change, std::abs(next.alpha(j, k) - prev.alpha(j, k)) * std::pow(rho, static_cast<double>(k)));
    change /= std::max(1.0, next.phi_max);
    prev = std::move(next);
    if (change <= 0.1 * options.tol) break;
  }

  Representation rep{r, rho, prev.alpha, 0.0, prev.L, prev.phi_max};
  for (double l : rep.L) rep.tail_bound = std::max(rep.tail_bound, l * rep.phi_max);
  return rep;
}

Representation cauchy_coefficients(const Contour& contour, const ScalarFunction& phi, const CauchyOptions& options) {
  return cauchy_coefficients(
      contour, ComponentFunction([&phi](std::size_t, Complex z) { return phi(z); }), options);
}

std::vector<std::vector<Complex>> bell_table(const std::vector<Complex>& r_series, std::size_t order) {
  series::Series rs(order + 1);
  for (std::size_t k = 1; k <= order && k < r_series.size(); ++k) rs[k] = r_series[k];
  std::vector<std::vector<Complex>> b(order + 1, std::vector<Complex>(order + 1));
  series::Series power(order + 1);
  power[0] = 1.0;
  for (std::size_t l = 0; l <= order; ++l) {
    for (std::size_t mu = 0; mu <= order; ++mu) b[mu][l] = factorial(mu) / factorial(l) * power[mu];
    power = series::mul(power, rs);
  }
  return b;
}

ComplexMatrix taylor_from_derivatives(const DeltaBasis& basis, const std::vector<std::vector<Complex>>& derivs,
                                      std::size_t max_order) {
  const std::size_t d = basis.d();
  if (derivs.size() != d) throw InputError("derivative data needs one row per root");
  const std::size_t n = derivs[0].size() - 1;
  for (const auto& row : derivs)
    if (row.size() != n + 1) throw InputError("derivative rows must have equal length");
  if (n > std::min(max_order, kMaxDerivativeOrder)) throw InputError("derivative order beyond the supported depth");

  const auto& lam = basis.parent().lambdas();
  std::vector<std::vector<std::vector<Complex>>> bell(d);
  // ddelta[j][k][m] = δ_k^(m)(λ_j)
  std::vector<std::vector<std::vector<Complex>>> ddelta(d, std::vector<std::vector<Complex>>(d));
  for (std::size_t j = 0; j < d; ++j) {
    auto rs = basis.parent().taylor(lam[j], n);
    rs[0] = 0.0;
    bell[j] = bell_table(rs, n);
    for (std::size_t k = 0; k < d; ++k) {
      auto ts = basis.taylor(k, lam[j], n);
      for (std::size_t m = 0; m <= n; ++m) ts[m] *= factorial(m);
      ts[0] = j == k ? 1.0 : 0.0;
      ddelta[j][k] = std::move(ts);
    }
  }

  std::vector<std::vector<Complex>> fder(d, std::vector<Complex>(n + 1));
  for (std::size_t nu = 0; nu <= n; ++nu) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex h{};
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t mu = 0; mu < nu; ++mu) {
          Complex chain{};
          for (std::size_t l = 0; l <= mu; ++l) chain += bell[j][mu][l] * fder[k][l];
          h += binomial(nu, mu) * ddelta[j][k][nu - mu] * chain;
        }
      for (std::size_t l = 0; l < nu; ++l) h += bell[j][nu][l] * fder[j][l];
      fder[j][nu] = (derivs[j][nu] - h) / std::pow(basis.rprime_at_lambda()[j], static_cast<double>(nu));
    }
  }
  ComplexMatrix out(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n + 1));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t nu = 0; nu <= n; ++nu)
      out(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(nu)) = fder[j][nu] / factorial(nu);
  return out;
}

Reconstruction reconstruct(const Representation& rep, Complex z, std::size_t k_trunc) {
  const Complex w = rep.r(z);
  if (!(std::abs(w) < rep.rho)) throw DomainError("|r(z)| is outside the disc of the representation");
  const DeltaBasis basis(rep.r);
  const auto delta = basis.all(z);
  const std::size_t k_max = std::min(k_trunc, rep.order());
  Reconstruction out{0.0, 0.0};
  double delta_abs = 0.0;
  for (std::size_t j = 0; j < rep.d(); ++j) {
    Complex s{};
    for (std::size_t k = k_max + 1; k-- > 0;) s = s * w + rep.alpha(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
    out.value += delta[j] * s;
    delta_abs += std::abs(delta[j]);
  }
  const double q = std::abs(w) / rep.rho;
  out.tail_estimate = delta_abs * rep.tail_bound * std::pow(q, static_cast<double>(k_max + 1)) / (1.0 - q);
  return out;
}

Reconstruction reconstruct(const Representation& rep, Complex z) { return reconstruct(rep, z, rep.order()); }

Complex eval_poly_representation(const PolyRepresentation& F, Complex z) {
  const std::size_t d = F.lambdas.size();
  const Complex w = F.p(z);
  Complex total{};
  for (std::size_t j = 0; j < d; ++j) {
    Complex l = 1.0;
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) l *= (z - F.lambdas[k]) / (F.lambdas[j] - F.lambdas[k]);
    Complex s{};
    for (Eigen::Index k = F.coeffs.cols(); k-- > 0;) s = s * w + F.coeffs(static_cast<Eigen::Index>(j), k);
    total += l * s;
  }
  return total;
}

Representation convert_poly_to_rational(const PolyRepresentation& F, const Polynomial& q, const ConvertOptions& options) {
  if (F.coeffs.rows() != static_cast<Eigen::Index>(F.lambdas.size()))
    throw InputError("coefficient rows do not match the roots");
  RationalFunction r(F.p, q, F.lambdas);
  const std::size_t d = r.d();
  const std::size_t n = options.order;
  Representation rep{r, 0.0, ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n + 1)), 0.0, {}, 0.0};

  if (*q.degree() == 0) {
    const Complex c = q.coeff(0);
    for (std::size_t j = 0; j < d; ++j) {
      Complex ck = 1.0;
      for (std::size_t k = 0; k <= n && k < static_cast<std::size_t>(F.coeffs.cols()); ++k) {
        rep.alpha(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
            F.coeffs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * ck;
        ck *= c;
      }
    }
    rep.rho = std::numeric_limits<double>::infinity();
    rep.tail_bound = rep.alpha.cwiseAbs().maxCoeff();
    return rep;
  }

  double radius = 1.0;
  if (options.radius) {
    radius = *options.radius;
  } else {
    double wc = std::numeric_limits<double>::infinity();
    for (const auto& c : critical_points(r)) wc = std::min(wc, std::abs(c.w));
    if (std::isfinite(wc) && wc > 0.0) radius = 0.5 * wc;
  }
  const std::size_t m = std::max(options.samples, 2 * (n + 1));
  const DeltaBasis basis(r);
  const ScalarFunction phi = [&F](Complex z) { return eval_poly_representation(F, z); };
  ComplexMatrix values(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(m));
  for (std::size_t s = 0; s < m; ++s) {
    Complex w = std::polar(radius, kTwoPi * static_cast<double>(s) / static_cast<double>(m));
    values.col(static_cast<Eigen::Index>(s)) = represent_pointwise(basis, phi, w);
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k <= n; ++k) {
      Complex acc{};
      for (std::size_t s = 0; s < m; ++s)
        acc += values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(s)) *
               std::polar(1.0, -kTwoPi * static_cast<double>(s * k % m) / static_cast<double>(m));
      rep.alpha(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          acc / static_cast<double>(m) / std::pow(radius, static_cast<double>(k));
    }
  rep.rho = radius;
  rep.tail_bound = values.cwiseAbs().maxCoeff();
  return rep;
}

double conversion_identity_residual(const PolyRepresentation& F, const Representation& f, std::span<const Complex> zs) {
  const std::size_t d = F.lambdas.size();
  MultiplicationTable tau = table_from_rational(RationalFunction(F.p, Polynomial::constant(1.0), F.lambdas));
  const Polynomial& q = f.r.q();
  ComplexVector qv(static_cast<Eigen::Index>(d));
  for (std::size_t j = 0; j < d; ++j) qv(static_cast<Eigen::Index>(j)) = q(F.lambdas[j]);
  double worst = 0.0;
  for (Complex z : zs) {
    const Complex wp = F.p(z);
    ComplexVector fv(static_cast<Eigen::Index>(d));
    for (std::size_t j = 0; j < d; ++j) {
      Complex s{};
      for (Eigen::Index k = F.coeffs.cols(); k-- > 0;) s = s * wp + F.coeffs(static_cast<Eigen::Index>(j), k);
      fv(static_cast<Eigen::Index>(j)) = s;
    }
    ComplexVector prod = polyproduct_at(tau, wp, fv, qv);
    const Complex wr = f.r(z);
    if (!(std::abs(wr) < f.rho)) throw DomainError("sample point outside the representation disc");
    Complex lhs{}, rhs{};
    for (std::size_t j = 0; j < d; ++j) {
      Complex l = 1.0;
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) l *= (z - F.lambdas[k]) / (F.lambdas[j] - F.lambdas[k]);
      Complex s{};
      for (Eigen::Index k = f.alpha.cols(); k-- > 0;) s = s * wr + f.alpha(static_cast<Eigen::Index>(j), k);
      lhs += l * prod(static_cast<Eigen::Index>(j));
      rhs += l * qv(static_cast<Eigen::Index>(j)) * s;
    }
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace ratvar
