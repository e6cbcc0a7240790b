#include "ratvar/cpoly.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ratvar {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(Complex c) { return Polynomial(std::vector<Complex>{c}); }

Polynomial Polynomial::monomial(std::size_t k, Complex c) {
  std::vector<Complex> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};
  for (Complex r : roots) {
    c.push_back(0.0);
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Complex Polynomial::leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

double Polynomial::scale() const {
  double s = 0.0;
  for (Complex c : coeffs_) s = std::max(s, std::abs(c));
  return s;
}

Complex Polynomial::operator()(Complex z) const {
  Complex v{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * z + *it;
  return v;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(Complex c) {
  for (Complex& a : coeffs_) a *= c;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Complex poly_eval(const Polynomial& poly, Complex z) { return poly(z); }

Polynomial poly_derivative(const Polynomial& poly) {
  const auto& c = poly.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Complex> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = c[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

Polynomial deflate(const Polynomial& poly, Complex a) {
  const auto& c = poly.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Complex> b(c.size() - 1);
  b.back() = c.back();
  for (std::size_t k = c.size() - 2; k > 0; --k) b[k - 1] = c[k] + a * b[k];
  return Polynomial(std::move(b));
}

std::vector<Complex> taylor_shift(const Polynomial& poly, Complex a, std::size_t order) {
  std::vector<Complex> out(order + 1);
  Polynomial cur = poly;
  for (std::size_t k = 0; k <= order && !cur.is_zero(); ++k) {
    out[k] = cur(a);
    cur = deflate(cur, a);
  }
  return out;
}

Polynomial compose_affine(const Polynomial& p, Complex a, Complex b) {
  const Polynomial u({b, a});
  Polynomial out;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) out = out * u + Polynomial::constant(*it);
  return out;
}

void sort_points(std::vector<Complex>& pts) {
  auto key = [](Complex z) {
    return std::pair{std::llround(z.real() * 1e10), std::llround(z.imag() * 1e10)};
  };
  std::stable_sort(pts.begin(), pts.end(), [&](Complex a, Complex b) { return key(a) < key(b); });
}

void check_distinct(std::span<const Complex> nodes) {
  double mx = 0.0;
  for (Complex z : nodes) mx = std::max(mx, std::abs(z));
  const double tol = 1e-8 * (mx + 1.0);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      double d = std::abs(nodes[i] - nodes[j]);
      if (d <= tol) throw CollisionError(i, j, d);
    }
}

std::vector<Polynomial> lagrange_basis(std::span<const Complex> nodes) {
  check_distinct(nodes);
  Polynomial full = Polynomial::from_roots(nodes);
  std::vector<Polynomial> out;
  out.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Complex denom = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != k) denom *= nodes[k] - nodes[j];
    out.push_back(deflate(full, nodes[k]) * (1.0 / denom));
  }
  return out;
}

namespace {

double residual_bound(const Polynomial& p, Complex z, double tol) {
  const double n = static_cast<double>(*p.degree());
  return tol * p.scale() * std::pow(std::max(1.0, std::abs(z)), n);
}

void eval_with_derivative(const std::vector<Complex>& c, Complex z, Complex& v, Complex& d) {
  v = c.back();
  d = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    d = d * z + v;
    v = v * z + c[k];
  }
}

std::vector<Complex> aberth(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  const double radius = std::pow(std::abs(c[0] / c[n]), 1.0 / static_cast<double>(n));
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z[k] = std::polar(radius, t);
  }
  std::vector<bool> done(n, false);
  for (int it = 0; it < 500; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Complex v, d;
      eval_with_derivative(c, z[k], v, d);
      if (v == Complex{}) {
        done[k] = true;
        continue;
      }
      Complex s{};
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      Complex ratio = v / d;
      Complex denom = 1.0 - ratio * s;
      Complex corr = (std::isfinite(std::abs(ratio)) && denom != Complex{}) ? ratio / denom : Complex{1e-3, 1e-3};
      z[k] -= corr;
      if (std::abs(corr) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(z[k])))
        done[k] = true;
      else
        all = false;
    }
    if (all) break;
  }
  return z;
}

std::vector<Complex> companion_roots(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 1; k < n; ++k) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k - 1)) = 1.0;
  for (std::size_t k = 0; k < n; ++k) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(n - 1)) = -c[k] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = es.eigenvalues()(static_cast<Eigen::Index>(k));
  return out;
}

void newton_polish(const std::vector<Complex>& c, std::vector<Complex>& z) {
  for (Complex& x : z) {
    for (int it = 0; it < 3; ++it) {
      Complex v, d;
      eval_with_derivative(c, x, v, d);
      if (d == Complex{}) break;
      Complex y = x - v / d;
      Complex vy, dy;
      eval_with_derivative(c, y, vy, dy);
      if (!(std::abs(vy) < std::abs(v))) break;
      x = y;
    }
  }
}

}  // namespace

std::vector<Complex> poly_roots(const Polynomial& poly, double tol) {
  auto deg = poly.degree();
  if (!deg || *deg < 1) throw InputError("poly_roots requires degree >= 1");
  const auto& all = poly.coeffs();
  std::size_t zeros = 0;
  while (all[zeros] == Complex{}) ++zeros;
  std::vector<Complex> c(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end());
  std::vector<Complex> roots(zeros, Complex{});
  if (c.size() == 2) {
    roots.push_back(-c[0] / c[1]);
  } else if (c.size() > 2) {
    auto ok = [&](const std::vector<Complex>& z) {
      for (Complex x : z)
        if (!(std::abs(poly(x)) <= residual_bound(poly, x, tol))) return false;
      return true;
    };
    std::vector<Complex> z = aberth(c);
    newton_polish(c, z);
    if (!ok(z)) {
      z = companion_roots(c);
      newton_polish(c, z);
      if (!ok(z)) {
        std::vector<double> res;
        for (Complex x : z) res.push_back(std::abs(poly(x)));
        throw RootFindingError("root finder did not reach the residual tolerance", std::move(res));
      }
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }
  sort_points(roots);
  return roots;
}

}  // namespace ratvar
