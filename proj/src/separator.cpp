// Separator construction: discrete rational fit and the two-segment family search.
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ratvar/lemniscape.hpp"

namespace ratvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Complex> trimmed(std::vector<Complex> c) {
  double mx = 0.0;
  for (Complex a : c) mx = std::max(mx, std::abs(a));
  while (!c.empty() && std::abs(c.back()) <= 1e-12 * mx) c.pop_back();
  return c;
}

Complex horner(const std::vector<Complex>& c, Complex u) {
  Complex v{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * u + *it;
  return v;
}

double abs_r(const RationalFunction& r, Complex z) {
  if (r.is_pole(z)) return kInf;
  return std::abs(r.p()(z) / r.q()(z));
}

}  // namespace

FitResult fit_separator(std::span<const Complex> inside, std::span<const Complex> outside, std::size_t dp,
                        std::size_t dq, std::size_t iterations) {
  if (inside.empty() || outside.empty()) throw InputError("fit_separator needs nonempty sample sets");
  if (dp < 1 || dq >= dp) throw InputError("fit_separator needs 1 <= dp and dq < dp");
  Complex c{};
  for (Complex z : inside) c += z;
  for (Complex z : outside) c += z;
  c /= static_cast<double>(inside.size() + outside.size());
  double s = 0.0;
  for (Complex z : inside) s = std::max(s, std::abs(z - c));
  for (Complex z : outside) s = std::max(s, std::abs(z - c));
  if (s == 0.0) throw InputError("degenerate sample sets");
  for (Complex a : inside)
    for (Complex b : outside)
      if (std::abs(a - b) <= 1e-12 * s) throw InputError("inside and outside samples intersect");

  const std::size_t ni = inside.size(), no = outside.size();
  std::vector<Complex> u(ni + no);
  for (std::size_t k = 0; k < ni; ++k) u[k] = (inside[k] - c) / s;
  for (std::size_t k = 0; k < no; ++k) u[ni + k] = (outside[k] - c) / s;
  const double w_in = 1.0 / std::sqrt(static_cast<double>(ni));
  const double w_out = 1.0 / std::sqrt(static_cast<double>(no));

  const auto cols = static_cast<Eigen::Index>(dp + dq + 2);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(ni + no), cols);
  std::vector<Complex> target(ni + no, 0.0), qprev(ni + no, 1.0);
  for (std::size_t k = ni; k < ni + no; ++k) target[k] = 2.0;

  std::vector<Complex> best_p, best_q;
  double best_ratio = kInf;
  for (std::size_t it = 0; it < std::max<std::size_t>(iterations, 1); ++it) {
    for (std::size_t k = 0; k < ni + no; ++k) {
      const double wt = (k < ni ? w_in : w_out) / std::max(std::abs(qprev[k]), 1e-300);
      Complex pw = 1.0;
      for (std::size_t e = 0; e <= std::max(dp, dq); ++e) {
        if (e <= dp) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(e)) = wt * pw;
        if (e <= dq) m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(dp + 1 + e)) = -wt * target[k] * pw;
        pw *= u[k];
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinV);
    Eigen::VectorXcd x = svd.matrixV().col(cols - 1);
    std::vector<Complex> pc(dp + 1), qc(dq + 1);
    for (std::size_t e = 0; e <= dp; ++e) pc[e] = x(static_cast<Eigen::Index>(e));
    for (std::size_t e = 0; e <= dq; ++e) qc[e] = x(static_cast<Eigen::Index>(dp + 1 + e));
    double mi = 0.0, mo = kInf;
    bool finite = true;
    for (std::size_t k = 0; k < ni + no; ++k) {
      Complex pv = horner(pc, u[k]);
      qprev[k] = horner(qc, u[k]);
      if (qprev[k] == Complex{}) {
        finite = false;
        qprev[k] = 1e-300;
      }
      Complex rv = pv / qprev[k];
      if (k < ni)
        mi = std::max(mi, std::abs(rv));
      else {
        mo = std::min(mo, std::abs(rv));
        target[k] = rv == Complex{} ? Complex{2.0} : 2.0 * rv / std::abs(rv);
      }
    }
    if (finite && mo > 0.0 && mi / mo < best_ratio) {
      best_ratio = mi / mo;
      best_p = pc;
      best_q = qc;
    }
  }
  if (!(best_ratio < 1.0)) throw SeparationError("rational fit does not separate the samples");

  auto pc = trimmed(best_p), qc = trimmed(best_q);
  if (qc.empty() || pc.size() <= qc.size()) throw SeparationError("fitted rational function is not proper");
  Polynomial p = compose_affine(Polynomial(pc), 1.0 / s, -c / s), q = compose_affine(Polynomial(qc), 1.0 / s, -c / s);
  std::optional<RationalFunction> r;
  try {
    r.emplace(p, q);
  } catch (const Error& e) {
    throw SeparationError(std::string("fitted rational function is degenerate: ") + e.what());
  }
  double mi = 0.0, mo = kInf;
  for (Complex z : inside) mi = std::max(mi, abs_r(*r, z));
  for (Complex z : outside) mo = std::min(mo, abs_r(*r, z));
  if (!(mo > mi)) throw SeparationError("fitted rational function does not separate the samples");
  const bool strong = mo > 3.0 * mi;
  const double kappa = strong ? std::sqrt(3.0 / (4.0 * mi * mo)) : 1.0 / std::sqrt(mi * mo);
  RationalFunction scaled(p * kappa, q, r->lambdas());
  FitResult out{scaled, verify_separation(scaled, inside, outside, 1.0), strong};
  if (!out.report.pass) throw SeparationError("fitted rational function fails verification");
  return out;
}

RationalFunction two_segment_family(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InputError("two-segment family needs a, b > 0");
  Polynomial p({(a * a + 1.0) * (a * a + 1.0), 0.0, 2.0 * (1.0 - a * a), 0.0, 1.0});
  Polynomial q({0.0, b * b, 0.0, 1.0});
  return RationalFunction(p, q);
}

double axis_minimum(const RationalFunction& r, double y_max) {
  const int n = 4000;
  double best = kInf, best_y = 0.0;
  for (int k = 1; k <= n; ++k) {
    double y = y_max * k / n;
    double v = abs_r(r, {0.0, y});
    if (v < best) {
      best = v;
      best_y = y;
    }
  }
  double lo = std::max(best_y - y_max / n, 1e-12), hi = std::min(best_y + y_max / n, y_max);
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 100; ++it) {
    double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (abs_r(r, {0.0, m1}) < abs_r(r, {0.0, m2}))
      hi = m2;
    else
      lo = m1;
  }
  return std::min(best, abs_r(r, {0.0, 0.5 * (lo + hi)}));
}

double supremum_level(const RationalFunction& r, Complex reference, double spacing) {
  if (!(reference.real() > 0.0)) throw InputError("reference point must lie in the right half plane");
  double hi = 1.5 * axis_minimum(r, 1e3);
  if (!std::isfinite(hi) || hi <= 0.0) hi = 1.0;
  const double half = std::abs(enclosing_window(r, hi, 1.05).hi.real());
  const auto nx = static_cast<std::size_t>(std::ceil(half / spacing)) + 2;
  const auto ny = 2 * static_cast<std::size_t>(std::ceil(half / spacing)) + 1;
  const double ymax = spacing * static_cast<double>((ny - 1) / 2);
  Window w{{-spacing, -ymax}, {-spacing + spacing * static_cast<double>(nx - 1), ymax}};
  const GridField field = level_grid(r, w, nx, ny);
  const auto [ri, rj] = field.nearest(reference);
  auto passes = [&](double level) {
    SublevelComponents comps = sublevel_components(field, level);
    int c = comps.label(ri, rj);
    if (c < 0) return false;
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < 2; ++i)
        if (comps.label(i, j) == c) return false;
    return true;
  };
  double lo = field.at(ri, rj) * (1.0 + 1e-9) + 1e-300;
  if (!passes(lo)) return 0.0;
  while (passes(hi)) hi *= 1.5;
  for (int it = 0; it < 30; ++it) {
    double mid = 0.5 * (lo + hi);
    (passes(mid) ? lo : hi) = mid;
  }
  return lo;
}

namespace {

// Largest y with |r(x + it)| < level on 0 <= t <= y (sign = +1) or -y <= t <= 0 (sign = -1).
double vertical_reach(const RationalFunction& r, double x, double level, double sign, double y_cap) {
  const double dt = y_cap / 2000.0;
  double t = 0.0;
  while (t < y_cap) {
    double next = t + dt;
    if (!(abs_r(r, {x, sign * next}) < level)) {
      double lo = t, hi = next;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (abs_r(r, {x, sign * mid}) < level ? lo : hi) = mid;
      }
      return lo;
    }
    t = next;
  }
  return y_cap;
}

double segment_height(const RationalFunction& r, double x, double level, double y_cap) {
  if (!(abs_r(r, {x, 0.0}) < level)) return 0.0;
  return std::min(vertical_reach(r, x, level, 1.0, y_cap), vertical_reach(r, x, level, -1.0, y_cap));
}

}  // namespace

std::optional<SegmentFit> best_segment(const RationalFunction& r, double level, double x_max) {
  if (!(x_max > 0.0) || !(level > 0.0)) throw InputError("best_segment needs positive level and x range");
  const double y_cap = 2.0 * std::abs(enclosing_window(r, level, 1.0).hi.real());
  const int n = 200;
  auto ratio = [&](double x) { return segment_height(r, x, level, y_cap) / x; };
  int best_k = 0;
  double best = 0.0;
  for (int k = 1; k <= n; ++k) {
    double v = ratio(x_max * k / n);
    if (v > best) {
      best = v;
      best_k = k;
    }
  }
  if (best_k == 0) return std::nullopt;
  double lo = x_max * (best_k - 1) / n + 1e-12, hi = x_max * std::min(best_k + 1, n) / n;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 60; ++it) {
    double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (ratio(m1) > ratio(m2))
      hi = m2;
    else
      lo = m1;
  }
  double x = 0.5 * (lo + hi);
  if (ratio(x) < best) x = x_max * best_k / n;
  SegmentFit fit;
  fit.x = x;
  fit.y = segment_height(r, x, level, y_cap);
  fit.angle_deg = std::atan2(fit.y, fit.x) * 180.0 / std::numbers::pi;
  return fit;
}

TwoSegmentResult two_segment_search(const TwoSegmentOptions& o) {
  if (!(o.a_min > 0.0) || !(o.b_min > 0.0) || o.a_max < o.a_min || o.b_max < o.b_min || !(o.step > 0.0))
    throw InputError("two-segment ranges must be positive and ordered");
  const int na = static_cast<int>(std::floor((o.a_max - o.a_min) / o.step + 1e-9)) + 1;
  const int nb = static_cast<int>(std::floor((o.b_max - o.b_min) / o.step + 1e-9)) + 1;
  TwoSegmentResult out;
  for (int ia = 0; ia < na; ++ia) {
    for (int ib = 0; ib < nb; ++ib) {
      const double a = o.a_min + o.step * ia, b = o.b_min + o.step * ib;
      RationalFunction r = two_segment_family(a, b);
      double level;
      if (o.level) {
        level = *o.level;
        if (supremum_level(r, {a, 1.0}, o.spacing) < level) continue;
      } else {
        level = supremum_level(r, {a, 1.0}, o.spacing);
      }
      if (!(level > 0.0)) continue;
      auto seg = best_segment(r, level, a);
      if (!seg) continue;
      TwoSegmentCandidate cand{a, b, level, *seg};
      out.sweep.push_back(cand);
      if (!out.best || cand.segment.angle_deg > out.best->segment.angle_deg) out.best = cand;
    }
  }
  out.target_met = out.best && (!o.angle_deg || out.best->segment.angle_deg >= *o.angle_deg);
  return out;
}

}  // namespace ratvar
