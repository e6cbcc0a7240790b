#pragma once

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratvar/lemniscape.hpp"

namespace test {

using ratvar::Complex;
using ratvar::Polynomial;
using ratvar::RationalFunction;

// (z − 1/z)/2 with λ₁ = 1, λ₂ = −1.
inline RationalFunction half_joukowski() {
  return RationalFunction(Polynomial({-1.0, 0.0, 1.0}), Polynomial({0.0, 2.0}), {1.0, -1.0});
}

// (z⁴ − 2z² + 9)/(z³ + 3z).
inline RationalFunction degree_four() {
  return RationalFunction(Polynomial({9.0, 0.0, -2.0, 0.0, 1.0}), Polynomial({0.0, 3.0, 0.0, 1.0}));
}

inline RationalFunction random_rational(std::mt19937& rng, std::size_t d) {
  std::vector<Complex> roots, poles;
  while (roots.size() < d) {
    Complex z = oracle::random_in_disk(rng, 0.0, 2.0);
    bool ok = true;
    for (Complex o : roots) ok = ok && std::abs(z - o) > 0.3;
    if (ok) roots.push_back(z);
  }
  const std::size_t dq = std::uniform_int_distribution<std::size_t>(0, d - 1)(rng);
  while (poles.size() < dq) {
    Complex z = oracle::random_in_disk(rng, 0.0, 2.5);
    bool ok = true;
    for (Complex o : roots) ok = ok && std::abs(z - o) > 0.3;
    if (ok) poles.push_back(z);
  }
  return RationalFunction(Polynomial::from_roots(roots), Polynomial::from_roots(poles, oracle::random_in_disk(rng, 0.5, 0.4)));
}

inline ratvar::Contour trace(const RationalFunction& r, double rho, std::size_t res = 401) {
  ratvar::TraceOptions opt;
  opt.nx = opt.ny = res;
  return ratvar::trace_level_curve(r, rho, ratvar::enclosing_window(r, rho), 1e-12, opt);
}

inline double min_critical_modulus(const RationalFunction& r) {
  double m = 1e300;
  for (const auto& c : ratvar::critical_points(r)) m = std::min(m, std::abs(c.w));
  return m;
}

}  // namespace test
