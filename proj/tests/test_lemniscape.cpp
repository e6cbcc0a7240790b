#include "helpers.hpp"

#include <numbers>

using namespace ratvar;
using test::Complex;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> circle(Complex c, double radius, std::size_t n) {
  std::vector<Complex> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back(c + std::polar(radius, 2.0 * kPi * double(k) / double(n)));
  return pts;
}

double max_level_residual(const Contour& c) {
  double worst = 0.0;
  for (const auto& loop : c.loops())
    for (Complex z : loop.vertices) worst = std::max(worst, std::abs(std::abs(c.r()(z)) - c.level()));
  return worst;
}

const RationalFunction kIdentity(Polynomial({0.0, 1.0}), Polynomial::constant(1.0));

}  // namespace

TEST_SUITE("lemniscape") {
  TEST_CASE("grid values") {
    const auto r = test::half_joukowski();
    const auto g = level_grid(r, Window::square(3.0), 61, 61);
    const auto [i1, j1] = g.nearest(1.0);
    CHECK(std::abs(g.point(i1, j1) - 1.0) < 1e-12);
    CHECK(g.at(i1, j1) < 1e-12);
    const auto [i2, j2] = g.nearest(2.0);
    CHECK(std::abs(g.at(i2, j2) - 0.75) < 1e-12);
    const auto [i0, j0] = g.nearest(0.0);
    CHECK(std::isinf(g.at(i0, j0)));
    for (std::size_t j = 0; j < g.ny(); j += 7)
      for (std::size_t i = 0; i < g.nx(); i += 5)
        if (!std::isinf(g.at(i, j))) CHECK(std::abs(g.at(i, j) - std::abs(r(g.point(i, j)))) <= 1e-12);
  }

  TEST_CASE("sublevel components") {
    const auto r = test::half_joukowski();
    const auto comps = sublevel_components(level_grid(r, Window::square(3.0), 301, 301), 1.0);
    CHECK(comps.count() == 2);
    CHECK(comps.component_of(1.0) != comps.component_of(-1.0));
    CHECK(comps.component_of(1.0) >= 0);

    const RationalFunction poly(Polynomial({-1.0, 0.0, 1.0}), Polynomial::constant(1.0));
    CHECK(sublevel_components(level_grid(poly, Window::square(2.0), 101, 101), 10.0).count() == 1);

    const auto ex = two_segment_family(std::sqrt(2.0), std::sqrt(3.0));
    const auto grid = level_grid(ex, Window::square(4.0), 401, 401);
    const auto c56 = sublevel_components(grid, 5.6);
    CHECK(c56.count() == 2);
    for (std::size_t j = 0; j < grid.ny(); ++j) CHECK(c56.label(grid.nx() / 2, j) < 0);
  }

  TEST_CASE("tracing") {
    const auto r = test::half_joukowski();
    const auto c = test::trace(r, 0.5);
    CHECK(c.loops().size() == 2);
    CHECK(c.component_count() == 2);
    CHECK(max_level_residual(c) < 1e-10);
    for (const auto& loop : c.loops()) {
      CHECK(loop.vertices.front() == loop.vertices.back());
      CHECK(loop.turns == 1);
    }
    CHECK(c.component_of_root(0) != c.component_of_root(1));
    CHECK_THROWS_AS(test::trace(r, 1.0), ClearanceError);
    CHECK_THROWS_AS(trace_level_curve(r, 0.5, Window::square(1.2)), WindowError);

    const auto unit = test::trace(kIdentity, 1.0);
    REQUIRE(unit.loops().size() == 1);
    double len = 0.0;
    const auto& v = unit.loops()[0].vertices;
    for (std::size_t k = 1; k < v.size(); ++k) len += std::abs(v[k] - v[k - 1]);
    CHECK(std::abs(len - 2.0 * kPi) < 0.01 * 2.0 * kPi);
  }

  TEST_CASE("quadrature on the unit circle") {
    const auto unit = test::trace(kIdentity, 1.0);
    const auto q = contour_quadrature(unit, 64);
    Complex residue{}, closed{};
    double L = 0.0;
    for (std::size_t m = 0; m < q.nodes.size(); ++m) {
      residue += q.dz[m] / q.nodes[m];
      closed += q.dz[m];
      L += q.ds[m] / std::abs(q.nodes[m]);
    }
    CHECK(std::abs(residue / Complex{0.0, 2.0 * kPi} - 1.0) < 1e-8);
    CHECK(std::abs(closed) < 1e-10);
    CHECK(std::abs(L / (2.0 * kPi) - 1.0) < 1e-8);
  }

  TEST_CASE("verify_separation") {
    const double a = std::sqrt(2.0), b = std::sqrt(3.0), x0 = 0.6853;
    const auto r = two_segment_family(a, b);
    std::vector<Complex> inside, outside;
    const double y0 = x0 * std::tan(80.0 * kPi / 180.0);
    for (int k = 0; k < 100; ++k) {
      const double y = -y0 + 2.0 * y0 * k / 99.0;
      inside.push_back({x0, y});
      inside.push_back({-x0, y});
    }
    for (int k = 0; k <= 80; ++k)
      if (k != 40) outside.push_back({0.0, -4.0 + 0.1 * k});
    auto rep = verify_separation(r, inside, outside, 5.6);
    CHECK(rep.pass);
    CHECK(rep.max_inside < 5.6);
    CHECK(rep.min_outside > 5.6);

    std::vector<Complex> with_pole = inside;
    with_pole.push_back(0.0);
    CHECK_FALSE(verify_separation(r, with_pole, outside, 5.6).pass);
  }

  TEST_CASE("proper_scale") {
    const RationalFunction r0(Polynomial({-1.0, 0.0, 1.0}), Polynomial({0.0, 2.0}));
    const double R = 100.0 * 3.0;
    const auto r = proper_scale(r0, R, 2);
    CHECK(*r.p().degree() == 4u);
    std::mt19937 rng(31);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Complex z = oracle::random_in_disk(rng, 0.0, 3.0);
      if (std::abs(z) < 0.05) continue;
      worst = std::max(worst, std::abs(r(z) - r0(z)) / std::max(std::abs(r0(z)), 1e-3));
    }
    CHECK(worst < 0.05);

    const auto inside = circle(1.0, 0.3, 64), outside = circle(-1.0, 0.3, 64);
    CHECK(verify_separation(r0, inside, outside, 1.0).pass == verify_separation(r, inside, outside, 1.0).pass);
    CHECK_THROWS_AS(RationalFunction(Polynomial({0.0, 1.0}), Polynomial({1.0, 1.0})), InputError);
    CHECK(*proper_scale(Polynomial({0.0, 1.0}), Polynomial({1.0, 1.0}), 50.0, 1).p().degree() == 2u);
  }

  TEST_CASE("fit_separator affine") {
    auto inside = circle(1.0, 0.4, 48), outside = circle(-1.0, 0.4, 48);
    inside.push_back(1.0);
    outside.push_back(-1.0);
    const auto fit = fit_separator(inside, outside, 1, 0);
    CHECK(fit.report.pass);
    CHECK(fit.report.max_inside < fit.report.level);
    CHECK(fit.report.min_outside > fit.report.level);
    CHECK(fit.r.d() == 1);
  }

  TEST_CASE("fit_separator two circles") {
    std::vector<Complex> inside, outside;
    for (double c : {-1.5, 1.5}) {
      for (Complex z : circle(c, 0.5, 64)) inside.push_back(z);
      for (Complex z : circle(c, 0.1, 32)) outside.push_back(z);
      for (Complex z : circle(c, 1.0, 96)) outside.push_back(z);
    }
    const auto fit = fit_separator(inside, outside, 16, 9);
    CHECK(fit.report.pass);
    CHECK(*fit.r.p().degree() <= 16u);
  }

  TEST_CASE("fit_separator rejects overlapping samples") {
    const auto inside = circle(0.0, 1.0, 16);
    std::vector<Complex> outside = circle(3.0, 1.0, 16);
    outside.push_back(inside[3]);
    CHECK_THROWS_AS(fit_separator(inside, outside, 2, 1), InputError);
  }

  TEST_CASE("two-segment family") {
    const auto r = two_segment_family(1.4, 1.5);
    for (Complex z : {Complex{1.4, 1.0}, Complex{-1.4, 1.0}, Complex{1.4, -1.0}, Complex{-1.4, -1.0}})
      CHECK(std::abs(r(z)) < 1e-12);
    CHECK(r.is_pole(0.0));
    const auto seg = best_segment(r, 5.1, 3.0);
    REQUIRE(seg.has_value());
    CHECK(std::abs(seg->x - 0.69) < 0.05);
    CHECK(std::abs(seg->y - 3.66) < 0.25);
    CHECK(std::abs(seg->y / seg->x - 5.3) < 0.1 * 5.3);
  }
}

TEST_SUITE("lemniscape properties") {
  TEST_CASE("traced contours satisfy residual and orientation") {
    std::mt19937 rng(41);
    int traced = 0;
    for (int t = 0; t < 12; ++t) {
      const auto r = test::random_rational(rng, 2 + static_cast<std::size_t>(t % 4));
      const double rho = 0.6 * test::min_critical_modulus(r);
      if (rho < 1e-3) continue;
      Contour c = [&] {
        try {
          return test::trace(r, rho, 301);
        } catch (const WindowError&) {
          return Contour(r, rho, {}, 0);
        }
      }();
      if (c.loops().empty()) continue;
      ++traced;
      CHECK(max_level_residual(c) <= 1e-10 * std::max(1.0, rho));
      for (const auto& loop : c.loops()) {
        CHECK(loop.turns >= 1);
        // interior on the left: the root enclosed by the loop has positive winding
        int winding = 0;
        for (Complex lam : r.lambdas()) winding += winding_number(loop.vertices, lam);
        CHECK(winding == loop.turns);
      }
      CHECK(c.component_count() <= r.d());
    }
    CHECK(traced >= 6);
  }

  TEST_CASE("component count is bounded by deg p") {
    std::mt19937 rng(42);
    for (int t = 0; t < 10; ++t) {
      const auto r = test::random_rational(rng, 2 + static_cast<std::size_t>(t % 5));
      const auto g = level_grid(r, Window::square(4.0), 201, 201);
      for (double level : {0.1, 0.5, 1.0, 3.0}) CHECK(sublevel_components(g, level).count() <= r.d());
    }
  }

  TEST_CASE("verify_separation is monotone in the level") {
    const RationalFunction r(Polynomial({-1.0, 1.0}), Polynomial::constant(1.0));
    const auto inside = circle(1.0, 0.3, 64), outside = circle(-1.0, 0.2, 64);
    const auto base = verify_separation(r, inside, outside, 1.0);
    REQUIRE(base.pass);
    for (int k = 1; k < 20; ++k) {
      const double level = base.max_inside + (base.min_outside - base.max_inside) * k / 20.0;
      CHECK(verify_separation(r, inside, outside, level, 0.0).pass);
    }
  }

  TEST_CASE("quadrature converges under node doubling") {
    const auto r = test::degree_four();
    const double rho = 0.5 * test::min_critical_modulus(r);
    const auto c = test::trace(r, rho);
    const auto integral = [&](std::size_t n) {
      const auto q = contour_quadrature(c, n);
      Complex s{};
      for (std::size_t m = 0; m < q.nodes.size(); ++m) s += std::exp(q.nodes[m]) * q.dz[m];
      return s;
    };
    CHECK(std::abs(integral(128) - integral(64)) < 1e-8);
  }
}
