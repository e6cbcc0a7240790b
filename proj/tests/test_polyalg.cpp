#include "helpers.hpp"

#include "ratvar/polyalg.hpp"

using namespace ratvar;
using test::Complex;

namespace {

SampleSet disk_samples(std::mt19937& rng, std::size_t n, double radius) {
  std::vector<Complex> pts;
  for (std::size_t k = 0; k < n; ++k) pts.push_back(oracle::random_in_disk(rng, 0.0, radius));
  return make_samples(std::move(pts));
}

AlgebraElement random_element(std::mt19937& rng, std::size_t d, const SampleSet& s) {
  return AlgebraElement(s, oracle::random_matrix(rng, static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(s->size())));
}

double diff(const AlgebraElement& a, const AlgebraElement& b) {
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("polyalg") {
  TEST_CASE("multiplication tables") {
    const auto t = table_from_rational(test::half_joukowski());
    CHECK(std::abs(t.sigma(0, 1) - 0.5) < 1e-15);
    CHECK(std::abs(t.sigma(1, 0) + 0.5) < 1e-15);
    CHECK(t.generated_by.has_value());

    const RationalFunction p(Polynomial({-1.0, 0.0, 1.0}), Polynomial::constant(1.0), {1.0, -1.0});
    const auto tau = table_from_rational(p);
    CHECK(std::abs(tau.sigma(0, 1) + 0.25) < 1e-15);
    CHECK(std::abs(tau.sigma(1, 0) + 0.25) < 1e-15);
    const auto& lam = p.lambdas();
    const Polynomial q({0.0, 2.0});
    for (Eigen::Index i = 0; i < 2; ++i)
      for (Eigen::Index j = 0; j < 2; ++j)
        if (i != j) CHECK(std::abs(t.sigma(i, j) - q(lam[static_cast<std::size_t>(j)]) * tau.sigma(i, j)) < 1e-15);
  }

  TEST_CASE("products") {
    const auto table = table_from_rational(test::half_joukowski());
    std::mt19937 rng(71);
    const auto s = disk_samples(rng, 20, 0.8);
    const auto one = AlgebraElement::unit(2, s);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto e = AlgebraElement::basis(i, 2, s);
      CHECK(diff(polyproduct(one, e, table), e) == 0.0);
    }

    const auto zero = make_samples({0.0});
    const auto e0 = AlgebraElement::basis(0, 2, zero), e1 = AlgebraElement::basis(1, 2, zero);
    CHECK(polyproduct(e0, e1, table).values().norm() == 0.0);
    CHECK(diff(polyproduct(e0, e0, table), e0) == 0.0);
    CHECK(std::abs(operator_norm(e0, table) - 1.0) < 1e-15);
    CHECK(std::abs(operator_norm(e1, table) - 1.0) < 1e-15);

    const DeltaBasis b(test::half_joukowski());
    const auto z = element_from_function(b, [](Complex x) { return x; }, s);
    const auto zz = polyproduct(z, z, table);
    for (std::size_t m = 0; m < s->size(); ++m) {
      const Complex w = (*s)[m];
      CHECK(std::abs(zz.at(m)(0) - (1.0 + 2.0 * w + 4.0 * w * w)) < 1e-12);
      CHECK(std::abs(zz.at(m)(1) - (1.0 - 2.0 * w + 4.0 * w * w)) < 1e-12);
    }
  }

  TEST_CASE("norms") {
    const auto table = table_from_rational(test::half_joukowski());
    std::mt19937 rng(72);
    const auto s = disk_samples(rng, 30, 0.8);
    CHECK(std::abs(operator_norm(AlgebraElement::unit(2, s), table) - 1.0) < 1e-15);
    const ScalarFunction alpha = [](Complex w) { return 2.0 + w * w; };
    double expect = 0.0;
    for (Complex w : *s) expect = std::max(expect, std::abs(alpha(w)));
    CHECK(std::abs(operator_norm(AlgebraElement::scalar(2, s, alpha), table) - expect) < 1e-12);
    CHECK(empirical_norm_constant(table, s) >= 1.0);
  }

  TEST_CASE("characters") {
    const DeltaBasis b(test::half_joukowski());
    const auto table = table_from_rational(b.parent());
    const auto at0 = characters(b, table, 0.0);
    REQUIRE(at0.size() == 2);
    for (std::size_t j = 0; j < 2; ++j)
      CHECK((at0[j] - ComplexVector::Unit(2, static_cast<Eigen::Index>(j))).norm() < 1e-14);
    for (Complex w : {Complex{0.3}, Complex{-0.4, 0.7}, Complex{2.0, 1.0}}) {
      for (const auto& eta : characters(b, table, w)) {
        CHECK(std::abs(eta.sum() - 1.0) < 1e-12);
        CHECK(multiplicativity_defect(eta, table, w) < 1e-10);
        CHECK(character_equation_residual(eta, table, w) < 1e-10);
      }
    }
    CHECK_THROWS(characters(b, table, Complex{0.0, 1.0}));
  }

  TEST_CASE("gelfand transform") {
    const DeltaBasis b(test::half_joukowski());
    const auto table = table_from_rational(b.parent());
    std::mt19937 rng(73);
    const auto s = disk_samples(rng, 20, 0.9);
    const ScalarFunction one = [](Complex) { return Complex{1.0}; };
    const ScalarFunction zf = [](Complex z) { return z; };
    const ScalarFunction ef = [](Complex z) { return std::exp(z); };
    CHECK(gelfand_check(AlgebraElement::unit(2, s), b, one).max_error < 1e-12);
    const auto z = element_from_function(b, zf, s);
    const auto rep = gelfand_check(z, b, zf);
    CHECK(rep.max_error < 1e-9);
    CHECK(rep.evaluated == 40);
    const auto e = element_from_function(b, ef, s);
    const auto ze = polyproduct(z, e, table);
    for (std::size_t m = 0; m < s->size(); ++m)
      for (Complex x : fiber(b.parent(), (*s)[m])) {
        const Complex lhs = gelfand_transform(b, ze, m, x);
        CHECK(std::abs(lhs - gelfand_transform(b, z, m, x) * gelfand_transform(b, e, m, x)) < 1e-9 * (1.0 + std::abs(lhs)));
      }
  }
}

TEST_SUITE("polyalg properties") {
  TEST_CASE("commutative bilinear submultiplicative") {
    std::mt19937 rng(81);
    for (std::size_t d = 2; d <= 5; ++d) {
      const auto table = table_from_rational(test::random_rational(rng, d));
      const auto s = disk_samples(rng, 12, 0.7);
      for (int t = 0; t < 5; ++t) {
        const auto f = random_element(rng, d, s), g = random_element(rng, d, s), h = random_element(rng, d, s);
        const Complex a = oracle::random_in_disk(rng, 0.0, 2.0);
        const auto fg = polyproduct(f, g, table);
        const double scale = 1.0 + fg.values().cwiseAbs().maxCoeff();
        CHECK(diff(fg, polyproduct(g, f, table)) <= 1e-12 * scale);
        CHECK(diff(polyproduct(f * a + h, g, table), polyproduct(f, g, table) * a + polyproduct(h, g, table)) <=
              1e-12 * scale * (1.0 + std::abs(a)));
        CHECK(diff(polyproduct(AlgebraElement::unit(d, s), f, table), f) == 0.0);
        const double nf = operator_norm(f, table), ng = operator_norm(g, table);
        CHECK(operator_norm(fg, table) <= nf * ng + 1e-10);
        CHECK(f.sup_norm() <= nf + 1e-12);
      }
    }
  }

  TEST_CASE("characters solve the character equation") {
    std::mt19937 rng(82);
    for (std::size_t d = 2; d <= 5; ++d) {
      const DeltaBasis b(test::random_rational(rng, d));
      const auto table = table_from_rational(b.parent());
      for (int t = 0; t < 4; ++t) {
        const Complex w = oracle::random_in_disk(rng, 0.0, 1.0);
        if (fiber_matrix(b, w).near_critical) continue;
        for (const auto& eta : characters(b, table, w)) {
          const double scale = 1.0 + eta.cwiseAbs2().maxCoeff();
          CHECK(character_equation_residual(eta, table, w) < 1e-10 * scale);
        }
      }
    }
  }
}
