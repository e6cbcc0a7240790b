#include "helpers.hpp"

#include "ratvar/opcalc.hpp"

using namespace ratvar;
using test::Complex;

namespace {

ComplexMatrix upper(Complex c) {
  ComplexMatrix a(2, 2);
  a << 1.0, c, 0.0, -1.0;
  return a;
}

ComplexMatrix diag(std::initializer_list<Complex> d) {
  ComplexVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (Complex x : d) v(i++) = x;
  return v.asDiagonal();
}

Representation rep_of(const ScalarFunction& phi, double rho = 0.5, std::size_t order = 40) {
  CauchyOptions opt;
  opt.order = order;
  opt.tol = 1e-12;
  return cauchy_coefficients(test::trace(test::half_joukowski(), rho), phi, opt);
}

RationalFunction product(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.p() * b.p(), a.q() * b.q());
}

}  // namespace

TEST_SUITE("opcalc") {
  TEST_CASE("rational functions of matrices") {
    const auto r = test::half_joukowski();
    const auto d = mat_rational(r, diag({2.0, Complex{0.5, 1.0}, -3.0}));
    CHECK(std::abs(d(0, 0) - r(2.0)) < 1e-14);
    CHECK(std::abs(d(1, 1) - r(Complex{0.5, 1.0})) < 1e-14);
    CHECK(std::abs(d(2, 2) - r(-3.0)) < 1e-14);
    CHECK(std::abs(d(0, 1)) < 1e-15);

    const Complex c{0.7, -0.2};
    CHECK(mat_rational(r, upper(c)).norm() < 1e-14);
    CHECK_THROWS_AS(mat_rational(r, diag({0.0, 1.0})), SingularError);

    std::mt19937 rng(91);
    const auto a = oracle::with_spectrum(rng, {0.5, 1.5, Complex{-1.0, 0.7}, Complex{0.2, -1.1}}, 0.3);
    const auto ra = mat_rational(r, a);
    CHECK((ra - oracle::eig_apply(a, [&](Complex z) { return r(z); })).norm() < 1e-8);
    CHECK((ra * a - a * ra).norm() < 1e-10 * a.norm() * ra.norm());
  }

  TEST_CASE("delta matrices") {
    const DeltaBasis b(test::half_joukowski());
    const Complex c{0.7, -0.2};
    const auto a = upper(c);
    const auto ds = mat_delta(b, a);
    ComplexMatrix d1(2, 2), d2(2, 2);
    d1 << 1.0, c / 2.0, 0.0, 0.0;
    d2 << 0.0, -c / 2.0, 0.0, 1.0;
    CHECK((ds[0] - d1).norm() < 1e-14);
    CHECK((ds[1] - d2).norm() < 1e-14);
    CHECK((ds[0] * 1.0 + ds[1] * -1.0 - a).norm() < 1e-14);

    const auto dd = mat_delta(b, diag({2.0, -0.5}));
    CHECK(std::abs(dd[0](0, 0) - oracle::delta1(2.0)) < 1e-14);
    CHECK(std::abs(dd[0](1, 1) - oracle::delta1(-0.5)) < 1e-14);
    CHECK(std::abs(dd[1](0, 1)) < 1e-15);
  }

  TEST_CASE("spectral radius") {
    CHECK(std::abs(spectral_radius_estimate(diag({0.5, 0.2})).estimate - 0.5) < 1e-12);
    ComplexMatrix nil(2, 2);
    nil << 0.0, 1.0, 0.0, 0.0;
    CHECK(spectral_radius_estimate(nil).estimate == 0.0);
    std::mt19937 rng(92);
    for (int t = 0; t < 5; ++t) {
      const auto bm = oracle::random_matrix(rng, 4, 4);
      const auto est = spectral_radius_estimate(bm, 64);
      REQUIRE(est.sequence.size() == 64);
      CHECK(std::abs(est.sequence[63] / est.eigen_radius - 1.0) < 0.05);
    }
  }

  TEST_CASE("series evaluation") {
    const Complex c{0.7, -0.2};
    const auto one = rep_of([](Complex) { return Complex{1.0}; });
    CHECK((mat_apply(one, upper(c), 1e-10).value - ComplexMatrix::Identity(2, 2)).norm() < 1e-8);

    const auto zed = rep_of([](Complex z) { return z; });
    const auto fa = mat_apply(zed, upper(c), 1e-10);
    CHECK((fa.value - upper(c)).norm() < 1e-8);

    const auto c5 = test::trace(test::half_joukowski(), 0.5);
    const std::size_t right = c5.component_of_root(0);
    CauchyOptions opt;
    opt.order = 40;
    opt.tol = 1e-12;
    const auto ind = cauchy_coefficients(
        c5, ComponentFunction([right](std::size_t k, Complex) { return Complex{k == right ? 1.0 : 0.0}; }), opt);
    CHECK((mat_apply(ind, diag({0.9, -1.1}), 1e-10).value - diag({1.0, 0.0})).norm() < 1e-9);

    CHECK_THROWS_AS(mat_apply(zed, diag({3.0, -1.0}), 1e-10), ConvergenceError);
  }

  TEST_CASE("kspectral") {
    const auto r = test::half_joukowski();
    const auto a = upper(0.5);
    const auto rep = kspectral(r, 0.0, a);
    CHECK(std::abs(rep.C_rR - 1.0) < 1e-12);
    CHECK(std::abs(rep.K - (norm2(mat_delta(DeltaBasis(r), a)[0]) + norm2(mat_delta(DeltaBasis(r), a)[1]))) < 1e-12);
    CHECK(rep.K >= rep.C_rR);
    CHECK_THROWS_AS(kspectral(r, 1.5, a), DomainError);
  }
}

TEST_SUITE("opcalc properties") {
  TEST_CASE("delta matrices sum to the identity") {
    std::mt19937 rng(101);
    for (std::size_t d = 2; d <= 5; ++d) {
      const DeltaBasis b(test::random_rational(rng, d));
      const auto a = oracle::random_matrix(rng, 5, 5);
      ComplexMatrix s = ComplexMatrix::Zero(5, 5);
      try {
        for (const auto& m : mat_delta(b, a)) s += m;
      } catch (const SingularError&) {
        continue;
      }
      CHECK((s - ComplexMatrix::Identity(5, 5)).norm() < 1e-10 * std::max(1.0, s.norm()));
    }
  }

  TEST_CASE("rational calculus is multiplicative") {
    std::mt19937 rng(102);
    for (int t = 0; t < 8; ++t) {
      const auto r1 = test::random_rational(rng, 2), r2 = test::random_rational(rng, 3);
      RationalFunction r12 = r1;
      try {
        r12 = product(r1, r2);
      } catch (const Error&) {
        continue;
      }
      std::vector<Complex> eig;
      for (int k = 0; k < 4; ++k) eig.push_back(oracle::random_in_disk(rng, 0.0, 2.0));
      const auto a = oracle::with_spectrum(rng, eig, 0.3);
      const ComplexMatrix lhs = mat_rational(r12, a), rhs = mat_rational(r1, a) * mat_rational(r2, a);
      CHECK((lhs - rhs).norm() <= 1e-8 * std::max(1.0, rhs.norm()));
    }
  }

  TEST_CASE("series matches the eigendecomposition") {
    const ScalarFunction phi = [](Complex z) { return std::exp(z); };
    const auto rep = rep_of(phi, 0.8, 120);
    std::mt19937 rng(103);
    const double tol = 1e-10;
    for (int t = 0; t < 10; ++t) {
      std::vector<Complex> eig;
      for (int k = 0; k < 4; ++k) eig.push_back(oracle::random_in_disk(rng, k % 2 ? -1.0 : 1.0, 0.35));
      const auto a = oracle::with_spectrum(rng, eig, 0.2);
      double cond = 1.0;
      const auto expect = oracle::eig_apply(a, phi, &cond);
      const auto got = mat_apply(rep, a, tol).value;
      CHECK(norm2(got - expect) <= 10.0 * tol * cond * std::max(1.0, norm2(expect)));
    }
  }
}
