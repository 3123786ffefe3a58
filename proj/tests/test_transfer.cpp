#include <doctest.h>

#include <cmath>
#include <random>

#include "hc1d/errors.hpp"
#include "hc1d/transfer.hpp"
#include "support/oracles.hpp"

using hc1d::limit_discriminant;
using hc1d::transfer_matrix;

TEST_CASE("transfer matrix is unimodular over random draws") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> lam(0.0, 200.0);
  std::uniform_real_distribution<double> le(std::log2(1.0 / 256.0), std::log2(1.0 / 8.0));
  auto spec = oracles::unit_medium(0.5, 0.1);
  for (int i = 0; i < 100; ++i) {
    spec.epsilon = std::exp2(le(rng));
    auto t = transfer_matrix(spec, lam(rng));
    CHECK(std::abs(t.m.determinant() - 1.0) < 1e-9);
    CHECK(std::abs(t.mu1 * t.mu2 - std::complex<double>(1.0)) < 1e-12);
    if (t.in_gap())
      CHECK(std::abs(t.mu1) < 1.0);
    else
      CHECK(std::abs(t.mu1) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("constant-unit transfer matrix matches the trig closed form") {
  auto spec = oracles::unit_medium(0.5, 0.05);
  const double h = spec.geometry.h;
  const double eps = spec.epsilon;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> lam(0.1, 150.0);
  for (int i = 0; i < 25; ++i) {
    const double lambda = lam(rng);
    const double r = std::sqrt(lambda);
    // soft fundamental pair at h and stiff pair at 1 (data at h)
    const double v1 = std::cos(r * h), v2 = std::sin(r * h) / r;
    const double dv1 = -r * std::sin(r * h), dv2 = std::cos(r * h);
    const double q = eps * r;  // stiff wavenumber
    const double w1 = std::cos(q * (1 - h)), w2 = std::sin(q * (1 - h)) / q;
    const double dw1 = -q * std::sin(q * (1 - h)), dw2 = std::cos(q * (1 - h));
    Eigen::Matrix2d expected;
    expected << v1 * w1 + eps * eps * dv1 * w2, v2 * w1 + eps * eps * dv2 * w2,
        (v1 * dw1) / (eps * eps) + dv1 * dw2, (v2 * dw1) / (eps * eps) + dv2 * dw2;
    auto t = transfer_matrix(spec, lambda);
    CHECK((t.m - expected).cwiseAbs().maxCoeff() <
          1e-9 * std::max(1.0, expected.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("h_eps converges to the limit discriminant as epsilon shrinks") {
  auto spec = oracles::unit_medium(0.5, 0.1);
  const double lambda = 17.0;
  const double limit = limit_discriminant(spec, lambda);
  double prev_err = 1e300;
  for (int k = 3; k <= 10; ++k) {
    spec.epsilon = std::exp2(-k);
    const double err = std::abs(transfer_matrix(spec, lambda).h_eps - limit);
    CHECK(err < prev_err);
    prev_err = err;
  }
  CHECK(prev_err < 1e-4);
}

TEST_CASE("limit discriminant closed forms") {
  SUBCASE("D(0) = 2 for any admissible coefficients") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> val(0.2, 5.0);
    for (int i = 0; i < 20; ++i) {
      auto spec = oracles::unit_medium(0.37, 0.1);
      spec.a0 = hc1d::CoefficientProfile::piecewise_constant({0.0, 0.2, 0.37},
                                                             {val(rng), val(rng)});
      spec.rho1 = hc1d::CoefficientProfile::constant(val(rng), 0.37, 1.0);
      spec.validate();
      CHECK(limit_discriminant(spec, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
    }
  }
  SUBCASE("constant-unit medium matches 2cos - sqrt(lambda) sin (1-h)") {
    for (double h : {0.3, 0.5, 0.7}) {
      auto spec = oracles::unit_medium(h, 0.1);
      for (double lambda : {0.5, 3.0, 19.0, 77.7, 151.0}) {
        CHECK(limit_discriminant(spec, lambda) ==
              doctest::Approx(oracles::unit_discriminant(lambda, h)).epsilon(1e-10));
      }
    }
  }
  SUBCASE("piecewise coefficients match the RK4 oracle") {
    auto spec = oracles::unit_medium(0.5, 0.1);
    spec.a0 = hc1d::CoefficientProfile::piecewise_constant({0.0, 0.25, 0.5}, {1.0, 4.0});
    spec.rho1 = hc1d::CoefficientProfile::constant(2.0, 0.5, 1.0);
    spec.validate();
    for (double lambda : {1.0, 9.5, 42.0}) {
      const Eigen::Matrix2d p0 = oracles::rk4_propagator_split(
          [&](double x) { return spec.a0(x); }, [&](double) { return 1.0; }, lambda, 0.0, 0.5,
          {0.25}, 50000);
      const double expected = p0(0, 0) + p0(1, 1) - lambda * p0(0, 1) * 2.0 * 0.5;
      CHECK(limit_discriminant(spec, lambda) == doctest::Approx(expected).epsilon(1e-8));
    }
  }
}

TEST_CASE("decay roots of the gap quadratic") {
  CHECK(hc1d::decay_root(2.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(hc1d::decay_root(-2.5) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(std::log(std::abs(hc1d::decay_root(2.5)))) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(hc1d::decay_root(1.9), hc1d::NotInGapError);
}

TEST_CASE("limit monodromy trace equals the discriminant") {
  auto spec = oracles::unit_medium(0.5, 0.1);
  for (double lambda : {0.0, 4.2, 33.0}) {
    const Eigen::Matrix2d t = hc1d::limit_monodromy(spec, lambda);
    CHECK(t.trace() == doctest::Approx(limit_discriminant(spec, lambda)).epsilon(1e-12));
    CHECK(t.determinant() == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("physical lattice propagation composes and inverts") {
  auto spec = oracles::unit_medium(0.5, 0.125);
  const double lambda = 7.3;
  // full period in physical coordinates equals the coefficient-pair transfer
  // matrix conjugated by the soft flux scaling
  const Eigen::Matrix2d phys =
      hc1d::propagate_periodic_physical(spec, lambda, 0.0, spec.epsilon);
  const Eigen::Matrix2d cell = transfer_matrix(spec, lambda).m;
  Eigen::Matrix2d scale, scale_inv;
  scale << 1.0, 0.0, 0.0, spec.epsilon;
  scale_inv << 1.0, 0.0, 0.0, 1.0 / spec.epsilon;
  const Eigen::Matrix2d expected = scale * cell * scale_inv;
  CHECK((phys - expected).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(std::abs(phys.determinant() - 1.0) < 1e-10);

  // split/compose across an unaligned window
  const Eigen::Matrix2d a = hc1d::propagate_periodic_physical(spec, lambda, -0.31, 0.04);
  const Eigen::Matrix2d b = hc1d::propagate_periodic_physical(spec, lambda, 0.04, 0.27);
  const Eigen::Matrix2d ab = hc1d::propagate_periodic_physical(spec, lambda, -0.31, 0.27);
  CHECK(((b * a) - ab).cwiseAbs().maxCoeff() < 1e-9);
}
