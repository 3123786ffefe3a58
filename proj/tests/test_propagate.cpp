#include <doctest.h>

#include <cmath>
#include <random>

#include "hc1d/propagate.hpp"
#include "support/oracles.hpp"

using hc1d::CoefficientProfile;
using hc1d::propagate;

TEST_CASE("lambda = 0 gives the shear matrix") {
  auto one = CoefficientProfile::constant(1.0, 0.0, 0.5);
  auto p = propagate(one, one, 0.0, 0.0, 0.5);
  CHECK(p.m(0, 0) == doctest::Approx(1.0));
  CHECK(p.m(0, 1) == doctest::Approx(0.5));
  CHECK(p.m(1, 0) == doctest::Approx(0.0));
  CHECK(p.m(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("unit coefficients give the rotation closed form") {
  auto one = CoefficientProfile::constant(1.0, 0.0, 0.7);
  const double lambda = 3.7, h = 0.7;
  auto p = propagate(one, one, lambda, 0.0, h);
  const double r = std::sqrt(lambda);
  CHECK(p.m(0, 0) == doctest::Approx(std::cos(r * h)).epsilon(1e-12));
  CHECK(p.m(0, 1) == doctest::Approx(std::sin(r * h) / r).epsilon(1e-12));
  CHECK(p.m(1, 0) == doctest::Approx(-r * std::sin(r * h)).epsilon(1e-12));
  CHECK(p.m(1, 1) == doctest::Approx(std::cos(r * h)).epsilon(1e-12));
}

TEST_CASE("piecewise-constant coefficients agree with composition and the RK4 oracle") {
  auto a = CoefficientProfile::piecewise_constant({0.0, 0.25, 0.5}, {2.0, 1.0});
  auto rho = CoefficientProfile::constant(1.0, 0.0, 0.5);
  const double lambda = 3.7;

  // manual composition of the two per-piece closed forms
  auto piece = [&](double av, double len) {
    const double k = std::sqrt(lambda / av);
    Eigen::Matrix2d m;
    m << std::cos(k * len), std::sin(k * len) / (av * k), -av * k * std::sin(k * len),
        std::cos(k * len);
    return m;
  };
  const Eigen::Matrix2d expected = piece(1.0, 0.25) * piece(2.0, 0.25);
  auto p = propagate(a, rho, lambda, 0.0, 0.5);
  CHECK((p.m - expected).cwiseAbs().maxCoeff() < 1e-10);

  const Eigen::Matrix2d rk = oracles::rk4_propagator_split(
      [&](double x) { return a(x); }, [&](double x) { return rho(x); }, lambda, 0.0, 0.5, {0.25},
      4000);
  CHECK((p.m - rk).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("sampled-grid coefficients agree with the RK4 oracle") {
  // smooth positive profile sampled on a uniform grid
  std::vector<double> samples;
  const int n = 65;
  for (int i = 0; i < n; ++i) {
    const double y = 0.5 * i / (n - 1);
    samples.push_back(1.0 + 0.5 * std::sin(M_PI * y / 0.5) * std::sin(M_PI * y / 0.5));
  }
  auto a = CoefficientProfile::sampled(samples, 0.0, 0.5);
  auto rho = CoefficientProfile::constant(1.0, 0.0, 0.5);
  const double lambda = 11.3;

  auto p = propagate(a, rho, lambda, 0.0, 0.5, 1e-12);
  const Eigen::Matrix2d rk =
      oracles::rk4_propagator([&](double x) { return a(x); }, [&](double x) { return rho(x); },
                              lambda, 0.0, 0.5, 200000);
  CHECK((p.m - rk).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(std::abs(p.m.determinant() - 1.0) < 1e-10);
}

TEST_CASE("determinant stays one and composition splits") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> lam(0.0, 200.0);
  auto a = CoefficientProfile::piecewise_constant({0.0, 0.2, 0.35, 0.5}, {2.0, 0.5, 1.0});
  auto rho = CoefficientProfile::piecewise_constant({0.0, 0.3, 0.5}, {1.0, 3.0});
  for (int i = 0; i < 200; ++i) {
    const double lambda = lam(rng);
    auto whole = propagate(a, rho, lambda, 0.0, 0.5);
    CHECK(std::abs(whole.m.determinant() - 1.0) < 1e-9);
    auto left = propagate(a, rho, lambda, 0.0, 0.27);
    auto right = propagate(a, rho, lambda, 0.27, 0.5);
    CHECK(((right.m * left.m) - whole.m).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("cumulative propagation matches pointwise propagation") {
  auto a = CoefficientProfile::piecewise_constant({0.0, 0.25, 0.5}, {2.0, 1.0});
  auto rho = CoefficientProfile::constant(1.0, 0.0, 0.5);
  std::vector<double> xs{0.1, 0.25, 0.3, 0.5};
  auto cums = hc1d::propagate_cumulative(a, rho, 5.0, 0.0, xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto direct = propagate(a, rho, 5.0, 0.0, xs[i]);
    CHECK((cums[i] - direct.m).cwiseAbs().maxCoeff() < 1e-11);
  }
}
