#include <doctest.h>

#include <cmath>

#include "hc1d/errors.hpp"
#include "hc1d/profile.hpp"

using hc1d::CoefficientProfile;

TEST_CASE("constant profile evaluates and integrates") {
  auto p = CoefficientProfile::constant(2.5, 0.0, 0.5);
  CHECK(p(0.0) == 2.5);
  CHECK(p(0.49) == 2.5);
  CHECK(p.integral(0.1, 0.3) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p.inverse_integral(0.0, 0.5) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(p.breakpoints_in(0.0, 0.5).empty());
}

TEST_CASE("piecewise constant uses the right-limit convention") {
  auto p = CoefficientProfile::piecewise_constant({0.0, 0.25, 0.5}, {2.0, 1.0});
  CHECK(p(0.1) == 2.0);
  CHECK(p(0.25) == 1.0);  // right limit at the breakpoint
  CHECK(p(0.4) == 1.0);
  CHECK(p.integral(0.0, 0.5) == doctest::Approx(0.25 * 2.0 + 0.25 * 1.0));
  CHECK(p.inverse_integral(0.0, 0.5) == doctest::Approx(0.25 / 2.0 + 0.25));
  auto brk = p.breakpoints_in(0.0, 0.5);
  REQUIRE(brk.size() == 1);
  CHECK(brk[0] == 0.25);
  CHECK(std::isnan(p.constant_on(0.0, 0.5)));
  CHECK(p.constant_on(0.3, 0.5) == 1.0);
}

TEST_CASE("sampled grid interpolates linearly") {
  auto p = CoefficientProfile::sampled({1.0, 2.0, 1.0}, 0.0, 1.0);
  CHECK(p(0.25) == doctest::Approx(1.5));
  CHECK(p(0.5) == doctest::Approx(2.0));
  CHECK(p.integral(0.0, 1.0) == doctest::Approx(1.5));
  // reciprocal of a linear segment integrates to a logarithm
  CHECK(p.inverse_integral(0.0, 0.5) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("profiles reject non-positive values") {
  CHECK_THROWS_AS(CoefficientProfile::constant(0.0, 0.0, 1.0), hc1d::ValidationError);
  CHECK_THROWS_AS(CoefficientProfile::constant(-1.0, 0.0, 1.0), hc1d::ValidationError);
  CHECK_THROWS_AS(CoefficientProfile::piecewise_constant({0.0, 1.0}, {}), hc1d::ValidationError);
  CHECK_THROWS_AS(CoefficientProfile::piecewise_constant({0.0, 0.5, 0.25}, {1.0, 1.0}),
                  hc1d::ValidationError);
}
