#include "hc1d/medium.hpp"

#include <cmath>

#include "hc1d/errors.hpp"

namespace hc1d {

namespace {

void require_support(const CoefficientProfile& p, double lo, double hi, const char* name) {
  const double tol = 1e-12 * std::max(1.0, std::abs(hi));
  if (std::abs(p.lo() - lo) > tol || std::abs(p.hi() - hi) > tol)
    throw ValidationError(name, "profile support does not match the cell geometry");
}

}  // namespace

void MediumSpec::validate() const {
  if (!(geometry.h > 0.0) || !(geometry.h < 1.0))
    throw ValidationError("geometry.h", "h must lie strictly between 0 and 1");
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw ValidationError("epsilon", "epsilon must lie strictly between 0 and 1");
  require_support(a0, 0.0, geometry.h, "coefficients.a0");
  require_support(rho0, 0.0, geometry.h, "coefficients.rho0");
  require_support(a1, geometry.h, 1.0, "coefficients.a1");
  require_support(rho1, geometry.h, 1.0, "coefficients.rho1");
  if (defect) {
    if (!(defect->d_minus < defect->d_plus))
      throw ValidationError("defect", "d_minus must be smaller than d_plus");
    require_support(defect->a, defect->d_minus, defect->d_plus, "defect.a_D");
    require_support(defect->rho, defect->d_minus, defect->d_plus, "defect.rho_D");
  }
}

EpsCoefficients evaluate_eps_coefficients(const MediumSpec& spec, double x) {
  if (spec.defect && x >= spec.defect->d_minus && x < spec.defect->d_plus)
    return {spec.defect->a(x), spec.defect->rho(x)};
  const double y = cell_coordinate(spec, x);
  if (y < spec.geometry.h)
    return {spec.epsilon * spec.epsilon * spec.a0(y), spec.rho0(y)};
  return {spec.a1(y), spec.rho1(y)};
}

}  // namespace hc1d
