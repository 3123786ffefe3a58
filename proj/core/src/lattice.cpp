#include "hc1d/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "hc1d/errors.hpp"

namespace hc1d {

namespace {

struct YRange {
  double y0;
  double y1;
};

// cell-coordinate range of a piece, clamped to its nominal sub-interval
YRange cell_range(const MediumSpec& spec, const MediumPiece& p, double s0, double s1) {
  const double eps = spec.epsilon;
  const double zc = static_cast<double>(p.cell);
  double y0 = s0 / eps - zc;
  double y1 = s1 / eps - zc;
  const double lo = p.kind == MediumPiece::Kind::Soft ? 0.0 : spec.geometry.h;
  const double hi = p.kind == MediumPiece::Kind::Soft ? spec.geometry.h : 1.0;
  y0 = std::clamp(y0, lo, hi);
  y1 = std::clamp(y1, lo, hi);
  return {y0, y1};
}

}  // namespace

std::vector<MediumPiece> medium_pieces(const MediumSpec& spec, double lo, double hi) {
  const double eps = spec.epsilon;
  const double h = spec.geometry.h;
  const double snap = 1e-13 * eps;

  // walls: lattice points, the h-interfaces, the defect ends, and interior
  // profile breakpoints mapped into each cell
  std::vector<double> walls{lo, hi};
  const long z0 = static_cast<long>(std::floor(lo / eps)) - 1;
  const long z1 = static_cast<long>(std::ceil(hi / eps)) + 1;
  auto push = [&](double w) {
    if (w > lo + snap && w < hi - snap) walls.push_back(w);
  };
  for (long z = z0; z <= z1; ++z) {
    const double zc = static_cast<double>(z);
    push(eps * zc);
    push(eps * (zc + h));
    for (double b : spec.a0.breakpoints_in(0.0, h)) push(eps * (zc + b));
    for (double b : spec.rho0.breakpoints_in(0.0, h)) push(eps * (zc + b));
    for (double b : spec.a1.breakpoints_in(h, 1.0)) push(eps * (zc + b));
    for (double b : spec.rho1.breakpoints_in(h, 1.0)) push(eps * (zc + b));
  }
  if (spec.defect) {
    push(spec.defect->d_minus);
    push(spec.defect->d_plus);
    for (double b : spec.defect->a.breakpoints_in(spec.defect->d_minus, spec.defect->d_plus))
      push(b);
    for (double b : spec.defect->rho.breakpoints_in(spec.defect->d_minus, spec.defect->d_plus))
      push(b);
  }
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end(),
                          [&](double a, double b) { return b - a < snap; }),
              walls.end());

  std::vector<MediumPiece> out;
  out.reserve(walls.size());
  for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
    const double x0 = walls[i], x1 = walls[i + 1];
    const double mid = 0.5 * (x0 + x1);
    MediumPiece p;
    p.x0 = x0;
    p.x1 = x1;
    if (spec.defect && mid > spec.defect->d_minus && mid < spec.defect->d_plus) {
      p.kind = MediumPiece::Kind::Defect;
      p.cell = 0;
    } else {
      p.cell = static_cast<long>(std::floor(mid / eps));
      const double y = mid / eps - static_cast<double>(p.cell);
      p.kind = y < h ? MediumPiece::Kind::Soft : MediumPiece::Kind::Stiff;
    }
    out.push_back(p);
  }
  return out;
}

double piece_inv_stiffness_integral(const MediumSpec& spec, const MediumPiece& piece, double s0,
                                    double s1) {
  const double eps = spec.epsilon;
  switch (piece.kind) {
    case MediumPiece::Kind::Defect:
      return spec.defect->a.inverse_integral(s0, s1);
    case MediumPiece::Kind::Soft: {
      const YRange r = cell_range(spec, piece, s0, s1);
      return spec.a0.inverse_integral(r.y0, r.y1) / eps;
    }
    case MediumPiece::Kind::Stiff: {
      const YRange r = cell_range(spec, piece, s0, s1);
      return eps * spec.a1.inverse_integral(r.y0, r.y1);
    }
  }
  throw NumericError("unreachable");
}

double piece_density_integral(const MediumSpec& spec, const MediumPiece& piece, double s0,
                              double s1) {
  const double eps = spec.epsilon;
  switch (piece.kind) {
    case MediumPiece::Kind::Defect:
      return spec.defect->rho.integral(s0, s1);
    case MediumPiece::Kind::Soft: {
      const YRange r = cell_range(spec, piece, s0, s1);
      return eps * spec.rho0.integral(r.y0, r.y1);
    }
    case MediumPiece::Kind::Stiff: {
      const YRange r = cell_range(spec, piece, s0, s1);
      return eps * spec.rho1.integral(r.y0, r.y1);
    }
  }
  throw NumericError("unreachable");
}

EpsCoefficients piece_coefficients(const MediumSpec& spec, const MediumPiece& piece, double x) {
  const double eps = spec.epsilon;
  switch (piece.kind) {
    case MediumPiece::Kind::Defect:
      return {spec.defect->a(x), spec.defect->rho(x)};
    case MediumPiece::Kind::Soft: {
      const YRange r = cell_range(spec, piece, x, x);
      return {eps * eps * spec.a0(r.y0), spec.rho0(r.y0)};
    }
    case MediumPiece::Kind::Stiff: {
      const YRange r = cell_range(spec, piece, x, x);
      return {spec.a1(r.y0), spec.rho1(r.y0)};
    }
  }
  throw NumericError("unreachable");
}

}  // namespace hc1d
