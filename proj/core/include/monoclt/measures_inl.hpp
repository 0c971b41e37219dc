#pragma once

#include <cmath>

#include "monoclt/quadrature.hpp"

namespace monoclt {

template <class Func>
double integrate_arcsine(Func&& g, double abs_tol) {
  const double s2 = std::sqrt(2.0);
  const double u_hi = std::pow(2.0, 0.25);
  QuadOptions opt;
  opt.abs_tol = 0.5 * abs_tol;
  // Right half t in [0, sqrt2]: t = sqrt2 - u^2.
  const double right = adaptive_quad(
      [&](double u) {
        const double t = s2 - u * u;
        return 2.0 * g(t) / (M_PI * std::sqrt(2.0 * s2 - u * u));
      },
      0.0, u_hi, opt);
  // Left half t in [-sqrt2, 0]: t = u^2 - sqrt2.
  const double left = adaptive_quad(
      [&](double u) {
        const double t = u * u - s2;
        return 2.0 * g(t) / (M_PI * std::sqrt(2.0 * s2 - u * u));
      },
      0.0, u_hi, opt);
  return left + right;
}

template <class Func>
double integrate_nu_r(double r, Func&& g, double abs_tol) {
  if (!(r > 0.0)) throw NonPositiveR("nu_r requires r > 0");
  const NuSupport sup = nu_r_support(r);
  QuadOptions opt;
  opt.abs_tol = abs_tol;
  // Band via x = r + sqrt2 sin(theta); the density becomes smooth.
  const double s2 = std::sqrt(2.0);
  const double band = adaptive_quad(
      [&](double theta) {
        const double ct = std::cos(theta);
        const double x = r + s2 * std::sin(theta);
        return g(x) * 2.0 * ct * ct / (M_PI * (r * r + 2.0 * ct * ct));
      },
      -0.5 * M_PI, 0.5 * M_PI, opt);
  return sup.atom_mass * g(sup.atom) + band;
}

}  // namespace monoclt
