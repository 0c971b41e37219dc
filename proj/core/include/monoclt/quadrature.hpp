#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

namespace monoclt {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1].
// Column 0: abscissa, column 1: Gauss weight, column 2: Kronrod weight.
inline constexpr double kGk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

template <class Func>
double gk15_panel(Func&& f, double a, double b, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double f0 = f(c);
  double g7 = kGk15[0][1] * f0;
  double k15 = kGk15[0][2] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = h * kGk15[i][0];
    const double fi = f(c + dx) + f(c - dx);
    g7 += kGk15[i][1] * fi;
    k15 += kGk15[i][2] * fi;
  }
  err = std::fabs(k15 - g7) * std::fabs(h);
  return k15 * h;
}

struct QuadOptions {
  double abs_tol = 1e-10;
  double min_width = 1e-6;
  int max_depth = 52;
};

namespace detail {

template <class Func>
double adaptive_quad_rec(Func&& f, double a, double b, double tol,
                         const QuadOptions& opt, int depth) {
  double err = 0.0;
  const double whole = gk15_panel(f, a, b, err);
  if (err <= tol || depth >= opt.max_depth || (b - a) <= opt.min_width) {
    return whole;
  }
  const double mid = 0.5 * (a + b);
  return adaptive_quad_rec(f, a, mid, 0.5 * tol, opt, depth + 1) +
         adaptive_quad_rec(f, mid, b, 0.5 * tol, opt, depth + 1);
}

}  // namespace detail

// Adaptive bisection with a 15-point Kronrod rule per panel; absolute
// tolerance, panels never split below opt.min_width.
template <class Func>
double adaptive_quad(Func&& f, double a, double b,
                     const QuadOptions& opt = QuadOptions{}) {
  if (!(a < b)) return 0.0;
  return detail::adaptive_quad_rec(std::forward<Func>(f), a, b, opt.abs_tol,
                                   opt, 0);
}

// Gauss-Legendre 12-point nodes (positive half) and weights on [-1,1].
inline constexpr double kGl12x[6] = {0.125233408511469, 0.367831498998180,
                                     0.587317954286617, 0.769902674194305,
                                     0.904117256370475, 0.981560634246719};
inline constexpr double kGl12w[6] = {0.249147045813403, 0.233492536538355,
                                     0.203167426723066, 0.160078328543346,
                                     0.106939325995318, 0.047175336386512};

template <class Func>
double gauss12(Func&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 6; ++i) {
    const double dx = h * kGl12x[i];
    s += kGl12w[i] * (f(c + dx) + f(c - dx));
  }
  return s * h;
}

}  // namespace monoclt
