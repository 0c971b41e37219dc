#pragma once

#include <functional>
#include <vector>

#include "monoclt/measures.hpp"
#include "monoclt/transforms.hpp"

namespace monoclt {

using FEval = std::function<Complex(Complex)>;

// Sampled numeric CDF on a grid, recovered at smoothing height y.
struct CdfCurve {
  std::vector<double> x;
  std::vector<double> cdf;
  double y = 0.0;
  double spacing() const {
    return x.size() > 1 ? (x.back() - x.front()) /
                              static_cast<double>(x.size() - 1)
                        : 0.0;
  }
};

// Poisson-smoothed CDF from F along a horizontal line.  The density is
// accumulated by cumulative trapezoid at a height the grid resolves,
// then transported down to y by vertical integration of Re G.
CdfCurve stieltjes_cdf(const FEval& f, double y, std::vector<double> grid);

// Exact sup |C_mu - C_gamma|; the sup over each flat interval of the
// staircase is attained at an atom or at +-sqrt2.
double kolmogorov_exact(const AtomicMeasure& m);

double kolmogorov_grid(const CdfCurve& a, const CdfCurve& b);

// Upper bound on sup |C_mu - C_gamma| for small y (smoothing
// inequality): integral of |1/F_mu - 1/F_gamma| on the line Im = y,
// plus 11 sqrt(y).  Assumes mean zero; support_radius and m2 feed the
// analytic tail estimate.
double bai_rhs_arcsine(const FEval& f_mu, double y, double support_radius,
                       double m2 = 1.0);

// Integral of |1/sqrt(z^2-2+eps(z)) - 1/sqrt(z^2-2)| on the line Im = y.
// Throws EpsilonTooLarge if |eps| >= 3y/2 at any quadrature node.
double lemma22_lhs(const std::function<Complex(double)>& eps_on_line,
                   double y);

}  // namespace monoclt
