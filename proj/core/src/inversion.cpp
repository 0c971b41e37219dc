#include "monoclt/inversion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monoclt/quadrature.hpp"

namespace monoclt {

CdfCurve stieltjes_cdf(const FEval& f, double y, std::vector<double> grid) {
  if (!(y > 0.0)) throw NonPositiveY("stieltjes_cdf: y must be positive");
  if (grid.size() < 2) throw UnsortedGrid("stieltjes_cdf: grid too small");
  double h = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if (!(grid[i] < grid[i + 1])) {
      throw UnsortedGrid("stieltjes_cdf: grid not strictly increasing");
    }
    h = std::max(h, grid[i + 1] - grid[i]);
  }

  // Integrate the density at a height the grid spacing resolves; the
  // trapezoid rule is spectrally accurate once Y >= 4h.
  const double big_y = std::max(y, 4.0 * h);
  const std::size_t n = grid.size();
  std::vector<Complex> g_big(n);
  for (std::size_t i = 0; i < n; ++i) {
    g_big[i] = 1.0 / f(Complex(grid[i], big_y));
  }

  CdfCurve out;
  out.x = std::move(grid);
  out.y = y;
  out.cdf.resize(n);
  // Left-edge mass estimate from the Cauchy tail of G.
  out.cdf[0] = std::max(0.0, -(big_y / M_PI) * g_big[0].real());
  for (std::size_t i = 1; i < n; ++i) {
    const double d0 = -g_big[i - 1].imag() / M_PI;
    const double d1 = -g_big[i].imag() / M_PI;
    out.cdf[i] =
        out.cdf[i - 1] + 0.5 * (d0 + d1) * (out.x[i] - out.x[i - 1]);
  }

  if (big_y > y) {
    // Transport from height big_y down to y:
    // C_y(x) = C_Y(x) + (1/pi) int_y^Y Re G(x+is) ds, on a log scale.
    const double u_lo = std::log(y);
    const double u_hi = std::log(big_y);
    for (std::size_t i = 0; i < n; ++i) {
      const double xi = out.x[i];
      const double corr = gauss12(
          [&](double u) {
            const double s = std::exp(u);
            return (1.0 / f(Complex(xi, s))).real() * s;
          },
          u_lo, u_hi);
      out.cdf[i] += corr / M_PI;
    }
  }

  double run = 0.0;
  for (double& c : out.cdf) {
    run = std::max(run, c);
    c = std::min(run, 1.0);
  }
  return out;
}

double kolmogorov_exact(const AtomicMeasure& m) {
  const StepCdf cdf(m);
  double sup = 0.0;
  for (const Atom& a : m.atoms()) {
    const double g = arcsine_cdf(a.t);
    sup = std::max(sup, std::fabs(g - cdf.value(a.t)));
    sup = std::max(sup, std::fabs(g - cdf.left_limit(a.t)));
  }
  // The arcsine CDF saturates at +-sqrt2; the sup can sit there when
  // atoms lie outside the arcsine support.
  const double s2 = std::sqrt(2.0);
  sup = std::max(sup, cdf.value(-s2));
  sup = std::max(sup, std::fabs(1.0 - cdf.left_limit(s2)));
  return sup;
}

double kolmogorov_grid(const CdfCurve& a, const CdfCurve& b) {
  if (a.x.size() != b.x.size()) {
    throw GridMismatch("kolmogorov_grid: grids differ in size");
  }
  for (std::size_t i = 0; i < a.x.size(); ++i) {
    if (a.x[i] != b.x[i]) {
      throw GridMismatch("kolmogorov_grid: grids differ at index " +
                         std::to_string(i));
    }
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < a.cdf.size(); ++i) {
    sup = std::max(sup, std::fabs(a.cdf[i] - b.cdf[i]));
  }
  return sup;
}

namespace {

// Truncation radius for line integrals: start at X0 and double until
// the analytic tail estimate drops below 1e-8.
template <class TailBound>
double choose_truncation(double x0, TailBound&& tail) {
  double big_x = x0;
  while (tail(big_x) >= 1e-8 && big_x < 1e9) big_x *= 2.0;
  return big_x;
}

}  // namespace

double bai_rhs_arcsine(const FEval& f_mu, double y, double support_radius,
                       double m2) {
  const double y_max = 1.0 / (4.0 * std::sqrt(3.0));
  if (!(y > 0.0 && y < y_max)) {
    throw YOutOfRange("bai_rhs_arcsine: y must lie in (0, 1/(4 sqrt 3))");
  }
  const double s2 = std::sqrt(2.0);
  const double r = std::max(support_radius, s2);
  // |G_mu - G_gamma| <= (m2(mu) + m2(gamma)) / (x^2 (|x| - R)) for mean
  // zero, so the dropped tails are bounded cubically.
  const double big_x = choose_truncation(
      std::max(10.0, 4.0 * r), [&](double big) {
        return 2.0 * (m2 + 1.0) / ((big - r) * big);
      });
  QuadOptions opt;
  opt.abs_tol = 1e-9;
  opt.min_width = 1e-6;
  const double integral = adaptive_quad(
      [&](double x) {
        const Complex z(x, y);
        return std::abs(1.0 / f_mu(z) - 1.0 / cut_sqrt(z * z - 2.0));
      },
      -big_x, big_x, opt);
  return integral + 11.0 * std::sqrt(y);
}

double lemma22_lhs(const std::function<Complex(double)>& eps_on_line,
                   double y) {
  if (!(y > 0.0)) throw NonPositiveY("lemma22_lhs: y must be positive");
  const double big_x =
      choose_truncation(10.0, [&](double big) {
        return 3.0 * y / ((big - 1.0) * (big - 1.0));
      });
  QuadOptions opt;
  opt.abs_tol = 1e-9;
  opt.min_width = 1e-6;
  return adaptive_quad(
      [&](double x) {
        const Complex eps = eps_on_line(x);
        if (!(std::abs(eps) < 1.5 * y)) {
          throw EpsilonTooLarge("lemma22_lhs: |eps| = " +
                                    std::to_string(std::abs(eps)) +
                                    " >= 3y/2 at x = " + std::to_string(x),
                                x);
        }
        const Complex z(x, y);
        const Complex w = z * z - 2.0;
        return std::abs(1.0 / cut_sqrt(w + eps) - 1.0 / cut_sqrt(w));
      },
      -big_x, big_x, opt);
}

}  // namespace monoclt
