#include "monoclt/clt.hpp"

#include <cmath>
#include <string>

namespace monoclt {

namespace {

void require_standardized(const AtomicMeasure& m) {
  if (std::fabs(m.mean()) > 1e-9 || std::fabs(m.variance() - 1.0) > 1e-9) {
    throw NotStandardized("measure must have mean 0 and variance 1 (got " +
                          std::to_string(m.mean()) + ", " +
                          std::to_string(m.variance()) + ")");
  }
}

}  // namespace

BoundReport berry_esseen_bound(const AtomicMeasure& m, long n, int part) {
  require_standardized(m);
  const MomentConstants mc = constants_c_d(m);
  BoundReport rep;
  rep.part = part;
  rep.c = mc.c;
  rep.d = mc.d;
  rep.m_nu = mc.m_nu;
  rep.m2_nu = mc.m2_nu;
  const double nn = static_cast<double>(n);
  switch (part) {
    case 1: {
      const double c = mc.c;
      rep.bound_value = 71.0 * std::pow(c, 0.25) * std::pow(nn, -0.125);
      rep.threshold_n =
          std::max(std::pow(8.0 * std::sqrt(3.0 * c), 4.0),
                   std::pow(8.0 * c * std::sqrt(c), -4.0));
      break;
    }
    case 2: {
      const double k = mc.d + 3.0 * (1.0 + mc.m2_nu) * (1.0 + mc.m2_nu);
      rep.bound_value = 200.0 * std::sqrt(k) * std::pow(nn, -0.25);
      rep.threshold_n = std::max({4.0 * mc.m_nu * mc.m_nu,
                                  4.0 * mc.m2_nu * mc.m2_nu, 12288.0 * k * k});
      break;
    }
    case 3:
      rep.bound_value = 200.0 * std::pow(nn, -0.25);
      rep.threshold_n = 12288.0;
      break;
    default:
      throw NotStandardized("bound part must be 1, 2 or 3");
  }
  rep.applicable = nn > rep.threshold_n;
  return rep;
}

std::vector<double> distance_grid(const NumericDistanceConfig& cfg) {
  std::vector<double> grid(static_cast<std::size_t>(cfg.grid_points));
  const double h =
      (cfg.x_hi - cfg.x_lo) / static_cast<double>(cfg.grid_points - 1);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = cfg.x_lo + h * static_cast<double>(i);
  }
  return grid;
}

FEval make_normalized_power_eval(const MeasureSpec& m, long n) {
  const double s = std::sqrt(static_cast<double>(n));
  if (m.kind() == MeasureKind::atomic) {
    NevanlinnaData nd = nevanlinna_extract(m.atomic_measure());
    return [nd = std::move(nd), n, s](Complex z) {
      double x = s * z.real();
      double y = s * z.imag();
      for (long j = 0; j < n; ++j) {
        double re = x - nd.shift;
        double im = y;
        for (const Atom& a : nd.nu) {
          const double dd = a.t - x;
          const double q = dd * dd + y * y;
          re += a.w * dd / q;
          im += a.w * y / q;
        }
        x = re;
        y = im;
      }
      return Complex(x / s, y / s);
    };
  }
  return [m, n, s](Complex z) { return iterate_F(m, n, s * z) / s; };
}

RatePoint clt_distance(const MeasureSpec& m, long n, DistanceMethod method,
                       std::size_t budget,
                       const NumericDistanceConfig& cfg) {
  RatePoint pt;
  pt.n = n;
  pt.method = method;
  if (method == DistanceMethod::exact) {
    if (m.kind() != MeasureKind::atomic) {
      throw NotStandardized("exact distance requires an atomic measure");
    }
    require_standardized(m.atomic_measure());
    const AtomicMeasure power =
        monotone_power_exact(m.atomic_measure(), n, budget);
    pt.distance = kolmogorov_exact(
        power.dilated(std::sqrt(static_cast<double>(n))));
    return pt;
  }
  const FEval f = make_normalized_power_eval(m, n);
  std::vector<double> grid = distance_grid(cfg);
  CdfCurve arcsine;
  arcsine.x = grid;
  arcsine.y = cfg.y;
  arcsine.cdf.reserve(grid.size());
  for (double x : grid) arcsine.cdf.push_back(arcsine_cdf(x));
  const CdfCurve numeric = stieltjes_cdf(f, cfg.y, std::move(grid));
  pt.distance = kolmogorov_grid(numeric, arcsine);
  return pt;
}

Complex eps_n(const MeasureSpec& m, long n, Complex z) {
  if (!(z.imag() > 0.0)) throw RealAxisInput("eps_n: Im z must be positive");
  const Complex f = normalized_power_F(m, n, z);
  return f * f - z * z + 2.0;
}

Complex nu1_closed_form_F(long n, Complex z) {
  if (!(z.imag() > 0.0)) {
    throw RealAxisInput("nu1_closed_form_F: Im z must be positive");
  }
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  const Complex s = z - a;
  return a + cut_sqrt(s * s - 2.0);
}

double nu1_lower_bound(long n) {
  return 1.0 / (std::sqrt(2.0) * M_PI * std::pow(static_cast<double>(n), 0.25));
}

RateFit rate_fit(const std::vector<RatePoint>& points) {
  if (points.size() < 3) throw TooFewPoints("rate_fit needs >= 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const RatePoint& p : points) {
    if (!(p.distance > 0.0)) {
      throw NonPositiveDistance("rate_fit: distance must be positive at n=" +
                                std::to_string(p.n));
    }
    const double x = std::log(static_cast<double>(p.n));
    const double y = std::log(p.distance);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  RateFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

}  // namespace monoclt
