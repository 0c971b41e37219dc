#pragma once

#include <vector>

#include "monoclt/inversion.hpp"
#include "monoclt/measures.hpp"
#include "monoclt/transforms.hpp"

namespace monoclt {

// One evaluated convergence-rate bound with its applicability threshold.
struct BoundReport {
  int part = 0;            // 1, 2 or 3
  double bound_value = 0;  // value of the bound at this n
  double threshold_n = 0;  // bound applies for n > threshold_n
  double c = 0, d = 0, m_nu = 0, m2_nu = 0;
  bool applicable = false;
};

BoundReport berry_esseen_bound(const AtomicMeasure& m, long n, int part);

enum class DistanceMethod { exact, numeric };

struct RatePoint {
  long n = 0;
  double distance = 0.0;
  DistanceMethod method = DistanceMethod::exact;
};

struct NumericDistanceConfig {
  double y = 1e-5;
  int grid_points = 16001;
  double x_lo = -4.0;
  double x_hi = 4.0;
};

// Kolmogorov distance between the dilated n-th power and the arcsine
// law.  Exact: atom-level staircase sup.  Numeric: smoothed CDF of
// F_{mu_n} against the sampled arcsine CDF.
RatePoint clt_distance(const MeasureSpec& m, long n, DistanceMethod method,
                       std::size_t budget = kDefaultAtomBudget,
                       const NumericDistanceConfig& cfg = {});

std::vector<double> distance_grid(const NumericDistanceConfig& cfg);

// A reusable evaluator z -> F_{mu_n}(z) with the transform data
// extracted once.
FEval make_normalized_power_eval(const MeasureSpec& m, long n);

// eps_n(z) = F_{mu_n}(z)^2 - z^2 + 2.
Complex eps_n(const MeasureSpec& m, long n, Complex z);

// F_{mu_n} for the seed nu_1: n^{-1/2} + sqrt((z - n^{-1/2})^2 - 2).
Complex nu1_closed_form_F(long n, Complex z);

// 1 / (sqrt2 pi n^{1/4}).
double nu1_lower_bound(long n);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// OLS of log(distance) against log(n).
RateFit rate_fit(const std::vector<RatePoint>& points);

}  // namespace monoclt
