#include <doctest.h>

#include <cmath>

#include "monoclt/clt.hpp"
#include "monoclt/rng.hpp"
#include "test_helpers.hpp"

using namespace monoclt;
using namespace monoclt::test;

TEST_CASE("berry_esseen_bound part 3 for a symmetric two-point seed") {
  const BoundReport r = berry_esseen_bound(boole_seed(), 1L << 14, 3);
  CHECK(r.part == 3);
  CHECK(r.c == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.threshold_n == doctest::Approx(12288.0));
  CHECK(r.applicable);
  CHECK(r.bound_value ==
        doctest::Approx(200.0 * std::pow(16384.0, -0.25)).epsilon(1e-12));
  CHECK(r.bound_value == doctest::Approx(17.67767).epsilon(1e-6));

  CHECK_FALSE(berry_esseen_bound(boole_seed(), 1000, 3).applicable);
}

TEST_CASE("berry_esseen_bound parts 1 and 2 for the skewed seed") {
  const double c = 1.0 / std::sqrt(2.0);

  const BoundReport r1 = berry_esseen_bound(skewed_seed(), 20000, 1);
  CHECK(r1.c == doctest::Approx(c));
  const double thr1 = std::pow(8.0 * std::sqrt(3.0 * c), 4.0);
  CHECK(r1.threshold_n == doctest::Approx(thr1).epsilon(1e-10));
  // (8 sqrt(3c))^4 = 4096 * 9 c^2 = 18432 exactly for c = 1/sqrt2.
  CHECK(r1.threshold_n == doctest::Approx(18432.0).epsilon(1e-10));
  CHECK(r1.applicable);
  CHECK(r1.bound_value ==
        doctest::Approx(71.0 * std::pow(c, 0.25) *
                        std::pow(20000.0, -0.125))
            .epsilon(1e-12));
  CHECK_FALSE(berry_esseen_bound(skewed_seed(), 18000, 1).applicable);

  const BoundReport r2 = berry_esseen_bound(skewed_seed(), 600000, 2);
  CHECK(r2.m_nu == doctest::Approx(c));
  CHECK(r2.m2_nu == doctest::Approx(0.5));
  CHECK(r2.d == doctest::Approx(0.0).epsilon(1e-12));
  const double bracket = r2.d + 3.0 * (1.0 + r2.m2_nu) * (1.0 + r2.m2_nu);
  CHECK(bracket == doctest::Approx(6.75));
  CHECK(r2.threshold_n ==
        doctest::Approx(12288.0 * 6.75 * 6.75).epsilon(1e-10));
  CHECK(r2.applicable);
  CHECK(r2.bound_value ==
        doctest::Approx(200.0 * std::sqrt(6.75) *
                        std::pow(600000.0, -0.25))
            .epsilon(1e-10));

  CHECK_THROWS_AS(berry_esseen_bound(point_mass(1.0), 10, 1),
                  NotStandardized);
}

TEST_CASE("clt_distance exact") {
  const MeasureSpec boole = MeasureSpec::atomic(boole_seed());
  const RatePoint p1 = clt_distance(boole, 1, DistanceMethod::exact);
  CHECK(p1.distance == doctest::Approx(0.25));

  const RatePoint p2 = clt_distance(boole, 2, DistanceMethod::exact);
  // Independent staircase: dilated golden-ratio atoms against the
  // arcsine CDF, checked at both sides of every jump.
  const AtomicMeasure dil =
      monotone_power_exact(boole_seed(), 2).dilated(std::sqrt(2.0));
  const StepCdf cdf(dil);
  double sup = 0.0;
  for (const Atom& a : dil.atoms()) {
    sup = std::max(sup, std::fabs(arcsine_cdf(a.t) - cdf.value(a.t)));
    sup = std::max(sup, std::fabs(arcsine_cdf(a.t) - cdf.left_limit(a.t)));
  }
  CHECK(p2.distance == doctest::Approx(sup).epsilon(1e-12));
  CHECK(p2.distance < p1.distance);
}

TEST_CASE("clt_distance numeric agrees with exact") {
  const MeasureSpec boole = MeasureSpec::atomic(boole_seed());
  const RatePoint ex = clt_distance(boole, 8, DistanceMethod::exact);
  const RatePoint nu = clt_distance(boole, 8, DistanceMethod::numeric);
  CHECK(nu.method == DistanceMethod::numeric);
  CHECK(std::fabs(ex.distance - nu.distance) < 2e-3);
}

TEST_CASE("eps_n") {
  const MeasureSpec nu1 = MeasureSpec::nu(1.0);
  SplitMix64 rng(7);
  for (long n : {1L, 4L, 25L}) {
    for (int i = 0; i < 20; ++i) {
      const Complex z(rng.uniform(-3, 3), rng.uniform(0.2, 3));
      const Complex f = nu1_closed_form_F(n, z);
      const Complex expect = f * f - z * z + 2.0;
      CHECK(std::abs(eps_n(nu1, n, z) - expect) < 1e-9);
    }
  }

  // For the symmetric two-point seed, eps_n stays small on the line
  // y = 16 n^{-1/2}: |eps_n| <= 8 n^{-1/2} empirically beats the
  // second-moment bound there.
  const MeasureSpec boole = MeasureSpec::atomic(boole_seed());
  for (long n : {64L, 256L}) {
    const double y = 16.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i <= 20; ++i) {
      const double x = -3.0 + 6.0 * i / 20.0;
      CHECK(std::abs(eps_n(boole, n, Complex(x, y))) <
            8.0 / std::sqrt(static_cast<double>(n)));
    }
  }
}

TEST_CASE("nu1_closed_form_F matches direct branch arithmetic") {
  const Complex z(0, 1);
  const Complex w = z - 1.0;
  const Complex expect = 1.0 + cut_sqrt(w * w - 2.0);
  CHECK(std::abs(nu1_closed_form_F(1, z) - expect) < 1e-15);

  // And the iterated transform of the nu_1 spec reproduces it.
  const MeasureSpec nu1 = MeasureSpec::nu(1.0);
  SplitMix64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const long n = 1 + static_cast<long>(rng.uniform(0, 100));
    const Complex zz(rng.uniform(-4, 4), rng.uniform(0.1, 4));
    const Complex a = normalized_power_F(nu1, n, zz);
    const Complex b = nu1_closed_form_F(n, zz);
    CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));
  }
}

TEST_CASE("nu1_lower_bound") {
  CHECK(nu1_lower_bound(1) == doctest::Approx(0.2250791).epsilon(1e-6));
  CHECK(nu1_lower_bound(16) == doctest::Approx(0.1125395).epsilon(1e-6));
  CHECK(nu1_lower_bound(4) == doctest::Approx(1.0 / (2.0 * M_PI)));
  for (long n = 1; n < 100; ++n) {
    CHECK(nu1_lower_bound(n + 1) < nu1_lower_bound(n));
  }
}

TEST_CASE("rate_fit") {
  std::vector<RatePoint> pts;
  for (long n : {4L, 16L, 64L, 256L}) {
    pts.push_back({n, 3.0 * std::pow(static_cast<double>(n), -0.25),
                   DistanceMethod::exact});
  }
  const RateFit f = rate_fit(pts);
  CHECK(f.slope == doctest::Approx(-0.25).epsilon(1e-12));
  CHECK(f.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));

  for (auto& p : pts) {
    p.distance = std::pow(static_cast<double>(p.n), -0.125);
  }
  CHECK(rate_fit(pts).slope == doctest::Approx(-0.125).epsilon(1e-12));

  CHECK_THROWS_AS(rate_fit({pts[0]}), TooFewPoints);
  pts[1].distance = 0.0;
  CHECK_THROWS_AS(rate_fit(pts), NonPositiveDistance);
}
