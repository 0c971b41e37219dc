#include <doctest.h>

#include <cmath>

#include "monoclt/inversion.hpp"
#include "monoclt/quadrature.hpp"
#include "monoclt/rng.hpp"
#include "test_helpers.hpp"

using namespace monoclt;
using namespace monoclt::test;

namespace {

std::vector<double> uniform_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return g;
}

// Brute-force sup |C_mu - C_gamma| over a dense scan, evaluating both
// sides of every jump.
double kolmogorov_scan_oracle(const AtomicMeasure& m, int grid_n) {
  const StepCdf cdf(m);
  double sup = 0.0;
  for (int i = 0; i <= grid_n; ++i) {
    const double x = -2.0 + 4.0 * static_cast<double>(i) / grid_n;
    sup = std::max(sup, std::fabs(arcsine_cdf(x) - cdf.value(x)));
  }
  for (const Atom& a : m.atoms()) {
    sup = std::max(sup, std::fabs(arcsine_cdf(a.t) - cdf.value(a.t)));
    sup = std::max(sup, std::fabs(arcsine_cdf(a.t) - cdf.left_limit(a.t)));
  }
  return sup;
}

}  // namespace

TEST_CASE("stieltjes_cdf recovers the arcsine CDF") {
  const FEval f_gamma = [](Complex z) { return cut_sqrt(z * z - 2.0); };
  const CdfCurve c = stieltjes_cdf(f_gamma, 1e-5, uniform_grid(-4, 4, 4001));
  CHECK(c.cdf[2000] == doctest::Approx(0.5).epsilon(1e-3));    // x = 0
  CHECK(c.cdf[2500] == doctest::Approx(0.75).epsilon(1e-3));   // x = 1
  for (std::size_t i = 1; i < c.cdf.size(); ++i) {
    CHECK(c.cdf[i] >= c.cdf[i - 1] - 1e-9);
  }
}

TEST_CASE("stieltjes_cdf of a point mass is the smoothed Heaviside") {
  const FEval f = [](Complex z) { return z; };
  const double y = 1e-4;
  const CdfCurve c = stieltjes_cdf(f, y, uniform_grid(-2, 2, 2001));
  for (int i : {200, 900, 1000, 1100, 1800}) {
    const double expect = 0.5 + std::atan(c.x[i] / y) / M_PI;
    CHECK(c.cdf[i] == doctest::Approx(expect).epsilon(5e-4));
  }
  CHECK_THROWS_AS(stieltjes_cdf(f, -1.0, uniform_grid(-2, 2, 11)),
                  NonPositiveY);
  CHECK_THROWS_AS(stieltjes_cdf(f, 1e-4, std::vector<double>{0.0, -1.0}),
                  UnsortedGrid);
}

TEST_CASE("stieltjes_cdf matches the exact step CDF between atoms") {
  const AtomicMeasure p6 =
      monotone_power_exact(boole_seed(), 6).dilated(std::sqrt(6.0));
  const MeasureSpec spec = MeasureSpec::atomic(p6);
  const FEval f = [&](Complex z) { return eval_F(spec, z); };
  const double y = 1e-5;
  const CdfCurve c = stieltjes_cdf(f, y, uniform_grid(-4, 4, 16001));
  const StepCdf exact(p6);
  int checked = 0;
  for (std::size_t i = 0; i + 1 < p6.size(); ++i) {
    const double gap = p6.atoms()[i + 1].t - p6.atoms()[i].t;
    if (gap < 100.0 * y) continue;
    const double mid = 0.5 * (p6.atoms()[i].t + p6.atoms()[i + 1].t);
    const std::size_t k = static_cast<std::size_t>((mid + 4.0) / 8.0 * 16000);
    CHECK(std::fabs(c.cdf[k] - exact.value(c.x[k])) < 1e-3);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("kolmogorov_exact") {
  CHECK(kolmogorov_exact(boole_seed()) == doctest::Approx(0.25));

  const AtomicMeasure p2 =
      monotone_power_exact(boole_seed(), 2).dilated(std::sqrt(2.0));
  const double d2 = kolmogorov_exact(p2);
  CHECK(d2 > 0.0);
  CHECK(d2 < 0.25);
  CHECK(d2 == doctest::Approx(kolmogorov_scan_oracle(p2, 1000000))
                  .epsilon(1e-12));

  // Quantile discretization of the arcsine law itself.
  std::vector<Atom> atoms;
  const int nq = 10000;
  for (int i = 0; i < nq; ++i) {
    const double p = (i + 0.5) / nq;
    atoms.push_back(
        Atom{std::sqrt(2.0) * std::sin(M_PI * (p - 0.5)), 1.0 / nq});
  }
  const AtomicMeasure quant = AtomicMeasure::from_pairs(std::move(atoms));
  CHECK(kolmogorov_exact(quant) <= 1e-4);
  CHECK(kolmogorov_exact(quant) ==
        doctest::Approx(kolmogorov_scan_oracle(quant, 1000000))
            .epsilon(1e-10));
}

TEST_CASE("kolmogorov_grid is a pseudometric") {
  CdfCurve a;
  a.x = uniform_grid(-1, 1, 101);
  a.y = 1e-3;
  for (double x : a.x) a.cdf.push_back(std::min(1.0, std::max(0.0, x + 0.5)));
  CdfCurve b = a;
  CHECK(kolmogorov_grid(a, b) == 0.0);
  for (double& v : b.cdf) v = std::min(1.0, v + 0.01);
  CHECK(kolmogorov_grid(a, b) == doctest::Approx(0.01));
  CHECK(kolmogorov_grid(b, a) == kolmogorov_grid(a, b));

  CdfCurve c = a;
  for (double& v : c.cdf) v = std::min(1.0, v + 0.005);
  CHECK(kolmogorov_grid(a, b) <=
        kolmogorov_grid(a, c) + kolmogorov_grid(c, b) + 1e-15);

  CdfCurve other;
  other.x = uniform_grid(-2, 1, 101);
  other.cdf = a.cdf;
  CHECK_THROWS_AS(kolmogorov_grid(a, other), GridMismatch);
}

TEST_CASE("bai_rhs_arcsine") {
  const FEval f_gamma = [](Complex z) { return cut_sqrt(z * z - 2.0); };
  for (double y : {0.01, 0.05}) {
    CHECK(bai_rhs_arcsine(f_gamma, y, std::sqrt(2.0)) ==
          doctest::Approx(11.0 * std::sqrt(y)).epsilon(1e-6));
  }

  const MeasureSpec boole = MeasureSpec::atomic(boole_seed());
  const FEval f_boole = [&](Complex z) { return eval_F(boole, z); };
  const double rhs = bai_rhs_arcsine(f_boole, 0.01, 1.0);
  CHECK(rhs >= 0.25);  // must dominate the exact Kolmogorov distance

  CHECK_THROWS_AS(bai_rhs_arcsine(f_gamma, 1.0 / (4.0 * std::sqrt(3.0)),
                                  std::sqrt(2.0)),
                  YOutOfRange);
}

TEST_CASE("lemma22_lhs") {
  const double y = 0.01;
  CHECK(lemma22_lhs([](double) { return Complex(0, 0); }, y) <= 1e-8);

  const double v = lemma22_lhs([y](double) { return Complex(y, 0); }, y);
  CHECK(v > 0.0);
  CHECK(v <= 39.0 * std::sqrt(y));

  CHECK_THROWS_AS(
      lemma22_lhs([y](double) { return Complex(2.0 * y, 0); }, y),
      EpsilonTooLarge);
}

TEST_CASE("nu_r mass recovered from its transform") {
  // Atom mass plus the band density integrated from the closed-form F.
  const MeasureSpec nu1 = MeasureSpec::nu(1.0);
  const NuSupport s = nu_r_support(1.0);
  const double y = 1e-7;
  QuadOptions opt;
  opt.abs_tol = 1e-9;
  const double band = adaptive_quad(
      [&](double x) {
        return -eval_G(nu1, Complex(x, y)).imag() / M_PI;
      },
      s.band_lo + 1e-6, s.band_hi - 1e-6, opt);
  CHECK(s.atom_mass + band == doctest::Approx(1.0).epsilon(1e-4));
}
