#include <doctest.h>

#include <cmath>

#include "monoclt/ergodic.hpp"
#include "monoclt/rng.hpp"
#include "test_helpers.hpp"

using namespace monoclt;
using namespace monoclt::test;

namespace {

// erf via its Maclaurin series, accurate for small arguments.
double erf_series(double x) {
  double term = x;
  double sum = 0.0;
  for (int k = 0; k < 40; ++k) {
    sum += term / (2 * k + 1);
    term *= -x * x / (k + 1);
  }
  return 2.0 / std::sqrt(M_PI) * sum;
}

}  // namespace

TEST_CASE("boundary_map is x - 1/x for the symmetric two-point seed") {
  const AtomicMeasure boole = boole_seed();
  CHECK(boundary_map(boole, 0.5) == doctest::Approx(-1.5));
  CHECK(boundary_map(boole, 1.0) == doctest::Approx(0.0));
  CHECK(boundary_map(boole, -2.0) == doctest::Approx(-1.5));
  CHECK_THROWS_AS(boundary_map(boole, 0.0), PoleHit);
}

TEST_CASE("occupation_time") {
  const BoundaryMap map(boole_seed());
  // Orbit of 0.5: 0.5, -1.5, -0.8333..., ...; only the start is in [0,1].
  CHECK(occupation_time(map, 0.5, 0.0, 1.0, 3) == 1);
  // A huge interval captures every step.
  CHECK(occupation_time(map, 0.5, -1e9, 1e9, 50) == 50);
  // Far-field starts drift slowly and never reach [0,1] in few steps.
  CHECK(occupation_time(map, 1e6, 0.0, 1.0, 100) == 0);
}

TEST_CASE("preimage_length_check preserves Lebesgue measure") {
  const AtomicMeasure boole = boole_seed();
  CHECK(preimage_length_check(boole, 0.0, 1.0) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(preimage_length_check(boole, -1.0, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-10));
  CHECK(preimage_length_check(boole, 0.5, 0.5) ==
        doctest::Approx(0.0).epsilon(1e-12));

  CHECK(preimage_length_check(skewed_seed(), -0.3, 0.9) ==
        doctest::Approx(1.2).epsilon(1e-10));

  // Seeded random intervals.
  SplitMix64 rng(314);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.uniform(-5, 5);
    const double b = a + rng.uniform(0, 3);
    CHECK(preimage_length_check(boole, a, b) ==
          doctest::Approx(b - a).epsilon(1e-9));
  }
}

TEST_CASE("choose_k") {
  CHECK(choose_k(nevanlinna_extract(boole_seed())) == 1);   // nu = delta_0
  CHECK(choose_k(nevanlinna_extract(skewed_seed())) == 1);  // delta_{.707}

  NevanlinnaData nd;
  nd.shift = 0.0;
  nd.nu = {{0.0, 0.5}, {2.5, 0.5}};
  CHECK(choose_k(nd) == 3);
}

TEST_CASE("cone_membership") {
  CHECK(cone_membership(Complex(3, 4), 1));
  CHECK_FALSE(cone_membership(Complex(5, 4), 1));
  CHECK_FALSE(cone_membership(Complex(0, 3.9), 1));
  CHECK(cone_membership(Complex(0, 4), 1));
  // F(4i) = 4.25i for the two-point seed stays in the cone.
  const Complex f = eval_F(MeasureSpec::atomic(boole_seed()), Complex(0, 4));
  CHECK(cone_membership(f, 1));
}

TEST_CASE("cone_invariance_check finds no exits") {
  CHECK(cone_invariance_check(MeasureSpec::atomic(boole_seed()), 1, 2000,
                              17) == 0);
  CHECK(cone_invariance_check(MeasureSpec::atomic(skewed_seed()), 1, 2000,
                              17) == 0);
}

TEST_CASE("return_sequence_partial") {
  const MeasureSpec boole = MeasureSpec::atomic(boole_seed());
  const ReturnSeries rs = return_sequence_partial(boole, 1, 2);
  // z_0 = 4i, z_1 = 4.25i, z_2 = (4.25 + 1/4.25)i;
  // S(2) = 1/4.25 + 1/(4.25 + 1/4.25).
  const double y1 = 4.25;
  const double y2 = y1 + 1.0 / y1;
  CHECK(rs.base == Complex(0, 4));
  CHECK(rs.partial_sums[0] == doctest::Approx(1.0 / y1).epsilon(1e-14));
  CHECK(rs.partial_sums[1] ==
        doctest::Approx(1.0 / y1 + 1.0 / y2).epsilon(1e-14));
  CHECK(rs.final_point.imag() == doctest::Approx(y2));
  CHECK(rs.comparator(2) == doctest::Approx(2.0));  // sqrt(2*2/1)

  CHECK_THROWS_AS(
      return_sequence_partial(MeasureSpec::atomic(point_mass(1.0)), 1, 2),
      NotStandardized);
}

TEST_CASE("half_gaussian_cdf") {
  CHECK(half_gaussian_cdf(0.0) == 0.0);
  CHECK(half_gaussian_cdf(50.0) == doctest::Approx(1.0));
  CHECK(half_gaussian_cdf(std::sqrt(M_PI)) ==
        doctest::Approx(erf_series(1.0)).epsilon(1e-12));
  CHECK(half_gaussian_cdf(std::sqrt(M_PI)) ==
        doctest::Approx(0.8427008).epsilon(1e-6));
  CHECK_THROWS_AS(half_gaussian_cdf(-0.1), NegativeT);
}

TEST_CASE("darling_kac_mc is deterministic and KS-bounded") {
  const AtomicMeasure boole = boole_seed();
  const OccupationResult a = darling_kac_mc(boole, 0.0, 1.0, 2000, 200, 42);
  const OccupationResult b = darling_kac_mc(boole, 0.0, 1.0, 2000, 200, 42);
  REQUIRE(a.normalized.size() == b.normalized.size());
  for (std::size_t i = 0; i < a.normalized.size(); ++i) {
    CHECK(a.normalized[i] == b.normalized[i]);
  }
  CHECK(a.ks == b.ks);
  CHECK(a.dropped == 0);
  CHECK(a.ks < 0.25);

  // Sorted output and a sane single-orbit KS.
  for (std::size_t i = 1; i < a.normalized.size(); ++i) {
    CHECK(a.normalized[i] >= a.normalized[i - 1]);
  }
  const OccupationResult one = darling_kac_mc(boole, 0.0, 1.0, 100, 1, 7);
  CHECK(one.ks <= 1.0);

  const OccupationResult c = darling_kac_mc(boole, 0.0, 1.0, 2000, 200, 43);
  CHECK(a.ks != c.ks);
}
