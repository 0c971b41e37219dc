#pragma once

#include <cstdint>
#include <vector>

#include "monoclt/measures.hpp"
#include "monoclt/transforms.hpp"

namespace monoclt {

// Boundary restriction T x = F(x) of an atomic measure's F-transform;
// defined off the poles of F (atoms map to 0, which is fine).
class BoundaryMap {
 public:
  explicit BoundaryMap(const AtomicMeasure& m)
      : nd_(nevanlinna_extract(m)) {}

  // Throws PoleHit when x lands exactly on a pole of F.
  double apply(double x, std::size_t orbit_index = 0) const;
  const NevanlinnaData& data() const { return nd_; }

 private:
  NevanlinnaData nd_;
};

inline double boundary_map(const AtomicMeasure& m, double x) {
  return BoundaryMap(m).apply(x);
}

// #{k in [0, n-1] : T^k x0 in [a, b]}.
long occupation_time(const BoundaryMap& map, double x0, double a, double b,
                     long n);

// Total length of T^{-1}([a,b]) summed over branches; equals b - a for
// a Lebesgue-preserving map.
double preimage_length_check(const AtomicMeasure& m, double a, double b);

// Minimal positive integer k with nu([-k,k]) >= 0.9 nu(R).
int choose_k(const NevanlinnaData& nd);

// Gamma = { x+iy : |x| <= y, y >= 2k+2 }.
bool cone_membership(Complex z, int k);

// Draw `samples` points uniformly from the slab
// y in [2k+2, 10(2k+2)], |x| <= y, apply F, count exits from Gamma.
long cone_invariance_check(const MeasureSpec& m, int k, long samples,
                           std::uint64_t seed);

// Partial sums of Im(-1/z_j) along the orbit of (2k+2)i, with the
// sqrt(2n/var) comparator.
struct ReturnSeries {
  Complex base;
  double variance = 1.0;
  std::vector<double> partial_sums;  // S(1), ..., S(n)
  Complex final_point;               // z_n

  double comparator(long n) const;
  double ratio(long n) const { return partial_sums[n - 1] / comparator(n); }
};

ReturnSeries return_sequence_partial(const MeasureSpec& m, int k, long n);

// (2/pi) int_0^t exp(-x^2/pi) dx = erf(t / sqrt(pi)).
double half_gaussian_cdf(double t);

struct OccupationResult {
  long n = 0;
  long orbits = 0;
  std::uint64_t seed = 0;
  long dropped = 0;                // orbits lost to exact pole hits
  std::vector<double> normalized;  // sorted S_n^A * pi / sqrt(2n)
  double ks = 0.0;                 // distance to the half-Gaussian limit
};

OccupationResult darling_kac_mc(const AtomicMeasure& m, double a, double b,
                                long n, long orbits, std::uint64_t seed);

}  // namespace monoclt
