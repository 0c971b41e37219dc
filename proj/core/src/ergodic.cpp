#include "monoclt/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monoclt/rng.hpp"

namespace monoclt {

double BoundaryMap::apply(double x, std::size_t orbit_index) const {
  double acc = x - nd_.shift;
  for (const Atom& a : nd_.nu) {
    const double d = a.t - x;
    if (d == 0.0) {
      throw PoleHit("orbit hit the pole at x = " + std::to_string(a.t),
                    orbit_index);
    }
    acc += a.w / d;
  }
  if (!std::isfinite(acc)) {
    throw PoleHit("orbit left the finite range at x = " + std::to_string(x),
                  orbit_index);
  }
  return acc;
}

long occupation_time(const BoundaryMap& map, double x0, double a, double b,
                     long n) {
  long count = 0;
  double x = x0;
  for (long k = 0; k < n; ++k) {
    if (x >= a && x <= b) ++count;
    if (k + 1 < n) x = map.apply(x, static_cast<std::size_t>(k + 1));
  }
  return count;
}

double preimage_length_check(const AtomicMeasure& m, double a, double b) {
  if (a == b) return 0.0;
  const NevanlinnaData nd = nevanlinna_extract(m);
  const std::vector<double> lo = branch_preimages(nd, a);
  const std::vector<double> hi = branch_preimages(nd, b);
  double total = 0.0;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    total += std::fabs(hi[i] - lo[i]);
  }
  return total;
}

int choose_k(const NevanlinnaData& nd) {
  const double mass = nd.total_mass();
  for (int k = 1;; ++k) {
    double inside = 0.0;
    for (const Atom& a : nd.nu) {
      if (std::fabs(a.t) <= static_cast<double>(k)) inside += a.w;
    }
    if (inside >= 0.9 * mass) return k;
  }
}

bool cone_membership(Complex z, int k) {
  return std::fabs(z.real()) <= z.imag() &&
         z.imag() >= static_cast<double>(2 * k + 2);
}

long cone_invariance_check(const MeasureSpec& m, int k, long samples,
                           std::uint64_t seed) {
  const double y_lo = static_cast<double>(2 * k + 2);
  const double y_hi = 10.0 * y_lo;
  long violations = 0;
  for (long i = 0; i < samples; ++i) {
    SplitMix64 rng = keyed_stream(seed, static_cast<std::uint64_t>(i));
    const double y = rng.uniform(y_lo, y_hi);
    const double x = rng.uniform(-y, y);
    if (!cone_membership(eval_F(m, Complex(x, y)), k)) ++violations;
  }
  return violations;
}

double ReturnSeries::comparator(long n) const {
  return std::sqrt(2.0 * static_cast<double>(n) / variance);
}

ReturnSeries return_sequence_partial(const MeasureSpec& m, int k, long n) {
  const double mean = moment(m, 1);
  const double var = moment(m, 2) - mean * mean;
  if (std::fabs(mean) > 1e-9 || !(var > 0.0)) {
    throw NotStandardized("return sequence requires mean 0 and positive "
                          "variance");
  }
  ReturnSeries out;
  out.base = Complex(0.0, static_cast<double>(2 * k + 2));
  out.variance = var;
  out.partial_sums.reserve(static_cast<std::size_t>(n));

  double sum = 0.0;
  if (m.kind() == MeasureKind::atomic) {
    const NevanlinnaData nd = nevanlinna_extract(m.atomic_measure());
    double x = out.base.real();
    double y = out.base.imag();
    for (long j = 1; j <= n; ++j) {
      double re = x - nd.shift;
      double im = y;
      for (const Atom& a : nd.nu) {
        const double d = a.t - x;
        const double q = d * d + y * y;
        re += a.w * d / q;
        im += a.w * y / q;
      }
      x = re;
      y = im;
      // Im(-1/z_j) = y / |z_j|^2 > 0.
      sum += y / (x * x + y * y);
      out.partial_sums.push_back(sum);
    }
    out.final_point = Complex(x, y);
  } else {
    Complex z = out.base;
    for (long j = 1; j <= n; ++j) {
      z = eval_F(m, z);
      sum += z.imag() / std::norm(z);
      out.partial_sums.push_back(sum);
    }
    out.final_point = z;
  }
  return out;
}

double half_gaussian_cdf(double t) {
  if (t < 0.0) throw NegativeT("half_gaussian_cdf: t must be >= 0");
  return std::erf(t / std::sqrt(M_PI));
}

OccupationResult darling_kac_mc(const AtomicMeasure& m, double a, double b,
                                long n, long orbits, std::uint64_t seed) {
  if (!(b > a)) throw NotStandardized("darling_kac_mc: empty interval");
  const BoundaryMap map(m);
  OccupationResult out;
  out.n = n;
  out.orbits = orbits;
  out.seed = seed;
  const double norm = M_PI / std::sqrt(2.0 * static_cast<double>(n));

  out.normalized.reserve(static_cast<std::size_t>(orbits));
  for (long i = 0; i < orbits; ++i) {
    SplitMix64 rng = keyed_stream(seed, static_cast<std::uint64_t>(i));
    const double x0 = rng.uniform(a, b);
    try {
      const long count = occupation_time(map, x0, a, b, n);
      out.normalized.push_back(static_cast<double>(count) * norm);
    } catch (const PoleHit&) {
      ++out.dropped;  // exact hits have measure zero; drop, never perturb
    }
  }
  std::sort(out.normalized.begin(), out.normalized.end());

  const double N = static_cast<double>(out.normalized.size());
  double ks = 0.0;
  for (std::size_t i = 0; i < out.normalized.size(); ++i) {
    const double limit = half_gaussian_cdf(out.normalized[i]);
    ks = std::max(ks, std::fabs(static_cast<double>(i + 1) / N - limit));
    ks = std::max(ks, std::fabs(static_cast<double>(i) / N - limit));
  }
  out.ks = ks;
  return out;
}

}  // namespace monoclt
