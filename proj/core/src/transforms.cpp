#include "monoclt/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace monoclt {

namespace {

void require_upper(Complex z, const char* where) {
  if (!(z.imag() > 0.0)) {
    throw RealAxisInput(std::string(where) + ": Im z must be positive");
  }
}

Complex atomic_G(const AtomicMeasure& m, Complex z) {
  Complex s = 0.0;
  for (const Atom& a : m.atoms()) s += a.w / (z - Complex(a.t, 0.0));
  return s;
}

// Real G and G' from the stable partial-fraction sums.
double atomic_G_real(const AtomicMeasure& m, double x) {
  double s = 0.0;
  for (const Atom& a : m.atoms()) s += a.w / (x - a.t);
  return s;
}

// Extended-precision G for root polishing: near a zero of G the double
// partial fractions round each term's O(x) signal away, so plain Newton
// stalls one ulp short of exactly representable roots.
long double atomic_G_real_ld(const AtomicMeasure& m, long double x) {
  long double s = 0.0L;
  for (const Atom& a : m.atoms()) {
    s += static_cast<long double>(a.w) / (x - static_cast<long double>(a.t));
  }
  return s;
}

long double atomic_G_prime_real_ld(const AtomicMeasure& m, long double x) {
  long double s = 0.0L;
  for (const Atom& a : m.atoms()) {
    const long double d = x - static_cast<long double>(a.t);
    s -= static_cast<long double>(a.w) / (d * d);
  }
  return s;
}

double atomic_G_prime_real(const AtomicMeasure& m, double x) {
  double s = 0.0;
  for (const Atom& a : m.atoms()) {
    const double d = x - a.t;
    s -= a.w / (d * d);
  }
  return s;
}

// One application of F for atomic mu in Nevanlinna form, unrolled to
// real arithmetic for the long-orbit hot loops.
inline void atomic_step(const NevanlinnaData& nd, double& x, double& y) {
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
}

Complex closed_form_F(MeasureKind kind, double r, Complex z) {
  if (kind == MeasureKind::arcsine) return cut_sqrt(z * z - 2.0);
  const Complex s = z - r;
  return r + cut_sqrt(s * s - 2.0);
}

}  // namespace

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return out;
}

Complex eval_G(const MeasureSpec& m, Complex z) {
  if (z.imag() == 0.0) throw RealAxisInput("eval_G: z on the real axis");
  if (z.imag() < 0.0) return std::conj(eval_G(m, std::conj(z)));
  switch (m.kind()) {
    case MeasureKind::atomic:
      return atomic_G(m.atomic_measure(), z);
    case MeasureKind::arcsine:
    case MeasureKind::nu_r:
      return 1.0 / closed_form_F(m.kind(), m.r(), z);
  }
  return 0.0;
}

Complex eval_F(const MeasureSpec& m, Complex z) {
  require_upper(z, "eval_F");
  if (m.kind() == MeasureKind::atomic) {
    return 1.0 / atomic_G(m.atomic_measure(), z);
  }
  return closed_form_F(m.kind(), m.r(), z);
}

RationalFn measure_to_rational_F(const AtomicMeasure& m) {
  // G = P/Q with Q = prod (z - t_i), P = sum_i w_i prod_{j!=i} (z - t_j);
  // F = Q/P.
  const auto& atoms = m.atoms();
  Polynomial q{{1.0}};
  for (const Atom& a : atoms) q = poly_mul(q, Polynomial{{-a.t, 1.0}});
  Polynomial p;
  p.coeffs.assign(atoms.size(), 0.0);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    Polynomial term{{atoms[i].w}};
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if (j != i) term = poly_mul(term, Polynomial{{-atoms[j].t, 1.0}});
    }
    for (std::size_t k = 0; k < term.coeffs.size(); ++k) {
      p.coeffs[k] += term.coeffs[k];
    }
  }
  const double lead = p.coeffs.back();
  for (double& c : p.coeffs) c /= lead;
  for (double& c : q.coeffs) c /= lead;
  return RationalFn{q, p};
}

NevanlinnaData nevanlinna_extract(const AtomicMeasure& m) {
  NevanlinnaData nd;
  nd.shift = m.mean();
  const auto& atoms = m.atoms();
  if (atoms.size() == 1) return nd;  // nu is the zero measure
  nd.nu.reserve(atoms.size() - 1);
  for (std::size_t i = 0; i + 1 < atoms.size(); ++i) {
    // G decreases from +inf to -inf on (t_i, t_{i+1}); bisect its zero.
    double lo = atoms[i].t;
    double hi = atoms[i + 1].t;
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::fabs(lo));
         ++it) {
      const double mid = 0.5 * (lo + hi);
      if (atomic_G_real(m, mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    // Extended-precision Newton polish; G' < 0 between atoms, and the
    // iteration settles on the exactly representable root when one
    // exists (e.g. symmetric seeds with a zero at 0).
    long double pl = 0.5L * (static_cast<long double>(lo) + hi);
    for (int it = 0; it < 6; ++it) {
      const long double g = atomic_G_real_ld(m, pl);
      if (g == 0.0L) break;
      const long double next = pl - g / atomic_G_prime_real_ld(m, pl);
      if (!(next > atoms[i].t && next < atoms[i + 1].t)) break;
      if (next == pl) break;
      pl = next;
    }
    const double p = static_cast<double>(pl);
    const double w = -1.0 / atomic_G_prime_real(m, p);
    nd.nu.push_back(Atom{p, w});
  }
  const double var = m.variance();
  if (std::fabs(nd.total_mass() - var) > 1e-10 * (1.0 + var)) {
    throw NumericFailure("nevanlinna_extract: residues sum to " +
                         std::to_string(nd.total_mass()) + ", variance is " +
                         std::to_string(var));
  }
  return nd;
}

MomentConstants constants_c_d(const AtomicMeasure& m) {
  MomentConstants out;
  const NevanlinnaData nd = nevanlinna_extract(m);
  if (nd.nu.empty()) return out;
  const double mass = nd.total_mass();
  for (const Atom& a : nd.nu) out.c += a.w * std::fabs(a.t);
  std::vector<Atom> prob = nd.nu;
  for (Atom& a : prob) a.w /= mass;
  const AtomicMeasure nu_prob = AtomicMeasure::from_pairs(std::move(prob));
  out.m_nu = nu_prob.mean();
  out.m2_nu = nu_prob.moment(2);
  const NevanlinnaData rho = nevanlinna_extract(nu_prob);
  for (const Atom& a : rho.nu) out.d += a.w * std::fabs(a.t);
  return out;
}

Complex iterate_F(const MeasureSpec& m, long n, Complex z) {
  require_upper(z, "iterate_F");
  if (n <= 0) return z;
  if (m.kind() == MeasureKind::atomic) {
    const NevanlinnaData nd = nevanlinna_extract(m.atomic_measure());
    double x = z.real();
    double y = z.imag();
    for (long j = 0; j < n; ++j) atomic_step(nd, x, y);
    return Complex(x, y);
  }
  for (long j = 0; j < n; ++j) z = closed_form_F(m.kind(), m.r(), z);
  return z;
}

Complex normalized_power_F(const MeasureSpec& m, long n, Complex z) {
  require_upper(z, "normalized_power_F");
  if (n < 1) throw NotStandardized("normalized_power_F: n must be >= 1");
  const double s = std::sqrt(static_cast<double>(n));
  return iterate_F(m, n, s * z) / s;
}

namespace {

// Solve F(x) = target on the open interval (lo, hi) where F increases
// from -inf to +inf; pure midpoint bisection then Newton polish.
double solve_on_interval(const NevanlinnaData& nd, double target, double lo,
                         double hi) {
  for (int it = 0; it < 120 && hi - lo > 1e-14 * (1.0 + std::fabs(lo));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (nd.eval_F(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  const double tol = 1e-13 * (1.0 + std::fabs(target));
  for (int it = 0; it < 30; ++it) {
    const double f = nd.eval_F(x) - target;
    if (std::fabs(f) <= tol) return x;
    const double step = f / nd.eval_F_prime(x);
    double next = x - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  if (std::fabs(nd.eval_F(x) - target) <= tol) return x;
  throw NumericFailure("branch preimage failed to polish at target " +
                       std::to_string(target));
}

// Expand a bracket away from `start` in direction `dir` until
// F - target changes sign; width doubles from 1 and is capped at 1e6.
double expand_bracket(const NevanlinnaData& nd, double target, double start,
                      double dir) {
  double width = 1.0;
  while (width <= 1e6) {
    const double x = start + dir * width;
    const double f = nd.eval_F(x) - target;
    if (dir > 0.0 ? f >= 0.0 : f <= 0.0) return x;
    width *= 2.0;
  }
  throw BracketFailure("no sign change within width 1e6 of " +
                       std::to_string(start) + " (target " +
                       std::to_string(target) + ")");
}

}  // namespace

std::vector<double> branch_preimages(const NevanlinnaData& nd, double target) {
  std::vector<double> out;
  if (nd.nu.empty()) {
    // F(x) = x - shift.
    out.push_back(target + nd.shift);
    return out;
  }
  const std::size_t k = nd.nu.size();
  out.reserve(k + 1);
  // Unbounded left interval (-inf, p_1).
  {
    const double hi = nd.nu.front().t;
    const double lo = expand_bracket(nd, target, hi, -1.0);
    out.push_back(solve_on_interval(nd, target, lo, hi));
  }
  for (std::size_t i = 0; i + 1 < k; ++i) {
    out.push_back(
        solve_on_interval(nd, target, nd.nu[i].t, nd.nu[i + 1].t));
  }
  // Unbounded right interval (p_k, +inf).
  {
    const double lo = nd.nu.back().t;
    const double hi = expand_bracket(nd, target, lo, 1.0);
    out.push_back(solve_on_interval(nd, target, lo, hi));
  }
  return out;
}

AtomicMeasure monotone_power_exact(const AtomicMeasure& m, long n,
                                   std::size_t budget) {
  if (n < 1) throw NotStandardized("monotone power requires n >= 1");
  if (n == 1) return m;
  const NevanlinnaData nd = nevanlinna_extract(m);
  std::vector<Atom> cur = m.atoms();
  const std::size_t base = m.size();
  for (long step = 2; step <= n; ++step) {
    if (cur.size() > budget / base) {
      throw AtomBudgetExceeded("atom budget exceeded: level " +
                               std::to_string(step) + " needs " +
                               std::to_string(cur.size() * base) + " atoms");
    }
    std::vector<Atom> next;
    next.reserve(cur.size() * base);
    for (const Atom& a : cur) {
      for (double x : branch_preimages(nd, a.t)) {
        next.push_back(Atom{x, a.w / nd.eval_F_prime(x)});
      }
    }
    double total = 0.0;
    for (const Atom& a : next) total += a.w;
    if (std::fabs(total - 1.0) > 1e-10) {
      throw NumericFailure("power masses sum to " + std::to_string(total) +
                           " at level " + std::to_string(step));
    }
    cur = std::move(next);
  }
  return AtomicMeasure::from_pairs(std::move(cur));
}

}  // namespace monoclt
