#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "monoclt/measures.hpp"

namespace monoclt {

using Complex = std::complex<double>;

// Square root analytic on C \ [0,+inf) with sqrt(-1) = i.
inline Complex cut_sqrt(Complex w) {
  return Complex(0.0, 1.0) * std::sqrt(-w);
}

// Dense real-coefficient polynomial, ascending order.
struct Polynomial {
  std::vector<double> coeffs;

  double eval(double x) const {
    double s = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * x + coeffs[i];
    return s;
  }
  Complex eval(Complex z) const {
    Complex s = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) s = s * z + coeffs[i];
    return s;
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

// F as a ratio of polynomials; denominator normalized monic.
struct RationalFn {
  Polynomial num;
  Polynomial den;

  Complex eval(Complex z) const { return num.eval(z) / den.eval(z); }
  double eval(double x) const { return num.eval(x) / den.eval(x); }
};

// Data of F(z) = z - shift + sum_i w_i / (p_i - z).  nu carries total
// mass var(mu); empty for a point mass.
struct NevanlinnaData {
  double shift = 0.0;
  std::vector<Atom> nu;

  double total_mass() const {
    double s = 0.0;
    for (const Atom& a : nu) s += a.w;
    return s;
  }
  Complex eval_F(Complex z) const {
    Complex acc(z.real() - shift, z.imag());
    for (const Atom& a : nu) acc += a.w / (Complex(a.t, 0.0) - z);
    return acc;
  }
  double eval_F(double x) const {
    double acc = x - shift;
    for (const Atom& a : nu) acc += a.w / (a.t - x);
    return acc;
  }
  // F'(x) = 1 + sum w / (p - x)^2, valid off the poles.
  double eval_F_prime(double x) const {
    double acc = 1.0;
    for (const Atom& a : nu) {
      const double d = a.t - x;
      acc += a.w / (d * d);
    }
    return acc;
  }
};

Complex eval_G(const MeasureSpec& m, Complex z);
Complex eval_F(const MeasureSpec& m, Complex z);

RationalFn measure_to_rational_F(const AtomicMeasure& m);

// Mean shift plus the measure at the poles of F, weights -1/G'(pole).
NevanlinnaData nevanlinna_extract(const AtomicMeasure& m);

struct MomentConstants {
  double c = 0.0;     // first absolute moment of nu
  double d = 0.0;     // first absolute moment of rho
  double m_nu = 0.0;  // mean of nu (probability-normalized)
  double m2_nu = 0.0; // second moment of nu (probability-normalized)
};
MomentConstants constants_c_d(const AtomicMeasure& m);

Complex iterate_F(const MeasureSpec& m, long n, Complex z);

// F-transform of the dilated power mu_n: F^{on}(sqrt(n) z) / sqrt(n).
Complex normalized_power_F(const MeasureSpec& m, long n, Complex z);

// The N real solutions of F(x) = target, one per maximal interval
// between consecutive poles.  Bracketed bisection then Newton polish to
// |F(x) - target| <= 1e-13 (1 + |target|).
std::vector<double> branch_preimages(const NevanlinnaData& nd, double target);

inline constexpr std::size_t kDefaultAtomBudget = std::size_t{1} << 20;

AtomicMeasure monotone_power_exact(const AtomicMeasure& m, long n,
                                   std::size_t budget = kDefaultAtomBudget);

}  // namespace monoclt
