#pragma once

#include <optional>
#include <vector>

#include "monoclt/errors.hpp"

namespace monoclt {

struct Atom {
  double t;  // position
  double w;  // weight
};

// Finitely atomic probability measure. Positions strictly increasing,
// weights positive and summing to 1 (renormalized to machine precision
// after the 1e-9 input gate).
class AtomicMeasure {
 public:
  static AtomicMeasure from_pairs(std::vector<Atom> pairs);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }

  double mean() const;
  double variance() const;
  double moment(int k) const;
  double absolute_moment(int k) const;
  double support_radius() const;

  // Atoms scaled to t/s with unchanged weights.
  AtomicMeasure dilated(double s) const;

 private:
  explicit AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<Atom> atoms_;
};

enum class MeasureKind { atomic, arcsine, nu_r };

// Tagged measure description: finitely atomic, the arcsine law on
// (-sqrt2, sqrt2), or the nu_r family (point mass plus a band).
class MeasureSpec {
 public:
  static MeasureSpec atomic(AtomicMeasure m);
  static MeasureSpec arcsine();
  static MeasureSpec nu(double r);

  MeasureKind kind() const { return kind_; }
  const AtomicMeasure& atomic_measure() const { return *atomic_; }
  double r() const { return r_; }
  bool is_point_mass() const {
    return kind_ == MeasureKind::atomic && atomic_->size() == 1;
  }

 private:
  MeasureSpec(MeasureKind k, std::optional<AtomicMeasure> a, double r)
      : kind_(k), atomic_(std::move(a)), r_(r) {}
  MeasureKind kind_;
  std::optional<AtomicMeasure> atomic_;
  double r_ = 0.0;
};

double moment(const MeasureSpec& m, int k);
double absolute_moment(const MeasureSpec& m, int k);

// Right-continuous staircase CDF of an atomic measure.
class StepCdf {
 public:
  explicit StepCdf(const AtomicMeasure& m);

  double value(double x) const;       // C(x) = mu((-inf, x])
  double left_limit(double x) const;  // C(x-)
  const std::vector<double>& jumps() const { return x_; }
  const std::vector<double>& cumulative() const { return cum_; }

 private:
  std::vector<double> x_;
  std::vector<double> cum_;
};

inline StepCdf step_cdf(const AtomicMeasure& m) { return StepCdf(m); }

// 0 below -sqrt2, 1 above sqrt2, else 1/2 + asin(x/sqrt2)/pi.
double arcsine_cdf(double x);

struct NuSupport {
  double atom;       // -sqrt(2+r^2) + r
  double atom_mass;  // r / sqrt(2+r^2)
  double band_lo;    // -sqrt2 + r
  double band_hi;    // sqrt2 + r
};
NuSupport nu_r_support(double r);

// Density of the continuous part of nu_r at x inside its band.
double nu_r_band_density(double r, double x);

// Integral of g against the arcsine law, endpoint singularities removed
// by the substitution u = sqrt(sqrt2 -+ t).
template <class Func>
double integrate_arcsine(Func&& g, double abs_tol = 1e-10);

// Integral of g against nu_r (atom plus band).
template <class Func>
double integrate_nu_r(double r, Func&& g, double abs_tol = 1e-10);

}  // namespace monoclt

#include "monoclt/measures_inl.hpp"
