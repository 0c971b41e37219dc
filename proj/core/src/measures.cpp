#include "monoclt/measures.hpp"

#include <algorithm>
#include <cmath>

namespace monoclt {

AtomicMeasure AtomicMeasure::from_pairs(std::vector<Atom> pairs) {
  if (pairs.empty()) {
    throw MassNotOne("atomic measure needs at least one atom");
  }
  for (const Atom& a : pairs) {
    if (!(a.w > 0.0)) {
      throw NonPositiveWeight("atom weight must be positive at t=" +
                              std::to_string(a.t));
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Atom& a, const Atom& b) { return a.t < b.t; });
  // Merge duplicate positions, adding weights.
  std::vector<Atom> merged;
  merged.reserve(pairs.size());
  for (const Atom& a : pairs) {
    if (!merged.empty() && merged.back().t == a.t) {
      merged.back().w += a.w;
    } else {
      merged.push_back(a);
    }
  }
  double total = 0.0;
  for (const Atom& a : merged) total += a.w;
  if (std::fabs(total - 1.0) > 1e-9) {
    throw MassNotOne("weights sum to " + std::to_string(total));
  }
  // Renormalize so the internal 1e-12 mass invariant holds exactly.
  for (Atom& a : merged) a.w /= total;
  return AtomicMeasure(std::move(merged));
}

double AtomicMeasure::mean() const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.w * a.t;
  return s;
}

double AtomicMeasure::variance() const {
  const double m = mean();
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.w * (a.t - m) * (a.t - m);
  return s;
}

double AtomicMeasure::moment(int k) const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.w * std::pow(a.t, k);
  return s;
}

double AtomicMeasure::absolute_moment(int k) const {
  double s = 0.0;
  for (const Atom& a : atoms_) s += a.w * std::pow(std::fabs(a.t), k);
  return s;
}

double AtomicMeasure::support_radius() const {
  return std::max(std::fabs(atoms_.front().t), std::fabs(atoms_.back().t));
}

AtomicMeasure AtomicMeasure::dilated(double s) const {
  if (!(s > 0.0)) throw NonPositiveScale("dilation scale must be positive");
  std::vector<Atom> out = atoms_;
  for (Atom& a : out) a.t /= s;
  return AtomicMeasure(std::move(out));
}

MeasureSpec MeasureSpec::atomic(AtomicMeasure m) {
  return MeasureSpec(MeasureKind::atomic, std::move(m), 0.0);
}

MeasureSpec MeasureSpec::arcsine() {
  return MeasureSpec(MeasureKind::arcsine, std::nullopt, 0.0);
}

MeasureSpec MeasureSpec::nu(double r) {
  if (!(r > 0.0)) throw NonPositiveR("nu_r requires r > 0");
  return MeasureSpec(MeasureKind::nu_r, std::nullopt, r);
}

double moment(const MeasureSpec& m, int k) {
  switch (m.kind()) {
    case MeasureKind::atomic:
      return m.atomic_measure().moment(k);
    case MeasureKind::arcsine:
      return integrate_arcsine([k](double t) { return std::pow(t, k); });
    case MeasureKind::nu_r:
      return integrate_nu_r(m.r(),
                            [k](double t) { return std::pow(t, k); });
  }
  return 0.0;
}

double absolute_moment(const MeasureSpec& m, int k) {
  switch (m.kind()) {
    case MeasureKind::atomic:
      return m.atomic_measure().absolute_moment(k);
    case MeasureKind::arcsine:
      return integrate_arcsine(
          [k](double t) { return std::pow(std::fabs(t), k); });
    case MeasureKind::nu_r:
      return integrate_nu_r(
          m.r(), [k](double t) { return std::pow(std::fabs(t), k); });
  }
  return 0.0;
}

StepCdf::StepCdf(const AtomicMeasure& m) {
  x_.reserve(m.size());
  cum_.reserve(m.size());
  double acc = 0.0;
  for (const Atom& a : m.atoms()) {
    acc += a.w;
    x_.push_back(a.t);
    cum_.push_back(acc);
  }
  cum_.back() = 1.0;
}

double StepCdf::value(double x) const {
  // Mass of atoms with t <= x.
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - x_.begin()) - 1];
}

double StepCdf::left_limit(double x) const {
  auto it = std::lower_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return 0.0;
  return cum_[static_cast<std::size_t>(it - x_.begin()) - 1];
}

double arcsine_cdf(double x) {
  const double s2 = std::sqrt(2.0);
  if (x <= -s2) return 0.0;
  if (x >= s2) return 1.0;
  return 0.5 + std::asin(x / s2) / M_PI;
}

NuSupport nu_r_support(double r) {
  if (!(r > 0.0)) throw NonPositiveR("nu_r requires r > 0");
  NuSupport s;
  s.atom = r - std::sqrt(2.0 + r * r);
  // Residue of 1/F at the zero of F: the band carries 1 - r/sqrt(2+r^2),
  // so this is the unique mass giving a probability measure.
  s.atom_mass = r / std::sqrt(2.0 + r * r);
  s.band_lo = r - std::sqrt(2.0);
  s.band_hi = r + std::sqrt(2.0);
  return s;
}

double nu_r_band_density(double r, double x) {
  const double s = x - r;
  const double rad = 2.0 - s * s;
  if (rad <= 0.0) return 0.0;
  return std::sqrt(rad) / (M_PI * (r * r + rad));
}

}  // namespace monoclt
