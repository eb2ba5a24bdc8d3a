#include "tanhscatter/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace tanhscatter::model {

namespace {

constexpr double kThresholdTol = 1e-9;

// Signed momentum sqrt(s^2 - m^2)/(2b) for one channel, s = E +- a.
// Propagating: real, sign of s (group velocity direction). Evanescent:
// +i(positive) so e^{2ib mu x} decays rightward.
Complex channel_momentum(double s, double m, double b, bool* propagating) {
  const double disc = (s - m) * (s + m);
  if (disc >= 0.0) {
    *propagating = true;
    const double mag = std::sqrt(disc) / (2.0 * b);
    return Complex(s < 0.0 ? -mag : mag, 0.0);
  }
  *propagating = false;
  return Complex(0.0, std::sqrt(-disc) / (2.0 * b));
}

}  // namespace

PotentialParams make_params(double a, double b, double m) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(m)))
    throw Error("PotentialParams: non-finite parameter");
  if (!(b > 0.0)) throw Error("PotentialParams: b must be > 0");
  if (m < 0.0) throw Error("PotentialParams: m must be >= 0");
  PotentialParams p;
  p.b = b;
  p.m = m;
  if (a < 0.0) {
    p.a = -a;
    p.mirrored = true;
  } else {
    p.a = a;
  }
  return p;
}

double potential_value(const PotentialParams& p, double x) {
  // Mirrored params still describe the original a < 0 profile.
  const double v = p.a * std::tanh(p.b * x);
  return p.mirrored ? -v : v;
}

Dispersion dispersion(const PotentialParams& p, double E) {
  Dispersion d;
  d.nu = channel_momentum(E + p.a, p.m, p.b, &d.nu_propagating);
  d.mu = channel_momentum(E - p.a, p.m, p.b, &d.mu_propagating);
  const double disc = p.b * p.b - 4.0 * p.a * p.a;
  if (disc >= 0.0)
    d.lam = Complex((p.b + std::sqrt(disc)) / (2.0 * p.b), 0.0);
  else
    d.lam = Complex(0.5, std::sqrt(-disc) / (2.0 * p.b));
  return d;
}

EnergyRegion classify_region(const PotentialParams& p, double E) {
  EnergyRegion r;
  const double tol = kThresholdTol * std::max(1.0, std::abs(E));
  for (double t : {p.a + p.m, p.a - p.m, -p.a + p.m, -p.a - p.m})
    if (std::abs(E - t) <= tol) r.at_threshold = true;

  const Dispersion d = dispersion(p, E);
  if (d.nu_propagating && d.mu_propagating) {
    if (d.nu.real() < 0.0)
      r.kind = RegionKind::NegativeContinuum;
    else if (d.mu.real() < 0.0)
      r.kind = RegionKind::Superradiant;
    else
      r.kind = RegionKind::FullyPropagating;
  } else if (d.nu_propagating) {
    r.kind = RegionKind::TransmittedEvanescent;
  } else {
    // Covers both the mu-only case and (a < m) energies where neither
    // channel propagates: either way there is no incident wave.
    r.kind = RegionKind::IncidentEvanescent;
  }
  return r;
}

Dispersion oriented_dispersion(const PotentialParams& p, double E) {
  Dispersion d = dispersion(p, E);
  if (p.mirrored) {
    std::swap(d.nu, d.mu);
    std::swap(d.nu_propagating, d.mu_propagating);
  }
  return d;
}

EnergyRegion oriented_region(const PotentialParams& p, double E) {
  EnergyRegion r = classify_region(p, E);
  if (p.mirrored) {
    if (r.kind == RegionKind::TransmittedEvanescent)
      r.kind = RegionKind::IncidentEvanescent;
    else if (r.kind == RegionKind::IncidentEvanescent)
      r.kind = RegionKind::TransmittedEvanescent;
  }
  return r;
}

const char* to_label(RegionKind kind) {
  switch (kind) {
    case RegionKind::FullyPropagating: return "fully_propagating";
    case RegionKind::TransmittedEvanescent: return "transmitted_evanescent";
    case RegionKind::Superradiant: return "superradiant";
    case RegionKind::IncidentEvanescent: return "incident_evanescent";
    case RegionKind::NegativeContinuum: return "negative_continuum";
  }
  return "unknown";
}

}  // namespace tanhscatter::model
