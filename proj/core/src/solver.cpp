#include "tanhscatter/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tanhscatter::solver {

namespace {

using model::Dispersion;
using model::EnergyRegion;
using model::PotentialParams;
using model::RegionKind;

const Complex kI(0.0, 1.0);

EnergyRegion checked_region(const PotentialParams& p, double E) {
  const EnergyRegion r = model::oriented_region(p, E);
  if (r.at_threshold)
    throw ThresholdError("amplitudes singular: E = " + std::to_string(E) +
                         " is at a channel threshold");
  if (r.kind == RegionKind::IncidentEvanescent)
    throw PropagationError("incident channel evanescent at E = " +
                           std::to_string(E));
  return r;
}

Amplitudes amplitudes_from(const Dispersion& d) {
  const Complex inu = kI * d.nu;
  const Complex imu = kI * d.mu;
  const Complex lam = d.lam;
  Amplitudes amp;
  amp.A = specfun::gamma_ratio({1.0 - 2.0 * imu, -2.0 * inu},
                               {-inu + lam - imu, 1.0 - inu - lam - imu});
  amp.B = specfun::gamma_ratio({1.0 - 2.0 * imu, 2.0 * inu},
                               {inu + lam - imu, 1.0 + inu - lam - imu});
  return amp;
}

// log(1 + e^t) and e^t/(1 + e^t) without overflow.
double softplus(double t) {
  return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}
double sigmoid(double t) {
  if (t >= 0.0) return 1.0 / (1.0 + std::exp(-t));
  const double e = std::exp(t);
  return e / (1.0 + e);
}

struct Kernel {
  Complex phi, dphi;
};

// Left-side kernel e^{s 2ib nu x} (1 + e^{2bx})^lam F(P, Q; C; -e^{2bx}),
// s = +1 incident, s = -1 reflected.
Kernel left_kernel(const Dispersion& d, double b, double x, double s) {
  const Complex inu = kI * d.nu;
  const Complex imu = kI * d.mu;
  const Complex lam = d.lam;
  Complex P, Q, C;
  if (s > 0.0) {
    P = inu + lam - imu;
    Q = inu + lam + imu;
    C = 1.0 + 2.0 * inu;
  } else {
    P = -inu + lam + imu;
    Q = -inu + lam - imu;
    C = 1.0 - 2.0 * inu;
  }
  const double t = 2.0 * b * x;
  const Complex z = -std::exp(t);
  const Complex pref = std::exp(lam * softplus(t) + s * 2.0 * b * inu * x);
  const Complex F = specfun::hyp2f1(P, Q, C, z);
  const Complex dF = (P * Q / C) *
                     specfun::hyp2f1(P + 1.0, Q + 1.0, C + 1.0, z) *
                     (2.0 * b * z);
  const Complex logderiv = s * 2.0 * b * inu + lam * 2.0 * b * sigmoid(t);
  Kernel k;
  k.phi = pref * F;
  k.dphi = k.phi * logderiv + pref * dF;
  return k;
}

// Right-side kernel e^{2ib mu x} (1 + e^{-2bx})^lam F(P, Q; C; -e^{-2bx});
// unit transmitted amplitude.
Kernel right_kernel(const Dispersion& d, double b, double x) {
  const Complex inu = kI * d.nu;
  const Complex imu = kI * d.mu;
  const Complex lam = d.lam;
  const Complex P = inu + lam - imu;
  const Complex Q = -inu + lam - imu;
  const Complex C = 1.0 - 2.0 * imu;
  const double t = -2.0 * b * x;
  const Complex u = -std::exp(t);
  const Complex pref = std::exp(lam * softplus(t) + 2.0 * b * imu * x);
  const Complex F = specfun::hyp2f1(P, Q, C, u);
  const Complex dF = (P * Q / C) *
                     specfun::hyp2f1(P + 1.0, Q + 1.0, C + 1.0, u) *
                     (-2.0 * b * u);
  const Complex logderiv = 2.0 * b * imu - lam * 2.0 * b * sigmoid(t);
  Kernel k;
  k.phi = pref * F;
  k.dphi = k.phi * logderiv + pref * dF;
  return k;
}

Kernel total_left(const Dispersion& d, const Amplitudes& amp, double b,
                  double x) {
  const Kernel inc = left_kernel(d, b, x, +1.0);
  const Kernel ref = left_kernel(d, b, x, -1.0);
  return {amp.A * inc.phi + amp.B * ref.phi,
          amp.A * inc.dphi + amp.B * ref.dphi};
}

}  // namespace

Amplitudes amplitudes(const PotentialParams& p, double E) {
  checked_region(p, E);
  return amplitudes_from(model::oriented_dispersion(p, E));
}

Transport transport(const PotentialParams& p, double E) {
  Transport t;
  t.region = checked_region(p, E);
  const Dispersion d = model::oriented_dispersion(p, E);
  const Amplitudes amp = amplitudes_from(d);
  const double A2 = std::norm(amp.A);
  t.R = std::norm(amp.B) / A2;
  t.T = d.mu_propagating ? (d.mu.real() / d.nu.real()) / A2 : 0.0;
  t.superradiant = t.region.kind == RegionKind::Superradiant;
  return t;
}

WavefunctionSample wavefunction(const PotentialParams& p, double E, double x,
                                Branch branch) {
  checked_region(p, E);
  const Dispersion d = model::oriented_dispersion(p, E);
  WavefunctionSample s;
  s.x = x;
  s.branch = branch;
  switch (branch) {
    case Branch::Incident: {
      const Amplitudes amp = amplitudes_from(d);
      const Kernel k = left_kernel(d, p.b, x, +1.0);
      s.phi = amp.A * k.phi;
      s.dphi = amp.A * k.dphi;
      break;
    }
    case Branch::Reflected: {
      const Amplitudes amp = amplitudes_from(d);
      const Kernel k = left_kernel(d, p.b, x, -1.0);
      s.phi = amp.B * k.phi;
      s.dphi = amp.B * k.dphi;
      break;
    }
    case Branch::Transmitted: {
      const Kernel k = right_kernel(d, p.b, x);
      s.phi = k.phi;
      s.dphi = k.dphi;
      break;
    }
    case Branch::Total: {
      if (x > 0.0) {
        const Kernel k = right_kernel(d, p.b, x);
        s.phi = k.phi;
        s.dphi = k.dphi;
        break;
      }
      const Amplitudes amp = amplitudes_from(d);
      const Kernel k = total_left(d, amp, p.b, x);
      if (x == 0.0) {
        // Both representations converge at z = -1; they must describe the
        // same global solution.
        const Kernel r = right_kernel(d, p.b, x);
        const double scale =
            std::max({std::abs(k.phi), std::abs(r.phi), 1e-300});
        const double dscale =
            std::max({std::abs(k.dphi), std::abs(r.dphi), 1e-300});
        if (std::abs(k.phi - r.phi) > 1e-9 * scale ||
            std::abs(k.dphi - r.dphi) > 1e-9 * dscale)
          throw Error(
              "wavefunction: representation mismatch at x = 0 "
              "(self-check failed)");
      }
      s.phi = k.phi;
      s.dphi = k.dphi;
      break;
    }
  }
  return s;
}

double current(Complex phi, Complex dphi) {
  return std::imag(std::conj(phi) * dphi);
}

}  // namespace tanhscatter::solver
