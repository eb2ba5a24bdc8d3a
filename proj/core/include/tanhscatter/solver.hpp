#pragma once

#include "tanhscatter/model.hpp"

namespace tanhscatter::solver {

// Scattering normalization: unit transmitted amplitude. A is the incident
// and B the reflected coefficient of the x -> -infinity plane waves
// A e^{2ib nu x} + B e^{-2ib nu x}.
struct Amplitudes {
  Complex A;
  Complex B;
};

// Closed-form amplitudes from Gamma-function ratios of the channel
// parameters, assembled in log space. Defined when the incident channel
// propagates and E is off-threshold.
//
// Throws ThresholdError (E within tolerance of +-a +- m) and
// PropagationError (incident channel evanescent).
Amplitudes amplitudes(const model::PotentialParams& p, double E);

struct Transport {
  double R = 0.0;
  double T = 0.0;
  model::EnergyRegion region{};
  bool superradiant = false;  // T < 0, equivalently R > 1
};

// R = |B/A|^2; T = (mu/nu)/|A|^2 with signed momenta when the transmitted
// channel propagates, exactly 0 when it is evanescent (a decaying tail
// carries no current; R then comes out 1). R + T = 1 whenever both
// channels propagate. Errors as amplitudes().
Transport transport(const model::PotentialParams& p, double E);

enum class Branch { Incident, Reflected, Transmitted, Total };

struct WavefunctionSample {
  double x = 0.0;
  Complex phi;
  Complex dphi;  // d(phi)/dx
  Branch branch = Branch::Total;
};

// Evaluates the closed-form solution branches at x. The total wavefunction
// uses the left representation (incident + reflected kernels) for x <= 0
// and the transmitted-side representation for x > 0; at x = 0 both are
// evaluated and must agree to 1e-9 relative (built-in self-check).
// Errors as amplitudes(), plus anything the hypergeometric evaluation
// raises for a non-convergent single-branch request.
WavefunctionSample wavefunction(const model::PotentialParams& p, double E,
                                double x, Branch branch);

// Conserved current Im(conj(phi) * dphi); a unit plane wave e^{ikx}
// carries +k.
double current(Complex phi, Complex dphi);

}  // namespace tanhscatter::solver
