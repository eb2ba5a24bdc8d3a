#pragma once

#include "tanhscatter/specfun.hpp"

namespace tanhscatter::model {

// V(x) = a tanh(bx) in natural units (hbar = c = 1). Normalized so a >= 0;
// a < 0 inputs are folded through the parity map V(x; -a) = V(-x; a) and
// remembered via `mirrored` (reporting layers swap the channel roles).
struct PotentialParams {
  double a = 0.0;   // asymptote height, >= 0 once normalized
  double b = 1.0;   // steepness, > 0
  double m = 1.0;   // particle mass, >= 0
  bool mirrored = false;
};

// Validates (b > 0, m >= 0, all finite) and applies the mirror map.
PotentialParams make_params(double a, double b, double m);

// The physical profile, including the sign of a mirrored input.
double potential_value(const PotentialParams& p, double x);

// Asymptotic channel parameters: plane waves behave as e^{+-2ib nu x} on
// the left and e^{+-2ib mu x} on the right. Propagating momenta are real
// and carry the sign of the group velocity (sign(nu) = sign(E + a),
// sign(mu) = sign(E - a)); evanescent ones are +i|.| so the transmitted
// tail decays.
struct Dispersion {
  Complex nu;   // left channel, sqrt((E+a)^2 - m^2)/(2b)
  Complex mu;   // right channel, sqrt((E-a)^2 - m^2)/(2b)
  Complex lam;  // (b + sqrt(b^2 - 4a^2))/(2b), principal root
  bool nu_propagating = false;
  bool mu_propagating = false;
};

Dispersion dispersion(const PotentialParams& p, double E);

enum class RegionKind {
  FullyPropagating,       // E > a + m: both channels propagate forward
  TransmittedEvanescent,  // a + m > E > a - m: right channel decays
  Superradiant,           // a - m > E > m - a: right channel propagates
                          // with negative momentum; R > 1
  IncidentEvanescent,     // m - a > E > -a - m: no incident channel
  NegativeContinuum,      // E < -a - m: both propagate, negative momenta
};

struct EnergyRegion {
  RegionKind kind;
  // E within 1e-9 (relative to max(1, |E|)) of a channel threshold
  // +-a +- m; amplitudes are singular there.
  bool at_threshold = false;
};

// Region of the energy axis, by direct channel tests (which reproduce the
// interval table above whenever a > m).
EnergyRegion classify_region(const PotentialParams& p, double E);

// Scattering-orientation views: identical to dispersion()/classify_region()
// for a >= 0 inputs; for mirrored params the channel roles swap (nu becomes
// the incident momentum of the original a < 0 problem; the substitution
// a -> -a exchanges nu and mu and leaves lambda fixed), and the two
// evanescent region kinds swap accordingly.
Dispersion oriented_dispersion(const PotentialParams& p, double E);
EnergyRegion oriented_region(const PotentialParams& p, double E);

// Stable snake_case label for CSV/report output.
const char* to_label(RegionKind kind);

}  // namespace tanhscatter::model
