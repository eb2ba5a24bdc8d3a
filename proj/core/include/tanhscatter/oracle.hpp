#pragma once

#include <cstddef>

#include "tanhscatter/solver.hpp"

namespace tanhscatter::oracle {

struct OracleResult {
  double R_num = 0.0;
  double T_num = 0.0;
  Complex A_num;       // incident amplitude, unit transmitted normalization
  Complex B_num;       // reflected amplitude
  double est_error = 0.0;  // accumulated local error estimates
  double window = 0.0;     // half-width L of the integration interval
  std::size_t steps = 0;   // accepted integrator steps
};

// Direct numerical route, independent of the closed forms: integrates
// phi'' = -[(E - a tanh(bx))^2 - m^2] phi right-to-left from x = +L with a
// pure transmitted plane wave as initial data (adaptive embedded
// Runge-Kutta 5(4), local error controlled at tol), then matches
// A e^{2ib nu x} + B e^{-2ib nu x} at x = -L. L is picked so the tanh tails
// are below 1e-13; window_scale widens it for sensitivity checks.
//
// Requires both channels propagating and E off-threshold
// (PropagationError / ThresholdError); throws StiffnessError when the
// step budget is exhausted or the step size collapses.
OracleResult integrate_scattering(const model::PotentialParams& p, double E,
                                  double tol = 1e-10,
                                  double window_scale = 1.0,
                                  std::size_t max_steps = 10000000);

// Sharp-step closed form, the b -> infinity limit: R = |(nu-mu)/(nu+mu)|^2,
// T = (mu/nu)|2nu/(nu+mu)|^2 with signed momenta (b cancels).
// Errors as integrate_scattering's preconditions.
solver::Transport step_reference(const model::PotentialParams& p, double E);

}  // namespace tanhscatter::oracle
