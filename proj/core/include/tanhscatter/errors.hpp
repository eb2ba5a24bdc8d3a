#pragma once

#include <stdexcept>
#include <string>

namespace tanhscatter {

// Root of the library's error taxonomy. Log-space overflow in amplitude
// assembly (|Re| > 700 before exponentiation) throws plain std::range_error
// instead; everything else derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Gamma evaluated within tolerance of a non-positive integer, or a
// hypergeometric c-parameter sitting on one.
class PoleError : public Error {
 public:
  using Error::Error;
};

// The 1/z connection formula requested with p - q within tolerance of an
// integer; its Gamma prefactors are singular there and the logarithmic
// limit case is out of scope.
class DegenerateTransformError : public Error {
 public:
  using Error::Error;
};

// A series failed to meet the stopping criterion within the term cap.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

// Energy within tolerance of a channel threshold (E = +-a +- m), where the
// scattering amplitudes are singular.
class ThresholdError : public Error {
 public:
  using Error::Error;
};

// The incident channel is evanescent; no scattering problem is posed.
class PropagationError : public Error {
 public:
  using Error::Error;
};

// The adaptive integrator exceeded its step budget.
class StiffnessError : public Error {
 public:
  using Error::Error;
};

}  // namespace tanhscatter
