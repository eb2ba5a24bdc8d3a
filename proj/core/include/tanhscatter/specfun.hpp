#pragma once

#include <complex>
#include <initializer_list>

#include "tanhscatter/errors.hpp"

namespace tanhscatter {

using Complex = std::complex<double>;

namespace specfun {

// Principal-branch ln Gamma(z) for complex z, Lanczos approximation plus
// reflection for Re z < 1/2. exp(log_gamma(z)) reproduces Gamma(z) to
// ~1e-13 relative for |z| <= 50. Throws PoleError within 1e-12 of a
// non-positive integer.
Complex log_gamma(Complex z);

// prod Gamma(num) / prod Gamma(den), assembled as a single exponential of
// the log-Gamma sum. Returns exactly 0 when a denominator argument sits on
// a Gamma pole (the ratio vanishes there). Throws std::range_error when
// |Re| of the accumulated exponent exceeds 700; PoleError propagates from
// numerator arguments.
Complex gamma_ratio(std::initializer_list<Complex> num,
                    std::initializer_list<Complex> den);

// Gauss hypergeometric 2F1(p, q; c; z) with complex parameters.
// Contracted domain: real z <= 0 (any complex z with |z| <= 0.5 also
// works via the direct series). Selects among the direct series
// (|z| <= 0.5), the Pfaff transform w = z/(z-1) (0.5 < |z| <= 2) and the
// z -> 1/z connection formula (|z| > 2).
//
// Throws PoleError (c at a non-positive integer), DegenerateTransformError
// (1/z path with p - q within 1e-10 of an integer), NonConvergenceError
// (term cap), Error (argument outside the contracted domain).
Complex hyp2f1(Complex p, Complex q, Complex c, Complex z);

namespace detail {

// The three evaluation paths, exposed separately so the regime overlaps
// can be cross-checked. Each assumes z inside its own convergence region.
Complex series_2f1(Complex p, Complex q, Complex c, Complex z);
Complex pfaff_2f1(Complex p, Complex q, Complex c, Complex z);
Complex inverse_z_2f1(Complex p, Complex q, Complex c, Complex z);

// Overflow-safe ln sin(pi z); accurate for |Im z| far beyond where
// sin(pi z) itself overflows.
Complex log_sin_pi(Complex z);

}  // namespace detail

}  // namespace specfun
}  // namespace tanhscatter
