#include "tanhscatter/specfun.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace tanhscatter::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.1447298858494001741;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

// Lanczos g = 7, 9 coefficients; relative error ~1e-15 on Re z >= 1/2.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kPoleTol = 1e-12;
constexpr int kTermCap = 10000;

bool near_nonpositive_integer(Complex z, double tol) {
  const double n = std::round(z.real());
  return n <= 0.0 && std::hypot(z.real() - n, z.imag()) <= tol;
}

// Lanczos sum, valid for Re z >= 1/2.
Complex log_gamma_positive(Complex z) {
  Complex acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z + double(k - 1));
  const Complex t = z + 6.5;  // z + g - 1/2
  return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(acc);
}

Complex exp_guarded(Complex w) {
  if (std::abs(w.real()) > 700.0)
    throw std::range_error(
        "gamma_ratio: exponent " + std::to_string(w.real()) +
        " outside double range");
  return std::exp(w);
}

}  // namespace

namespace detail {

Complex log_sin_pi(Complex z) {
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const Complex w = kPi * z;
  if (z.imag() < 1.0) return std::log(std::sin(w));
  // sin w = (i/2) e^{-iw} (1 - e^{2iw}); |e^{2iw}| = e^{-2 Im w} < 1.
  const Complex iw(-w.imag(), w.real());
  return Complex(-std::log(2.0), kPi / 2.0) - iw +
         std::log(1.0 - std::exp(2.0 * iw));
}

}  // namespace detail

Complex log_gamma(Complex z) {
  if (near_nonpositive_integer(z, kPoleTol))
    throw PoleError("log_gamma: argument within tolerance of the pole at " +
                    std::to_string(std::lround(z.real())));
  if (z.real() >= 0.5) return log_gamma_positive(z);
  // Reflection: ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z).
  return kLogPi - detail::log_sin_pi(z) - log_gamma_positive(1.0 - z);
}

Complex gamma_ratio(std::initializer_list<Complex> num,
                    std::initializer_list<Complex> den) {
  for (Complex d : den)
    if (near_nonpositive_integer(d, kPoleTol)) return 0.0;
  Complex w = 0.0;
  for (Complex n : num) w += log_gamma(n);
  for (Complex d : den) w -= log_gamma(d);
  return exp_guarded(w);
}

namespace detail {

Complex series_2f1(Complex p, Complex q, Complex c, Complex z) {
  Complex term = 1.0;
  Complex sum = 1.0;
  for (int k = 0; k < kTermCap; ++k) {
    const double kd = double(k);
    term *= (p + kd) * (q + kd) / ((c + kd) * (kd + 1.0)) * z;
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
  }
  throw NonConvergenceError("hyp2f1: series did not converge within " +
                            std::to_string(kTermCap) + " terms");
}

Complex pfaff_2f1(Complex p, Complex q, Complex c, Complex z) {
  const Complex w = z / (z - 1.0);
  return std::pow(1.0 - z, -p) * series_2f1(p, c - q, c, w);
}

Complex inverse_z_2f1(Complex p, Complex q, Complex c, Complex z) {
  const Complex d = p - q;
  if (std::hypot(d.real() - std::round(d.real()), d.imag()) <= 1e-10)
    throw DegenerateTransformError(
        "hyp2f1: 1/z connection formula degenerate, p - q near an integer");
  const Complex zi = 1.0 / z;
  // Denominator poles zero out the corresponding term.
  const Complex coef1 = gamma_ratio({c, q - p}, {q, c - p});
  const Complex coef2 = gamma_ratio({c, p - q}, {p, c - q});
  Complex out = 0.0;
  if (coef1 != 0.0)
    out += coef1 * std::pow(-z, -p) * series_2f1(p, 1.0 - c + p, 1.0 - q + p, zi);
  if (coef2 != 0.0)
    out += coef2 * std::pow(-z, -q) * series_2f1(q, 1.0 - c + q, 1.0 - p + q, zi);
  return out;
}

}  // namespace detail

Complex hyp2f1(Complex p, Complex q, Complex c, Complex z) {
  if (near_nonpositive_integer(c, kPoleTol))
    throw PoleError("hyp2f1: parameter c within tolerance of a pole");
  const double az = std::abs(z);
  if (az <= 0.5) return detail::series_2f1(p, q, c, z);
  if (z.imag() != 0.0 || z.real() > 0.0)
    throw Error("hyp2f1: only real z <= 0 supported outside |z| <= 0.5");
  if (az <= 2.0) return detail::pfaff_2f1(p, q, c, z);
  return detail::inverse_z_2f1(p, q, c, z);
}

}  // namespace tanhscatter::specfun
