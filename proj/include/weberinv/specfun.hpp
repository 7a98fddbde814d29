#pragma once

#include <complex>

#include "weberinv/scaled.hpp"

namespace weberinv::specfun {

using Complex = std::complex<double>;

/// Evaluation request for the parabolic cylinder function D_v(z):
/// complex order v, real argument z.
struct PCFQuery {
    Complex order;
    double argument = 0.0;
};

inline constexpr double kMaxOrder = 80.0;     // |order| admitted by pcf_d
inline constexpr double kMaxArgument = 12.0;  // |argument| admitted by pcf_d

/// Principal branch of log Gamma (continuous off the non-positive real axis,
/// limit from the upper half-plane on it). Throws PoleError within 1e-12 of a
/// non-positive integer.
Complex log_gamma(Complex z);

/// Gamma via Lanczos (g=7, 9 coefficients); reflection for Re z < 1/2.
Complex gamma(Complex z);

/// Complementary error function with exact symmetry erfc(-x) = 2 - erfc(x).
double erfc(double x);

/// Kummer's confluent hypergeometric M(a, b, x), Maclaurin series with
/// compensated accumulation; stops once |term|/|sum| < 1e-17.
/// Throws ConvergenceError past 500 terms, DomainError for |x| > 80 or
/// b at a non-positive integer.
Complex kummer_m(Complex a, double b, double x);

/// D_v(z) on the supported box |v| <= 80, |z| <= 12.
Complex pcf_d(const PCFQuery& q);

/// d/dz D_v(z) = (z/2) D_v(z) - D_{v+1}(z); needs v and v+1 inside the box.
Complex pcf_d_prime(const PCFQuery& q);

/// Wide-envelope evaluation of D_v(z) used by the transform machinery:
/// orders to ~4000 at small |z|, power-of-two scaled result so magnitudes
/// beyond double range survive. Accuracy degrades with the measured
/// cancellation; throws ConvergenceError once past the double-double budget.
ScaledComplex pcf_d_scaled(Complex v, double z);

} // namespace weberinv::specfun
