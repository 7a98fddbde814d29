#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "weberinv/doubledouble.hpp"

namespace weberinv {

/// Complex value m * 2^e2 with the mantissa kept near unit magnitude.
/// Used wherever gamma/parabolic-cylinder factors overflow double range
/// before their product comes back on scale.
struct ScaledComplex {
    std::complex<double> m{0.0, 0.0};
    long long e2 = 0;

    ScaledComplex() = default;
    ScaledComplex(std::complex<double> v, long long e = 0) : m(v), e2(e) { normalize(); }

    void normalize() {
        double a = std::max(std::abs(m.real()), std::abs(m.imag()));
        if (a == 0.0 || !std::isfinite(a)) {
            e2 = 0;
            return;
        }
        int k = std::ilogb(a);
        if (k != 0) {
            m = {std::ldexp(m.real(), -k), std::ldexp(m.imag(), -k)};
            e2 += k;
        }
    }

    bool is_zero() const { return m == std::complex<double>(0.0, 0.0); }

    std::complex<double> to_complex() const {
        return {std::ldexp(m.real(), static_cast<int>(e2)),
                std::ldexp(m.imag(), static_cast<int>(e2))};
    }

    /// log of the value (principal imaginary part)
    std::complex<double> log() const {
        return {std::log(std::abs(m)) + static_cast<double>(e2) * dd_const::ln2.hi,
                std::arg(m)};
    }

    double log10_magnitude() const {
        return std::log10(std::abs(m)) + static_cast<double>(e2) * 0.30102999566398120;
    }
};

inline ScaledComplex operator*(ScaledComplex a, ScaledComplex b) {
    return {a.m * b.m, a.e2 + b.e2};
}
inline ScaledComplex operator*(ScaledComplex a, std::complex<double> b) {
    return {a.m * b, a.e2};
}
inline ScaledComplex operator*(std::complex<double> a, ScaledComplex b) { return b * a; }
inline ScaledComplex operator*(ScaledComplex a, double b) { return {a.m * b, a.e2}; }
inline ScaledComplex operator/(ScaledComplex a, ScaledComplex b) {
    return {a.m / b.m, a.e2 - b.e2};
}

inline ScaledComplex operator+(ScaledComplex a, ScaledComplex b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.e2 < b.e2) std::swap(a, b);
    long long d = a.e2 - b.e2;
    if (d > 1100) return a;
    return {a.m + std::complex<double>(std::ldexp(b.m.real(), -static_cast<int>(d)),
                                       std::ldexp(b.m.imag(), -static_cast<int>(d))),
            a.e2};
}

/// exp of a complex exponent given as (double-double real part, double imag part)
inline ScaledComplex scaled_exp(DD re, double im) {
    double k = std::nearbyint(re.hi / dd_const::ln2.hi);
    DD r = re - dd_const::ln2 * DD(k);
    double mr = std::exp(r.to_double());
    return {std::polar(mr, im), static_cast<long long>(k)};
}

} // namespace weberinv
