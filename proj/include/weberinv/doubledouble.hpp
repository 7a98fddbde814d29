#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace weberinv {

/// Double-double value: the unevaluated sum hi + lo, |lo| <= ulp(hi)/2,
/// carrying roughly 106 bits (~31.8 decimal digits) of precision.
/// Error-free transforms follow Dekker/Knuth; products rely on FMA.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

namespace dd_detail {

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace dd_detail

inline DD operator+(DD a, DD b) {
    DD s = dd_detail::two_sum(a.hi, b.hi);
    DD t = dd_detail::two_sum(a.lo, b.lo);
    DD r = dd_detail::quick_two_sum(s.hi, s.lo + t.hi);
    return dd_detail::quick_two_sum(r.hi, r.lo + t.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = dd_detail::two_prod(a.hi, b.hi);
    return dd_detail::quick_two_sum(p.hi, p.lo + (a.hi * b.lo + a.lo * b.hi));
}

inline DD operator/(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    double q3 = r.hi / b.hi;
    DD q = dd_detail::quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD operator+(DD a, double b) { return a + DD(b); }
inline DD operator+(double a, DD b) { return DD(a) + b; }
inline DD operator-(DD a, double b) { return a - DD(b); }
inline DD operator-(double a, DD b) { return DD(a) - b; }
inline DD operator*(DD a, double b) { return a * DD(b); }
inline DD operator*(double a, DD b) { return DD(a) * b; }
inline DD operator/(DD a, double b) { return a / DD(b); }
inline DD operator/(double a, DD b) { return DD(a) / b; }

inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }

inline DD dd_abs(DD a) { return a.hi < 0.0 ? -a : a; }
inline DD dd_ldexp(DD a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

namespace dd_const {
// splits generated at 50-digit precision
inline constexpr DD pi{3.14159265358979312e+00, 1.22464679914735321e-16};
inline constexpr DD half_pi{1.57079632679489656e+00, 6.12323399573676604e-17};
inline constexpr DD ln2{6.93147180559945286e-01, 2.31904681384629956e-17};
inline constexpr DD half_ln_2pi{9.18938533204672781e-01, -3.87829415806724145e-17};
inline constexpr DD half_ln_pi{5.72364942924700082e-01, 5.13297558135391319e-18};
inline constexpr DD sqrt2{1.41421356237309515e+00, -9.66729331345291345e-17};
} // namespace dd_const

/// exp(x) by argument reduction x = k ln2 + r, r/32 Taylor, five squarings.
inline DD dd_exp(DD x) {
    if (x.hi > 700.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (x.hi < -745.0) return {0.0, 0.0};
    double k = std::nearbyint(x.hi / dd_const::ln2.hi);
    DD r = x - dd_const::ln2 * DD(k);
    r = dd_ldexp(r, -5);
    DD sum{1.0};
    DD term{1.0};
    for (int n = 1; n < 26; ++n) {
        term = term * r / static_cast<double>(n);
        sum = sum + term;
        if (std::abs(term.hi) < 1e-36 * std::abs(sum.hi)) break;
    }
    for (int i = 0; i < 5; ++i) sum = sum * sum;
    return dd_ldexp(sum, static_cast<int>(k));
}

/// log(x), x > 0: one Newton correction of the double seed.
inline DD dd_log(DD x) {
    double y0 = std::log(x.hi);
    DD c = x * dd_exp(DD(-y0)) - DD(1.0);
    return DD(y0) + c - c * c * 0.5;
}

namespace dd_detail {

// sin/cos of |r| <= pi/4 by Taylor
inline void sincos_taylor(DD r, DD& s, DD& c) {
    DD r2 = r * r;
    DD term = r;
    s = r;
    for (int n = 1; n < 24; ++n) {
        term = term * r2 / static_cast<double>((2 * n) * (2 * n + 1));
        term = -term;
        s = s + term;
        if (std::abs(term.hi) < 1e-37 * (std::abs(s.hi) + 1e-300)) break;
    }
    term = DD(1.0);
    c = DD(1.0);
    for (int n = 1; n < 24; ++n) {
        term = term * r2 / static_cast<double>((2 * n - 1) * (2 * n));
        term = -term;
        c = c + term;
        if (std::abs(term.hi) < 1e-37) break;
    }
}

} // namespace dd_detail

/// Simultaneous sin/cos with reduction modulo pi/2 (arguments up to ~1e6).
inline void dd_sincos(DD x, DD& s, DD& c) {
    double j = std::nearbyint(x.hi / dd_const::half_pi.hi);
    DD r = x - dd_const::half_pi * DD(j);
    DD sr, cr;
    dd_detail::sincos_taylor(r, sr, cr);
    switch (static_cast<long long>(j) & 3LL) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

/// atan2 refined from the double seed by one rotation step.
inline DD dd_atan2(DD y, DD x) {
    double t0 = std::atan2(y.hi, x.hi);
    DD s, c;
    dd_sincos(DD(t0), s, c);
    DD num = y * c - x * s;
    DD den = x * c + y * s;
    return DD(t0) + num / den;
}

/// Complex double-double.
struct DDC {
    DD re, im;

    DDC() = default;
    DDC(DD r) : re(r) {}
    DDC(DD r, DD i) : re(r), im(i) {}
    DDC(double r) : re(r) {}
    DDC(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline DDC operator+(DDC a, DDC b) { return {a.re + b.re, a.im + b.im}; }
inline DDC operator-(DDC a, DDC b) { return {a.re - b.re, a.im - b.im}; }
inline DDC operator-(DDC a) { return {-a.re, -a.im}; }
inline DDC operator*(DDC a, DDC b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline DDC operator*(DDC a, DD b) { return {a.re * b, a.im * b}; }
inline DDC operator*(DD a, DDC b) { return b * a; }
inline DDC operator*(DDC a, double b) { return {a.re * b, a.im * b}; }
inline DDC operator/(DDC a, DD b) { return {a.re / b, a.im / b}; }
inline DDC operator/(DDC a, double b) { return {a.re / b, a.im / b}; }
inline DDC operator/(DDC a, DDC b) {
    DD n = b.re * b.re + b.im * b.im;
    DDC num = a * DDC{b.re, -b.im};
    return {num.re / n, num.im / n};
}

inline DD dd_abs2(DDC z) { return z.re * z.re + z.im * z.im; }
inline double ddc_mag(DDC z) { return std::hypot(z.re.hi, z.im.hi); }
inline DDC dd_ldexp(DDC z, int n) { return {dd_ldexp(z.re, n), dd_ldexp(z.im, n)}; }

inline DDC ddc_exp(DDC z) {
    DD m = dd_exp(z.re);
    DD s, c;
    dd_sincos(z.im, s, c);
    return {m * c, m * s};
}

inline DDC ddc_log(DDC z) {
    return {dd_log(dd_abs2(z)) * 0.5, dd_atan2(z.im, z.re)};
}

} // namespace weberinv
