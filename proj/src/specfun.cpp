#include "weberinv/specfun.hpp"

#include <algorithm>
#include <cmath>

#include "weberinv/doubledouble.hpp"
#include "weberinv/errors.hpp"
#include "weberinv/quadrature.hpp"

namespace weberinv::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kHalfLn2Pi = 0.91893853320467274178032973640562;
constexpr double kEngineMaxOrder = 4096.0;

// ---------------------------------------------------------------------------
// Lanczos gamma, g = 7, 9 coefficients
// ---------------------------------------------------------------------------

constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(Complex z, double tol) {
    if (z.real() > 0.5) return false;
    double r = std::nearbyint(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol && std::abs(z.imag()) <= tol;
}

// principal log Gamma for Re z >= 1/2; arguments left of 3/2 are lifted by
// the recurrence first, which keeps the Lanczos sum well conditioned for
// large |Im z|.
Complex log_gamma_right(Complex z) {
    Complex lift{0.0, 0.0};
    while (z.real() < 1.5) {
        lift += std::log(z);
        z += 1.0;
    }
    z -= 1.0;
    Complex acc{kLanczos[0], 0.0};
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    Complex t = z + 7.5;
    return kHalfLn2Pi + (z + 0.5) * std::log(t) - t + std::log(acc) - lift;
}

// log(sin(pi z)) continuous off the real axis; written in log form so large
// |Im z| cannot overflow.
Complex log_sin_pi(Complex z) {
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    // Im z >= 0: sin(pi z) = -e^{-i pi z}(1 - e^{2 i pi z})/(2i)
    Complex w = std::exp(Complex(0.0, 2.0 * kPi) * z);
    return Complex(0.0, -kPi) * z + std::log(1.0 - w) - std::log(2.0) +
           Complex(0.0, 0.5 * kPi);
}

// ---------------------------------------------------------------------------
// double-double Stirling log Gamma (right half-plane); used for the gamma
// ratio inside the parabolic-cylinder bracket, where double precision is not
// enough once the even/odd parts cancel. Only exp(differences) is consumed,
// so the 2*pi*i branch bookkeeping of the lifted logs is immaterial.
// ---------------------------------------------------------------------------

// B_{2n} / (2n (2n-1)) as exact rationals
constexpr double kStirlingNum[12] = {1,  -1,   1,    -1,   1,     -691,
                                     7,  -3617, 43867, -174611, 854513, -236364091};
constexpr double kStirlingDen[12] = {12, 360,  1260, 1680, 1188,  360360,
                                     156, 122400, 244188, 125400, 63756, 1506960};

DDC lgamma_dd_right(DDC w) {
    DDC lifted{DD(0.0), DD(0.0)};
    int guard = 0;
    while (ddc_mag(w) < 30.0 && guard++ < 64) {
        lifted = lifted + ddc_log(w);
        w = w + DDC(DD(1.0));
    }
    DDC lw = ddc_log(w);
    DDC res = (w - DDC(DD(0.5))) * lw - w + DDC(dd_const::half_ln_2pi);
    DDC w2 = w * w;
    DDC term = DDC(DD(1.0)) / w;
    for (int n = 0; n < 12; ++n) {
        res = res + term * (DD(kStirlingNum[n]) / DD(kStirlingDen[n]));
        term = term / w2;
    }
    return res - lifted;
}

// ---------------------------------------------------------------------------
// Kummer series M(a, b, u), templated over the working precision.
// peak records the largest running partial-sum magnitude, which measures the
// cancellation suffered by the final sum.
// ---------------------------------------------------------------------------

struct SeriesD {
    Complex sum;
    double peak;
    int terms;
    bool converged;
};

SeriesD kummer_series_d(Complex a, double b, double u, double eps, int max_terms) {
    Complex term{1.0, 0.0};
    Complex sum = term;
    double peak = 1.0;
    int small_run = 0;
    for (int k = 0; k < max_terms; ++k) {
        term *= a + static_cast<double>(k);
        term *= u / ((b + k) * (k + 1.0));
        sum += term;
        peak = std::max(peak, std::abs(sum));
        peak = std::max(peak, std::abs(term));
        if (std::abs(term) < eps * (std::abs(sum) + 1e-300)) {
            if (++small_run >= 2) return {sum, peak, k + 1, true};
        } else {
            small_run = 0;
        }
    }
    return {sum, peak, max_terms, false};
}

struct SeriesDD {
    DDC sum;
    double peak;
    int terms;
    bool converged;
};

SeriesDD kummer_series_dd(DDC a, double b, DD u, double eps, int max_terms) {
    DDC term{DD(1.0), DD(0.0)};
    DDC sum = term;
    double peak = 1.0;
    int small_run = 0;
    for (int k = 0; k < max_terms; ++k) {
        term = term * (a + DDC(DD(k)));
        term = term * (u / ((b + k) * (k + 1.0)));
        sum = sum + term;
        peak = std::max(peak, ddc_mag(sum));
        peak = std::max(peak, ddc_mag(term));
        if (ddc_mag(term) < eps * (ddc_mag(sum) + 1e-300)) {
            if (++small_run >= 2) return {sum, peak, k + 1, true};
        } else {
            small_run = 0;
        }
    }
    return {sum, peak, max_terms, false};
}

// ---------------------------------------------------------------------------
// D_v(z) via the even/odd confluent split, for Re v <= -1/2:
//   D_v(z) = 2^{v/2} e^{-z^2/4} sqrt(pi)
//            [ M(-v/2, 1/2, z^2/2)/Gamma((1-v)/2)
//              - sqrt(2) z M((1-v)/2, 3/2, z^2/2)/Gamma(-v/2) ]
// Double pass first; the double-double pass takes over once the measured
// cancellation exceeds six digits.
// ---------------------------------------------------------------------------

ScaledComplex pcf_series_dd_path(Complex v, double z, double* loss_out) {
    DDC vd{DD(v.real()), DD(v.imag())};
    DDC a0{DD(-0.5 * v.real()), DD(-0.5 * v.imag())};
    DDC a1 = a0 + DDC(DD(0.5));
    DD zd(z);
    DD u = dd_ldexp(zd * zd, -1);

    SeriesDD s0 = kummer_series_dd(a0, 0.5, u, 1e-35, 600);
    SeriesDD s1 = kummer_series_dd(a1, 1.5, u, 1e-35, 600);
    if (!s0.converged || !s1.converged)
        throw ConvergenceError("parabolic cylinder series did not converge");

    DDC g1 = lgamma_dd_right(a1);
    DDC g0 = lgamma_dd_right(a0);
    DDC ratio = ddc_exp(g1 - g0);  // Gamma((1-v)/2) / Gamma(-v/2)

    DDC odd = DDC(dd_const::sqrt2 * zd) * ratio * s1.sum;
    DDC bracket = s0.sum - odd;

    double peak = std::max({s0.peak, s1.peak * ddc_mag(DDC(dd_const::sqrt2 * zd) * ratio),
                            ddc_mag(bracket)});
    double lost = peak / std::max(ddc_mag(bracket), 1e-300);
    if (loss_out) *loss_out = lost;
    if (lost > 1e26)
        throw ConvergenceError("parabolic cylinder cancellation beyond working precision");

    // scale = 2^{v/2} e^{-z^2/4} sqrt(pi) / Gamma((1-v)/2), exponent in dd
    DD ex_re = DD(0.5 * v.real()) * dd_const::ln2 - dd_ldexp(u, -1) +
               dd_const::half_ln_pi - g1.re;
    DD ex_im = DD(0.5 * v.imag()) * dd_const::ln2 - g1.im;
    // split the exponent: e^{ex} = 2^k m
    double k = std::nearbyint(ex_re.hi / dd_const::ln2.hi);
    DD r = ex_re - dd_const::ln2 * DD(k);
    // reduce the phase mod 2pi in dd before dropping to double
    DD two_pi = dd_ldexp(dd_const::pi, 1);
    double j = std::nearbyint(ex_im.hi / two_pi.hi);
    DD ph = ex_im - two_pi * DD(j);
    Complex mant = std::polar(std::exp(r.to_double()), ph.to_double());

    ScaledComplex out{mant * bracket.to_complex(), static_cast<long long>(k)};
    return out;
}

ScaledComplex pcf_integral(Complex v, double z);

ScaledComplex pcf_series(Complex v, double z) {
    // quick double pass
    Complex a0 = -0.5 * v;
    Complex a1 = a0 + 0.5;
    double u = 0.5 * z * z;
    SeriesD s0 = kummer_series_d(a0, 0.5, u, 1e-17, 500);
    SeriesD s1 = kummer_series_d(a1, 1.5, u, 1e-17, 500);
    if (s0.converged && s1.converged) {
        Complex g1 = log_gamma_right(a1);
        Complex g0 = log_gamma_right(a0);
        Complex ratio = std::exp(g1 - g0);
        Complex odd = std::sqrt(2.0) * z * ratio * s1.sum;
        Complex bracket = s0.sum - odd;
        double peak = std::max({s0.peak, s1.peak * std::abs(std::sqrt(2.0) * z * ratio),
                                std::abs(bracket)});
        double lost = peak / std::max(std::abs(bracket), 1e-300);
        if (lost < 1e4) {
            Complex ex = 0.5 * v * dd_const::ln2.hi - 0.25 * z * z +
                         dd_const::half_ln_pi.hi - g1;
            double k = std::nearbyint(ex.real() / dd_const::ln2.hi);
            Complex m = std::exp(ex - k * dd_const::ln2.hi);
            return ScaledComplex{m * bracket, static_cast<long long>(k)};
        }
    }
    double lost = 0.0;
    ScaledComplex dd_value = pcf_series_dd_path(v, z, &lost);
    // deep even/odd cancellation (large negative Re v at nonzero z): the
    // integral representation is immune to it and takes over
    if (lost > 1e19 && v.real() <= -0.5 && std::abs(v.imag()) <= 600.0)
        return pcf_integral(v, z);
    return dd_value;
}

// ---------------------------------------------------------------------------
// Integral representation for Re v <= -1/2 and large |z|:
//   D_v(z) = e^{-z^2/4}/Gamma(-v) * Int_0^inf e^{-z u - u^2/2} u^{-v-1} du
// substituted u = q^2 and normalised by the integrand peak.
// ---------------------------------------------------------------------------

ScaledComplex pcf_integral(Complex v, double z) {
    double p = -v.real() - 1.0;  // u-power, >= -1/2 here
    auto psi_re = [&](double q) {
        if (q <= 0.0) return -1e30;
        double uu = q * q;
        return -z * uu - 0.5 * uu * uu + (2.0 * p + 1.0) * std::log(q);
    };
    // peak of the regularised integrand
    double qpk = 1.0;
    {
        double upk = 0.5 * (-z + std::sqrt(z * z + 4.0 * std::max(p, 0.25)));
        qpk = std::sqrt(std::max(upk, 1e-8));
    }
    double L = psi_re(qpk);
    for (double f = 0.125; f <= 8.0; f *= 1.3) L = std::max(L, psi_re(qpk * f));
    // truncation: march right until 80 e-folds below the peak
    double Q = qpk;
    while (psi_re(Q) > L - 80.0) Q *= 1.5;

    Complex vp1 = v + 1.0;
    auto integrand = [&](double q) -> Complex {
        if (q <= 0.0) return {0.0, 0.0};
        double uu = q * q;
        Complex e = Complex(-z * uu - 0.5 * uu * uu - L, 0.0) -
                    (2.0 * vp1 - 1.0) * std::log(q);
        return std::exp(e);
    };
    quadrature::QuadratureConfig qc;
    qc.abs_tol = 1e-280;
    qc.rel_tol = 1e-13;
    qc.max_subdivisions = 4000;
    Complex integral = quadrature::integrate(std::function<Complex(double)>(integrand),
                                             0.0, Q, qc);

    // assemble 2 * e^{L} * integral * e^{-z^2/4} / Gamma(-v)
    Complex lg = log_gamma_right(-v);  // Re(-v) >= 1/2 here
    DD ex_re = DD(L) - dd_ldexp(DD(z) * DD(z), -2) - DD(lg.real());
    ScaledComplex scale = scaled_exp(ex_re, -lg.imag());
    return scale * integral * 2.0;
}

// ---------------------------------------------------------------------------
// Order-raising recurrence D_{w+1} = z D_w - w D_{w-1} for Re v > -1/2,
// run in double-double with power-of-two rescaling.
// ---------------------------------------------------------------------------

ScaledComplex pcf_low(Complex v, double z) {
    if (std::abs(z) >= 6.5) return pcf_integral(v, z);
    return pcf_series(v, z);
}

ScaledComplex pcf_recurrence(Complex v, double z) {
    int n = static_cast<int>(std::ceil(v.real() + 0.5));
    Complex vb = v - static_cast<double>(n);  // Re in (-3/2, -1/2]
    ScaledComplex dm1 = pcf_low(vb - 1.0, z);
    ScaledComplex d0 = pcf_low(vb, z);

    long long e2 = std::max(dm1.e2, d0.e2);
    auto to_ddc = [e2](const ScaledComplex& s) {
        long long d = e2 - s.e2;
        double sc = std::ldexp(1.0, static_cast<int>(-std::min(d, 1100LL)));
        return DDC{DD(s.m.real() * sc), DD(s.m.imag() * sc)};
    };
    DDC A = to_ddc(dm1);
    DDC B = to_ddc(d0);
    DD zd(z);
    DD wre = DD(vb.real());
    DD wim = DD(vb.imag());
    for (int k = 0; k < n; ++k) {
        DDC w{wre + DD(k), wim};
        DDC C = DDC{zd * B.re, zd * B.im} - w * A;
        A = B;
        B = C;
        double mag = std::max(std::abs(B.re.hi), std::abs(B.im.hi));
        if (mag > 1e120 || (mag != 0.0 && mag < 1e-120)) {
            int sh = std::ilogb(mag);
            A = dd_ldexp(A, -sh);
            B = dd_ldexp(B, -sh);
            e2 += sh;
        }
    }
    return ScaledComplex{B.to_complex(), e2};
}

ScaledComplex pcf_dispatch(Complex v, double z) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || !std::isfinite(z))
        throw DomainError("pcf order/argument must be finite");
    if (std::abs(v) > kEngineMaxOrder)
        throw DomainError("pcf order beyond the evaluation envelope");
    if (v.real() > -0.5) return pcf_recurrence(v, z);
    return pcf_low(v, z);
}

} // namespace

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("log_gamma argument must be finite");
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("log_gamma evaluated at a non-positive integer");
    if (z.real() >= 0.5) return log_gamma_right(z);
    // reflection: log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Complex gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("gamma argument must be finite");
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("gamma evaluated at a non-positive integer");
    if (z.imag() == 0.0) {
        double x = z.real();
        if (x >= 0.5) return std::exp(log_gamma_right(Complex(x, 0.0)).real());
        double lg = log_gamma_right(Complex(1.0 - x, 0.0)).real();
        return kPi / (std::sin(kPi * x) * std::exp(lg));
    }
    if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
    Complex lg = log_gamma_right(1.0 - z);
    Complex s = std::exp(log_sin_pi(z));
    return kPi / (s * std::exp(lg));
}

double erfc(double x) {
    if (std::isnan(x)) throw DomainError("erfc argument must be finite");
    if (x >= 0.0) return std::erfc(x);
    return 2.0 - std::erfc(-x);
}

Complex kummer_m(Complex a, double b, double x) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b) ||
        !std::isfinite(x))
        throw DomainError("kummer_m arguments must be finite");
    if (std::abs(x) > 80.0) throw DomainError("kummer_m |x| exceeds 80");
    double br = std::nearbyint(b);
    if (br <= 0.0 && std::abs(b - br) <= 1e-12)
        throw DomainError("kummer_m b at a non-positive integer");
    SeriesDD s = kummer_series_dd(DDC{DD(a.real()), DD(a.imag())}, b, DD(x), 1e-17, 500);
    if (!s.converged) throw ConvergenceError("kummer_m series exceeded 500 terms");
    return s.sum.to_complex();
}

ScaledComplex pcf_d_scaled(Complex v, double z) { return pcf_dispatch(v, z); }

Complex pcf_d(const PCFQuery& q) {
    if (std::abs(q.order) > kMaxOrder)
        throw DomainError("pcf_d order outside |v| <= 80");
    if (!(std::abs(q.argument) <= kMaxArgument))
        throw DomainError("pcf_d argument outside |z| <= 12");
    return pcf_dispatch(q.order, q.argument).to_complex();
}

Complex pcf_d_prime(const PCFQuery& q) {
    if (std::abs(q.order) > kMaxOrder || std::abs(q.order + 1.0) > kMaxOrder)
        throw DomainError("pcf_d_prime needs v and v+1 inside |v| <= 80");
    if (!(std::abs(q.argument) <= kMaxArgument))
        throw DomainError("pcf_d_prime argument outside |z| <= 12");
    Complex dv = pcf_dispatch(q.order, q.argument).to_complex();
    Complex dv1 = pcf_dispatch(q.order + 1.0, q.argument).to_complex();
    return 0.5 * q.argument * dv - dv1;
}

} // namespace weberinv::specfun
