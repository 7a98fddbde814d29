#pragma once

#include <complex>
#include <functional>

namespace weberinv::quadrature {

/// Adaptive Gauss-Kronrod (G7/K15) configuration.
struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;  // hard cap 10^4
    enum class Endpoint { none, sqrt } endpoint_substitution = Endpoint::none;
};

struct QuadStats {
    double error_estimate = 0.0;
    int subdivisions = 0;
};

/// Integrate f over the finite interval [a, b]. The sqrt endpoint option maps
/// t = a + u^2, which regularises an integrable (t-a)^{-1/2} singularity at
/// the left endpoint. Throws ConvergenceError when the subdivision budget is
/// exhausted, DomainError on invalid configuration.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg, QuadStats* stats = nullptr);

std::complex<double> integrate(const std::function<std::complex<double>(double)>& f,
                               double a, double b, const QuadratureConfig& cfg,
                               QuadStats* stats = nullptr);

} // namespace weberinv::quadrature
