#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace latheat {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    long long evaluations = 0;
};

// Adaptive Gauss-Legendre panel integration of f over [a, b]: each panel is
// accepted when the 15-point rule agrees with its two-half refinement, else
// bisected. tol is an absolute target for the whole interval.
QuadResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                     double tol);

// Same engine on a log-spaced initial subdivision of [a, b] (panels_per_decade
// starting panels per decade), for integrands spanning many scales.
QuadResult integrate_log_panels(const std::function<std::complex<double>(double)>& f, double a,
                                double b, double tol, int panels_per_decade = 8);

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>* nodes, std::vector<double>* weights);

}  // namespace latheat
