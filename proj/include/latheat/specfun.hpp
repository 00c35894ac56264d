#pragma once

#include <complex>

#include "latheat/errors.hpp"

// Special-function kernel for the Mellin residue calculus: Gamma, digamma,
// Riemann/Hurwitz zeta, Bernoulli numbers and polynomials.
//
// Accuracy targets (relative): gamma 1e-13 for |s| <= 50, digamma 1e-12 for
// real s in (0, 50], hurwitz_zeta 1e-11 for |p| <= 40, a in (0, 10].
// All functions are pure; the Bernoulli table is built once and then read-only.

namespace latheat {

using Complex = std::complex<double>;

// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Gamma function, Lanczos approximation plus reflection.
// Throws PoleError (with residue (-1)^k/k!) at nonpositive integers.
Complex gamma(Complex s);
double gamma(double s);

// log Gamma on the positive real axis (no reflection).
double log_gamma_real(double s);

// Digamma psi(s) = Gamma'(s)/Gamma(s). Throws PoleError at nonpositive integers.
Complex digamma(Complex s);
double digamma(double s);

// Bernoulli number B_n, classical convention B_1 = -1/2. Exact-rational values
// rounded once to double, cached in a table up to n = 62.
double bernoulli_number(int n);

// Bernoulli polynomial B_n(x), n <= 60. Throws DomainError above that
// (binomial/Bernoulli coefficient overflow guard).
double bernoulli_poly(int n, double x);

// Hurwitz zeta zeta(p, a) = sum_{n>=0} (n+a)^{-p}, meromorphically continued.
// At nonpositive integers p = -n returns exactly -B_{n+1}(a)/(n+1) (same code
// path as bernoulli_poly). Throws PoleError at p = 1 (simple pole, residue 1).
Complex hurwitz_zeta(Complex p, double a);
double hurwitz_zeta(double p, double a);

// Riemann zeta = hurwitz_zeta(p, 1).
Complex riemann_zeta(Complex p);

}  // namespace latheat
