#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "latheat/errors.hpp"

namespace latheat {

// Truncated power/Laurent series with explicit truncation tracking.
//
// coeffs[i] is the coefficient of z^{min_degree + i}. Degrees above
// trunc_order are unknown; trunc_order == kExactSeries means every
// unlisted coefficient is exactly zero (the series is a Laurent polynomial).
// radius is the declared disk of convergence of the underlying function;
// it is user-declared on input and propagated, never inferred.
class TruncatedSeries {
  public:
    static constexpr int kExactSeries = std::numeric_limits<int>::max() / 4;

    TruncatedSeries() : min_degree_(0), coeffs_{}, trunc_(kExactSeries), radius_(inf()) {}
    TruncatedSeries(int min_degree, std::vector<double> coeffs, int trunc_order, double radius);

    // Polynomial in z starting at degree 0: coeffs[k] is the z^k coefficient.
    static TruncatedSeries polynomial(std::vector<double> coeffs, double radius = inf());
    static TruncatedSeries zero(double radius = inf());
    static TruncatedSeries constant(double c, double radius = inf());
    // Single term c * z^k.
    static TruncatedSeries monomial(double c, int degree, double radius = inf());

    int min_degree() const { return min_degree_; }
    int max_listed_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
    int trunc_order() const { return trunc_; }
    double radius() const { return radius_; }
    bool is_exact() const { return trunc_ == kExactSeries; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Coefficient of z^k. Zero if outside the listed window but still at or
    // below trunc_order; TruncationError above trunc_order.
    double coeff(int k) const;

    bool is_zero() const;

    TruncatedSeries& set_radius(double r) {
        radius_ = r;
        return *this;
    }

    // Drop knowledge above degree `order`.
    TruncatedSeries truncated(int order) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(double c, const TruncatedSeries& a);

    // Multiply by z^k (exact degree shift).
    TruncatedSeries shifted(int k) const;

    // this^n with optional truncation applied after each product.
    TruncatedSeries pow(int n, int keep_order = kExactSeries) const;

    // Horner evaluation; requires min_degree >= 0 and |u| inside the window
    // of declared validity (the caller checks radius).
    double eval(double u) const;
    std::complex<double> eval(std::complex<double> u) const;

    static constexpr double inf() { return std::numeric_limits<double>::infinity(); }

  private:
    void trim();

    int min_degree_;
    std::vector<double> coeffs_;
    int trunc_;
    double radius_;
};

// Coefficients of g(u)^r together with a Cauchy-style geometric bound taken on
// the circle |u| = rho_c = (u0 + radius)/2:
//   |coeffs[k]| * u0^k  <=  bound_constant * bound_ratio^k,
// with bound_constant = (1.1 * max_{|u|=rho_c} |g|)^r (512-point sampling) and
// bound_ratio = u0/rho_c < 1. This weighted form is what the expansion
// assembly uses to certify where the k-summation may stop.
struct WeightCoeffs {
    int r = 0;
    std::vector<double> coeffs;
    double bound_constant = 1.0;
    double bound_ratio = 0.5;
};

// sigma with sigma_j = rho_{2j+1}, so rho(z) = z * sigma(z^2).
// Throws OddnessError if rho has a nonzero even-degree coefficient.
TruncatedSeries sigma_from_rho(const TruncatedSeries& rho);

// q(u) = -2 sigma(u) + u sigma(u)^2 (the M = 2 correction series).
TruncatedSeries q_from_sigma(const TruncatedSeries& sigma);

// q_p(u) = (F_p(u) - 1)/u with F_p(u) = (1 - u sigma(u))^{2p};
// q_1 coincides with q_from_sigma coefficientwise.
TruncatedSeries qp_from_sigma(const TruncatedSeries& sigma, int p);

// ((1 - u sigma(u))^M - 1)/u for any power M >= 1: the exact correction
// series with (n+a)^M + (n+a)^{M-2} g((n+a)^{-2}) = ((n+a) - rho(1/(n+a)))^M.
TruncatedSeries power_correction(const TruncatedSeries& sigma, int power);

// Laurent series of tau(z)^m, tau(z) = z^{-1} - rho(z), from degree -m up to
// degree `order`. Throws TruncationError if rho is too truncated to decide.
TruncatedSeries laurent_tau_power(const TruncatedSeries& rho, int m, int order);

// Coefficients of g^r with the certified geometric bound described above.
// Throws RadiusError if u0 >= radius(g).
WeightCoeffs weight_coeffs(const TruncatedSeries& g, int r, double u0);

}  // namespace latheat
