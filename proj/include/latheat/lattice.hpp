#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latheat/series.hpp"

namespace latheat {

// Sequence model lambda_n = (n+a)^M + (n+a)^{M-2} g((n+a)^{-2}), n >= 0.
//
// When built from an odd series rho (tau_n = (n+a) - rho(1/(n+a))), g is the
// exact correction ((1 - u sigma(u))^M - 1)/u, so lambda_n = tau_n^M
// identically for every power M. Specs are immutable once validated.
class LatticeSpec {
  public:
    enum class Source { pure, explicit_g, from_rho };

    // lambda_n = (n+a)^M.
    static LatticeSpec pure(double a, int power);
    // lambda_n = (n+a)^M + (n+a)^{M-2} g((n+a)^{-2}).
    static LatticeSpec from_g(double a, int power, TruncatedSeries g);
    // lambda_n = ((n+a) - rho(1/(n+a)))^M with odd rho.
    static LatticeSpec from_rho(double a, int power, TruncatedSeries rho);

    double offset() const { return a_; }
    int power() const { return power_; }
    double u0() const { return u0_; }
    const TruncatedSeries& g() const { return g_; }
    Source source() const { return source_; }
    const std::optional<TruncatedSeries>& rho() const { return rho_; }

    bool validated() const { return validated_; }
    // Certified sup bound of |g| on [0, u0] (dense sampling, 5% inflation).
    double q_star() const { return q_star_; }
    // Monotonicity onset: lambda_{n+1} > lambda_n for all n >= n1.
    long long monotone_from() const { return n1_; }
    double lambda0() const { return lambda0_; }

    // HB-style instance: M = 2, a = 3/2, g derived from an odd rho with
    // nonnegative coefficients and rho(2) <= 1/2. Only these specs get the
    // two-sided Weyl bounds in count().
    bool hb_style() const;

  private:
    friend LatticeSpec validate(LatticeSpec spec);
    LatticeSpec() = default;

    double a_ = 1.5;
    int power_ = 2;
    TruncatedSeries g_;
    double u0_ = 0.0;
    Source source_ = Source::pure;
    std::optional<TruncatedSeries> rho_;

    bool validated_ = false;
    double q_star_ = 0.0;
    long long n1_ = 0;
    double lambda0_ = 0.0;
};

struct CountReport {
    double threshold = 0.0;  // Lambda
    long long count = 0;
    long long lower_bound = 0;
    long long upper_bound = 0;
};

struct OddDecomposition {
    std::vector<double> poly_coeffs;  // c_{m,j}, j = 1..(m-1)/2
    double d_m = 0.0;                 // coefficient of (n+a)^{-1}
    int remainder_power = 3;          // remainder is O((n+a)^{-remainder_power})
};

// Positivity and monotonicity certification. Throws PositivityError (with the
// first violating index) or RadiusError. Returns the validated spec.
LatticeSpec validate(LatticeSpec spec);

double lambda_at(const LatticeSpec& spec, long long n);

// Large-n decomposition of tau_n^m for odd m:
// tau_n^m = (n+a)^m + sum_j c_{m,j} (n+a)^{m-2j} + d_m (n+a)^{-1} + O((n+a)^{-3}).
// Throws ParityError for even m.
OddDecomposition odd_decompose(const LatticeSpec& spec);

// Counting function N(Lambda) = #{n : lambda_n <= Lambda} by enumeration
// (binary search over the certified monotone tail). Weyl bounds
// [floor(sqrt(L) - 1/2), floor(sqrt(L))] attach to HB-style specs only.
CountReport count(const LatticeSpec& spec, double threshold);

}  // namespace latheat
