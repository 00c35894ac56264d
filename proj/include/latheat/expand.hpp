#pragma once

#include <string>
#include <vector>

#include "latheat/lattice.hpp"
#include "latheat/rational.hpp"

namespace latheat {

// One term coeff * t^{exponent} * (log t)^{log_power} of a small-time
// expansion. Exponents are exact rationals; log_power is 0 or 1.
struct ExpansionTerm {
    Rational exponent;
    int log_power = 0;
    double coeff = 0.0;
};

// Terms sorted by (exponent, log_power descending at equal exponent, since
// t^j log t dominates t^j); remainder is a certified O(t^{remainder_exponent})
// as t -> 0+. A term with log_power = 1 may sit exactly at the remainder
// exponent (t log t precedes O(t)).
struct HeatExpansion {
    std::vector<ExpansionTerm> terms;
    Rational remainder_exponent;
    std::string provenance;

    double coeff(Rational exponent, int log_power = 0) const;
    bool has_log_terms() const;
    double eval(double t) const;
    void sort_and_merge();
};

// Large-lambda expansion of log W: designated lambda^{1/2}, log(lambda) and
// constant slots plus the inverse-power tail. In `tail` and `growth`,
// exponent e means coeff * lambda^{-e} (log lambda)^{log_power}; tail entries
// have e > 0, growth entries e < 0 (fractional positive powers other than
// lambda^{1/2}, which keeps its designated slot). The constant slot C_W and
// any entry listed in fit_only_tail are branch/antiderivative constants the
// expansion cannot pin; they are exposed for fitting only.
struct ProductExpansion {
    double sqrt_coeff = 0.0;
    double log_coeff = 0.0;
    double constant = 0.0;
    bool constant_fit_only = true;
    std::vector<ExpansionTerm> growth;
    std::vector<ExpansionTerm> tail;
    std::vector<size_t> fit_only_tail;
    Rational remainder_exponent;
    std::string provenance;

    // Evaluate without the constant slot.
    double eval_without_constant(double lambda) const;
};

// Full small-time expansion of sum_{n>=0} (n+a)^{-w} exp(-(n+a)^M t) through
// the Gamma poles at t^0..t^K, the Hurwitz-zeta pole at t^{(w-1)/M}, and the
// double-pole t^k log t collision terms when w = 1 + kM.
HeatExpansion expand_general_theta(double a, int power, int w, int K);

// Small-time expansion of theta for an even-power spec, assembled from
// weight_coeffs(g, r, u0) and expand_general_theta; remainder O(t^{K+1/(2M)}).
// No log terms can occur (even weights never produce pole collisions).
// Throws ParityError for odd power.
HeatExpansion expand_perturbed(const LatticeSpec& spec, int K);

// Odd powers: expansion of the polynomial-part trace valid to O(t), plus the
// (d_m/m) t log t term. Throws ParityError for even power.
HeatExpansion expand_odd_power(const LatticeSpec& spec);

// Heat expansion for any validated spec: even powers dispatch to
// expand_perturbed, odd powers to expand_odd_power.
HeatExpansion expand_theta(const LatticeSpec& spec, int K);

// Watson transform: c t^j -> c Gamma(j+1) lambda^{-j-1} and
// c t^k log t -> c Gamma(k+1) lambda^{-k-1} (psi(k+1) - log lambda).
// Result is an expansion in 1/lambda: term exponent e means lambda^{-e}.
// Requires every input exponent > -1.
HeatExpansion watson_transform(const HeatExpansion& exp);

// Antiderivative of the Watson transform: the large-lambda expansion of
// log W(lambda). Requires the input theta-expansion to lead with a t^j term,
// -1 < j < 0 (j = -1/2 for quadratic lattices).
ProductExpansion logw_expansion(const HeatExpansion& theta_exp);

}  // namespace latheat
