#include "latheat/expand.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "latheat/specfun.hpp"

namespace latheat {

namespace {

constexpr double kEulerG = kEulerGamma;

using TermKey = std::pair<Rational, int>;

struct TermMap {
    std::map<std::pair<std::pair<std::int64_t, std::int64_t>, int>, double> m;
    void add(Rational e, int logpow, double c) {
        if (c == 0.0) return;
        m[{{e.num, e.den}, logpow}] += c;
    }
    std::vector<ExpansionTerm> to_terms() const {
        std::vector<ExpansionTerm> out;
        for (const auto& [k, c] : m) {
            ExpansionTerm t;
            t.exponent = Rational(k.first.first, k.first.second);
            t.log_power = k.second;
            t.coeff = c;
            out.push_back(t);
        }
        return out;
    }
};

bool term_less(const ExpansionTerm& x, const ExpansionTerm& y) {
    if (x.exponent != y.exponent) return x.exponent < y.exponent;
    return x.log_power > y.log_power;  // t^j log t dominates t^j
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

double HeatExpansion::coeff(Rational exponent, int log_power) const {
    for (const auto& t : terms) {
        if (t.exponent == exponent && t.log_power == log_power) return t.coeff;
    }
    return 0.0;
}

bool HeatExpansion::has_log_terms() const {
    return std::any_of(terms.begin(), terms.end(),
                       [](const ExpansionTerm& t) { return t.log_power != 0; });
}

double HeatExpansion::eval(double t) const {
    double v = 0.0;
    const double lt = std::log(t);
    for (const auto& term : terms) {
        double x = term.coeff * std::pow(t, term.exponent.value());
        if (term.log_power == 1) x *= lt;
        v += x;
    }
    return v;
}

void HeatExpansion::sort_and_merge() {
    TermMap tm;
    for (const auto& t : terms) tm.add(t.exponent, t.log_power, t.coeff);
    terms = tm.to_terms();
    std::sort(terms.begin(), terms.end(), term_less);
}

double ProductExpansion::eval_without_constant(double lambda) const {
    const double ll = std::log(lambda);
    double v = sqrt_coeff * std::sqrt(lambda) + log_coeff * ll;
    for (const auto& t : growth) {
        double x = t.coeff * std::pow(lambda, -t.exponent.value());
        if (t.log_power == 1) x *= ll;
        v += x;
    }
    for (const auto& t : tail) {
        double x = t.coeff * std::pow(lambda, -t.exponent.value());
        if (t.log_power == 1) x *= ll;
        v += x;
    }
    return v;
}

HeatExpansion expand_general_theta(double a, int power, int w, int K) {
    if (K < 0) throw DomainError("expand_general_theta: K must be >= 0");
    if (power < 1) throw DomainError("expand_general_theta: power must be >= 1");
    if (!(a > 0.0)) throw DomainError("expand_general_theta: offset must be positive");
    const int M = power;

    TermMap tm;
    const Rational target(2 * M * K + 1, 2 * M);  // K + 1/(2M)

    // Hurwitz-zeta pole of zeta(Ms + w, a) at s = (1-w)/M: term
    // (1/M) Gamma(s*) t^{-s*}, retained while -s* stays below the target. If
    // the pole lands exactly on the boundary it is kept and the remainder
    // lowered (contour indentation); with target K + 1/(2M) that cannot occur,
    // the guard is kept for other targets.
    Rational remainder = target;
    const Rational s_star(1 - w, M);
    const Rational zeta_exp(w - 1, M);  // -s*
    const bool collision_possible = s_star.is_integer() && s_star.num <= 0;
    if (!collision_possible) {
        if (zeta_exp < target) {
            const Complex gs = gamma(Complex(s_star.value(), 0.0));
            tm.add(zeta_exp, 0, gs.real() / M);
        } else if (zeta_exp == target) {
            const Complex gs = gamma(Complex(s_star.value(), 0.0));
            tm.add(zeta_exp, 0, gs.real() / M);
            remainder = target + Rational(1, 2 * M);
        }
    }

    // Gamma poles at s = -k, k = 0..K: (-1)^k/k! zeta(w - Mk, a) t^k, except
    // at a collision w = 1 + kM where the double pole produces
    // (-1)^k/k! [ -(1/M) t^k log t + (psi(k+1)/M - psi(a)) t^k ].
    for (int k = 0; k <= K; ++k) {
        const double sign_fact = ((k % 2 == 0) ? 1.0 : -1.0) / factorial(k);
        if (w == 1 + k * M) {
            tm.add(Rational(k), 1, sign_fact * (-1.0 / M));
            const double cst = digamma(static_cast<double>(k) + 1.0) / M - digamma(a);
            tm.add(Rational(k), 0, sign_fact * cst);
        } else {
            const double z = hurwitz_zeta(Complex(static_cast<double>(w - M * k), 0.0), a).real();
            tm.add(Rational(k), 0, sign_fact * z);
        }
    }

    // True next omitted exponent: the k = K+1 Gamma pole, or the zeta pole if
    // it was not retained.
    Rational next = Rational(K + 1);
    if (!collision_possible && zeta_exp >= target && zeta_exp < next) next = zeta_exp;
    remainder = std::min(remainder, next, [](const Rational& x, const Rational& y) { return x < y; });

    HeatExpansion out;
    out.terms = tm.to_terms();
    std::sort(out.terms.begin(), out.terms.end(), term_less);
    out.remainder_exponent = remainder;
    out.provenance = "general_theta(a=" + std::to_string(a) + ", M=" + std::to_string(M) +
                     ", w=" + std::to_string(w) + ", K=" + std::to_string(K) + ")";
    return out;
}

HeatExpansion expand_perturbed(const LatticeSpec& spec, int K) {
    if (!spec.validated()) throw DomainError("expand_perturbed: spec must be validated");
    if (K < 0) throw DomainError("expand_perturbed: K must be >= 0");
    const int M = spec.power();
    if (M % 2 != 0) throw ParityError("expand_perturbed: odd power (use expand_odd_power)");
    const double a = spec.offset();

    // Taylor order in t: least R with (2(R+1)-1)/M > K + 1/(2M), so the
    // dropped exponential-Taylor remainder sits beyond the target.
    int R = 0;
    while (2 * (2 * (R + 1) - 1) <= 2 * M * K + 1) ++R;

    const Rational target(2 * M * K + 1, 2 * M);
    TermMap tm;
    double rfact = 1.0;
    for (int r = 0; r <= R; ++r) {
        if (r > 0) rfact *= r;
        const double rsign = (r % 2 == 0) ? 1.0 : -1.0;
        if (r > 0 && spec.g().is_zero()) break;
        const WeightCoeffs wc = weight_coeffs(spec.g(), r, spec.u0());
        for (size_t k = 0; k < wc.coeffs.size(); ++k) {
            // Certified geometric stop for the analytic-weight tail.
            if (wc.bound_constant * std::pow(wc.bound_ratio, static_cast<double>(k)) < 1e-16 &&
                k > 0) {
                break;
            }
            const double c = wc.coeffs[k];
            if (c == 0.0) continue;
            const int w = 2 * static_cast<int>(k) - (M - 2) * r;
            const int Kin = std::max(0, K - r);
            const HeatExpansion inner = expand_general_theta(a, M, w, Kin);
            for (const auto& term : inner.terms) {
                const Rational e = term.exponent + r;
                if (e < target) {
                    tm.add(e, term.log_power, rsign / rfact * c * term.coeff);
                }
            }
        }
    }

    HeatExpansion out;
    out.terms = tm.to_terms();
    std::sort(out.terms.begin(), out.terms.end(), term_less);
    out.remainder_exponent = target;
    out.provenance = "perturbed(a=" + std::to_string(a) + ", M=" + std::to_string(M) +
                     ", K=" + std::to_string(K) + ")";
    if (out.has_log_terms()) {
        // Even weights make collisions impossible; reaching this means a bug.
        throw Error("expand_perturbed: log term produced for even power");
    }
    return out;
}

HeatExpansion expand_odd_power(const LatticeSpec& spec) {
    if (!spec.validated()) throw DomainError("expand_odd_power: spec must be validated");
    const int m = spec.power();
    if (m % 2 == 0) throw ParityError("expand_odd_power: even power (use expand_perturbed)");
    const OddDecomposition dec = odd_decompose(spec);

    // Polynomial part b_n = (n+a)^m + sum_j c_{m,j} (n+a)^{m-2j}
    //                     = (n+a)^m + (n+a)^{m-2} P((n+a)^{-2}),
    // P(u) = sum_j c_{m,j} u^{j-1}. All weights (m-2)r - 2k stay >= r >= 0,
    // so the assembly below never meets a pole collision and the expansion of
    // sum exp(-b_n t) is log-free to O(t). The neglected d_m (n+a)^{-1} and
    // O((n+a)^{-3}) corrections contribute the (d_m/m) t log t term plus O(t).
    const Rational target(1);
    TermMap tm;
    std::vector<double> p = dec.poly_coeffs;  // P coefficients, degree j-1
    const int ell = (m - 1) / 2;
    double rfact = 1.0;
    for (int r = 0; r <= ell; ++r) {
        if (r > 0) rfact *= r;
        const double rsign = (r % 2 == 0) ? 1.0 : -1.0;
        // P^r coefficients (exact small convolution).
        std::vector<double> pr = {1.0};
        bool vanished = false;
        for (int i = 0; i < r; ++i) {
            if (p.empty()) {
                vanished = true;
                break;
            }
            std::vector<double> nx(pr.size() + p.size() - 1, 0.0);
            for (size_t ii = 0; ii < pr.size(); ++ii) {
                for (size_t jj = 0; jj < p.size(); ++jj) {
                    nx[ii + jj] += pr[ii] * p[jj];
                }
            }
            pr = std::move(nx);
        }
        if (vanished) continue;
        for (size_t k = 0; k < pr.size(); ++k) {
            if (pr[k] == 0.0) continue;
            const int w = 2 * static_cast<int>(k) - (m - 2) * r;
            const HeatExpansion inner = expand_general_theta(spec.offset(), m, w, 1);
            for (const auto& term : inner.terms) {
                const Rational e = term.exponent + r;
                if (e < target) {
                    tm.add(e, term.log_power, rsign / rfact * pr[k] * term.coeff);
                }
            }
        }
    }

    HeatExpansion out;
    out.terms = tm.to_terms();
    if (dec.d_m != 0.0) {
        ExpansionTerm logterm;
        logterm.exponent = Rational(1);
        logterm.log_power = 1;
        logterm.coeff = dec.d_m / m;
        out.terms.push_back(logterm);
    }
    std::sort(out.terms.begin(), out.terms.end(), term_less);
    out.remainder_exponent = target;
    out.provenance = "odd_power(m=" + std::to_string(m) + ")";
    return out;
}

HeatExpansion expand_theta(const LatticeSpec& spec, int K) {
    if (spec.power() % 2 == 0) return expand_perturbed(spec, K);
    return expand_odd_power(spec);
}

HeatExpansion watson_transform(const HeatExpansion& exp) {
    HeatExpansion out;
    for (const auto& term : exp.terms) {
        if (!(Rational(-1) < term.exponent)) {
            throw DomainError("watson_transform: exponent <= -1 is not Laplace-transformable");
        }
        const double j = term.exponent.value();
        const double gj = gamma(j + 1.0);
        const Rational e = term.exponent + 1;  // lambda^{-(j+1)}
        if (term.log_power == 0) {
            ExpansionTerm t;
            t.exponent = e;
            t.coeff = term.coeff * gj;
            out.terms.push_back(t);
        } else {
            // c t^k log t -> c Gamma(k+1) lambda^{-k-1} (psi(k+1) - log lambda)
            const double psi = digamma(j + 1.0);
            ExpansionTerm plain;
            plain.exponent = e;
            plain.coeff = term.coeff * gj * psi;
            out.terms.push_back(plain);
            ExpansionTerm logl;
            logl.exponent = e;
            logl.log_power = 1;
            logl.coeff = -term.coeff * gj;
            out.terms.push_back(logl);
        }
    }
    std::sort(out.terms.begin(), out.terms.end(), term_less);
    out.remainder_exponent = exp.remainder_exponent + 1;
    out.provenance = "watson(" + exp.provenance + ")";
    return out;
}

ProductExpansion logw_expansion(const HeatExpansion& theta_exp) {
    if (theta_exp.terms.empty()) throw DomainError("logw_expansion: empty expansion");
    const Rational lead = theta_exp.terms.front().exponent;
    if (!(Rational(-1) < lead && lead < Rational(0))) {
        throw DomainError("logw_expansion: leading exponent must lie in (-1, 0)");
    }

    ProductExpansion out;
    out.provenance = "logW(" + theta_exp.provenance + ")";
    out.remainder_exponent = theta_exp.remainder_exponent;  // O(t^rho) -> O(lambda^{-rho})
    for (const auto& term : theta_exp.terms) {
        const double j = term.exponent.value();
        const double gj1 = gamma(j + 1.0);
        if (term.log_power == 0) {
            if (term.exponent == Rational(0)) {
                out.log_coeff += term.coeff;
            } else if (term.exponent == Rational(-1, 2)) {
                // -c Gamma(1/2)/(-1/2) = 2 c sqrt(pi)
                out.sqrt_coeff += 2.0 * term.coeff * gj1;
            } else {
                ExpansionTerm t;
                t.exponent = term.exponent;  // lambda^{-j}
                t.coeff = -term.coeff * gj1 / j;
                if (Rational(0) < term.exponent) {
                    out.tail.push_back(t);
                } else {
                    out.growth.push_back(t);
                }
            }
        } else {
            // kappa t^k log t integrates to kappa Gamma(k+1)/k * lambda^{-k} log lambda
            // plus a lambda^{-k} companion. The companion constant is an
            // antiderivative-convention artifact entangled with the unresolved
            // t^k coefficient, so it is emitted fit-only (k = 1 convention:
            // kappa (2 - gamma_E)).
            if (!(Rational(0) < term.exponent)) {
                throw DomainError("logw_expansion: log term at nonpositive exponent");
            }
            ExpansionTerm logl;
            logl.exponent = term.exponent;
            logl.log_power = 1;
            logl.coeff = term.coeff * gj1 / j;
            out.tail.push_back(logl);
            ExpansionTerm comp;
            comp.exponent = term.exponent;
            comp.coeff = term.coeff * (2.0 - kEulerG);
            out.tail.push_back(comp);
            out.fit_only_tail.push_back(out.tail.size() - 1);
        }
    }
    std::sort(out.tail.begin(), out.tail.end(), term_less);
    // Indices into the sorted tail for fit-only entries must be recomputed.
    if (!out.fit_only_tail.empty()) {
        out.fit_only_tail.clear();
        for (size_t i = 0; i < out.tail.size(); ++i) {
            // The fit-only entries are exactly the log-companion plain terms at
            // exponents that also carry a log entry.
            if (out.tail[i].log_power == 0) {
                for (const auto& t : out.tail) {
                    if (t.log_power == 1 && t.exponent == out.tail[i].exponent) {
                        out.fit_only_tail.push_back(i);
                        break;
                    }
                }
            }
        }
    }
    out.constant_fit_only = true;
    return out;
}

}  // namespace latheat
