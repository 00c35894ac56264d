#include "latheat/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace latheat {

namespace {

double sup_abs_on_interval(const TruncatedSeries& g, double lo, double hi) {
    // Dense sampling with 5% inflation stands in for exact maximization.
    constexpr int kSamples = 1024;
    double m = 0.0;
    for (int i = 0; i <= kSamples; ++i) {
        const double u = lo + (hi - lo) * i / kSamples;
        m = std::max(m, std::abs(g.eval(u)));
    }
    return 1.05 * m;
}

}  // namespace

LatticeSpec LatticeSpec::pure(double a, int power) {
    LatticeSpec s;
    s.a_ = a;
    s.power_ = power;
    s.g_ = TruncatedSeries::zero();
    s.u0_ = 1.0 / (a * a);
    s.source_ = Source::pure;
    return s;
}

LatticeSpec LatticeSpec::from_g(double a, int power, TruncatedSeries g) {
    LatticeSpec s;
    s.a_ = a;
    s.power_ = power;
    s.g_ = std::move(g);
    s.u0_ = 1.0 / (a * a);
    s.source_ = Source::explicit_g;
    return s;
}

LatticeSpec LatticeSpec::from_rho(double a, int power, TruncatedSeries rho) {
    LatticeSpec s;
    s.a_ = a;
    s.power_ = power;
    const TruncatedSeries sigma = sigma_from_rho(rho);
    s.g_ = power_correction(sigma, power);
    s.u0_ = 1.0 / (a * a);
    s.source_ = Source::from_rho;
    s.rho_ = std::move(rho);
    return s;
}

bool LatticeSpec::hb_style() const {
    if (power_ != 2 || source_ != Source::from_rho || !rho_) return false;
    if (std::abs(a_ - 1.5) > 1e-15) return false;
    if (rho_->min_degree() < 1) return false;
    double at2 = 0.0;
    for (int k = rho_->min_degree(); k <= rho_->max_listed_degree(); ++k) {
        const double c = rho_->coeff(k);
        if (c < 0.0) return false;
        at2 += c * std::pow(2.0, k);
    }
    return at2 <= 0.5 + 1e-12;
}

LatticeSpec validate(LatticeSpec spec) {
    if (spec.a_ <= 0.0) throw DomainError("validate: offset must be positive");
    if (spec.power_ < 1) throw DomainError("validate: power must be >= 1");
    if (spec.u0_ >= spec.g_.radius()) {
        throw RadiusError("validate: u0 = a^{-2} >= radius(g)");
    }

    spec.q_star_ = sup_abs_on_interval(spec.g_, 0.0, spec.u0_);

    // Positivity: beyond (n+a)^2 > Q* the tail is certified positive since
    // lambda_n >= (n+a)^{M-2} ((n+a)^2 - Q*). Check directly up to there.
    const double a = spec.a_;
    const long long n_star =
        static_cast<long long>(std::ceil(std::sqrt(spec.q_star_) - a)) + 1;
    for (long long n = 0; n <= std::max(n_star, 2LL); ++n) {
        const double lam = lambda_at(spec, n);
        if (!(lam > 0.0)) {
            throw PositivityError("validate: lambda_" + std::to_string(n) + " <= 0", n);
        }
    }

    // Monotonicity: find the first index from which the certificate
    // (n+1+a)^{M-2}((n+1+a)^2 - Q*) > (n+a)^{M-2}((n+a)^2 + Q*)
    // holds; check directly below it.
    const int M = spec.power_;
    const double qs = spec.q_star_;
    auto lower_next = [&](long long n) {
        const double x = static_cast<double>(n) + 1.0 + a;
        return std::pow(x, M - 2) * (x * x - qs);
    };
    auto upper_here = [&](long long n) {
        const double x = static_cast<double>(n) + a;
        return std::pow(x, M - 2) * (x * x + qs);
    };
    long long cert = 0;
    while (cert < (1LL << 40)) {
        bool ok = true;
        for (long long k = cert; k < cert + 8; ++k) {
            if (!(lower_next(k) > upper_here(k))) {
                ok = false;
                cert = k + 1;
                break;
            }
        }
        if (ok) break;
    }
    long long n1 = cert;
    for (long long k = cert - 1; k >= 0; --k) {
        if (lambda_at(spec, k + 1) > lambda_at(spec, k)) {
            n1 = k;
        } else {
            break;
        }
    }
    spec.n1_ = n1;
    spec.lambda0_ = lambda_at(spec, 0);
    spec.validated_ = true;
    return spec;
}

double lambda_at(const LatticeSpec& spec, long long n) {
    const double x = static_cast<double>(n) + spec.offset();
    const double u = 1.0 / (x * x);
    const double xm = std::pow(x, spec.power());
    if (spec.g().is_zero()) return xm;
    return xm + xm * u * spec.g().eval(u);
}

OddDecomposition odd_decompose(const LatticeSpec& spec) {
    const int m = spec.power();
    if (m % 2 == 0) {
        throw ParityError("odd_decompose: power is even (d_m = 0; use the even-power pipeline)");
    }
    if (spec.source() != LatticeSpec::Source::from_rho || !spec.rho()) {
        throw DomainError("odd_decompose: spec must be built from a rho series");
    }
    const TruncatedSeries taum = laurent_tau_power(*spec.rho(), m, 1);
    OddDecomposition out;
    for (int j = 1; j <= (m - 1) / 2; ++j) {
        out.poly_coeffs.push_back(taum.coeff(2 * j - m));
    }
    out.d_m = taum.coeff(1);
    out.remainder_power = 3;
    return out;
}

CountReport count(const LatticeSpec& spec, double threshold) {
    if (!spec.validated()) throw DomainError("count: spec must be validated");
    if (threshold < 0.0) throw DomainError("count: threshold must be >= 0");
    CountReport rep;
    rep.threshold = threshold;

    long long cnt = 0;
    const long long n1 = spec.monotone_from();
    long long n = 0;
    for (; n <= n1; ++n) {
        if (lambda_at(spec, n) <= threshold) ++cnt;
    }
    // Monotone tail: binary search for the last index with lambda <= threshold.
    if (lambda_at(spec, n1 + 1) <= threshold) {
        long long lo = n1 + 1;  // known <= threshold
        long long hi = n1 + 2;
        while (lambda_at(spec, hi) <= threshold) {
            lo = hi;
            hi = 2 * hi + 8;
        }
        while (lo + 1 < hi) {
            const long long mid = lo + (hi - lo) / 2;
            if (lambda_at(spec, mid) <= threshold) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        cnt += lo - n1;
    }
    rep.count = cnt;

    if (spec.hb_style()) {
        const double r = std::sqrt(threshold);
        rep.lower_bound = static_cast<long long>(std::floor(r - 0.5));
        rep.upper_bound = static_cast<long long>(std::floor(r));
        rep.lower_bound = std::max(rep.lower_bound, 0LL);
    } else {
        rep.lower_bound = cnt;
        rep.upper_bound = cnt;
    }
    return rep;
}

}  // namespace latheat
