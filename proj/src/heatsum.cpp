#include "latheat/heatsum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace latheat {

namespace {

constexpr double kExpCut = 46.0;  // e^{-46} ~ 1e-20, far below every downstream tolerance

template <class F>
double blocked_sum_impl(std::int64_t begin, std::int64_t end, F&& term, Execution exec) {
    if (end <= begin) return 0.0;
    if (exec == Execution::serial) {
        Accumulator acc;
        for (std::int64_t n = end - 1; n >= begin; --n) acc.add(term(n));
        return acc.get();
    }
    constexpr std::int64_t kBlock = 4096;
    const std::int64_t nblocks = (end - begin + kBlock - 1) / kBlock;
    std::vector<double> partial(static_cast<size_t>(nblocks));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        const std::int64_t lo = begin + b * kBlock;
        const std::int64_t hi = std::min(end, lo + kBlock);
        Accumulator acc;
        for (std::int64_t n = hi - 1; n >= lo; --n) acc.add(term(n));
        partial[static_cast<size_t>(b)] = acc.get();
    }
    Accumulator total;
    for (std::int64_t b = nblocks - 1; b >= 0; --b) total.add(partial[static_cast<size_t>(b)]);
    return total.get();
}

// Smallest index beyond which the decay payload t*(n+a)^M - Q*t*(n+a)^{M-2}
// - max(0,-w)*log(n+a) clears kExpCut (plus margin for the tail integral).
std::int64_t find_cutoff(double a, int M, double q_star, int w, double t) {
    const double wneg = w < 0 ? static_cast<double>(-w) : 0.0;
    auto payload = [&](std::int64_t n) {
        const double x = static_cast<double>(n) + a;
        return t * std::pow(x, M) - q_star * t * std::pow(x, M - 2) - wneg * std::log(x) -
               2.0 * wneg;
    };
    std::int64_t hi = 8;
    while (payload(hi) < kExpCut) hi *= 2;
    std::int64_t lo = hi / 2;
    while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        if (payload(mid) >= kExpCut) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return std::max<std::int64_t>(hi, 8);
}

// Upper incomplete gamma for integer k: int_x^inf u^k e^{-u} du = k! e^{-x} sum_j x^j/j!.
double upper_gamma_int(int k, double x) {
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i) kfact *= i;
    double sum = 0.0;
    double xp = 1.0;
    double jfact = 1.0;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            xp *= x;
            jfact *= j;
        }
        sum += xp / jfact;
    }
    return kfact * std::exp(-x) * sum;
}

// Certified bound for sum_{k > N} (k+a)^{-w} exp(-c t (k+a)^M), using
// (k+a)^M >= (N+1+a)^{M-1} (k+a).
double tail_bound_weighted(double a, int M, int w, double ct, std::int64_t N) {
    const double x1 = static_cast<double>(N) + 1.0 + a;
    const double beta = ct * std::pow(x1, M - 1);
    if (beta <= 0.0) return std::numeric_limits<double>::infinity();
    if (w >= 0) {
        const double geo = -std::expm1(-beta);
        return std::pow(x1, -w) * std::exp(-beta * x1) / geo;
    }
    const int W = -w;
    // First term plus integral of x^W e^{-beta x}; requires beta*x1 past the
    // integrand peak, which the cutoff margin guarantees.
    const double first = std::pow(x1, W) * std::exp(-beta * x1);
    const double integral = std::pow(beta, -W - 1) * upper_gamma_int(W, beta * x1);
    return first + integral;
}

struct PowerTails {
    // sum_{n > N} lambda_n^{-j} for j = 1..4, plus a certified bracket error.
    double t[5] = {0, 0, 0, 0, 0};
    double err = 0.0;
    std::int64_t terms = 0;
};

PowerTails power_sum_tails(const LatticeSpec& spec, std::int64_t N, Execution exec) {
    PowerTails out;
    const double a = spec.offset();
    const int M = spec.power();
    const std::int64_t N2 = 10 * N;
    for (int j = 1; j <= 4; ++j) {
        out.t[j] = blocked_sum_impl(
            N + 1, N2 + 1,
            [&](std::int64_t n) { return std::pow(lambda_at(spec, n), -j); }, exec);
    }
    out.terms = 4 * (N2 - N);
    // Remainder over n > N2 bracketed by integrals of (x+a)^{-Mj}; the
    // perturbation g contributes a relative correction <= ~j Q*/(N2+a)^2.
    const double x0 = static_cast<double>(N2) + a;
    const double qhat = spec.q_star() / (x0 * x0);
    for (int j = 1; j <= 4; ++j) {
        const double e = static_cast<double>(M) * j - 1.0;
        const double hi = std::pow(x0, -e) / e;
        const double lo = std::pow(x0 + 1.0, -e) / e;
        const double mid = 0.5 * (hi + lo);
        out.t[j] += mid;
        out.err += 0.5 * (hi - lo) + 4.0 * j * qhat * mid;
    }
    return out;
}

}  // namespace

double compensated_sum(std::int64_t begin, std::int64_t end,
                       const std::function<double(std::int64_t)>& term, Execution exec) {
    return blocked_sum_impl(begin, end, term, exec);
}

SumResult theta(const LatticeSpec& spec, double t, double tol, Execution exec) {
    if (!spec.validated()) throw DomainError("theta: spec must be validated");
    if (!(t > 0.0)) throw DomainError("theta: t must be positive");
    if (tol < 1e-15) throw DomainError("theta: tol must be >= 1e-15");

    std::int64_t N = find_cutoff(spec.offset(), spec.power(), spec.q_star(), 0, t);
    const double x1 = static_cast<double>(N) + 1.0 + spec.offset();
    const double c = 1.0 - spec.q_star() / (x1 * x1);
    double tail = tail_bound_weighted(spec.offset(), spec.power(), 0, c * t, N);
    while (tail > tol) {
        N = N + N / 4 + 8;
        const double x = static_cast<double>(N) + 1.0 + spec.offset();
        tail = tail_bound_weighted(spec.offset(), spec.power(), 0,
                                   (1.0 - spec.q_star() / (x * x)) * t, N);
    }

    SumResult res;
    res.value = blocked_sum_impl(
        0, N + 1, [&](std::int64_t n) { return std::exp(-lambda_at(spec, n) * t); }, exec);
    res.tail_bound = tail;
    res.terms_used = N + 1;
    return res;
}

SumResult general_theta(double a, int power, int w, double t, double tol, Execution exec) {
    if (!(t > 0.0)) throw DomainError("general_theta: t must be positive");
    if (!(a > 0.0)) throw DomainError("general_theta: offset must be positive");
    if (tol < 1e-15) throw DomainError("general_theta: tol must be >= 1e-15");

    std::int64_t N = find_cutoff(a, power, 0.0, w, t);
    double tail = tail_bound_weighted(a, power, w, t, N);
    while (tail > tol) {
        N = N + N / 4 + 8;
        tail = tail_bound_weighted(a, power, w, t, N);
    }

    SumResult res;
    res.value = blocked_sum_impl(
        0, N + 1,
        [&](std::int64_t n) {
            const double x = static_cast<double>(n) + a;
            return std::pow(x, -w) * std::exp(-std::pow(x, power) * t);
        },
        exec);
    res.tail_bound = tail;
    res.terms_used = N + 1;
    return res;
}

SumResult resolvent(const LatticeSpec& spec, double lambda, double tol, Execution exec) {
    if (!spec.validated()) throw DomainError("resolvent: spec must be validated");
    if (!(lambda > 0.0)) throw DomainError("resolvent: lambda must be positive");
    if (spec.power() < 2) {
        throw DomainError("resolvent: needs power >= 2 (sum of 1/lambda_n must converge)");
    }
    (void)tol;
    const double a = spec.offset();
    const std::int64_t N = std::max<std::int64_t>(
        1000, static_cast<std::int64_t>(
                  std::ceil(50.0 * std::pow(lambda, 1.0 / spec.power()) - a)) +
                  1);

    SumResult res;
    res.value = blocked_sum_impl(
        0, N + 1, [&](std::int64_t n) { return 1.0 / (lambda + lambda_at(spec, n)); }, exec);

    const PowerTails pt = power_sum_tails(spec, N, exec);
    // 1/(lambda + x) = 1/x - lambda/x^2 + lambda^2/x^3 - lambda^3/(x^3 (lambda + x)).
    res.value += pt.t[1] - lambda * pt.t[2] + lambda * lambda * pt.t[3];
    res.tail_bound = lambda * lambda * lambda * pt.t[4] + pt.err * (1.0 + lambda + lambda * lambda);
    res.terms_used = N + 1 + pt.terms;
    return res;
}

SumResult log_product(const LatticeSpec& spec, double lambda, double tol, Execution exec) {
    if (!spec.validated()) throw DomainError("log_product: spec must be validated");
    if (lambda < 0.0) throw DomainError("log_product: lambda must be >= 0");
    if (spec.power() < 2) {
        throw DomainError("log_product: needs power >= 2");
    }
    (void)tol;
    SumResult res;
    if (lambda == 0.0) return res;  // empty product

    const double a = spec.offset();
    const std::int64_t N = std::max<std::int64_t>(
        1000, static_cast<std::int64_t>(
                  std::ceil(50.0 * std::pow(lambda, 1.0 / spec.power()) - a)) +
                  1);

    res.value = blocked_sum_impl(
        0, N + 1, [&](std::int64_t n) { return std::log1p(lambda / lambda_at(spec, n)); }, exec);

    const PowerTails pt = power_sum_tails(spec, N, exec);
    // log(1+x) = x - x^2/2 + x^3/3 + O(x^4/2) for x <= 1/2.
    const double l2 = lambda * lambda;
    res.value += lambda * pt.t[1] - 0.5 * l2 * pt.t[2] + l2 * lambda / 3.0 * pt.t[3];
    res.tail_bound = 0.5 * l2 * l2 * pt.t[4] + pt.err * (lambda + l2 + l2 * lambda);
    res.terms_used = N + 1 + pt.terms;
    return res;
}

}  // namespace latheat
