#pragma once

#include <cstdint>
#include <functional>

#include "latheat/lattice.hpp"

namespace latheat {

// Certified direct evaluation of the summation objects: theta(t), weighted
// theta sums, harmonic sums, the resolvent trace and log of the canonical
// product. Every result carries a certified tail bound.
//
// Kernels exist in two forms: a plain serial reference (single compensated
// accumulator, descending index order) and the default blocked kernel that
// OpenMP-parallelizes over fixed-size blocks. Block boundaries and the
// combination order are independent of the thread count, so the blocked
// result is bit-reproducible; the serial reference is kept for testing.
enum class Execution { serial, parallel };

struct SumResult {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
};

// Neumaier-compensated accumulator.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double get() const { return sum + comp; }
};

// Deterministic blocked sum of term(n) over n in [begin, end): fixed blocks of
// 4096, descending order inside each block, blocks combined in descending
// order. exec == serial uses one accumulator over the whole range instead.
double compensated_sum(std::int64_t begin, std::int64_t end,
                       const std::function<double(std::int64_t)>& term, Execution exec);

// theta(t) = sum_n exp(-lambda_n t) within tol + tail_bound.
SumResult theta(const LatticeSpec& spec, double t, double tol,
                Execution exec = Execution::parallel);

// sum_{n>=0} (n+a)^{-w} exp(-(n+a)^M t); w may be negative (positive powers).
// w = 1 gives the harmonic sums H_M(t).
SumResult general_theta(double a, int power, int w, double t, double tol,
                        Execution exec = Execution::parallel);

// sum_n 1/(lambda + lambda_n), head by direct summation, tail by a 3-term
// expansion in lambda/lambda_n with certified power-sum tails.
SumResult resolvent(const LatticeSpec& spec, double lambda, double tol,
                    Execution exec = Execution::parallel);

// log W(lambda) = sum_n log(1 + lambda/lambda_n), same head/tail discipline.
SumResult log_product(const LatticeSpec& spec, double lambda, double tol,
                      Execution exec = Execution::parallel);

}  // namespace latheat
