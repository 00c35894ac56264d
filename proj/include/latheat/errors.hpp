#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace latheat {

// Report attached to a PoleError: where the pole is, its order, and (for
// simple poles) the residue.
struct PoleReport {
    std::complex<double> location{0.0, 0.0};
    int order = 1;
    std::complex<double> residue{0.0, 0.0};
};

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class PoleError : public Error {
  public:
    PoleError(const std::string& msg, PoleReport rep) : Error(msg), report(rep) {}
    PoleReport report;
};

class DomainError : public Error {
  public:
    using Error::Error;
};

// Input rho series has a nonzero even-degree coefficient.
class OddnessError : public Error {
  public:
    using Error::Error;
};

// A series operation asked for coefficients beyond the tracked truncation order.
class TruncationError : public Error {
  public:
    using Error::Error;
};

// Evaluation point at or beyond the declared disk of convergence.
class RadiusError : public Error {
  public:
    using Error::Error;
};

// Some lambda_n <= 0; carries the first violating index.
class PositivityError : public Error {
  public:
    PositivityError(const std::string& msg, long long idx) : Error(msg), index(idx) {}
    long long index = 0;
};

// Operation requested for the wrong parity of the power.
class ParityError : public Error {
  public:
    using Error::Error;
};

class ConditionError : public Error {
  public:
    using Error::Error;
};

class PoleProximityError : public Error {
  public:
    using Error::Error;
};

// Continuation order too low for the requested evaluation point.
class OrderError : public Error {
  public:
    using Error::Error;
};

// Nothing measurable (remainder at noise level).
class DegenerateError : public Error {
  public:
    using Error::Error;
};

}  // namespace latheat
