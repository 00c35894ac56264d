#include "latheat/series.hpp"

#include <algorithm>
#include <cmath>

namespace latheat {

namespace {

int sat_add(int a, int b) {
    if (a >= TruncatedSeries::kExactSeries || b >= TruncatedSeries::kExactSeries) {
        return TruncatedSeries::kExactSeries;
    }
    return a + b;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int min_degree, std::vector<double> coeffs, int trunc_order,
                                 double radius)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)), trunc_(trunc_order), radius_(radius) {
    if (radius_ <= 0.0) throw RadiusError("series: radius must be positive");
    if (trunc_ != kExactSeries &&
        static_cast<int>(coeffs_.size()) != trunc_ - min_degree_ + 1) {
        throw TruncationError("series: coefficient count does not match [min_degree, trunc_order]");
    }
    trim();
}

TruncatedSeries TruncatedSeries::polynomial(std::vector<double> coeffs, double radius) {
    TruncatedSeries s;
    s.min_degree_ = 0;
    s.coeffs_ = std::move(coeffs);
    s.trunc_ = kExactSeries;
    s.radius_ = radius;
    s.trim();
    return s;
}

TruncatedSeries TruncatedSeries::zero(double radius) { return polynomial({}, radius); }

TruncatedSeries TruncatedSeries::constant(double c, double radius) {
    return polynomial({c}, radius);
}

TruncatedSeries TruncatedSeries::monomial(double c, int degree, double radius) {
    TruncatedSeries s;
    s.min_degree_ = degree;
    s.coeffs_ = {c};
    s.trunc_ = kExactSeries;
    s.radius_ = radius;
    s.trim();
    return s;
}

void TruncatedSeries::trim() {
    if (!is_exact()) {
        // A truncated series always lists its window through trunc_order.
        if (min_degree_ > trunc_) {
            min_degree_ = trunc_;
            coeffs_.clear();
        }
        coeffs_.resize(static_cast<size_t>(trunc_ - min_degree_ + 1), 0.0);
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0.0) ++lead;
    if (lead == coeffs_.size() && !is_exact()) lead = coeffs_.size() - 1;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_degree_ += static_cast<int>(lead);
    }
    if (is_exact()) {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
        if (coeffs_.empty()) min_degree_ = 0;
    }
}

double TruncatedSeries::coeff(int k) const {
    if (trunc_ != kExactSeries && k > trunc_) {
        throw TruncationError("series: coefficient beyond truncation order requested");
    }
    if (k < min_degree_ || k > max_listed_degree()) return 0.0;
    return coeffs_[static_cast<size_t>(k - min_degree_)];
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order >= trunc_) return *this;
    TruncatedSeries out = *this;
    out.trunc_ = order;
    if (out.min_degree_ > order) {
        out.min_degree_ = order;
        out.coeffs_.clear();
    } else if (out.max_listed_degree() > order) {
        out.coeffs_.resize(static_cast<size_t>(order - out.min_degree_ + 1));
    }
    out.trim();
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out = *this;
    for (double& c : out.coeffs_) c = -c;
    return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int trunc = std::min(a.trunc_, b.trunc_);
    const int lo = std::min(a.min_degree_, b.min_degree_);
    const int hi = std::min(std::max(a.max_listed_degree(), b.max_listed_degree()),
                            trunc == TruncatedSeries::kExactSeries ? std::numeric_limits<int>::max() / 2
                                                                   : trunc);
    TruncatedSeries out;
    out.min_degree_ = lo;
    out.trunc_ = trunc;
    out.radius_ = std::min(a.radius_, b.radius_);
    out.coeffs_.assign(static_cast<size_t>(std::max(0, hi - lo + 1)), 0.0);
    for (int k = lo; k <= hi; ++k) {
        double c = 0.0;
        if (k >= a.min_degree_ && k <= a.max_listed_degree()) c += a.coeffs_[static_cast<size_t>(k - a.min_degree_)];
        if (k >= b.min_degree_ && k <= b.max_listed_degree()) c += b.coeffs_[static_cast<size_t>(k - b.min_degree_)];
        out.coeffs_[static_cast<size_t>(k - lo)] = c;
    }
    out.trim();
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    // Truncation rule: the product is determined up to
    // min(trunc(a) + min_degree(b), trunc(b) + min_degree(a)).
    const int trunc = std::min(sat_add(a.trunc_, b.min_degree_), sat_add(b.trunc_, a.min_degree_));
    TruncatedSeries out;
    out.radius_ = std::min(a.radius_, b.radius_);
    out.trunc_ = trunc;
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        out.min_degree_ = 0;
        out.trim();
        return out;
    }
    const int lo = a.min_degree_ + b.min_degree_;
    int hi = a.max_listed_degree() + b.max_listed_degree();
    if (trunc != TruncatedSeries::kExactSeries) hi = std::min(hi, trunc);
    out.min_degree_ = lo;
    out.coeffs_.assign(static_cast<size_t>(std::max(0, hi - lo + 1)), 0.0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        const int da = a.min_degree_ + static_cast<int>(i);
        if (a.coeffs_[i] == 0.0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            const int d = da + b.min_degree_ + static_cast<int>(j);
            if (d > hi) break;
            out.coeffs_[static_cast<size_t>(d - lo)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

TruncatedSeries operator*(double c, const TruncatedSeries& a) {
    TruncatedSeries out = a;
    for (double& x : out.coeffs_) x *= c;
    out.trim();
    return out;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    TruncatedSeries out = *this;
    out.min_degree_ += k;
    out.trunc_ = sat_add(out.trunc_, k);
    return out;
}

TruncatedSeries TruncatedSeries::pow(int n, int keep_order) const {
    TruncatedSeries acc = TruncatedSeries::constant(1.0, radius_);
    TruncatedSeries base = keep_order == kExactSeries ? *this : truncated(keep_order);
    int e = n;
    while (e > 0) {
        if (e & 1) {
            acc = acc * base;
            if (keep_order != kExactSeries) acc = acc.truncated(keep_order);
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
            if (keep_order != kExactSeries) base = base.truncated(keep_order);
        }
    }
    return acc;
}

double TruncatedSeries::eval(double u) const {
    if (min_degree_ < 0) throw DomainError("series eval: negative degrees present");
    double v = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * u + coeffs_[i];
    for (int k = 0; k < min_degree_; ++k) v *= u;
    return v;
}

std::complex<double> TruncatedSeries::eval(std::complex<double> u) const {
    if (min_degree_ < 0) throw DomainError("series eval: negative degrees present");
    std::complex<double> v(0.0, 0.0);
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * u + coeffs_[i];
    for (int k = 0; k < min_degree_; ++k) v *= u;
    return v;
}

TruncatedSeries sigma_from_rho(const TruncatedSeries& rho) {
    if (rho.min_degree() < 0) throw OddnessError("sigma_from_rho: rho must have min degree >= 1");
    const int top = rho.max_listed_degree();
    for (int k = std::max(0, rho.min_degree()); k <= top; k += 1) {
        if (k % 2 == 0 && rho.coeff(k) != 0.0) {
            throw OddnessError("sigma_from_rho: rho has a nonzero even-degree coefficient at z^" +
                               std::to_string(k));
        }
    }
    std::vector<double> sig;
    for (int j = 0; 2 * j + 1 <= top; ++j) sig.push_back(rho.coeff(2 * j + 1));
    int trunc = TruncatedSeries::kExactSeries;
    if (!rho.is_exact()) trunc = (rho.trunc_order() - 1) / 2;
    const double r2 = rho.radius() == TruncatedSeries::inf() ? TruncatedSeries::inf()
                                                             : rho.radius() * rho.radius();
    if (rho.is_exact()) return TruncatedSeries::polynomial(std::move(sig), r2);
    sig.resize(static_cast<size_t>(trunc + 1), 0.0);
    return TruncatedSeries(0, std::move(sig), trunc, r2);
}

TruncatedSeries q_from_sigma(const TruncatedSeries& sigma) { return qp_from_sigma(sigma, 1); }

TruncatedSeries power_correction(const TruncatedSeries& sigma, int power) {
    if (power < 1) throw DomainError("power_correction: power must be >= 1");
    const TruncatedSeries one = TruncatedSeries::constant(1.0, sigma.radius());
    const TruncatedSeries f = (one - sigma.shifted(1)).pow(power);
    return (f - one).shifted(-1);
}

TruncatedSeries qp_from_sigma(const TruncatedSeries& sigma, int p) {
    if (p < 1) throw DomainError("qp_from_sigma: p must be >= 1");
    return power_correction(sigma, 2 * p);
}

TruncatedSeries laurent_tau_power(const TruncatedSeries& rho, int m, int order) {
    if (m < 1) throw DomainError("laurent_tau_power: m must be >= 1");
    if (order < 1) throw DomainError("laurent_tau_power: order must be >= 1");
    // Run the oddness check through sigma_from_rho.
    (void)sigma_from_rho(rho);
    TruncatedSeries tau = TruncatedSeries::monomial(1.0, -1, rho.radius()) - rho;
    // No intermediate truncation: factors of min degree -1 pull higher
    // coefficients down, so only the tracked product rule decides validity.
    TruncatedSeries out = tau.pow(m);
    if (out.trunc_order() < order) {
        throw TruncationError("laurent_tau_power: rho truncation insufficient for degree " +
                              std::to_string(order));
    }
    return out.truncated(order);
}

WeightCoeffs weight_coeffs(const TruncatedSeries& g, int r, double u0) {
    if (r < 0) throw DomainError("weight_coeffs: r must be >= 0");
    if (u0 <= 0.0) throw DomainError("weight_coeffs: u0 must be positive");
    if (u0 >= g.radius()) throw RadiusError("weight_coeffs: u0 >= radius(g)");
    if (g.min_degree() < 0) throw DomainError("weight_coeffs: g must be a power series");

    WeightCoeffs out;
    out.r = r;
    // Sampling circle between u0 and the declared radius; for entire g pick a
    // fixed comfortable margin instead.
    const double rho_c =
        g.radius() == TruncatedSeries::inf() ? std::max(1.0, 2.0 * u0) : 0.5 * (u0 + g.radius());
    out.bound_ratio = u0 / rho_c;

    double gmax = 0.0;
    constexpr int kSamples = 512;
    for (int i = 0; i < kSamples; ++i) {
        const double phi = 2.0 * 3.14159265358979323846 * i / kSamples;
        const std::complex<double> u = std::polar(rho_c, phi);
        gmax = std::max(gmax, std::abs(g.eval(u)));
    }
    gmax *= 1.1;  // sampling safety factor
    out.bound_constant = (r == 0) ? 1.0 : std::pow(gmax, r);

    if (r == 0) {
        out.coeffs = {1.0};
        return out;
    }
    const TruncatedSeries gr = g.pow(r, g.trunc_order());
    const int top = gr.is_exact() ? gr.max_listed_degree() : gr.trunc_order();
    for (int k = 0; k <= top; ++k) out.coeffs.push_back(gr.coeff(k));
    if (out.coeffs.empty()) out.coeffs = {0.0};
    return out;
}

}  // namespace latheat
