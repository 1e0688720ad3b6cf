#include "splitgraph/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splitgraph {

namespace {

void require_gamma(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::domain_error("gamma must lie in (0, 1)");
}

double g1_of(double a) { return (a - 1.0) / (a + 1.0); }

}  // namespace

// ---------------------------------------------------------------------
// OutDist

OutDist::OutDist(double gamma) : gamma_(gamma) { require_gamma(gamma); }

double OutDist::beta() const { return -std::log1p(-gamma_); }

double OutDist::pmf(std::int64_t m) const {
    if (m < 1) throw std::domain_error("degree must be >= 1");
    return gamma_ * std::pow(1.0 - gamma_, static_cast<double>(m - 1));
}

double OutDist::cdf(std::int64_t m) const {
    if (m < 1) return 0.0;
    return -std::expm1(static_cast<double>(m) * std::log1p(-gamma_));
}

double OutDist::ccdf(std::int64_t m) const {
    if (m <= 1) return 1.0;
    return std::pow(1.0 - gamma_, static_cast<double>(m - 1));
}

std::int64_t OutDist::sample(Rng& rng) const {
    const double u = rng.uniform();
    return 1 + static_cast<std::int64_t>(
                   std::floor(std::log1p(-u) / std::log1p(-gamma_)));
}

// ---------------------------------------------------------------------
// InDist
//
// Closed-form tail identities used below (b = 1 - gamma, a = 2/b):
//   sum_{l>N} g_l        = g_N (N+1) / (a-1)
//   sum_{l>N} g_l / l    = g_N (N+1) / (a (N+a+1)) * (N+a+1)/(N+1) ... =
//                          g_{N+1} (N+1+a) / (a (N+1))
//   sum_{l>N} l g_l      = g_{N+1} (N+1+a) [ (N+2)/(a-2) - 1/(a-1) ]
// All follow from telescoping Gamma(n+c)/Gamma(n+a+c') sums.

InDist::InDist(double gamma, double tail_tol)
    : gamma_(gamma), a_(2.0 / (1.0 - gamma)), tail_tol_(tail_tol) {
    require_gamma(gamma);
    if (!(tail_tol > 0.0 && tail_tol <= 1e-6))
        throw std::domain_error("tail_tol must lie in (0, 1e-6]");

    double g = g1_of(a_);
    pmf_.push_back(g);
    // Extend until the exact remaining mass drops below tail_tol.
    for (;;) {
        const auto n = static_cast<double>(pmf_.size());
        tail_mass_ = g * (n + 1.0) / (a_ - 1.0);
        if (tail_mass_ < tail_tol_) break;
        g *= (n + 1.0) / (n + 1.0 + a_);
        pmf_.push_back(g);
    }
}

double InDist::pmf(std::int64_t n) const {
    if (n < 1) throw std::domain_error("degree must be >= 1");
    if (static_cast<std::size_t>(n) <= pmf_.size()) return pmf_[n - 1];
    return in_pmf_closed(gamma_, n);
}

double InDist::ccdf(std::int64_t n) const {
    if (n <= 1) return 1.0;
    return pmf(n - 1) * static_cast<double>(n) / (a_ - 1.0);
}

double InDist::cdf(std::int64_t n) const {
    if (n < 1) return 0.0;
    return 1.0 - ccdf(n + 1);
}

double InDist::mean_estimate() const {
    // Kahan summation, small terms first; the table can be long when the
    // tail exponent is close to 2.
    double s = 0.0, comp = 0.0;
    for (std::size_t i = pmf_.size(); i-- > 0;) {
        const double y = static_cast<double>(i + 1) * pmf_[i] - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    const auto n1 = static_cast<double>(pmf_.size() + 1);  // N + 1
    const double tail = pmf(pmf_.size() + 1) * (n1 + a_) *
                        ((n1 + 1.0) / (a_ - 2.0) - 1.0 / (a_ - 1.0));
    return s + tail;
}

std::shared_ptr<const InDist::CdfTable> InDist::snapshot() const {
    std::lock_guard<std::mutex> lock(extend_mutex_);
    if (!sample_table_) {
        auto table = std::make_shared<CdfTable>();
        table->cdf.reserve(pmf_.size());
        double acc = 0.0;
        for (double g : pmf_) table->cdf.push_back(acc += g);
        table->last_pmf = pmf_.back();
        sample_table_ = table;
    }
    return sample_table_;
}

std::int64_t InDist::sample(Rng& rng) const {
    const double u = rng.uniform();
    auto table = snapshot();
    if (u >= table->cdf.back()) {
        // Rare branch: extend the CDF table until it covers u.
        std::lock_guard<std::mutex> lock(extend_mutex_);
        if (u >= sample_table_->cdf.back()) {
            auto grown = std::make_shared<CdfTable>(*sample_table_);
            double acc = grown->cdf.back();
            double g = grown->last_pmf;
            while (u >= acc) {
                const auto n = static_cast<double>(grown->cdf.size());
                g *= (n + 1.0) / (n + 1.0 + a_);
                grown->cdf.push_back(acc += g);
            }
            grown->last_pmf = g;
            sample_table_ = grown;
        }
        table = sample_table_;
    }
    auto it = std::upper_bound(table->cdf.begin(), table->cdf.end(), u);
    return 1 + static_cast<std::int64_t>(it - table->cdf.begin());
}

// ---------------------------------------------------------------------
// Free functions

double out_pmf(double gamma, std::int64_t m) { return OutDist(gamma).pmf(m); }

double in_pmf_closed(double gamma, std::int64_t n) {
    require_gamma(gamma);
    if (n < 1) throw std::domain_error("degree must be >= 1");
    // Extended precision: the lgamma terms grow large and nearly cancel,
    // and the result must match the recurrence to relative 1e-10.
    const long double a = 2.0L / (1.0L - static_cast<long double>(gamma));
    const long double x = static_cast<long double>(n);
    const long double g1 = (a - 1.0L) / (a + 1.0L);
    return static_cast<double>(
        std::exp(std::lgammal(x + 1.0L) + std::lgammal(2.0L + a) -
                 std::lgammal(x + 1.0L + a) + std::log(g1)));
}

InDist in_pmf_table(double gamma, double tail_tol) {
    return InDist(gamma, tail_tol);
}

double tail_exponent(double gamma) {
    require_gamma(gamma);
    return 2.0 / (1.0 - gamma);
}

double check_stationarity_out(double gamma, std::int64_t n_max) {
    if (n_max < 2) throw std::domain_error("n_max must be >= 2");
    OutDist dist(gamma);
    double worst = 0.0;
    for (std::int64_t m = 2; m <= n_max; ++m) {
        const double tail =
            std::pow(1.0 - gamma, static_cast<double>(m));  // sum_{r>m} f_r
        const double lhs = (1.0 + static_cast<double>(m) - 2.0 * gamma) *
                           dist.pmf(m);
        const double rhs = (1.0 - gamma) * static_cast<double>(m - 1) *
                               dist.pmf(m - 1) +
                           2.0 * gamma * tail;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double check_stationarity_in(double gamma, std::int64_t n_max,
                             const std::function<double(std::int64_t)>& pmf) {
    require_gamma(gamma);
    if (n_max < 2) throw std::domain_error("n_max must be >= 2");
    const double a = 2.0 / (1.0 - gamma);
    const std::int64_t horizon = n_max + 1000;

    // S[n] = sum_{l>n} pmf(l)/l, summed to the horizon, closed-form beyond.
    const double beyond =
        in_pmf_closed(gamma, horizon + 1) *
        (static_cast<double>(horizon + 1) + a) /
        (a * static_cast<double>(horizon + 1));
    std::vector<double> suffix(horizon + 2, 0.0);
    suffix[horizon + 1] = beyond;
    for (std::int64_t l = horizon; l >= 1; --l)
        suffix[l] = suffix[l + 1] + pmf(l) / static_cast<double>(l);

    const double b = 1.0 - gamma;
    double worst = 0.0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const double x = static_cast<double>(n);
        const double lhs = pmf(n) * (2.0 * (x - 1.0) / x + b * x);
        const double rhs = 2.0 * suffix[n + 1] + b * (x - 1.0) * pmf(n - 1);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double check_stationarity_in(const InDist& dist, std::int64_t n_max) {
    return check_stationarity_in(dist.gamma(), n_max,
                                 [&](std::int64_t n) { return dist.pmf(n); });
}

}  // namespace splitgraph
