#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <vector>

#include "splitgraph/rng.hpp"

namespace splitgraph {

// Stationary out-degree distribution: geometric on {1, 2, ...} with
// success probability gamma. pmf(m) = gamma * (1 - gamma)^(m-1).
class OutDist {
public:
    explicit OutDist(double gamma);

    double gamma() const { return gamma_; }
    double beta() const;  // decay rate of the exponential form
    double pmf(std::int64_t m) const;
    double cdf(std::int64_t m) const;   // P(X <= m)
    double ccdf(std::int64_t m) const;  // P(X >= m)
    double mean() const { return 1.0 / gamma_; }

    std::int64_t sample(Rng& rng) const;

private:
    double gamma_;
};

// Stationary in-degree distribution, defined by the ratio recurrence
//   g_n = n / (n + a) * g_{n-1},   a = 2 / (1 - gamma),
// with g_1 = (a-1)/(a+1). The PMF is tabulated by the recurrence up to a
// cutoff; the mass, CDF and mean beyond the cutoff have exact closed
// forms (telescoping gamma-function sums), so the truncation is
// accounted for, not dropped. The tail decays like n^(-a).
class InDist {
public:
    explicit InDist(double gamma, double tail_tol = 1e-9);

    double gamma() const { return gamma_; }
    double alpha() const { return a_; }  // power-law tail exponent
    double tail_tol() const { return tail_tol_; }

    std::size_t table_size() const { return pmf_.size(); }
    double tail_mass() const { return tail_mass_; }
    const std::vector<double>& pmf_table() const { return pmf_; }

    // Table lookup for tabulated n, log-gamma closed form beyond.
    double pmf(std::int64_t n) const;
    double cdf(std::int64_t n) const;
    double ccdf(std::int64_t n) const;  // P(X >= n), exact
    // Table sum plus the closed-form tail contribution.
    double mean_estimate() const;

    // Inverts the tabulated CDF; a draw landing in the tail mass extends
    // the sampling table on demand. Concurrent sampling is race-free.
    std::int64_t sample(Rng& rng) const;

private:
    struct CdfTable {
        std::vector<double> cdf;  // cdf[i] = P(X <= i+1)
        double last_pmf = 0;      // pmf at the last tabulated degree
    };
    std::shared_ptr<const CdfTable> snapshot() const;

    double gamma_;
    double a_;
    double tail_tol_;
    std::vector<double> pmf_;  // pmf_[i] = g_{i+1}
    double tail_mass_;

    mutable std::shared_ptr<const CdfTable> sample_table_;
    mutable std::mutex extend_mutex_;
};

double out_pmf(double gamma, std::int64_t m);
double in_pmf_closed(double gamma, std::int64_t n);
InDist in_pmf_table(double gamma, double tail_tol = 1e-9);
double tail_exponent(double gamma);

// Maximum absolute residual of the out-degree master recurrence
//   (1 + m - 2 gamma) f_m = (1 - gamma)(m - 1) f_{m-1}
//                           + 2 gamma * sum_{r > m} f_r
// over 2 <= m <= n_max.
double check_stationarity_out(double gamma, std::int64_t n_max);

// Same for the in-degree recurrence
//   g_n [2(n-1)/n + (1-gamma) n] = 2 sum_{l > n} g_l / l
//                                  + (1-gamma)(n-1) g_{n-1}.
// The overload taking a pmf function lets tests probe perturbed tables;
// beyond-horizon mass is handled by the exact tail formulas.
double check_stationarity_in(double gamma, std::int64_t n_max,
                             const std::function<double(std::int64_t)>& pmf);
double check_stationarity_in(const InDist& dist, std::int64_t n_max);

inline std::int64_t sample_out(double gamma, Rng& rng) {
    return OutDist(gamma).sample(rng);
}
inline std::int64_t sample_in(const InDist& dist, Rng& rng) {
    return dist.sample(rng);
}

}  // namespace splitgraph
