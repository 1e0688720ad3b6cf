#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "splitgraph/analytic.hpp"
#include "splitgraph/gof.hpp"

using namespace splitgraph;

TEST_CASE("out pmf values and normalization") {
    CHECK(out_pmf(0.3, 1) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(out_pmf(0.3, 2) == doctest::Approx(0.21).epsilon(1e-14));
    for (double gamma : {0.1, 0.5, 0.9}) {
        double sum = 0;
        for (std::int64_t m = 1; m <= 2000; ++m) sum += out_pmf(gamma, m);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(out_pmf(0.0, 1), std::domain_error);
    CHECK_THROWS_AS(out_pmf(1.0, 1), std::domain_error);
    CHECK_THROWS_AS(out_pmf(0.3, 0), std::domain_error);
}

TEST_CASE("out pmf is exactly log-linear with slope -beta") {
    OutDist dist(0.37);
    const double beta = dist.beta();
    CHECK(beta == doctest::Approx(-std::log(0.63)).epsilon(1e-14));
    for (std::int64_t m = 2; m <= 60; ++m) {
        double slope = std::log(dist.pmf(m)) - std::log(dist.pmf(m - 1));
        CHECK(slope == doctest::Approx(-beta).epsilon(1e-12));
    }
}

// Independent oracle for g_1: normalize the recurrence from an
// unnormalized seed of 1. The sum runs to a fixed horizon N and is
// closed with the telescoped remainder: since
//   T(n) - T(n+1) = (a-1) * u_n / (n+1)  with  T(n) = (n+1) * u_n / ...
// more directly, u_{n+1} = u_n (n+1)/(n+1+a) telescopes to
//   sum_{n>N} u_n = u_N (N+1) / (a-1),
// which is checked here against a doubled horizon before use.
static double g1_by_normalization(double gamma) {
    const double a = 2.0 / (1.0 - gamma);
    auto partial = [&](long horizon, double& last) {
        double term = 1.0, sum = 0.0, comp = 0.0;
        for (long n = 1; n <= horizon; ++n) {
            double y = term - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            last = term;
            term *= static_cast<double>(n + 1) /
                    (static_cast<double>(n + 1) + a);
        }
        return sum;
    };
    double last1 = 0, last2 = 0;
    const long horizon = 2000000;
    double total1 = partial(horizon, last1) +
                    last1 * static_cast<double>(horizon + 1) / (a - 1.0);
    double total2 = partial(2 * horizon, last2) +
                    last2 * static_cast<double>(2 * horizon + 1) / (a - 1.0);
    REQUIRE(std::abs(total1 - total2) <= 1e-11 * total1);
    return 1.0 / total2;
}

TEST_CASE("in distribution head values against the normalization oracle") {
    InDist dist(0.3);
    CHECK(dist.pmf(1) == doctest::Approx(13.0 / 27.0).epsilon(1e-12));
    CHECK(dist.pmf(1) == doctest::Approx(g1_by_normalization(0.3)).epsilon(1e-10));
    CHECK(dist.pmf(2) / dist.pmf(1) ==
          doctest::Approx(1.4 / 3.4).epsilon(1e-12));
    for (double gamma : {0.1, 0.5, 0.8}) {
        InDist d(gamma);
        CHECK(d.pmf(1) ==
              doctest::Approx(g1_by_normalization(gamma)).epsilon(1e-10));
    }
}

TEST_CASE("in distribution normalization with tail accounting") {
    for (double gamma : {0.3, 0.7, 0.95}) {
        InDist d(gamma);
        double sum = 0.0;
        const auto& table = d.pmf_table();
        for (std::size_t i = table.size(); i-- > 0;) sum += table[i];
        CHECK(sum + d.tail_mass() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(d.tail_mass() < d.tail_tol());
    }
    // Near alpha = 2 the table is long; a looser tail keeps it tractable.
    InDist d(0.05, 1e-6);
    double sum = 0.0;
    const auto& table = d.pmf_table();
    for (std::size_t i = table.size(); i-- > 0;) sum += table[i];
    CHECK(sum + d.tail_mass() == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("closed form agrees with the recurrence table") {
    CHECK(in_pmf_closed(0.3, 1) == doctest::Approx(13.0 / 27.0).epsilon(1e-12));
    InDist d03(0.3);
    CHECK(in_pmf_closed(0.3, 2) == doctest::Approx(d03.pmf(2)).epsilon(1e-12));
    for (double gamma : {0.3, 0.7, 0.95}) {
        InDist d(gamma);
        const auto& table = d.pmf_table();
        for (std::size_t i = 0; i < table.size(); ++i) {
            double closed = in_pmf_closed(gamma, static_cast<std::int64_t>(i + 1));
            REQUIRE(std::abs(closed - table[i]) <= 1e-10 * table[i]);
        }
    }
    // Spot checks on a strided subset of the long near-alpha-2 table.
    InDist d(0.05, 1e-6);
    const auto& table = d.pmf_table();
    for (std::size_t i = 0; i < table.size(); i += 997) {
        double closed = in_pmf_closed(0.05, static_cast<std::int64_t>(i + 1));
        REQUIRE(std::abs(closed - table[i]) <= 1e-10 * table[i]);
    }
}

TEST_CASE("large-n ratio approaches the power-law form") {
    const double gamma = 0.3;
    InDist d(gamma);
    for (std::int64_t n : {100000, 1000000}) {
        double ratio = in_pmf_closed(gamma, n) / in_pmf_closed(gamma, n - 1);
        double expect = 1.0 - 2.0 / ((1.0 - gamma) * static_cast<double>(n));
        CHECK(ratio == doctest::Approx(expect).epsilon(1e-6));
    }
    (void)d;
}

TEST_CASE("gamma=0.5 tail follows n^-4") {
    // c * n^-4 should make pmf(n) * n^4 nearly constant across a decade.
    double lo = in_pmf_closed(0.5, 100000) * std::pow(1e5, 4.0);
    for (std::int64_t n = 100000; n <= 1000000; n += 100000) {
        double c = in_pmf_closed(0.5, n) * std::pow(static_cast<double>(n), 4.0);
        CHECK(std::abs(c / lo - 1.0) < 0.05);
    }
}

TEST_CASE("tail exponent") {
    CHECK(tail_exponent(0.3) == doctest::Approx(20.0 / 7.0).epsilon(1e-14));
    CHECK(tail_exponent(0.5) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(tail_exponent(1e-9) == doctest::Approx(2.0).epsilon(1e-6));
    CHECK_THROWS_AS(tail_exponent(0.0), std::domain_error);
}

TEST_CASE("master-equation residuals") {
    CHECK(check_stationarity_out(0.3, 200) < 1e-12);
    InDist d(0.3);
    CHECK(check_stationarity_in(d, 100) < 1e-9);

    // Detector sanity: a perturbed PMF must be flagged.
    double res = check_stationarity_in(0.3, 100, [&](std::int64_t n) {
        return n == 2 ? 1.01 * d.pmf(2) : d.pmf(n);
    });
    CHECK(res > 1e-4);
}

TEST_CASE("mean identities") {
    for (double gamma : {0.3, 0.7, 0.95}) {
        CHECK(OutDist(gamma).mean() ==
              doctest::Approx(1.0 / gamma).epsilon(1e-14));
        InDist d(gamma);
        CHECK(std::abs(d.mean_estimate() - 1.0 / gamma) < 1e-6);
    }
}

TEST_CASE("out sampler statistics") {
    Rng rng(2024);
    OutDist dist(0.3);
    const int n = 1000000;
    double sum = 0;
    std::int64_t ones = 0;
    for (int i = 0; i < n; ++i) {
        auto x = dist.sample(rng);
        REQUIRE(x >= 1);
        sum += static_cast<double>(x);
        ones += (x == 1);
    }
    CHECK(std::abs(sum / n - 1.0 / 0.3) < 0.01);
    // P(X = 1) = gamma; u < gamma maps to 1 under CDF inversion.
    CHECK(std::abs(static_cast<double>(ones) / n - 0.3) < 0.002);
}

TEST_CASE("in sampler matches the closed form (DKW)") {
    Rng rng(7);
    InDist dist(0.3);
    DegreeHistogram h = sample_dataset(dist, 1000000, rng);
    CHECK(ks_statistic(h, 0.3, Kind::In) < 0.002);
}

TEST_CASE("concurrent sampling from one distribution is safe") {
    // A coarse initial table forces frequent tail extensions.
    InDist dist(0.3, 1e-6);
    std::vector<std::thread> threads;
    std::vector<double> means(8, 0.0);
    for (int w = 0; w < 8; ++w) {
        threads.emplace_back([&, w] {
            Rng rng = Rng::substream(99, static_cast<std::uint64_t>(w));
            double s = 0;
            for (int i = 0; i < 200000; ++i)
                s += static_cast<double>(dist.sample(rng));
            means[w] = s / 200000;
        });
    }
    for (auto& t : threads) t.join();
    for (double m : means) CHECK(std::abs(m - 1.0 / 0.3) < 0.05);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(InDist(0.3, 1e-3), std::domain_error);
    CHECK_THROWS_AS(InDist(1.5), std::domain_error);
    CHECK_THROWS_AS(in_pmf_closed(0.3, 0), std::domain_error);
    InDist d(0.3);
    CHECK_THROWS_AS(d.pmf(0), std::domain_error);
    CHECK_THROWS_AS(check_stationarity_in(d, 1), std::domain_error);
}
