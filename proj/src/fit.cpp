#include "splitgraph/fit.hpp"

#include <cmath>
#include <functional>

namespace splitgraph {

namespace {

constexpr double kGammaLo = 1e-6;
constexpr double kGammaHi = 1.0 - 1e-6;

void require_nonempty(const DegreeHistogram& hist) {
    if (hist.k() == 0) throw DegenerateData("empty histogram");
}

double loglik_in(const DegreeHistogram& hist, double gamma) {
    // Eq.-(7)-style log-gamma evaluation per distinct degree; no table
    // is needed because only the observed degrees enter the likelihood.
    const double a = 2.0 / (1.0 - gamma);
    const double base = std::lgamma(2.0 + a) + std::log((a - 1.0) / (a + 1.0));
    double s = 0.0;
    for (const auto& [deg, cnt] : hist.bins()) {
        const double x = static_cast<double>(deg);
        s += static_cast<double>(cnt) *
             (std::lgamma(x + 1.0) - std::lgamma(x + 1.0 + a) + base);
    }
    return s;
}

// Golden-section maximization of f over [lo, hi] to absolute x tolerance.
double golden_max(double lo, double hi, double xtol,
                  const std::function<double(double)>& f) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double loglik(const DegreeHistogram& hist, double gamma, Kind kind) {
    require_nonempty(hist);
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::domain_error("gamma must lie in (0, 1)");
    if (kind == Kind::In) return loglik_in(hist, gamma);
    // Out kind: closed form k ln(gamma) + (t - k) ln(1 - gamma).
    const auto k = static_cast<double>(hist.k());
    const auto t = static_cast<double>(hist.t());
    return k * std::log(gamma) + (t - k) * std::log1p(-gamma);
}

FitResult fit_out(const DegreeHistogram& hist) {
    require_nonempty(hist);
    if (hist.t() == hist.k())
        throw DegenerateData(
            "all degrees are 1: the out MLE k/t falls on the gamma=1 boundary");
    FitResult r;
    r.kind = Kind::Out;
    r.method = FitResult::Method::Analytic;
    r.kt_ratio = static_cast<double>(hist.k()) / static_cast<double>(hist.t());
    r.gamma_hat = r.kt_ratio;
    r.loglik = loglik(hist, r.gamma_hat, Kind::Out);
    return r;
}

FitResult fit_in(const DegreeHistogram& hist) {
    require_nonempty(hist);
    FitResult r;
    r.kind = Kind::In;
    r.method = FitResult::Method::Numeric;
    r.kt_ratio = static_cast<double>(hist.k()) / static_cast<double>(hist.t());
    r.gamma_hat = golden_max(kGammaLo, kGammaHi, 1e-6, [&](double g) {
        return loglik_in(hist, g);
    });
    r.loglik = loglik_in(hist, r.gamma_hat);
    return r;
}

FitResult fit(const DegreeHistogram& hist, Kind kind) {
    return kind == Kind::Out ? fit_out(hist) : fit_in(hist);
}

}  // namespace splitgraph
