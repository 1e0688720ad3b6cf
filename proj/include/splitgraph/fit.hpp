#pragma once

#include <stdexcept>

#include "splitgraph/histogram.hpp"

namespace splitgraph {

enum class Kind { Out, In };

struct DegenerateData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitResult {
    double gamma_hat = 0;
    double loglik = 0;
    Kind kind = Kind::Out;
    double kt_ratio = 0;  // k/t of the data, for reference
    enum class Method { Analytic, Numeric } method = Method::Analytic;
};

// Log-likelihood of the histogram under the model distribution of the
// given kind: sum_i h_i * log f(x_i, gamma).
double loglik(const DegreeHistogram& hist, double gamma, Kind kind);

// Analytic MLE for the out kind: gamma_hat = k / t.
FitResult fit_out(const DegreeHistogram& hist);

// Numeric MLE for the in kind: golden-section search of the
// log-likelihood over [1e-6, 1 - 1e-6] to absolute tolerance 1e-6.
FitResult fit_in(const DegreeHistogram& hist);

FitResult fit(const DegreeHistogram& hist, Kind kind);

}  // namespace splitgraph
