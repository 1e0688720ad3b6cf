#pragma once

#include <cstdint>

#include "splitgraph/analytic.hpp"
#include "splitgraph/fit.hpp"
#include "splitgraph/histogram.hpp"
#include "splitgraph/rng.hpp"

namespace splitgraph {

struct GofResult {
    double D = 0;        // KS distance of the data against its fit
    double p_value = 0;  // fraction of synthetic D >= data D
    std::int64_t n_synth = 0;
    std::uint64_t seed = 0;
    double gamma_hat = 0;
};

// KS distance between the histogram's empirical CDF and the model CDF,
// taken over all integer degrees up to the maximum observed degree.
double ks_statistic(const DegreeHistogram& hist, double gamma, Kind kind);

// n_nodes independent draws from the model distribution, histogrammed.
DegreeHistogram sample_dataset(double gamma, Kind kind, std::int64_t n_nodes,
                               Rng& rng);
DegreeHistogram sample_dataset(const InDist& dist, std::int64_t n_nodes,
                               Rng& rng);

// Monte-Carlo bootstrap p-value: fits the data, then draws n_synth
// datasets of the same node count from the fitted distribution, refits
// each one and compares every synthetic KS distance (against its own
// refit) to the data's. Replica i uses the RNG substream (seed, i), so
// the result is independent of execution order and thread count.
GofResult mc_pvalue(const DegreeHistogram& hist, Kind kind,
                    std::int64_t n_synth, std::uint64_t seed);

}  // namespace splitgraph
