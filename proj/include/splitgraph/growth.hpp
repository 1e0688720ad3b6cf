#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "splitgraph/fenwick.hpp"
#include "splitgraph/histogram.hpp"
#include "splitgraph/rng.hpp"

namespace splitgraph {

enum class Variant { Baseline, UniformAttach, CopySplit, BinomialSplit };

struct ModelParams {
    double gamma = 0.3;      // splitting probability, in (0,1)
    std::int64_t steps = 1;  // number of growth steps
    Variant variant = Variant::Baseline;
    std::uint64_t seed = 0;

    void validate() const;
};

// Degree sequences of a growing graph: v[i] out-degree, w[i] in-degree.
// Invariants: sum(v) == sum(w) == t, all degrees >= 1.
struct GrowthState {
    std::vector<std::int64_t> v;
    std::vector<std::int64_t> w;
    std::int64_t t = 0;  // total edges

    std::int64_t k() const { return static_cast<std::int64_t>(v.size()); }
    bool check_invariants() const;
};

// Runs the growth process: at each step the parent is selected with
// probability proportional to its out-degree, then with probability
// (1 - gamma) an edge is added and with probability gamma the parent
// is split into two nodes.
//
// Baseline and UniformAttach track degrees only. CopySplit and
// BinomialSplit additionally maintain the explicit edge multiset,
// which their split rules need.
class GrowthSim {
public:
    explicit GrowthSim(const ModelParams& params);

    // Restores a degree-only state (Baseline / UniformAttach only).
    GrowthSim(const ModelParams& params, const GrowthState& state);

    const GrowthState& state() const { return state_; }
    const ModelParams& params() const { return params_; }

    void step(Rng& rng);

    // Branch-forcing entry points, used directly by tests.
    void step_edge(Rng& rng);
    void step_split(Rng& rng);

    // Splits node m per the variant's rule. Throws std::logic_error if the
    // variant needs explicit edges and this sim is degree-only.
    void split_node(std::size_t m, Rng& rng);

    // Explicit out-edge targets of node m (edge-tracking variants only).
    std::vector<std::size_t> out_targets(std::size_t m) const;

private:
    bool tracks_edges() const {
        return params_.variant == Variant::CopySplit ||
               params_.variant == Variant::BinomialSplit;
    }

    std::size_t sample_parent(Rng& rng);
    std::size_t sample_target(Rng& rng);
    void add_edge(std::size_t src, std::size_t dst);
    void baseline_split(std::size_t m, Rng& rng);
    void copy_split(std::size_t m, Rng& rng);
    void binomial_split(std::size_t m, Rng& rng);

    ModelParams params_;
    GrowthState state_;
    FenwickTree out_tree_;  // weights = v
    FenwickTree in_tree_;   // weights = w

    // Edge store for CopySplit / BinomialSplit.
    struct Edge {
        std::size_t src;
        std::size_t dst;
    };
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_ids_;  // edge ids by source
    std::vector<std::vector<std::size_t>> in_ids_;   // edge ids by target
};

GrowthState simulate(const ModelParams& params);

std::pair<DegreeHistogram, DegreeHistogram>
degree_histograms(const GrowthState& state);

}  // namespace splitgraph
