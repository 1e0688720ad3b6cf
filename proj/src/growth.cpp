#include "splitgraph/growth.hpp"

#include <numeric>
#include <stdexcept>

namespace splitgraph {

void ModelParams::validate() const {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("gamma must lie in (0, 1)");
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
}

bool GrowthState::check_invariants() const {
    if (v.size() != w.size() || v.empty()) return false;
    std::int64_t sv = std::accumulate(v.begin(), v.end(), std::int64_t{0});
    std::int64_t sw = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    if (sv != t || sw != t) return false;
    for (auto x : v)
        if (x < 1) return false;
    for (auto x : w)
        if (x < 1) return false;
    return true;
}

GrowthSim::GrowthSim(const ModelParams& params) : params_(params) {
    params_.validate();
    // Single node with a self-reference.
    state_.v = {1};
    state_.w = {1};
    state_.t = 1;
    out_tree_.push_back(1);
    in_tree_.push_back(1);
    if (tracks_edges()) {
        edges_.push_back({0, 0});
        out_ids_.push_back({0});
        in_ids_.push_back({0});
    }
}

GrowthSim::GrowthSim(const ModelParams& params, const GrowthState& state)
    : params_(params), state_(state) {
    params_.validate();
    if (tracks_edges())
        throw std::logic_error(
            "edge-tracking variants cannot restore from a degree-only state");
    if (!state_.check_invariants())
        throw std::invalid_argument("invalid growth state");
    for (std::size_t i = 0; i < state_.v.size(); ++i) {
        out_tree_.push_back(state_.v[i]);
        in_tree_.push_back(state_.w[i]);
    }
}

std::size_t GrowthSim::sample_parent(Rng& rng) {
    return out_tree_.find(static_cast<std::int64_t>(
        rng.uniform_below(static_cast<std::uint64_t>(out_tree_.total()))));
}

std::size_t GrowthSim::sample_target(Rng& rng) {
    if (params_.variant == Variant::UniformAttach)
        return static_cast<std::size_t>(
            rng.uniform_below(static_cast<std::uint64_t>(state_.k())));
    return in_tree_.find(static_cast<std::int64_t>(
        rng.uniform_below(static_cast<std::uint64_t>(in_tree_.total()))));
}

void GrowthSim::add_edge(std::size_t src, std::size_t dst) {
    state_.v[src] += 1;
    state_.w[dst] += 1;
    state_.t += 1;
    out_tree_.add(src, 1);
    in_tree_.add(dst, 1);
    if (tracks_edges()) {
        std::size_t id = edges_.size();
        edges_.push_back({src, dst});
        out_ids_[src].push_back(id);
        in_ids_[dst].push_back(id);
    }
}

void GrowthSim::step(Rng& rng) {
    if (rng.bernoulli(params_.gamma))
        step_split(rng);
    else
        step_edge(rng);
}

void GrowthSim::step_edge(Rng& rng) {
    std::size_t m = sample_parent(rng);
    std::size_t n = sample_target(rng);
    add_edge(m, n);
}

void GrowthSim::step_split(Rng& rng) { split_node(sample_parent(rng), rng); }

void GrowthSim::split_node(std::size_t m, Rng& rng) {
    if (m >= state_.v.size()) throw std::out_of_range("node index");
    switch (params_.variant) {
        case Variant::Baseline:
        case Variant::UniformAttach:
            baseline_split(m, rng);
            break;
        case Variant::CopySplit:
            copy_split(m, rng);
            break;
        case Variant::BinomialSplit:
            binomial_split(m, rng);
            break;
    }
}

// Degree-only split: r of the parent's out-edges and s of its in-edges
// move to the new node, r uniform on {1..v_m}, s uniform on {0..w_m-1},
// then the connecting edge parent -> new is added. The ranges guarantee
// both nodes end with at least one in- and one out-edge.
void GrowthSim::baseline_split(std::size_t m, Rng& rng) {
    const std::int64_t vm = state_.v[m];
    const std::int64_t wm = state_.w[m];
    const std::int64_t r = rng.uniform_int(1, vm);
    const std::int64_t s = rng.uniform_int(0, wm - 1);

    state_.v.push_back(r);
    state_.w.push_back(s + 1);
    out_tree_.push_back(r);
    in_tree_.push_back(s + 1);

    state_.v[m] = vm - r + 1;
    state_.w[m] = wm - s;
    out_tree_.add(m, 1 - r);
    in_tree_.add(m, -s);

    state_.t += 1;
}

// The new node receives duplicates of r uniformly-chosen out-edges of the
// parent; the parent's own edges are untouched. The connecting edge is
// added last, so a split grows t by r + 1.
void GrowthSim::copy_split(std::size_t m, Rng& rng) {
    const std::int64_t vm = state_.v[m];
    const std::int64_t r = rng.uniform_int(1, vm);

    std::size_t n = state_.v.size();
    state_.v.push_back(0);
    state_.w.push_back(0);
    out_tree_.push_back(0);
    in_tree_.push_back(0);
    out_ids_.emplace_back();
    in_ids_.emplace_back();

    // Sample r distinct out-edges of m by partial Fisher-Yates.
    std::vector<std::size_t> pool = out_ids_[m];
    for (std::int64_t i = 0; i < r; ++i) {
        std::size_t j = i + static_cast<std::size_t>(
                                rng.uniform_below(pool.size() - i));
        std::swap(pool[i], pool[j]);
        add_edge(n, edges_[pool[i]].dst);
    }
    add_edge(m, n);
}

// Every edge endpoint at the parent flips to the new node with
// probability 1/2, independently. The assignment is rejection-resampled
// until the parent keeps an in-edge and the new node gains an out-edge;
// the connecting edge (added afterwards) covers the other two minima.
void GrowthSim::binomial_split(std::size_t m, Rng& rng) {
    std::size_t n = state_.v.size();
    state_.v.push_back(0);
    state_.w.push_back(0);
    out_tree_.push_back(0);
    in_tree_.push_back(0);
    out_ids_.emplace_back();
    in_ids_.emplace_back();

    const std::vector<std::size_t> outs = out_ids_[m];
    const std::vector<std::size_t> ins = in_ids_[m];
    std::vector<char> move_out(outs.size()), move_in(ins.size());

    std::size_t moved_out = 0, moved_in = 0;
    for (;;) {
        moved_out = moved_in = 0;
        for (auto& f : move_out) moved_out += (f = rng.bernoulli(0.5));
        for (auto& f : move_in) moved_in += (f = rng.bernoulli(0.5));
        if (moved_out >= 1 && moved_in < ins.size()) break;
    }

    out_ids_[m].clear();
    for (std::size_t i = 0; i < outs.size(); ++i) {
        if (move_out[i]) {
            edges_[outs[i]].src = n;
            out_ids_[n].push_back(outs[i]);
        } else {
            out_ids_[m].push_back(outs[i]);
        }
    }
    in_ids_[m].clear();
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (move_in[i]) {
            edges_[ins[i]].dst = n;
            in_ids_[n].push_back(ins[i]);
        } else {
            in_ids_[m].push_back(ins[i]);
        }
    }

    auto d = static_cast<std::int64_t>(moved_out);
    state_.v[m] -= d;
    state_.v[n] += d;
    out_tree_.add(m, -d);
    out_tree_.add(n, d);
    d = static_cast<std::int64_t>(moved_in);
    state_.w[m] -= d;
    state_.w[n] += d;
    in_tree_.add(m, -d);
    in_tree_.add(n, d);

    add_edge(m, n);
}

std::vector<std::size_t> GrowthSim::out_targets(std::size_t m) const {
    if (!tracks_edges())
        throw std::logic_error("degree-only simulation has no explicit edges");
    std::vector<std::size_t> out;
    out.reserve(out_ids_[m].size());
    for (auto id : out_ids_[m]) out.push_back(edges_[id].dst);
    return out;
}

GrowthState simulate(const ModelParams& params) {
    GrowthSim sim(params);
    Rng rng(params.seed);
    for (std::int64_t i = 0; i < params.steps; ++i) sim.step(rng);
    return sim.state();
}

std::pair<DegreeHistogram, DegreeHistogram>
degree_histograms(const GrowthState& state) {
    return {DegreeHistogram::from_degrees(state.v),
            DegreeHistogram::from_degrees(state.w)};
}

}  // namespace splitgraph
