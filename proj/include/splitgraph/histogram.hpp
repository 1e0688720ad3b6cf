#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>

namespace splitgraph {

// Degree data as (degree, count) pairs. The model's support starts at 1,
// so zero-degree entries are dropped at ingestion and tallied.
class DegreeHistogram {
public:
    DegreeHistogram() = default;

    static DegreeHistogram from_degrees(std::span<const std::int64_t> degrees) {
        DegreeHistogram h;
        for (auto d : degrees) h.add(d, 1);
        return h;
    }

    // Adds `count` nodes of the given degree. Degree 0 goes to the
    // dropped tally, not a bin.
    void add(std::int64_t degree, std::int64_t count) {
        if (degree < 0) throw std::invalid_argument("negative degree");
        if (count < 0) throw std::invalid_argument("negative count");
        if (count == 0) return;
        if (degree == 0) {
            dropped_zeros_ += count;
            return;
        }
        bins_[degree] += count;
        k_ += count;
        t_ += degree * count;
    }

    const std::map<std::int64_t, std::int64_t>& bins() const { return bins_; }
    std::int64_t k() const { return k_; }  // node count
    std::int64_t t() const { return t_; }  // total degree
    std::int64_t dropped_zeros() const { return dropped_zeros_; }
    std::int64_t max_degree() const {
        return bins_.empty() ? 0 : bins_.rbegin()->first;
    }

    bool operator==(const DegreeHistogram&) const = default;

private:
    std::map<std::int64_t, std::int64_t> bins_;
    std::int64_t k_ = 0;
    std::int64_t t_ = 0;
    std::int64_t dropped_zeros_ = 0;
};

}  // namespace splitgraph
