#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace splitgraph {

// Fenwick (binary indexed) tree over non-negative integer weights,
// supporting O(log n) point update and O(log n) weighted index sampling.
class FenwickTree {
public:
    FenwickTree() = default;

    std::size_t size() const { return tree_.size(); }
    std::int64_t total() const { return total_; }

    // Appends a new slot with the given weight; returns its index.
    // The new cell covers the trailing subrange (j - lowbit(j), j] in
    // 1-based terms, so it starts from that range's existing sum.
    std::size_t push_back(std::int64_t weight) {
        std::size_t i = tree_.size();
        std::size_t j = i + 1;
        std::size_t low = j & (0 - j);
        tree_.push_back(prefix_sum(i) - prefix_sum(j - low) + weight);
        total_ += weight;
        return i;
    }

    void add(std::size_t i, std::int64_t delta) {
        total_ += delta;
        for (std::size_t j = i + 1; j <= tree_.size(); j += j & (0 - j))
            tree_[j - 1] += delta;
    }

    std::int64_t prefix_sum(std::size_t n) const {
        std::int64_t s = 0;
        for (std::size_t j = n; j > 0; j -= j & (0 - j)) s += tree_[j - 1];
        return s;
    }

    std::int64_t weight(std::size_t i) const {
        return prefix_sum(i + 1) - prefix_sum(i);
    }

    // Smallest index i with prefix_sum(i+1) > target, for 0 <= target < total().
    // With target drawn uniformly from [0, total) this samples index i with
    // probability weight(i)/total.
    std::size_t find(std::int64_t target) const {
        assert(target >= 0 && target < total_);
        std::size_t pos = 0;
        std::size_t mask = bit_floor_(tree_.size());
        while (mask > 0) {
            std::size_t next = pos + mask;
            if (next <= tree_.size() && tree_[next - 1] <= target) {
                target -= tree_[next - 1];
                pos = next;
            }
            mask >>= 1;
        }
        return pos;
    }

private:
    static std::size_t bit_floor_(std::size_t n) {
        std::size_t p = 1;
        while (p * 2 <= n) p *= 2;
        return n == 0 ? 0 : p;
    }

    std::vector<std::int64_t> tree_;
    std::int64_t total_ = 0;
};

}  // namespace splitgraph
