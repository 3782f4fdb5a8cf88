#pragma once

// Set partitions of {0, ..., r-1} and the signed expansion of the symmetric
// sum of multiple zeta values into products of single zeta factors:
//
//   sum over set partitions {P_1..P_l}:  (-1)^(r-l) prod (|P_j|-1)!  prod zeta(c_j s),
//   c_j = sum of the weights indexed by P_j.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include "symzeta/core.hpp"

namespace symzeta {

inline constexpr int max_rank = 10;

/// Weight tuple a_1 >= ... >= a_r > 0 together with its derived constants
///   A = sum a_j,
///   B = #{permutations tau with a_tau = a},
///   M = 1 / (1^{a_1} 2^{a_2} ... r^{a_r}).
class Weights {
public:
    explicit Weights(std::vector<double> values) : values_(std::move(values)) {
        require(values_.size() >= 2, ErrorCode::InvalidArgument, "at least two weights are required");
        for (double v : values_) {
            require(std::isfinite(v) && v > 0.0, ErrorCode::InvalidArgument, "weights must be finite and positive");
        }
        reordered_ = !std::is_sorted(values_.begin(), values_.end(), std::greater<>());
        std::sort(values_.begin(), values_.end(), std::greater<>());
        // Sum in sorted order so block sums reproduce A bit-for-bit.
        total_ = std::accumulate(values_.begin(), values_.end(), 0.0);
        log_m_ = 0.0;
        for (std::size_t j = 0; j < values_.size(); ++j) log_m_ -= values_[j] * std::log(static_cast<double>(j + 1));
        b_ = count_fixing_permutations(values_);
    }

    std::span<const double> values() const noexcept { return values_; }
    std::size_t rank() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_.at(i); }

    double total() const noexcept { return total_; }        // A
    std::int64_t b_constant() const noexcept { return b_; }  // B
    double log_m() const noexcept { return log_m_; }        // log M
    double m_constant() const noexcept { return std::exp(log_m_); }
    double smallest() const noexcept { return values_.back(); } // a_r

    /// True when the constructor had to sort the supplied values.
    bool was_reordered() const noexcept { return reordered_; }

    static bool same_weight(double a, double b) noexcept {
        return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
    }

private:
    static std::int64_t count_fixing_permutations(const std::vector<double>& sorted) {
        std::int64_t b = 1;
        std::size_t i = 0;
        while (i < sorted.size()) {
            std::size_t j = i;
            while (j < sorted.size() && same_weight(sorted[i], sorted[j])) ++j;
            for (std::int64_t k = 2; k <= static_cast<std::int64_t>(j - i); ++k) b *= k;
            i = j;
        }
        return b;
    }

    std::vector<double> values_;
    double total_ = 0.0;
    double log_m_ = 0.0;
    std::int64_t b_ = 1;
    bool reordered_ = false;
};

inline std::int64_t b_constant(const Weights& w) { return w.b_constant(); }
inline double m_constant(const Weights& w) { return w.m_constant(); }

/// Blocks of 0-based indices; each block ascending, blocks ordered by their
/// smallest element.
struct SetPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t size() const noexcept { return blocks.size(); }
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

struct HoffmanTerm {
    std::int64_t coefficient = 0;
    std::vector<double> block_sums; // non-increasing
};

/// All set partitions of {0, ..., r-1}, generated from restricted growth
/// strings in lexicographic order.
inline std::vector<SetPartition> enumerate_partitions(int r) {
    require(r >= 1, ErrorCode::InvalidArgument, "rank must be positive");
    if (r > max_rank) throw Error(ErrorCode::RankTooLarge, "rank above 10 is not supported", r);

    std::vector<SetPartition> out;
    std::vector<int> code(static_cast<std::size_t>(r), 0);    // block label per element
    std::vector<int> prefix_max(static_cast<std::size_t>(r), 0);

    for (;;) {
        const int blocks = *std::max_element(code.begin(), code.end()) + 1;
        SetPartition p;
        p.blocks.assign(static_cast<std::size_t>(blocks), {});
        for (int i = 0; i < r; ++i) p.blocks[static_cast<std::size_t>(code[i])].push_back(i);
        out.push_back(std::move(p));

        // Next restricted growth string: code[i] <= 1 + max(code[0..i-1]).
        int i = r - 1;
        while (i > 0 && code[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++code[i];
        prefix_max[i] = std::max(prefix_max[i - 1], code[i]);
        for (int j = i + 1; j < r; ++j) {
            code[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    return out;
}

namespace detail {

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

inline bool same_block_sums(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!Weights::same_weight(a[i], b[i])) return false;
    }
    return true;
}

} // namespace detail

/// Signed expansion, one term per distinct multiset of block sums. Terms are
/// ordered by block count (descending), then block sums (descending).
inline std::vector<HoffmanTerm> hoffman_expand(const Weights& w) {
    const int r = static_cast<int>(w.rank());
    const auto partitions = enumerate_partitions(r);

    std::vector<HoffmanTerm> raw;
    raw.reserve(partitions.size());
    for (const auto& p : partitions) {
        HoffmanTerm term;
        term.coefficient = ((r - static_cast<int>(p.size())) % 2 == 0) ? 1 : -1;
        for (const auto& block : p.blocks) {
            term.coefficient *= detail::factorial(static_cast<int>(block.size()) - 1);
            double c = 0.0;
            for (int idx : block) c += w[static_cast<std::size_t>(idx)];
            term.block_sums.push_back(c);
        }
        std::sort(term.block_sums.begin(), term.block_sums.end(), std::greater<>());
        raw.push_back(std::move(term));
    }

    std::sort(raw.begin(), raw.end(), [](const HoffmanTerm& a, const HoffmanTerm& b) {
        if (a.block_sums.size() != b.block_sums.size()) return a.block_sums.size() > b.block_sums.size();
        return std::lexicographical_compare(a.block_sums.begin(), a.block_sums.end(), b.block_sums.begin(),
                                            b.block_sums.end(), std::greater<>());
    });

    std::vector<HoffmanTerm> merged;
    for (auto& term : raw) {
        // Equal multisets are adjacent after sorting, up to the 1e-12 tolerance.
        if (!merged.empty() && detail::same_block_sums(merged.back().block_sums, term.block_sums)) {
            merged.back().coefficient += term.coefficient;
        } else {
            merged.push_back(std::move(term));
        }
    }
    return merged;
}

} // namespace symzeta
