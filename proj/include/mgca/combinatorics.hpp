// SPDX-License-Identifier: Apache-2.0
//
// Subset-size vectors and disjoint group-subset families for the channel
// allocation search, with two closed-form counters: the reference one
// (divisor prod #_g) and the deduplicated one (divisor prod #_g!).

#ifndef MGCA_COMBINATORICS_HPP
#define MGCA_COMBINATORICS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "params.hpp"

namespace mgca {

using Count = std::uint64_t;

/// Subset sizes over the C channels, sorted non-increasing.
using SizeVector = std::vector<int>;

inline std::string to_string(const SizeVector& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(v[i]);
    }
    return s + "]";
}

/// C disjoint non-empty subsets of group handles in canonical form: each
/// subset ascending, subsets ordered by (size desc, smallest element).
struct SubsetCombination {
    std::vector<std::vector<int>> subsets;

    SizeVector sizes() const
    {
        SizeVector v;
        for (const auto& s : subsets) {
            v.push_back(static_cast<int>(s.size()));
        }
        return v;
    }

    friend bool operator==(const SubsetCombination&, const SubsetCombination&) = default;
    friend auto operator<=>(const SubsetCombination&, const SubsetCombination&) = default;
};

/// Which size vectors a search admits.
struct Selection {
    enum class Kind {
        all,           ///< any sizes
        almost_equal,  ///< max - min <= 1
        equal,         ///< all sizes identical
        fixed,         ///< all sizes equal to n
    };
    Kind kind = Kind::all;
    int n = 0;  ///< subset size for Kind::fixed

    static Selection all() { return {Kind::all, 0}; }
    static Selection almost_equal() { return {Kind::almost_equal, 0}; }
    static Selection equal() { return {Kind::equal, 0}; }
    static Selection fixed(int n) { return {Kind::fixed, n}; }

    friend bool operator==(const Selection&, const Selection&) = default;
};

inline std::string to_string(const Selection& s)
{
    switch (s.kind) {
    case Selection::Kind::all:
        return "all";
    case Selection::Kind::almost_equal:
        return "almost_equal";
    case Selection::Kind::equal:
        return "equal";
    case Selection::Kind::fixed:
        return "fixed:" + std::to_string(s.n);
    }
    return "?";
}

namespace detail {

inline Count checked_mul(Count a, Count b)
{
    Count out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw ParameterError("count overflows 64 bits");
    }
    return out;
}

inline Count checked_add(Count a, Count b)
{
    Count out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw ParameterError("count overflows 64 bits");
    }
    return out;
}

inline Count binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Count r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i at every step
        r = checked_mul(r, static_cast<Count>(n - k + i)) / static_cast<Count>(i);
    }
    return r;
}

inline Count factorial(int n)
{
    Count r = 1;
    for (int i = 2; i <= n; ++i) {
        r = checked_mul(r, static_cast<Count>(i));
    }
    return r;
}

/// C(G,x1) C(G-x1,x2) ... C(G-x1-...-x_{C-1}, x_C)
inline Count ordered_choices(int num_groups, const SizeVector& v)
{
    Count r = 1;
    int left = num_groups;
    for (int x : v) {
        r = checked_mul(r, binomial(left, x));
        left -= x;
    }
    return r;
}

/// Multiplicity #_g of each distinct size in v.
inline std::map<int, int> multiplicities(const SizeVector& v)
{
    std::map<int, int> m;
    for (int x : v) {
        ++m[x];
    }
    return m;
}

inline void require_shape(int num_groups, int num_channels)
{
    if (num_channels < 1) {
        throw ParameterError("number of channels must be >= 1");
    }
    if (num_channels > num_groups) {
        throw ParameterError("number of channels exceeds number of groups");
    }
}

inline void partitions_into(int remaining, int parts, int max_part, SizeVector& cur,
                            std::vector<SizeVector>& out)
{
    if (parts == 0) {
        if (remaining == 0) {
            out.push_back(cur);
        }
        return;
    }
    for (int x = std::min(max_part, remaining - (parts - 1)); x >= 1; --x) {
        if (x * parts < remaining) {
            break;
        }
        cur.push_back(x);
        partitions_into(remaining - x, parts - 1, x, cur, out);
        cur.pop_back();
    }
}

inline bool admits(const Selection& sel, const SizeVector& v)
{
    const int hi = v.front();
    const int lo = v.back();
    switch (sel.kind) {
    case Selection::Kind::all:
        return true;
    case Selection::Kind::almost_equal:
        return hi - lo <= 1;
    case Selection::Kind::equal:
        return hi == lo;
    case Selection::Kind::fixed:
        return hi == sel.n && lo == sel.n;
    }
    return false;
}

}  // namespace detail

/// All admissible size vectors with C parts and total q in [C, G], in
/// ascending lexicographic order.
inline std::vector<SizeVector> enumerate_size_vectors(int num_groups, int num_channels,
                                                      const Selection& sel)
{
    detail::require_shape(num_groups, num_channels);
    if (sel.kind == Selection::Kind::fixed && sel.n < 1) {
        throw ParameterError("fixed selection needs a subset size >= 1");
    }
    std::vector<SizeVector> all;
    SizeVector cur;
    for (int q = num_channels; q <= num_groups; ++q) {
        detail::partitions_into(q, num_channels, q, cur, all);
    }
    std::vector<SizeVector> out;
    for (auto& v : all) {
        if (detail::admits(sel, v)) {
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Reference count contribution of one size vector: ordered choices divided
/// by the product of the size multiplicities.
inline Count paper_count_term(int num_groups, const SizeVector& v)
{
    Count div = 1;
    for (const auto& [size, mult] : detail::multiplicities(v)) {
        div = detail::checked_mul(div, static_cast<Count>(std::max(mult, 1)));
    }
    return detail::ordered_choices(num_groups, v) / div;
}

/// Number of distinct families with size vector v.
inline Count exact_count_term(int num_groups, const SizeVector& v)
{
    Count div = 1;
    for (const auto& [size, mult] : detail::multiplicities(v)) {
        div = detail::checked_mul(div, detail::factorial(mult));
    }
    return detail::ordered_choices(num_groups, v) / div;
}

/// Reference count per subset total q.
inline std::map<int, Count> paper_count_by_q(int num_groups, int num_channels, const Selection& sel)
{
    std::map<int, Count> out;
    for (const auto& v : enumerate_size_vectors(num_groups, num_channels, sel)) {
        int q = 0;
        for (int x : v) {
            q += x;
        }
        out[q] = detail::checked_add(out[q], paper_count_term(num_groups, v));
    }
    return out;
}

/// Reference subset-combination count (divisor prod #_g, no C! factor).
inline Count paper_count(int num_groups, int num_channels, const Selection& sel)
{
    Count total = 0;
    for (const auto& v : enumerate_size_vectors(num_groups, num_channels, sel)) {
        total = detail::checked_add(total, paper_count_term(num_groups, v));
    }
    return total;
}

/// Number of distinct subset families, equal to the deduplicated enumeration.
inline Count exact_count(int num_groups, int num_channels, const Selection& sel)
{
    Count total = 0;
    for (const auto& v : enumerate_size_vectors(num_groups, num_channels, sel)) {
        total = detail::checked_add(total, exact_count_term(num_groups, v));
    }
    return total;
}

/// Reference count times the C! channel permutations.
inline Count allocation_search_space(int num_groups, int num_channels, const Selection& sel)
{
    return detail::checked_mul(paper_count(num_groups, num_channels, sel),
                               detail::factorial(num_channels));
}

/// Equal-size-only lower bound on allocation_search_space(G, C, all):
/// C! * sum_{n=1}^{floor(G/C)} [prod_i C(G - i n, n)] / C.
inline Count complexity_lower_bound(int num_groups, int num_channels)
{
    detail::require_shape(num_groups, num_channels);
    Count bracket = 0;
    for (int n = 1; n * num_channels <= num_groups; ++n) {
        Count prod = 1;
        for (int i = 0; i < num_channels; ++i) {
            prod = detail::checked_mul(prod, detail::binomial(num_groups - i * n, n));
        }
        bracket = detail::checked_add(bracket, prod / static_cast<Count>(num_channels));
    }
    return detail::checked_mul(bracket, detail::factorial(num_channels));
}

/// Lazily walks every distinct family of disjoint subsets of `ids` with the
/// given sizes, in ascending lexicographic order of canonical forms. The
/// walk can be resumed from any position with skip(), which is how the
/// search is sharded.
class PartitionEnumerator {
public:
    PartitionEnumerator(std::vector<int> ids, SizeVector sizes)
        : ids_(std::move(ids)), sizes_(std::move(sizes))
    {
        std::sort(ids_.begin(), ids_.end());
        if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end()) {
            throw ParameterError("enumerate_partitions: duplicate group id");
        }
        int total = 0;
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            if (sizes_[i] < 1 || (i > 0 && sizes_[i] > sizes_[i - 1])) {
                throw ParameterError("enumerate_partitions: sizes must be positive and non-increasing");
            }
            total += sizes_[i];
        }
        if (static_cast<std::size_t>(total) > ids_.size()) {
            throw ParameterError("enumerate_partitions: sizes exceed the group pool");
        }
        pools_.resize(sizes_.size());
        combs_.resize(sizes_.size());
    }

    /// Next family, or empty when exhausted.
    std::optional<SubsetCombination> next()
    {
        if (done_) {
            return std::nullopt;
        }
        const bool ok = started_ ? advance_from(sizes_.size()) : descend(0);
        started_ = true;
        if (!ok) {
            done_ = true;
            return std::nullopt;
        }
        ++position_;
        return current();
    }

    /// Discards the next `n` families.
    void skip(std::size_t n)
    {
        for (std::size_t i = 0; i < n && next(); ++i) {
        }
    }

    /// Families produced so far.
    std::size_t position() const { return position_; }

private:
    SubsetCombination current() const
    {
        SubsetCombination c;
        for (std::size_t i = 0; i < sizes_.size(); ++i) {
            std::vector<int> s;
            for (int idx : combs_[i]) {
                s.push_back(pools_[i][static_cast<std::size_t>(idx)]);
            }
            c.subsets.push_back(std::move(s));
        }
        return c;
    }

    // First admissible combination at `level`, given the levels above it.
    bool init(std::size_t level)
    {
        if (level == 0) {
            pools_[0] = ids_;
        } else {
            const auto& prev_pool = pools_[level - 1];
            std::vector<bool> used(prev_pool.size(), false);
            for (int idx : combs_[level - 1]) {
                used[static_cast<std::size_t>(idx)] = true;
            }
            pools_[level].clear();
            for (std::size_t i = 0; i < prev_pool.size(); ++i) {
                if (!used[i]) {
                    pools_[level].push_back(prev_pool[i]);
                }
            }
        }
        const auto& pool = pools_[level];
        const auto k = static_cast<std::size_t>(sizes_[level]);
        std::size_t start = 0;
        if (level > 0 && sizes_[level] == sizes_[level - 1]) {
            const int prev_min = pools_[level - 1][static_cast<std::size_t>(combs_[level - 1].front())];
            while (start < pool.size() && pool[start] < prev_min) {
                ++start;
            }
        }
        if (pool.size() < start + k) {
            return false;
        }
        combs_[level].resize(k);
        for (std::size_t i = 0; i < k; ++i) {
            combs_[level][i] = static_cast<int>(start + i);
        }
        return true;
    }

    // Lexicographic successor of the combination at `level`.
    bool advance(std::size_t level)
    {
        auto& c = combs_[level];
        const auto n = static_cast<int>(pools_[level].size());
        const auto k = static_cast<int>(c.size());
        for (int i = k - 1; i >= 0; --i) {
            if (c[static_cast<std::size_t>(i)] < n - k + i) {
                ++c[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < k; ++j) {
                    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
                }
                return true;
            }
        }
        return false;
    }

    // Fills levels [level, C) with their first admissible combinations,
    // backtracking into shallower levels when a level cannot be filled.
    bool descend(std::size_t level)
    {
        while (level < sizes_.size()) {
            if (init(level)) {
                ++level;
                continue;
            }
            if (!advance_from(level)) {
                return false;
            }
            return true;
        }
        return true;
    }

    // Advances the deepest level below `level` that still has a successor,
    // then refills everything beneath it.
    bool advance_from(std::size_t level)
    {
        while (level > 0) {
            --level;
            if (advance(level)) {
                return descend(level + 1);
            }
        }
        return false;
    }

    std::vector<int> ids_;
    SizeVector sizes_;
    std::vector<std::vector<int>> pools_;
    std::vector<std::vector<int>> combs_;
    bool started_ = false;
    bool done_ = false;
    std::size_t position_ = 0;
};

/// Every distinct canonical family of disjoint subsets of `ids` with the
/// given sizes, in lexicographic order.
inline std::vector<SubsetCombination> enumerate_partitions(std::span<const int> ids,
                                                           const SizeVector& sizes)
{
    PartitionEnumerator it(std::vector<int>(ids.begin(), ids.end()), sizes);
    std::vector<SubsetCombination> out;
    while (auto c = it.next()) {
        out.push_back(std::move(*c));
    }
    return out;
}

}  // namespace mgca

#endif  // MGCA_COMBINATORICS_HPP
