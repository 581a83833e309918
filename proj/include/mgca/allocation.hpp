// SPDX-License-Identifier: Apache-2.0
//
// Channel allocation: exhaustive search over subset families and channel
// placements, the three-stage MUSCA channel assignment, and the scheme
// driver that combines a subset selection mode with an assignment method.

#ifndef MGCA_ALLOCATION_HPP
#define MGCA_ALLOCATION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "combinatorics.hpp"
#include "geometry.hpp"
#include "params.hpp"
#include "power.hpp"
#include "radio.hpp"

namespace mgca {

enum class AssignmentMethod { exhaustive, musca };

/// Size limits above which the exponential searches refuse to run.
struct SearchGuard {
    int max_groups = 10;
    int max_channels = 5;
    bool allow_large = false;

    friend bool operator==(const SearchGuard&, const SearchGuard&) = default;
};

struct SchemeConfig {
    std::string name = "optimal";
    Selection selection = Selection::all();
    AssignmentMethod method = AssignmentMethod::exhaustive;
    PowerPolicy power = PowerPolicy::max_feasible();
    ThroughputMode mode = ThroughputMode::instantaneous;
    SearchGuard guard;

    static SchemeConfig optimal() { return {}; }
    static SchemeConfig almost_equal()
    {
        SchemeConfig c;
        c.name = "almost_equal";
        c.selection = Selection::almost_equal();
        return c;
    }
    static SchemeConfig equal()
    {
        SchemeConfig c;
        c.name = "equal";
        c.selection = Selection::equal();
        return c;
    }
    static SchemeConfig fixed_equal(int n)
    {
        SchemeConfig c;
        c.name = "fixed_equal:" + std::to_string(n);
        c.selection = Selection::fixed(n);
        return c;
    }
    /// Exhaustive subset selection, MUSCA channel assignment.
    static SchemeConfig musca()
    {
        SchemeConfig c;
        c.name = "musca";
        c.method = AssignmentMethod::musca;
        return c;
    }
    /// Fixed-size equal subsets, MUSCA channel assignment.
    static SchemeConfig fixed_musca(int n)
    {
        SchemeConfig c;
        c.name = "fixed_musca:" + std::to_string(n);
        c.selection = Selection::fixed(n);
        c.method = AssignmentMethod::musca;
        return c;
    }

    friend bool operator==(const SchemeConfig&, const SchemeConfig&) = default;
};

/// Best value of one channel for every group subset it may carry, memoized
/// by subset bitmask. A channel's contribution depends only on the set of
/// groups sharing it, so every search below reduces to table lookups.
class ChannelValueCache {
public:
    ChannelValueCache(const NetworkScenario& s, const FadingRealization& f, PowerPolicy policy,
                      ThroughputMode mode)
        : s_(s), f_(f), policy_(policy), mode_(mode), per_channel_(s.cus.size())
    {
        if (s.groups.size() > 63) {
            throw ParameterError("at most 63 active groups are supported");
        }
    }

    double value(int k, std::uint64_t mask)
    {
        auto& table = per_channel_[static_cast<std::size_t>(k)];
        if (auto it = table.find(mask); it != table.end()) {
            return it->second;
        }
        const auto members = members_of(mask);
        const auto powers = channel_powers(s_, f_, k, members, policy_);
        const double v =
            evaluate_channel(s_, f_, k, members, powers, s_.params.max_cu_power_w(), mode_).total;
        table.emplace(mask, v);
        return v;
    }

    std::size_t evaluations() const
    {
        std::size_t n = 0;
        for (const auto& t : per_channel_) {
            n += t.size();
        }
        return n;
    }

    static std::uint64_t mask_of(std::span<const int> groups)
    {
        std::uint64_t m = 0;
        for (int g : groups) {
            m |= std::uint64_t{1} << g;
        }
        return m;
    }

    static std::vector<int> members_of(std::uint64_t mask)
    {
        std::vector<int> out;
        for (int g = 0; mask != 0; ++g, mask >>= 1) {
            if (mask & 1U) {
                out.push_back(g);
            }
        }
        return out;
    }

private:
    const NetworkScenario& s_;
    const FadingRealization& f_;
    PowerPolicy policy_;
    ThroughputMode mode_;
    std::vector<std::unordered_map<std::uint64_t, double>> per_channel_;
};

// --------------------------------------------------------------------------
// MUSCA

/// Stage 1: channel k may be shared iff some single group transmitting at
/// P_G alongside the CU at P_c leaves the CU's mean-fading SIR at or above
/// its threshold.
inline std::vector<bool> musca_available_channels(const NetworkScenario& s, double cu_power_w,
                                                  double mg_power_w)
{
    const double alpha = s.params.path_loss_exponent;
    const double threshold = s.params.cu_sir_threshold();
    std::vector<bool> available(s.cus.size(), false);
    for (std::size_t k = 0; k < s.cus.size(); ++k) {
        const double signal = cu_power_w * path_gain(s.cus[k].dist_to_bs_m, alpha);
        for (const auto& g : s.groups) {
            const double interference = mg_power_w * path_gain(norm(g.tx_position), alpha);
            const double sir = interference > 0.0 ? signal / interference : kSirCap;
            if (sir >= threshold) {
                available[k] = true;
                break;
            }
        }
    }
    return available;
}

/// Stage 2 entry: worst sum interference over every receiver of every group
/// in `subset` when the subset shares channel k, all transmitters at full
/// power and unit fading.
inline double musca_worst_interference(const NetworkScenario& s, int k, std::span<const int> subset,
                                       double cu_power_w, double mg_power_w)
{
    const double alpha = s.params.path_loss_exponent;
    const Point cu = s.cus.at(static_cast<std::size_t>(k)).position;
    double worst = 0.0;
    for (int g : subset) {
        for (const Point& rx : s.groups[static_cast<std::size_t>(g)].receivers) {
            double sum = cu_power_w * path_gain(distance(rx, cu), alpha);
            for (int other : subset) {
                if (other != g) {
                    sum += mg_power_w *
                           path_gain(distance(rx, s.groups[static_cast<std::size_t>(other)].tx_position), alpha);
                }
            }
            worst = std::max(worst, sum);
        }
    }
    return worst;
}

/// Stage 2 matrix, rows channels and columns subsets.
inline std::vector<std::vector<double>> musca_interference_matrix(
    const NetworkScenario& s, std::span<const std::vector<int>> subsets, double cu_power_w,
    double mg_power_w)
{
    std::vector<std::vector<double>> m(s.cus.size(), std::vector<double>(subsets.size(), 0.0));
    for (std::size_t k = 0; k < s.cus.size(); ++k) {
        for (std::size_t j = 0; j < subsets.size(); ++j) {
            m[k][j] = musca_worst_interference(s, static_cast<int>(k), subsets[j], cu_power_w,
                                               mg_power_w);
        }
    }
    return m;
}

/// Stage 3: repeatedly commits the smallest remaining (channel, subset)
/// entry among available channels, ties to the lower channel then the lower
/// subset. Returns the channel of every subset, -1 when none was left.
inline std::vector<int> greedy_min_assignment(const std::vector<std::vector<double>>& matrix,
                                              const std::vector<bool>& available)
{
    const std::size_t rows = matrix.size();
    const std::size_t cols = rows ? matrix.front().size() : 0;
    std::vector<int> channel_of(cols, -1);
    std::vector<bool> row_used(rows, false);
    for (std::size_t k = 0; k < rows; ++k) {
        if (!available[k]) {
            row_used[k] = true;
        }
    }
    while (true) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_k = rows;
        std::size_t best_j = cols;
        for (std::size_t k = 0; k < rows; ++k) {
            if (row_used[k]) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (channel_of[j] >= 0) {
                    continue;
                }
                if (matrix[k][j] < best) {
                    best = matrix[k][j];
                    best_k = k;
                    best_j = j;
                }
            }
        }
        if (best_k == rows) {
            break;
        }
        row_used[best_k] = true;
        channel_of[best_j] = static_cast<int>(best_k);
    }
    return channel_of;
}

/// Assigns each subset to a channel with the three MUSCA stages.
inline Assignment musca_assign(const NetworkScenario& s, std::span<const std::vector<int>> subsets,
                               double cu_power_w, double mg_power_w)
{
    const int num_channels = static_cast<int>(s.cus.size());
    if (subsets.size() > s.cus.size()) {
        throw ParameterError("musca_assign: more subsets than channels");
    }
    Assignment a = Assignment::empty(num_channels);
    const auto available = musca_available_channels(s, cu_power_w, mg_power_w);
    for (int k = 0; k < num_channels; ++k) {
        if (!available[static_cast<std::size_t>(k)]) {
            a.cu_only_channels.push_back(k);
        }
    }
    const auto matrix = musca_interference_matrix(s, subsets, cu_power_w, mg_power_w);
    const auto channel_of = greedy_min_assignment(matrix, available);
    for (std::size_t j = 0; j < subsets.size(); ++j) {
        std::vector<int> sorted = subsets[j];
        std::sort(sorted.begin(), sorted.end());
        if (channel_of[j] < 0) {
            a.unassigned_subsets.push_back(std::move(sorted));
        } else {
            a.channel_to_groups[static_cast<std::size_t>(channel_of[j])] = std::move(sorted);
        }
    }
    return a;
}

// --------------------------------------------------------------------------
// Exhaustive placement

struct PlacementResult {
    Assignment assignment;
    double throughput = 0.0;
};

namespace detail {

/// Maximizes sum_k value(k, slot_k) over every way of placing the subsets on
/// distinct channels, a subset also being allowed to stay off the air. The
/// walk visits channels in order and, per channel, subsets in index order
/// before the empty slot; the first maximum found wins.
inline PlacementResult best_placement(ChannelValueCache& cache, int num_channels,
                                      std::span<const std::vector<int>> subsets)
{
    const std::size_t m = subsets.size();
    std::vector<std::uint64_t> masks(m);
    for (std::size_t j = 0; j < m; ++j) {
        masks[j] = ChannelValueCache::mask_of(subsets[j]);
    }
    std::vector<std::vector<double>> value(static_cast<std::size_t>(num_channels),
                                           std::vector<double>(m + 1));
    for (int k = 0; k < num_channels; ++k) {
        for (std::size_t j = 0; j < m; ++j) {
            value[static_cast<std::size_t>(k)][j] = cache.value(k, masks[j]);
        }
        value[static_cast<std::size_t>(k)][m] = cache.value(k, 0);
    }

    std::vector<int> slot(static_cast<std::size_t>(num_channels), -1);
    std::vector<int> best_slot(slot);
    double best = -std::numeric_limits<double>::infinity();
    std::vector<bool> used(m, false);
    auto walk = [&](auto&& self, int k, double acc) -> void {
        if (k == num_channels) {
            if (acc > best) {
                best = acc;
                best_slot = slot;
            }
            return;
        }
        const auto& row = value[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < m; ++j) {
            if (used[j]) {
                continue;
            }
            used[j] = true;
            slot[static_cast<std::size_t>(k)] = static_cast<int>(j);
            self(self, k + 1, acc + row[j]);
            used[j] = false;
        }
        slot[static_cast<std::size_t>(k)] = -1;
        self(self, k + 1, acc + row[m]);
    };
    walk(walk, 0, 0.0);

    PlacementResult r;
    r.throughput = best;
    r.assignment = Assignment::empty(num_channels);
    std::vector<bool> placed(m, false);
    for (int k = 0; k < num_channels; ++k) {
        const int j = best_slot[static_cast<std::size_t>(k)];
        if (j < 0) {
            r.assignment.cu_only_channels.push_back(k);
            continue;
        }
        placed[static_cast<std::size_t>(j)] = true;
        auto sorted = subsets[static_cast<std::size_t>(j)];
        std::sort(sorted.begin(), sorted.end());
        r.assignment.channel_to_groups[static_cast<std::size_t>(k)] = std::move(sorted);
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (!placed[j]) {
            auto sorted = subsets[j];
            std::sort(sorted.begin(), sorted.end());
            r.assignment.unassigned_subsets.push_back(std::move(sorted));
        }
    }
    return r;
}

inline double assignment_value(ChannelValueCache& cache, const Assignment& a)
{
    double total = 0.0;
    for (std::size_t k = 0; k < a.channel_to_groups.size(); ++k) {
        total += cache.value(static_cast<int>(k), ChannelValueCache::mask_of(a.channel_to_groups[k]));
    }
    return total;
}

inline void check_guard(const NetworkScenario& s, const SearchGuard& guard)
{
    if (guard.allow_large) {
        return;
    }
    if (s.params.num_groups > guard.max_groups || s.params.num_channels > guard.max_channels) {
        throw SearchGuardError("exhaustive search refused for G=" + std::to_string(s.params.num_groups) +
                               ", C=" + std::to_string(s.params.num_channels) + " (limits G<=" +
                               std::to_string(guard.max_groups) + ", C<=" +
                               std::to_string(guard.max_channels) +
                               "); set allow_large_search=true or pass --allow-large to override");
    }
}

}  // namespace detail

/// Best placement of `subsets` on the channels. Every permutation is
/// examined, including placements that leave a channel to its CU alone.
inline PlacementResult exhaustive_assign(const NetworkScenario& s, const FadingRealization& f,
                                         std::span<const std::vector<int>> subsets,
                                         const PowerPolicy& policy, ThroughputMode mode,
                                         const SearchGuard& guard = {})
{
    detail::check_guard(s, guard);
    if (subsets.size() > s.cus.size()) {
        throw ParameterError("exhaustive_assign: more subsets than channels");
    }
    ChannelValueCache cache(s, f, policy, mode);
    return detail::best_placement(cache, static_cast<int>(s.cus.size()), subsets);
}

/// Sum throughput of `a` with powers chosen by `policy`.
inline double evaluate(const NetworkScenario& s, const Assignment& a, const PowerPolicy& policy,
                       ThroughputMode mode, const FadingRealization& f)
{
    const PowerVector p = assign_powers(s, f, a, policy);
    return sum_throughput(s, f, p, a, mode);
}

struct AllocationResult {
    Assignment assignment;
    PowerVector powers;
    double throughput = 0.0;
    SubsetCombination winning_subsets;
    SizeVector winning_sizes;
    bool cu_only = false;              ///< no group ended up on the air
    std::size_t families_searched = 0;
};

/// Runs one scheme on one scenario: every admissible subset family is
/// placed by the scheme's assignment method and the best is kept (first
/// found on ties).
inline AllocationResult allocate(const NetworkScenario& s, const FadingRealization& f,
                                 const SchemeConfig& scheme)
{
    if (s.groups.empty()) {
        throw ParameterError("allocate: scenario has no active group");
    }
    if (scheme.method == AssignmentMethod::exhaustive || scheme.selection.kind != Selection::Kind::fixed) {
        detail::check_guard(s, scheme.guard);
    }
    const int num_channels = static_cast<int>(s.cus.size());
    const int num_active = static_cast<int>(s.groups.size());
    const int parts = std::min(num_channels, num_active);
    const double pc = s.params.max_cu_power_w();
    const double pg = s.params.max_mg_power_w();

    ChannelValueCache cache(s, f, scheme.power, scheme.mode);
    std::vector<int> ids(static_cast<std::size_t>(num_active));
    std::iota(ids.begin(), ids.end(), 0);

    AllocationResult best;
    best.throughput = -std::numeric_limits<double>::infinity();
    const auto vectors = enumerate_size_vectors(num_active, parts, scheme.selection);
    for (const auto& sizes : vectors) {
        PartitionEnumerator it(ids, sizes);
        while (auto family = it.next()) {
            ++best.families_searched;
            Assignment a;
            double v = 0.0;
            if (scheme.method == AssignmentMethod::exhaustive) {
                auto placed = detail::best_placement(cache, num_channels, family->subsets);
                a = std::move(placed.assignment);
                v = placed.throughput;
            } else {
                a = musca_assign(s, family->subsets, pc, pg);
                v = detail::assignment_value(cache, a);
            }
            if (v > best.throughput) {
                best.throughput = v;
                best.assignment = std::move(a);
                best.winning_subsets = *family;
                best.winning_sizes = sizes;
            }
        }
    }
    if (best.families_searched == 0) {
        best.assignment = Assignment::empty(num_channels);
        best.throughput = detail::assignment_value(cache, best.assignment);
    }
    best.powers = assign_powers(s, f, best.assignment, scheme.power);
    best.cu_only = true;
    for (std::size_t g = 0; g < s.groups.size(); ++g) {
        if (best.assignment.channel_of(static_cast<int>(g)) >= 0 && !best.powers.muted[g] &&
            best.powers.mg_power_w[g] > 0.0) {
            best.cu_only = false;
        }
    }
    return best;
}

}  // namespace mgca

#endif  // MGCA_ALLOCATION_HPP
