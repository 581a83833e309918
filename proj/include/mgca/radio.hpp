// SPDX-License-Identifier: Apache-2.0
//
// Link-level physics: path loss, Rayleigh power gains, SIR at multicast
// receivers and at the base station, per-link rates and the sum throughput of
// an assignment.

#ifndef MGCA_RADIO_HPP
#define MGCA_RADIO_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "outage.hpp"
#include "params.hpp"
#include "rng.hpp"

namespace mgca {

/// Channel -> groups map produced by the allocation layer. Group handles are
/// indices into NetworkScenario::groups.
struct Assignment {
    std::vector<std::vector<int>> channel_to_groups;  ///< size C, each sorted
    std::vector<int> cu_only_channels;
    std::vector<std::vector<int>> unassigned_subsets;

    static Assignment empty(int num_channels)
    {
        Assignment a;
        a.channel_to_groups.assign(static_cast<std::size_t>(num_channels), {});
        return a;
    }

    /// Channel carrying group `g`, or -1.
    int channel_of(int g) const
    {
        for (std::size_t k = 0; k < channel_to_groups.size(); ++k) {
            if (std::find(channel_to_groups[k].begin(), channel_to_groups[k].end(), g) !=
                channel_to_groups[k].end()) {
                return static_cast<int>(k);
            }
        }
        return -1;
    }

    friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Transmit powers. A muted group transmits nothing and earns no rate.
struct PowerVector {
    std::vector<double> cu_power_w;  ///< per channel
    std::vector<double> mg_power_w;  ///< per group handle
    std::vector<bool> muted;         ///< per group handle

    friend bool operator==(const PowerVector&, const PowerVector&) = default;
};

/// Path-loss model. delta = 2/alpha is what the closed forms use.
struct ChannelModel {
    double alpha = 4.0;
    double bandwidth_hz = 1.0;

    double delta() const { return 2.0 / alpha; }
};

/// Number of distances clamped to kMinDistanceM by path_gain since start-up.
inline std::atomic<std::uint64_t> g_path_gain_clamps{0};

inline double path_gain(double d_m, double alpha)
{
    if (d_m < kMinDistanceM) {
        g_path_gain_clamps.fetch_add(1, std::memory_order_relaxed);
        d_m = kMinDistanceM;
    }
    if (alpha == 4.0) {
        const double d2 = d_m * d_m;
        return 1.0 / (d2 * d2);
    }
    return std::pow(d_m, -alpha);
}

/// Rayleigh power gains for every (transmitter, receiver, channel) triple of a
/// scenario. Receivers are the MG receivers (flattened group by group) and the
/// base station.
class FadingRealization {
public:
    FadingRealization() = default;

    /// i.i.d. Exp(1) gains drawn from the scenario's fading stream.
    static FadingRealization draw(const NetworkScenario& s)
    {
        Rng rng(derive_seed(s.scenario_seed, {kFadingStream}));
        return draw(s, rng);
    }

    static FadingRealization draw(const NetworkScenario& s, Rng& rng)
    {
        FadingRealization f = shaped(s);
        std::exponential_distribution<double> exp1(1.0);
        auto fill = [&](std::vector<double>& v) {
            for (double& h : v) {
                do {
                    h = exp1(rng);
                } while (h <= 0.0);
            }
        };
        fill(f.mg_rx_);
        fill(f.cu_rx_);
        fill(f.cu_bs_);
        fill(f.mg_bs_);
        return f;
    }

    /// All gains equal to their mean, 1.
    static FadingRealization unit(const NetworkScenario& s)
    {
        FadingRealization f = shaped(s);
        std::fill(f.mg_rx_.begin(), f.mg_rx_.end(), 1.0);
        std::fill(f.cu_rx_.begin(), f.cu_rx_.end(), 1.0);
        std::fill(f.cu_bs_.begin(), f.cu_bs_.end(), 1.0);
        std::fill(f.mg_bs_.begin(), f.mg_bs_.end(), 1.0);
        return f;
    }

    /// Gain from group `tx`'s transmitter to receiver `r` of group `rx_group`.
    double mg_to_rx(int k, int tx, int rx_group, int r) const
    {
        return mg_rx_[(static_cast<std::size_t>(k) * n_groups_ + static_cast<std::size_t>(tx)) *
                          n_rx_ +
                      flat(rx_group, r)];
    }
    double cu_to_rx(int k, int rx_group, int r) const
    {
        return cu_rx_[static_cast<std::size_t>(k) * n_rx_ + flat(rx_group, r)];
    }
    double cu_to_bs(int k) const { return cu_bs_[static_cast<std::size_t>(k)]; }
    double mg_to_bs(int k, int tx) const
    {
        return mg_bs_[static_cast<std::size_t>(k) * n_groups_ + static_cast<std::size_t>(tx)];
    }

    double& mg_to_rx(int k, int tx, int rx_group, int r)
    {
        return mg_rx_[(static_cast<std::size_t>(k) * n_groups_ + static_cast<std::size_t>(tx)) *
                          n_rx_ +
                      flat(rx_group, r)];
    }
    double& cu_to_rx(int k, int rx_group, int r)
    {
        return cu_rx_[static_cast<std::size_t>(k) * n_rx_ + flat(rx_group, r)];
    }
    double& cu_to_bs(int k) { return cu_bs_[static_cast<std::size_t>(k)]; }
    double& mg_to_bs(int k, int tx)
    {
        return mg_bs_[static_cast<std::size_t>(k) * n_groups_ + static_cast<std::size_t>(tx)];
    }

private:
    static FadingRealization shaped(const NetworkScenario& s)
    {
        FadingRealization f;
        f.n_channels_ = s.cus.size();
        f.n_groups_ = s.groups.size();
        f.offsets_.reserve(s.groups.size());
        std::size_t n = 0;
        for (const auto& g : s.groups) {
            f.offsets_.push_back(n);
            n += g.receivers.size();
        }
        f.n_rx_ = n;
        f.mg_rx_.resize(f.n_channels_ * f.n_groups_ * f.n_rx_);
        f.cu_rx_.resize(f.n_channels_ * f.n_rx_);
        f.cu_bs_.resize(f.n_channels_);
        f.mg_bs_.resize(f.n_channels_ * f.n_groups_);
        return f;
    }

    std::size_t flat(int g, int r) const
    {
        return offsets_[static_cast<std::size_t>(g)] + static_cast<std::size_t>(r);
    }

    std::size_t n_channels_ = 0;
    std::size_t n_groups_ = 0;
    std::size_t n_rx_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<double> mg_rx_;
    std::vector<double> cu_rx_;
    std::vector<double> cu_bs_;
    std::vector<double> mg_bs_;
};

/// How link SIRs turn into rates.
enum class ThroughputMode {
    /// B_w * log2(1+sir) * 1[sir >= threshold] on the given fading realization.
    instantaneous,
    /// density * B_w * log2(1+sir) * P(success), success probability from the
    /// closed forms; rates per unit area.
    analytic_per_area,
    /// As analytic_per_area without the density weight; rates per network.
    analytic_per_network,
};

inline bool is_analytic(ThroughputMode m) { return m != ThroughputMode::instantaneous; }

/// Weight applied to a rate in the analytic modes.
struct AnalyticWeight {
    double density = 1.0;
    double success_probability = 1.0;
};

inline double shannon(double sir, double bandwidth_hz)
{
    return bandwidth_hz * std::log2(1.0 + std::max(sir, 0.0));
}

/// Rate of a multicast group whose worst receiver sees `sir`.
inline double rate_mg(double sir, double threshold, double bandwidth_hz, ThroughputMode mode,
                      AnalyticWeight w = {})
{
    if (mode == ThroughputMode::instantaneous) {
        return sir >= threshold ? shannon(sir, bandwidth_hz) : 0.0;
    }
    const double density = mode == ThroughputMode::analytic_per_area ? w.density : 1.0;
    return density * shannon(sir, bandwidth_hz) * w.success_probability;
}

/// Rate of a CU whose uplink SIR at the base station is `sir`.
inline double rate_cu(double sir, double threshold, double bandwidth_hz, ThroughputMode mode,
                      AnalyticWeight w = {})
{
    return rate_mg(sir, threshold, bandwidth_hz, mode, w);
}

namespace detail {

inline void require_on_channel(const Assignment& a, int g, int k)
{
    if (k < 0 || static_cast<std::size_t>(k) >= a.channel_to_groups.size()) {
        throw ParameterError("channel index out of range");
    }
    const auto& members = a.channel_to_groups[static_cast<std::size_t>(k)];
    if (std::find(members.begin(), members.end(), g) == members.end()) {
        throw ParameterError("group is not assigned to the requested channel");
    }
}

/// SIR at receiver r of group g on channel k when `members` share the channel.
inline double receiver_sir(const NetworkScenario& s, const FadingRealization& f, int k,
                           std::span<const int> members, std::span<const double> member_power,
                           double cu_power, int g, double g_power, int r)
{
    const double alpha = s.params.path_loss_exponent;
    const auto& grp = s.groups[static_cast<std::size_t>(g)];
    const Point rx = grp.receivers[static_cast<std::size_t>(r)];
    const double signal =
        g_power * f.mg_to_rx(k, g, g, r) * path_gain(grp.tx_rx_dists_m[static_cast<std::size_t>(r)], alpha);
    double interference =
        cu_power * f.cu_to_rx(k, g, r) *
        path_gain(distance(rx, s.cus[static_cast<std::size_t>(k)].position), alpha);
    for (std::size_t i = 0; i < members.size(); ++i) {
        const int other = members[i];
        if (other == g || member_power[i] <= 0.0) {
            continue;
        }
        const Point tx = s.groups[static_cast<std::size_t>(other)].tx_position;
        interference += member_power[i] * f.mg_to_rx(k, other, g, r) * path_gain(distance(rx, tx), alpha);
    }
    if (interference <= 0.0) {
        return kSirCap;
    }
    return signal / interference;
}

inline double bs_sir(const NetworkScenario& s, const FadingRealization& f, int k,
                     std::span<const int> members, std::span<const double> member_power,
                     double cu_power)
{
    const double alpha = s.params.path_loss_exponent;
    const auto& cu = s.cus[static_cast<std::size_t>(k)];
    const double signal = cu_power * f.cu_to_bs(k) * path_gain(cu.dist_to_bs_m, alpha);
    double interference = 0.0;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (member_power[i] <= 0.0) {
            continue;
        }
        const Point tx = s.groups[static_cast<std::size_t>(members[i])].tx_position;
        interference += member_power[i] * f.mg_to_bs(k, members[i]) * path_gain(norm(tx), alpha);
    }
    if (interference <= 0.0) {
        return kSirCap;
    }
    return signal / interference;
}

inline std::vector<double> powers_of(const PowerVector& p, std::span<const int> members)
{
    std::vector<double> out;
    out.reserve(members.size());
    for (int g : members) {
        const auto gi = static_cast<std::size_t>(g);
        out.push_back(p.muted[gi] ? 0.0 : p.mg_power_w[gi]);
    }
    return out;
}

}  // namespace detail

/// SIR at receiver `r` of group `g`, which must be assigned to channel `k`.
/// The denominator holds the CU of channel k and every other co-channel
/// transmitter; an empty denominator yields kSirCap.
inline double sir_mg_receiver(const NetworkScenario& s, const FadingRealization& f,
                              const PowerVector& p, const Assignment& a, int g, int r, int k)
{
    detail::require_on_channel(a, g, k);
    const auto& members = a.channel_to_groups[static_cast<std::size_t>(k)];
    const auto powers = detail::powers_of(p, members);
    const auto gi = static_cast<std::size_t>(g);
    return detail::receiver_sir(s, f, k, members, powers, p.cu_power_w[static_cast<std::size_t>(k)],
                                g, p.muted[gi] ? 0.0 : p.mg_power_w[gi], r);
}

/// Worst-receiver SIR of group `g` on channel `k`.
inline double sir_group(const NetworkScenario& s, const FadingRealization& f, const PowerVector& p,
                        const Assignment& a, int g, int k)
{
    if (g < 0 || static_cast<std::size_t>(g) >= s.groups.size() ||
        s.groups[static_cast<std::size_t>(g)].receivers.empty()) {
        throw ParameterError("sir_group: inactive group");
    }
    double worst = kSirCap;
    bool first = true;
    const auto n = s.groups[static_cast<std::size_t>(g)].receivers.size();
    for (std::size_t r = 0; r < n; ++r) {
        const double v = sir_mg_receiver(s, f, p, a, g, static_cast<int>(r), k);
        if (first || v < worst) {
            worst = v;
            first = false;
        }
    }
    return worst;
}

/// Uplink SIR of the CU of channel `k` at the base station.
inline double sir_cu(const NetworkScenario& s, const FadingRealization& f, const PowerVector& p,
                     const Assignment& a, int k)
{
    const auto& members = a.channel_to_groups.at(static_cast<std::size_t>(k));
    const auto powers = detail::powers_of(p, members);
    return detail::bs_sir(s, f, k, members, powers, p.cu_power_w[static_cast<std::size_t>(k)]);
}

/// Contribution of one channel: its CU plus every group sharing it.
struct ChannelOutcome {
    double cu_sir = 0.0;
    double cu_rate = 0.0;
    std::vector<double> group_sir;
    std::vector<double> group_rate;
    double total = 0.0;
};

/// Evaluates channel `k` shared by `members` at the given powers. A member
/// with power 0 is muted: it neither interferes nor earns a rate.
inline ChannelOutcome evaluate_channel(const NetworkScenario& s, const FadingRealization& f, int k,
                                       std::span<const int> members,
                                       std::span<const double> member_power, double cu_power,
                                       ThroughputMode mode)
{
    const auto& prm = s.params;
    if (is_analytic(mode) && prm.path_loss_exponent != 4.0) {
        throw ParameterError("analytic throughput requires path-loss exponent 4");
    }
    ChannelOutcome out;
    out.cu_sir = detail::bs_sir(s, f, k, members, member_power, cu_power);

    AnalyticWeight cu_weight{prm.cu_density_per_channel, 1.0};
    if (is_analytic(mode)) {
        double loudest = 0.0;
        for (double pw : member_power) {
            loudest = std::max(loudest, pw);
        }
        if (loudest > 0.0) {
            OutageInputs in;
            in.group_density = prm.group_density_per_channel;
            in.cu_power_w = cu_power;
            in.mg_power_w = loudest;
            in.link_dist_m = std::max(s.cus[static_cast<std::size_t>(k)].dist_to_bs_m, kMinDistanceM);
            in.sir_threshold = prm.cu_sir_threshold();
            cu_weight.success_probability = 1.0 - outage_cu(in);
        }
    }
    out.cu_rate = cu_power > 0.0 ? rate_cu(out.cu_sir, prm.cu_sir_threshold(), prm.bandwidth_hz,
                                           mode, cu_weight)
                                 : 0.0;
    out.total = out.cu_rate;

    out.group_sir.assign(members.size(), 0.0);
    out.group_rate.assign(members.size(), 0.0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        const double pw = member_power[i];
        if (pw <= 0.0) {
            continue;
        }
        const int g = members[i];
        const auto& grp = s.groups[static_cast<std::size_t>(g)];
        double worst = kSirCap;
        for (std::size_t r = 0; r < grp.receivers.size(); ++r) {
            worst = std::min(worst, detail::receiver_sir(s, f, k, members, member_power, cu_power,
                                                         g, pw, static_cast<int>(r)));
        }
        out.group_sir[i] = worst;
        AnalyticWeight w{prm.group_density_per_channel, 1.0};
        if (is_analytic(mode)) {
            OutageInputs in;
            in.cu_density = prm.cu_density_per_channel;
            in.group_density = prm.group_density_per_channel;
            in.cu_power_w = cu_power;
            in.mg_power_w = pw;
            in.exclusion_radius_m = std::max(prm.exclusion_radius_m, kMinDistanceM);
            in.link_dist_m = std::max(grp.worst_rx_dist_m(), kMinDistanceM);
            in.sir_threshold = prm.mg_sir_threshold();
            w.success_probability = 1.0 - outage_mg(in);
        }
        out.group_rate[i] = rate_mg(worst, prm.mg_sir_threshold(), prm.bandwidth_hz, mode, w);
        out.total += out.group_rate[i];
    }
    return out;
}

/// Sum over channels of the CU rate plus the rates of the groups sharing it.
inline double sum_throughput(const NetworkScenario& s, const FadingRealization& f,
                             const PowerVector& p, const Assignment& a, ThroughputMode mode)
{
    double total = 0.0;
    for (std::size_t k = 0; k < a.channel_to_groups.size(); ++k) {
        const auto& members = a.channel_to_groups[k];
        const auto powers = detail::powers_of(p, members);
        total += evaluate_channel(s, f, static_cast<int>(k), members, powers, p.cu_power_w[k], mode)
                     .total;
    }
    return total;
}

}  // namespace mgca

#endif  // MGCA_RADIO_HPP
