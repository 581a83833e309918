// SPDX-License-Identifier: Apache-2.0
//
// Feasible transmit-power interval of a multicast transmitter on a channel,
// derived from the two outage constraints, and the power policies applied by
// every allocation scheme.

#ifndef MGCA_POWER_HPP
#define MGCA_POWER_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "geometry.hpp"
#include "params.hpp"
#include "radio.hpp"

namespace mgca {

inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

/// Numerator of the lower power bound.
enum class LowerBoundForm {
    /// lambda_c*pi*sqrt(p_c)*sqrt(4*gamma*d^a*p_c*D^-a) / den (default)
    root_form,
    /// 2*lambda_c*pi*p_c*gamma*d^a / den
    linear_form,
};

struct LowerBoundInputs {
    double cu_density = 0.0;     ///< lambda_c^k
    double group_density = 0.0;  ///< lambda_g^k
    double cu_power_w = 1.0;
    double exclusion_radius_m = 50.0;
    double link_dist_m = 25.0;  ///< worst receiver distance d_g
    double sir_threshold = 1.0;  ///< linear gamma_g^th
    double outage_target = 0.1;  ///< Theta_g
    double alpha = 4.0;
};

/// Lower end of the feasible MG power interval. Empty when the denominator
/// is not positive, i.e. no power can reach the outage target.
inline std::optional<double> compute_p_low(const LowerBoundInputs& in,
                                           LowerBoundForm form = LowerBoundForm::root_form)
{
    detail::require_alpha4(in.alpha, "compute_p_low");
    if (!(in.exclusion_radius_m > 0.0)) {
        throw ParameterError("compute_p_low: exclusion radius must be > 0");
    }
    if (!(in.outage_target > 0.0 && in.outage_target <= 1.0)) {
        throw ParameterError("compute_p_low: outage target must be in (0,1]");
    }
    const double d_a = std::pow(in.link_dist_m, in.alpha);
    const double hole_term = in.sir_threshold * d_a *
                             std::pow(in.exclusion_radius_m, 2.0 - in.alpha) * in.cu_density * kPi;
    const double mg_term = in.group_density * (kPi * kPi / 2.0) * std::sqrt(in.sir_threshold * d_a);
    const double budget = -std::log1p(-in.outage_target);
    const double den = budget - mg_term + hole_term;
    if (std::isinf(budget)) {
        return 0.0;
    }
    if (!(den > 0.0)) {
        return std::nullopt;
    }
    double num = 0.0;
    if (form == LowerBoundForm::root_form) {
        num = in.cu_density * kPi * std::sqrt(in.cu_power_w) *
              std::sqrt(4.0 * in.sir_threshold * d_a * in.cu_power_w *
                        std::pow(in.exclusion_radius_m, -in.alpha));
    } else {
        num = 2.0 * in.cu_density * kPi * in.cu_power_w * in.sir_threshold * d_a;
    }
    return num / den;
}

struct UpperBoundInputs {
    double group_density = 0.0;  ///< lambda_g^k
    double cu_power_w = 1.0;
    double cu_bs_dist_m = 100.0;  ///< d_{c,b}
    double sir_threshold = 1.0;   ///< linear gamma_c^th
    double outage_target = 0.1;   ///< Theta_c
    double alpha = 4.0;
};

/// Largest MG power keeping the CU outage at or below its target:
/// p_c * (-2 ln(1-Theta_c) / (lambda_g pi^2 sqrt(gamma_c) d_cb^(alpha/2)))^2.
/// This is the exact inverse of outage_cu in the MG power.
inline double compute_p_high(const UpperBoundInputs& in)
{
    detail::require_alpha4(in.alpha, "compute_p_high");
    if (!(in.outage_target > 0.0 && in.outage_target <= 1.0)) {
        throw ParameterError("compute_p_high: outage target must be in (0,1]");
    }
    detail::require_nonnegative(in.group_density, "compute_p_high: group density");
    if (in.group_density == 0.0 || in.outage_target == 1.0) {
        return kUnbounded;
    }
    const double root = -2.0 * std::log1p(-in.outage_target) /
                        (in.group_density * kPi * kPi * std::sqrt(in.sir_threshold) *
                         std::pow(in.cu_bs_dist_m, in.alpha / 2.0));
    return in.cu_power_w * root * root;
}

struct PowerBounds {
    double p_low_w = 0.0;
    double p_high_w = kUnbounded;
    double p_inf_w = 0.0;
    double p_sup_w = 0.0;
    bool feasible = false;
};

/// Clamps [p_low, p_high] to [0, P_G]. An empty p_low means unreachable.
inline PowerBounds feasible_interval(std::optional<double> p_low, double p_high, double max_power_w)
{
    PowerBounds b;
    b.p_low_w = p_low.value_or(kUnbounded);
    b.p_high_w = p_high;
    b.p_inf_w = std::max(0.0, b.p_low_w);
    b.p_sup_w = std::min(max_power_w, b.p_high_w);
    b.feasible = b.p_inf_w <= b.p_sup_w;
    return b;
}

/// Bounds of group `g` on channel `k` in scenario `s`, CU at full power.
inline PowerBounds group_power_bounds(const NetworkScenario& s, int g, int k,
                                      LowerBoundForm form = LowerBoundForm::root_form)
{
    const auto& prm = s.params;
    const auto& grp = s.groups.at(static_cast<std::size_t>(g));
    const auto& cu = s.cus.at(static_cast<std::size_t>(k));

    LowerBoundInputs lo;
    lo.cu_density = prm.cu_density_per_channel;
    lo.group_density = prm.group_density_per_channel;
    lo.cu_power_w = prm.max_cu_power_w();
    lo.exclusion_radius_m = std::max(prm.exclusion_radius_m, kMinDistanceM);
    lo.link_dist_m = std::max(grp.worst_rx_dist_m(), kMinDistanceM);
    lo.sir_threshold = prm.mg_sir_threshold();
    lo.outage_target = prm.mg_outage_threshold;
    lo.alpha = prm.path_loss_exponent;

    UpperBoundInputs hi;
    hi.group_density = prm.group_density_per_channel;
    hi.cu_power_w = prm.max_cu_power_w();
    hi.cu_bs_dist_m = std::max(cu.dist_to_bs_m, kMinDistanceM);
    hi.sir_threshold = prm.cu_sir_threshold();
    hi.outage_target = prm.cu_outage_threshold;
    hi.alpha = prm.path_loss_exponent;

    return feasible_interval(compute_p_low(lo, form), compute_p_high(hi), prm.max_mg_power_w());
}

/// How powers are chosen once an assignment is fixed.
struct PowerPolicy {
    enum class Kind {
        max_feasible,  ///< every group at p_sup, every CU at P_c
        grid,          ///< coordinate ascent over a per-group grid
    };
    Kind kind = Kind::max_feasible;
    int grid_points = 8;
    int sweeps = 3;

    static PowerPolicy max_feasible() { return {}; }
    static PowerPolicy grid(int points) { return {Kind::grid, points, 3}; }

    friend bool operator==(const PowerPolicy&, const PowerPolicy&) = default;
};

namespace detail {

/// Candidate powers of one group: `n` log-spaced points from max(p_inf,
/// p_sup*1e-4) to p_sup; a single point is the midpoint of [p_inf, p_sup].
inline std::vector<double> power_grid(const PowerBounds& b, int n)
{
    if (n <= 1) {
        return {0.5 * (b.p_inf_w + b.p_sup_w)};
    }
    const double hi = b.p_sup_w;
    const double lo = std::min(hi, std::max(b.p_inf_w, hi * 1e-4));
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        pts[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, t);
    }
    pts.back() = hi;
    return pts;
}

}  // namespace detail

/// Powers of the groups sharing channel `k` (0 for a muted group).
inline std::vector<double> channel_powers(const NetworkScenario& s, const FadingRealization& f,
                                          int k, std::span<const int> members,
                                          const PowerPolicy& policy)
{
    std::vector<PowerBounds> bounds;
    std::vector<double> powers;
    bounds.reserve(members.size());
    for (int g : members) {
        bounds.push_back(group_power_bounds(s, g, k));
        powers.push_back(bounds.back().feasible ? bounds.back().p_sup_w : 0.0);
    }
    if (policy.kind == PowerPolicy::Kind::max_feasible || members.empty()) {
        return powers;
    }
    const double cu_power = s.params.max_cu_power_w();
    auto objective = [&](std::span<const double> pw) {
        return evaluate_channel(s, f, k, members, pw, cu_power, ThroughputMode::instantaneous).total;
    };
    std::vector<std::vector<double>> grids(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (bounds[i].feasible) {
            grids[i] = detail::power_grid(bounds[i], policy.grid_points);
        }
    }
    double current = objective(powers);
    for (int sweep = 0; sweep < policy.sweeps; ++sweep) {
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (grids[i].empty()) {
                continue;
            }
            const double keep = powers[i];
            double best_power = keep;
            double best_value = -1.0;
            for (double candidate : grids[i]) {
                powers[i] = candidate;
                const double v = candidate == keep ? current : objective(powers);
                if (v > best_value || (v == best_value && candidate == keep)) {
                    best_value = v;
                    best_power = candidate;
                }
            }
            powers[i] = best_power;
            current = best_value;
        }
    }
    return powers;
}

/// Powers for every group of an assignment. Unassigned groups stay silent;
/// groups with an empty feasible interval are muted.
inline PowerVector assign_powers(const NetworkScenario& s, const FadingRealization& f,
                                 const Assignment& a, const PowerPolicy& policy)
{
    PowerVector pv;
    pv.cu_power_w.assign(a.channel_to_groups.size(), s.params.max_cu_power_w());
    pv.mg_power_w.assign(s.groups.size(), 0.0);
    pv.muted.assign(s.groups.size(), false);
    for (std::size_t k = 0; k < a.channel_to_groups.size(); ++k) {
        const auto& members = a.channel_to_groups[k];
        const auto powers = channel_powers(s, f, static_cast<int>(k), members, policy);
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto g = static_cast<std::size_t>(members[i]);
            pv.mg_power_w[g] = powers[i];
            pv.muted[g] = !group_power_bounds(s, members[i], static_cast<int>(k)).feasible;
        }
    }
    return pv;
}

}  // namespace mgca

#endif  // MGCA_POWER_HPP
