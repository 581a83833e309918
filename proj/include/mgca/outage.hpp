// SPDX-License-Identifier: Apache-2.0
//
// Closed-form outage probabilities for a multicast receiver in a Poisson hole
// process and for a CU at the base station, valid for path-loss exponent 4,
// together with a Monte Carlo estimator over PPP interferer fields that is
// used to check them.

#ifndef MGCA_OUTAGE_HPP
#define MGCA_OUTAGE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

#include "geometry.hpp"
#include "params.hpp"
#include "rng.hpp"

namespace mgca {

namespace detail {

inline void require_alpha4(double alpha, const char* who)
{
    if (alpha != 4.0) {
        throw ParameterError(std::string(who) +
                             ": closed form is only available for path-loss exponent 4");
    }
}

inline void require_nonnegative(double v, const char* what)
{
    if (!(v >= 0.0)) {
        throw ParameterError(std::string(what) + " must be >= 0");
    }
}

}  // namespace detail

/// Which arctan term the CU-interference factor uses.
enum class HoleBracket {
    /// arctan(sqrt(Y1)) (default).
    arctan_root,
    /// pi/2 - arctan(1/Y1), the variant carried into the power bounds.
    arctan_complement,
};

/// Laplace factor of a PPP interferer field of intensity `lambda` and
/// transmit power `power_w`, evaluated at `s_arg`, alpha = 4:
/// exp(-lambda * pi^2/2 * sqrt(power_w) * sqrt(s_arg)).
inline double laplace_l0(double lambda, double power_w, double s_arg)
{
    detail::require_nonnegative(lambda, "laplace_l0: lambda");
    detail::require_nonnegative(power_w, "laplace_l0: power");
    detail::require_nonnegative(s_arg, "laplace_l0: s");
    return std::exp(-lambda * (kPi * kPi / 2.0) * std::sqrt(power_w) * std::sqrt(s_arg));
}

/// Exponent magnitude of the CU-interference factor (the factor is exp(-x)).
///
/// With a = s*p_c and Y1 = a/D^4 this is
///   lambda_c*pi*( sqrt(a)*(B(Y1) + sqrt(Y1)/(1+Y1)) - Y1*D^2/(1+Y1) )
/// where B is the selected bracket. The last two terms cancel identically, so
/// the default form equals lambda_c*pi*sqrt(a)*arctan(sqrt(Y1)), the exact
/// Laplace transform of a PPP restricted to outside the disk of radius D.
inline double laplace_l1_exponent(double lambda_c, double cu_power_w, double exclusion_radius_m,
                                  double s_arg, HoleBracket bracket = HoleBracket::arctan_root)
{
    detail::require_nonnegative(lambda_c, "laplace_l1: lambda_c");
    detail::require_nonnegative(cu_power_w, "laplace_l1: cu power");
    detail::require_nonnegative(s_arg, "laplace_l1: s");
    if (!(exclusion_radius_m > 0.0)) {
        throw ParameterError("laplace_l1: exclusion radius must be > 0");
    }
    if (lambda_c == 0.0 || cu_power_w == 0.0 || s_arg == 0.0) {
        return 0.0;
    }
    const double a = s_arg * cu_power_w;
    const double d2 = exclusion_radius_m * exclusion_radius_m;
    const double y1 = a / (d2 * d2);
    const double root_y1 = std::sqrt(y1);
    const double angle = bracket == HoleBracket::arctan_root ? std::atan(root_y1)
                                                           : kPi / 2.0 - std::atan(1.0 / y1);
    const double inner = std::sqrt(a) * (angle + root_y1 / (1.0 + y1)) - y1 * d2 / (1.0 + y1);
    return lambda_c * kPi * inner;
}

inline double laplace_l1(double lambda_c, double cu_power_w, double exclusion_radius_m,
                         double s_arg, HoleBracket bracket = HoleBracket::arctan_root)
{
    return std::exp(-laplace_l1_exponent(lambda_c, cu_power_w, exclusion_radius_m, s_arg, bracket));
}

/// Parameters of the two outage expressions. For the multicast receiver
/// `link_dist_m` is d_{g,r} and `sir_threshold` is the MG threshold; for the
/// CU they are d_{c,b} and the CU threshold.
struct OutageInputs {
    double cu_density = 0.0;     ///< lambda_c^k
    double group_density = 0.0;  ///< lambda_g^k
    double cu_power_w = 1.0;
    double mg_power_w = 1.0;
    double exclusion_radius_m = 50.0;
    double link_dist_m = 25.0;
    double sir_threshold = 1.0;  ///< linear
    double alpha = 4.0;
    HoleBracket bracket = HoleBracket::arctan_root;
};

/// Outage of a multicast receiver whose interferers are a PPP of co-channel
/// transmitters and a PPP of CUs kept at least D away: 1 - L1 * L0.
inline double outage_mg(const OutageInputs& in)
{
    detail::require_alpha4(in.alpha, "outage_mg");
    detail::require_nonnegative(in.link_dist_m, "outage_mg: link distance");
    detail::require_nonnegative(in.sir_threshold, "outage_mg: threshold");
    if (in.mg_power_w <= 0.0) {
        return in.sir_threshold > 0.0 ? 1.0 : 0.0;
    }
    const double s = in.sir_threshold * std::pow(in.link_dist_m, in.alpha) / in.mg_power_w;
    const double l1 = laplace_l1(in.cu_density, in.cu_power_w, in.exclusion_radius_m, s, in.bracket);
    const double l0 = laplace_l0(in.group_density, in.mg_power_w, s);
    return 1.0 - l1 * l0;
}

/// Outage of the CU at the base station under a PPP of co-channel multicast
/// transmitters of intensity lambda_g^k.
inline double outage_cu(const OutageInputs& in)
{
    detail::require_alpha4(in.alpha, "outage_cu");
    detail::require_nonnegative(in.mg_power_w, "outage_cu: mg power");
    detail::require_nonnegative(in.sir_threshold, "outage_cu: threshold");
    if (in.cu_power_w <= 0.0) {
        return 1.0;
    }
    const double s = in.sir_threshold * std::pow(in.link_dist_m, in.alpha) / in.cu_power_w;
    return 1.0 - laplace_l0(in.group_density, in.mg_power_w, s);
}

/// Geometry simulated by `mc_outage`.
struct OutageGeometry {
    enum class Link {
        mg_receiver,  ///< receiver at the origin, CU field outside a hole of radius D
        cu_uplink,    ///< base station at the origin, multicast field only
    };
    Link link = Link::mg_receiver;
    OutageInputs inputs;
    /// Radius of the simulated interferer fields; 0 selects a radius large
    /// enough that the truncated tail is negligible.
    double field_radius_m = 0.0;
};

struct MonteCarloEstimate {
    double probability = 0.0;
    double ci_halfwidth = 0.0;  ///< 95 % normal-approximation half-width
    std::size_t trials = 0;
};

namespace detail {

inline double default_field_radius(const OutageGeometry& g)
{
    const auto& in = g.inputs;
    const double signal_power = g.link == OutageGeometry::Link::mg_receiver ? in.mg_power_w
                                                                            : in.cu_power_w;
    const double loudest = std::max(in.cu_power_w, in.mg_power_w);
    const double reach = in.link_dist_m *
                         std::pow(std::max(in.sir_threshold, 1.0) * loudest /
                                      std::max(signal_power, 1e-300),
                                  1.0 / in.alpha);
    return 40.0 * std::max({reach, in.exclusion_radius_m, 10.0});
}

/// Sum of faded PPP interference at the origin from an annulus [inner, outer].
inline double ppp_interference(double lambda, double power_w, double inner, double outer,
                               double alpha, Rng& rng)
{
    if (lambda <= 0.0 || power_w <= 0.0) {
        return 0.0;
    }
    const double area = kPi * (outer * outer - inner * inner);
    std::poisson_distribution<std::size_t> count(lambda * area);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::exponential_distribution<double> fade(1.0);
    const std::size_t n = count(rng);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::sqrt(inner * inner + unit(rng) * (outer * outer - inner * inner));
        total += power_w * fade(rng) * std::pow(std::max(r, kMinDistanceM), -alpha);
    }
    return total;
}

}  // namespace detail

/// Fraction of simulated realizations (PPP interferers plus Rayleigh fading
/// on every link) whose SIR falls strictly below the threshold. Trial `i`
/// draws from its own sub-stream, so the result does not depend on how trials
/// are scheduled.
inline MonteCarloEstimate mc_outage(const OutageGeometry& geom, std::size_t n_trials,
                                    std::uint64_t seed)
{
    if (n_trials < 1) {
        throw ParameterError("mc_outage: n_trials must be >= 1");
    }
    const auto& in = geom.inputs;
    const double field = geom.field_radius_m > 0.0 ? geom.field_radius_m
                                                   : detail::default_field_radius(geom);
    std::size_t outages = 0;
    for (std::size_t t = 0; t < n_trials; ++t) {
        Rng rng(derive_seed(seed, {t}));
        std::exponential_distribution<double> fade(1.0);
        double signal = 0.0;
        double interference = 0.0;
        if (geom.link == OutageGeometry::Link::mg_receiver) {
            signal = in.mg_power_w * fade(rng) *
                     std::pow(std::max(in.link_dist_m, kMinDistanceM), -in.alpha);
            interference += detail::ppp_interference(in.cu_density, in.cu_power_w,
                                                     in.exclusion_radius_m, field, in.alpha, rng);
            interference += detail::ppp_interference(in.group_density, in.mg_power_w, 0.0, field,
                                                     in.alpha, rng);
        } else {
            signal = in.cu_power_w * fade(rng) *
                     std::pow(std::max(in.link_dist_m, kMinDistanceM), -in.alpha);
            interference += detail::ppp_interference(in.group_density, in.mg_power_w, 0.0, field,
                                                     in.alpha, rng);
        }
        const double sir = interference > 0.0 ? signal / interference : kSirCap;
        if (sir < in.sir_threshold) {
            ++outages;
        }
    }
    MonteCarloEstimate est;
    est.trials = n_trials;
    est.probability = static_cast<double>(outages) / static_cast<double>(n_trials);
    est.ci_halfwidth =
        1.96 * std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(n_trials));
    return est;
}

}  // namespace mgca

#endif  // MGCA_OUTAGE_HPP
