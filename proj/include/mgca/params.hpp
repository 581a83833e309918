// SPDX-License-Identifier: Apache-2.0
//
// Simulation parameters, unit conversions and the error types shared by every
// module of the library.

#ifndef MGCA_PARAMS_HPP
#define MGCA_PARAMS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mgca {

/// Raised when an argument violates a documented precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the exhaustive search when the instance exceeds its size guard.
class SearchGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kPi = std::numbers::pi;

/// Minimum link distance; shorter distances are clamped to it.
inline constexpr double kMinDistanceM = 1.0;

/// SIR reported when a receiver sees no interferer at all (60 dB).
inline constexpr double kSirCap = 1.0e6;

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

/// SIR threshold (dB) a link must clear to carry `rate_bps_per_hz` on a
/// Shannon link: 2^R - 1.
inline double sir_threshold_db_for_rate(double rate_bps_per_hz)
{
    return linear_to_db(std::exp2(rate_bps_per_hz) - 1.0);
}

/// Every knob of one network realization plus the analytic densities used by
/// the closed-form outage expressions.
///
/// The per-channel densities are analytic parameters only. Scenario generation
/// always places exactly `num_channels` CUs and `num_groups` transmitters.
struct SimParams {
    double cell_radius_m = 500.0;
    double exclusion_radius_m = 50.0;
    int num_channels = 3;
    int num_groups = 7;
    double receiver_density_per_m2 = 2.0e-5;
    double group_density_per_channel = 3.0e-6;
    double cu_density_per_channel = 1.3e-6;
    double max_cu_power_dbm = 30.0;
    double max_mg_power_dbm = 30.0;
    double cu_sir_threshold_db = sir_threshold_db_for_rate(6.0);
    double mg_sir_threshold_db = 25.0;
    double cu_outage_threshold = 0.1;
    double mg_outage_threshold = 0.1;
    double cu_min_rate_bps_per_hz = 6.0;
    double path_loss_exponent = 4.0;
    double bandwidth_hz = 1.0;
    double assoc_min_rx_power_dbm = -80.0;
    std::uint64_t master_seed = 1;

    double max_cu_power_w() const { return dbm_to_watt(max_cu_power_dbm); }
    double max_mg_power_w() const { return dbm_to_watt(max_mg_power_dbm); }
    double cu_sir_threshold() const { return db_to_linear(cu_sir_threshold_db); }
    double mg_sir_threshold() const { return db_to_linear(mg_sir_threshold_db); }
    double assoc_min_rx_power_w() const { return dbm_to_watt(assoc_min_rx_power_dbm); }
    double cell_area_m2() const { return kPi * cell_radius_m * cell_radius_m; }

    /// Sets the CU rate floor and the matching SIR threshold together.
    void set_cu_min_rate(double rate_bps_per_hz)
    {
        cu_min_rate_bps_per_hz = rate_bps_per_hz;
        cu_sir_threshold_db = sir_threshold_db_for_rate(rate_bps_per_hz);
    }

    void validate() const
    {
        auto require = [](bool ok, const char* what) {
            if (!ok) {
                throw ParameterError(std::string("invalid SimParams: ") + what);
            }
        };
        require(cell_radius_m > 0.0, "cell_radius_m must be > 0");
        require(exclusion_radius_m >= 0.0, "exclusion_radius_m must be >= 0");
        require(num_channels >= 1, "num_channels must be >= 1");
        require(num_groups >= 1, "num_groups must be >= 1");
        require(path_loss_exponent > 2.0, "path_loss_exponent must be > 2");
        require(receiver_density_per_m2 >= 0.0, "receiver_density_per_m2 must be >= 0");
        require(group_density_per_channel >= 0.0, "group_density_per_channel must be >= 0");
        require(cu_density_per_channel >= 0.0, "cu_density_per_channel must be >= 0");
        require(cu_outage_threshold > 0.0 && cu_outage_threshold < 1.0,
                "cu_outage_threshold must be in (0,1)");
        require(mg_outage_threshold > 0.0 && mg_outage_threshold < 1.0,
                "mg_outage_threshold must be in (0,1)");
        require(bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
        require(std::isfinite(max_cu_power_dbm) && std::isfinite(max_mg_power_dbm),
                "powers must be finite");
    }

    friend bool operator==(const SimParams&, const SimParams&) = default;
};

}  // namespace mgca

#endif  // MGCA_PARAMS_HPP
