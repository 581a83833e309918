// SPDX-License-Identifier: Apache-2.0
//
// Random network realizations: CUs and multicast transmitters dropped
// uniformly in a disk cell around the base station, Poisson candidate
// receivers thinned by the CU exclusion disks, and max-received-power
// association of the survivors to transmitters.

#ifndef MGCA_GEOMETRY_HPP
#define MGCA_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "params.hpp"
#include "rng.hpp"

namespace mgca {

/// Position in metres, base station at the origin.
struct Point {
    double x_m = 0.0;
    double y_m = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x_m - b.x_m, a.y_m - b.y_m); }
inline double norm(Point p) { return std::hypot(p.x_m, p.y_m); }

struct CellularUser {
    int id = 0;
    int channel = 0;
    Point position;
    double dist_to_bs_m = 0.0;

    friend bool operator==(const CellularUser&, const CellularUser&) = default;
};

/// One transmitter and the receivers that associated with it.
struct MulticastGroup {
    int id = 0;  ///< transmitter index in [0, G)
    Point tx_position;
    std::vector<Point> receivers;
    std::vector<double> tx_rx_dists_m;

    /// Distance to the farthest receiver.
    double worst_rx_dist_m() const
    {
        double worst = 0.0;
        for (double d : tx_rx_dists_m) {
            worst = std::max(worst, d);
        }
        return worst;
    }

    friend bool operator==(const MulticastGroup&, const MulticastGroup&) = default;
};

/// One realization. `groups` holds active groups only; the search layer
/// refers to a group by its position in this vector.
struct NetworkScenario {
    SimParams params;
    std::vector<CellularUser> cus;
    std::vector<MulticastGroup> groups;
    std::vector<Point> transmitters;  ///< all G transmitters, active or not
    std::size_t candidate_count = 0;
    std::size_t excluded_receiver_count = 0;
    std::uint64_t scenario_seed = 0;
    bool degenerate = false;  ///< no active group survived

    std::size_t receiver_count() const
    {
        std::size_t n = 0;
        for (const auto& g : groups) {
            n += g.receivers.size();
        }
        return n;
    }
};

/// `n` i.i.d. points uniform on the disk of `radius` centred at the origin.
inline std::vector<Point> sample_uniform_disk(std::size_t n, double radius, Rng& rng)
{
    if (!(radius > 0.0)) {
        throw ParameterError("sample_uniform_disk: radius must be > 0");
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = radius * std::sqrt(unit(rng));
        const double theta = 2.0 * kPi * unit(rng);
        pts.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    return pts;
}

inline std::size_t sample_poisson_count(double intensity, double area_m2, Rng& rng)
{
    if (intensity < 0.0 || area_m2 < 0.0) {
        throw ParameterError("sample_poisson_count: intensity and area must be >= 0");
    }
    const double mean = intensity * area_m2;
    if (mean == 0.0) {
        return 0;
    }
    std::poisson_distribution<std::size_t> poisson(mean);
    return poisson(rng);
}

struct ExclusionResult {
    std::vector<Point> kept;
    std::size_t removed_count = 0;
};

/// Drops every candidate strictly closer than `radius` to some CU. Order of
/// the survivors is preserved.
inline ExclusionResult apply_exclusion(std::span<const Point> candidates,
                                       std::span<const CellularUser> cus, double radius)
{
    if (radius < 0.0) {
        throw ParameterError("apply_exclusion: radius must be >= 0");
    }
    ExclusionResult out;
    out.kept.reserve(candidates.size());
    for (const Point& p : candidates) {
        bool inside = false;
        for (const auto& cu : cus) {
            if (distance(p, cu.position) < radius) {
                inside = true;
                break;
            }
        }
        if (inside) {
            ++out.removed_count;
        } else {
            out.kept.push_back(p);
        }
    }
    return out;
}

/// Attaches each receiver to the transmitter with the largest mean received
/// power P_G * max(d, d_min)^-alpha; ties go to the lowest transmitter index.
/// Receivers whose best power is below `assoc_min_rx_power_w` stay unattached.
/// Groups left without receivers are omitted from the result.
inline std::vector<MulticastGroup> form_groups(std::span<const Point> tx_positions,
                                               std::span<const Point> receivers,
                                               double mg_power_w, double assoc_min_rx_power_w,
                                               double alpha)
{
    if (tx_positions.empty()) {
        throw ParameterError("form_groups: at least one transmitter is required");
    }
    std::vector<MulticastGroup> all(tx_positions.size());
    for (std::size_t t = 0; t < tx_positions.size(); ++t) {
        all[t].id = static_cast<int>(t);
        all[t].tx_position = tx_positions[t];
    }
    for (const Point& rx : receivers) {
        std::size_t best = 0;
        double best_power = -1.0;
        for (std::size_t t = 0; t < tx_positions.size(); ++t) {
            const double d = std::max(distance(rx, tx_positions[t]), kMinDistanceM);
            const double power = mg_power_w * std::pow(d, -alpha);
            if (power > best_power) {
                best_power = power;
                best = t;
            }
        }
        if (best_power < assoc_min_rx_power_w) {
            continue;
        }
        all[best].receivers.push_back(rx);
        all[best].tx_rx_dists_m.push_back(distance(rx, tx_positions[best]));
    }
    std::vector<MulticastGroup> active;
    for (auto& g : all) {
        if (!g.receivers.empty()) {
            active.push_back(std::move(g));
        }
    }
    return active;
}

/// Builds one realization from an explicit stream seed.
inline NetworkScenario generate_scenario_from_seed(const SimParams& params, std::uint64_t seed)
{
    params.validate();
    Rng rng(derive_seed(seed, {kGeometryStream}));
    NetworkScenario s;
    s.params = params;
    s.scenario_seed = seed;

    const auto cu_positions = sample_uniform_disk(static_cast<std::size_t>(params.num_channels),
                                                  params.cell_radius_m, rng);
    for (int k = 0; k < params.num_channels; ++k) {
        const Point p = cu_positions[static_cast<std::size_t>(k)];
        s.cus.push_back({k, k, p, norm(p)});
    }
    s.transmitters = sample_uniform_disk(static_cast<std::size_t>(params.num_groups),
                                         params.cell_radius_m, rng);

    const std::size_t n_candidates =
        sample_poisson_count(params.receiver_density_per_m2, params.cell_area_m2(), rng);
    const auto candidates = sample_uniform_disk(n_candidates, params.cell_radius_m, rng);
    auto excl = apply_exclusion(candidates, s.cus, params.exclusion_radius_m);
    s.candidate_count = n_candidates;
    s.excluded_receiver_count = excl.removed_count;

    s.groups = form_groups(s.transmitters, excl.kept, params.max_mg_power_w(),
                           params.assoc_min_rx_power_w(), params.path_loss_exponent);
    s.degenerate = s.groups.empty();
    return s;
}

/// Realization number `index` of the stream rooted at `params.master_seed`.
inline NetworkScenario generate_scenario(const SimParams& params, std::uint64_t index)
{
    return generate_scenario_from_seed(params, derive_seed(params.master_seed, {index}));
}

}  // namespace mgca

#endif  // MGCA_GEOMETRY_HPP
