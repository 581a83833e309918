// SPDX-License-Identifier: Apache-2.0
//
// Shape tests for noisy Monte Carlo curves. Neighbouring points are compared
// with a tolerance of sqrt(se_i^2 + se_j^2).

#ifndef MGCA_TRENDS_HPP
#define MGCA_TRENDS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "params.hpp"

namespace mgca {

struct TrendVerdict {
    bool pass = false;
    std::size_t peak_index = 0;
    std::string reason;
};

namespace detail {

inline double pair_tolerance(const std::vector<double>& se, std::size_t i, std::size_t j)
{
    return std::sqrt(se[i] * se[i] + se[j] * se[j]);
}

inline void require_curve(const std::vector<double>& mean, const std::vector<double>& se)
{
    if (mean.size() != se.size() || mean.size() < 3) {
        throw ParameterError("trend check needs >= 3 points with matching standard errors");
    }
}

}  // namespace detail

/// Rises to an interior maximum and falls after it. Steps against the
/// expected direction are tolerated up to their pair tolerance; the peak must
/// clear both end points by more than their pair tolerance.
inline TrendVerdict single_interior_peak(const std::vector<double>& mean, const std::vector<double>& se)
{
    detail::require_curve(mean, se);
    TrendVerdict v;
    const std::size_t n = mean.size();
    v.peak_index = static_cast<std::size_t>(std::max_element(mean.begin(), mean.end()) - mean.begin());
    const std::size_t p = v.peak_index;
    if (p == 0 || p == n - 1) {
        v.reason = "maximum at an end point";
        return v;
    }
    for (std::size_t i = 0; i + 1 <= p; ++i) {
        if (mean[i + 1] < mean[i] - detail::pair_tolerance(se, i, i + 1)) {
            v.reason = "significant drop before the peak at index " + std::to_string(i + 1);
            return v;
        }
    }
    for (std::size_t i = p; i + 1 < n; ++i) {
        if (mean[i + 1] > mean[i] + detail::pair_tolerance(se, i, i + 1)) {
            v.reason = "significant rise after the peak at index " + std::to_string(i + 1);
            return v;
        }
    }
    if (mean[p] - mean.front() <= detail::pair_tolerance(se, 0, p)) {
        v.reason = "no significant rise from the first point";
        return v;
    }
    if (mean[p] - mean.back() <= detail::pair_tolerance(se, p, n - 1)) {
        v.reason = "no significant fall to the last point";
        return v;
    }
    v.pass = true;
    v.reason = "ok";
    return v;
}

/// Nondecreasing up to tolerance, with a significant overall rise, and a
/// final two-step gain of at most `tail_fraction` of the overall rise (or
/// within tolerance).
inline TrendVerdict increasing_then_saturating(const std::vector<double>& mean,
                                               const std::vector<double>& se,
                                               double tail_fraction = 0.25)
{
    detail::require_curve(mean, se);
    TrendVerdict v;
    const std::size_t n = mean.size();
    v.peak_index = static_cast<std::size_t>(std::max_element(mean.begin(), mean.end()) - mean.begin());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (mean[i + 1] < mean[i] - detail::pair_tolerance(se, i, i + 1)) {
            v.reason = "significant drop at index " + std::to_string(i + 1);
            return v;
        }
    }
    const double rise = mean.back() - mean.front();
    if (rise <= detail::pair_tolerance(se, 0, n - 1)) {
        v.reason = "no significant overall rise";
        return v;
    }
    const double tail = mean[n - 1] - mean[n - 3];
    if (tail > tail_fraction * rise && tail > detail::pair_tolerance(se, n - 3, n - 1)) {
        v.reason = "still rising at the end";
        return v;
    }
    v.pass = true;
    v.reason = "ok";
    return v;
}

}  // namespace mgca

#endif  // MGCA_TRENDS_HPP
