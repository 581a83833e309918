// SPDX-License-Identifier: Apache-2.0
//
// Numeric comparisons of the closed-form outage and power expressions
// against independent references.

#ifndef MGCA_SRC_LEMMA_CHECKS_HPP
#define MGCA_SRC_LEMMA_CHECKS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mgca::cli {

struct CheckRow {
    std::string name;
    double value = 0.0;      ///< closed form, or worst error for sweeps
    double reference = 0.0;  ///< oracle value
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct LemmaCheckOptions {
    std::size_t mc_trials = 20000;
    std::uint64_t seed = 7;
    std::size_t inversion_points = 100;
};

/// Monte Carlo comparison of the multicast-receiver outage at
/// lambda_c = lambda_g = 2e-5, D = 50 m, d = 25 m, 25 dB, 1 W / 1 W.
CheckRow check_outage_mg_mc(const LemmaCheckOptions& opt);

/// Monte Carlo comparison of the CU outage at lambda_g = 2e-5, d_cb = 200 m,
/// threshold 6 dB, 1 W / 1 W.
CheckRow check_outage_cu_mc(const LemmaCheckOptions& opt);

/// Worst relative error of outage_cu(compute_p_high) against Theta_c over a
/// random parameter grid.
CheckRow check_p_high_inversion(const LemmaCheckOptions& opt);

/// compute_p_low against the bisection root of outage_mg = Theta_g.
CheckRow check_p_low_bisection(const LemmaCheckOptions& opt);

/// laplace_l0 against a long double evaluation.
CheckRow check_l0_precision();

std::vector<CheckRow> run_lemma_checks(const LemmaCheckOptions& opt);

std::string render_check_table(const std::vector<CheckRow>& rows);

}  // namespace mgca::cli

#endif  // MGCA_SRC_LEMMA_CHECKS_HPP
