// SPDX-License-Identifier: Apache-2.0
//
// Subcommands of the command-line tool.

#ifndef MGCA_SRC_COMMANDS_HPP
#define MGCA_SRC_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lemma_checks.hpp"
#include "mgca/combinatorics.hpp"

namespace mgca::cli {

struct RunOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_path;
    std::optional<int> parallel;
    std::optional<int> scenarios;
    bool allow_large = false;
};

/// Runs the experiment described by the config file and writes its CSV.
int run_command(const RunOptions& opt, std::ostream& out, std::ostream& err);

/// Accepts all, almost_equal, equal or fixed:N.
Selection parse_selection(const std::string& mode);

/// Prints subset-family counts for G groups on C channels.
int count_command(int num_groups, int num_channels, const std::string& mode, std::ostream& out,
                  std::ostream& err);

/// Prints the closed-form check table; returns 0 when every row passes.
int validate_lemmas_command(const LemmaCheckOptions& opt, std::ostream& out);

}  // namespace mgca::cli

#endif  // MGCA_SRC_COMMANDS_HPP
