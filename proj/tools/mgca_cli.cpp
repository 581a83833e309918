// SPDX-License-Identifier: Apache-2.0
//
// mgca: run channel-allocation experiments, count subset families and check
// the closed-form outage expressions.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Channel allocation for multicast groups underlaying cellular uplinks"};
    app.require_subcommand(1);

    mgca::cli::RunOptions run;
    std::uint64_t seed = 0;
    std::string out_path;
    int parallel = 0;
    int scenarios = 0;
    auto* run_cmd = app.add_subcommand("run", "Run a parameter sweep and write a CSV");
    run_cmd->add_option("--config", run.config_path, "Experiment config file")->required()->check(CLI::ExistingFile);
    auto* seed_opt = run_cmd->add_option("--seed", seed, "Master seed override");
    auto* out_opt = run_cmd->add_option("--out", out_path, "CSV output path override");
    auto* par_opt = run_cmd->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);
    auto* scen_opt = run_cmd->add_option("--scenarios", scenarios, "Scenarios per sweep value")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--allow-large", run.allow_large, "Permit exhaustive search beyond G=10, C=5");

    int groups = 7;
    int channels = 3;
    std::string mode = "all";
    auto* count_cmd = app.add_subcommand("count", "Count subset families");
    count_cmd->add_option("G", groups, "Number of multicast groups")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("C", channels, "Number of channels")->required()->check(CLI::PositiveNumber);
    count_cmd->add_option("mode", mode, "all | almost_equal | equal | fixed:N");

    mgca::cli::LemmaCheckOptions lemma;
    auto* lemma_cmd = app.add_subcommand("validate-lemmas", "Compare closed forms with reference computations");
    lemma_cmd->add_option("--trials", lemma.mc_trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
    lemma_cmd->add_option("--seed", lemma.seed, "Monte Carlo seed");

    CLI11_PARSE(app, argc, argv);

    if (*run_cmd) {
        if (*seed_opt) {
            run.seed = seed;
        }
        if (*out_opt) {
            run.out_path = out_path;
        }
        if (*par_opt) {
            run.parallel = parallel;
        }
        if (*scen_opt) {
            run.scenarios = scenarios;
        }
        return mgca::cli::run_command(run, std::cout, std::cerr);
    }
    if (*count_cmd) {
        return mgca::cli::count_command(groups, channels, mode, std::cout, std::cerr);
    }
    return mgca::cli::validate_lemmas_command(lemma, std::cout);
}
