// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "mgca/harness.hpp"
#include "mgca/trends.hpp"

using namespace mgca;

namespace {

const char* kSmallConfig = R"(# small sweep
sweep_variable = D
sweep_values = 20, 60
schemes = optimal, equal, musca, fixed_equal:1
n_scenarios = 12
num_groups = 5
receiver_density_per_m2 = 2e-4
assoc_min_rx_power_dbm = -40
group_density_per_channel = 3e-7
mg_sir_threshold_db = 10
master_seed = 77
)";

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("mgca_test_" + name);
}

}  // namespace

TEST(Config, ParsesKeysAndDefaults)
{
    const auto c = parse_config_text(kSmallConfig);
    EXPECT_EQ(c.sweep_variable, SweepVariable::D);
    EXPECT_EQ(c.sweep_values, (std::vector<double>{20, 60}));
    ASSERT_EQ(c.schemes.size(), 4U);
    EXPECT_EQ(c.schemes[0].name, "optimal");
    EXPECT_EQ(c.schemes[2].method, AssignmentMethod::musca);
    EXPECT_EQ(c.schemes[3].selection.n, 1);
    EXPECT_EQ(c.n_scenarios, 12);
    EXPECT_EQ(c.base.num_groups, 5);
    EXPECT_EQ(c.base.master_seed, 77U);
    EXPECT_EQ(c.parallelism, 1);
    EXPECT_EQ(c.output_path, "results.csv");
    EXPECT_FALSE(c.record_timing);
}

TEST(Config, RenderRoundTrips)
{
    auto c = parse_config_text(std::string(kSmallConfig) +
                               "power_policy = grid:4\nthroughput_mode = analytic_per_network\n"
                               "cu_min_rate_bps_per_hz = 2.5\nrecord_timing = true\n");
    EXPECT_EQ(c.schemes[1].power, PowerPolicy::grid(4));
    EXPECT_EQ(c.schemes[1].mode, ThroughputMode::analytic_per_network);
    EXPECT_NEAR(c.base.cu_sir_threshold(), std::pow(2.0, 2.5) - 1.0, 1e-12);
    const auto again = parse_config_text(render_config(c));
    EXPECT_EQ(again, c);
}

TEST(Config, ErrorsNameTheProblem)
{
    auto message = [](const std::string& text) -> std::string {
        try {
            parse_config_text(text);
        } catch (const ConfigError& e) {
            return e.what();
        }
        return "";
    };
    const std::string base = "sweep_variable = D\nsweep_values = 1\nschemes = optimal\n";
    EXPECT_NE(message("").find("sweep_variable, sweep_values, schemes"), std::string::npos);
    EXPECT_NE(message("sweep_variable = D\n").find("sweep_values"), std::string::npos);
    EXPECT_NE(message(base + "bogus = 1\n").find("bogus"), std::string::npos);
    EXPECT_NE(message(base + "n_scenarios = 1\nn_scenarios = 2\n").find("duplicate"), std::string::npos);
    EXPECT_NE(message(base + "cell_radius_m = abc\n").find("cell_radius_m"), std::string::npos);
    EXPECT_NE(message("sweep_variable = Q\nsweep_values = 1\nschemes = optimal\n").find("Q"),
              std::string::npos);
    EXPECT_NE(message("sweep_variable = D\nsweep_values = 2, 1\nschemes = optimal\n").find("ascending"),
              std::string::npos);
    EXPECT_NE(message("sweep_variable = D\nsweep_values = 1\nschemes = best\n").find("best"),
              std::string::npos);
    EXPECT_NE(message(base + "power_policy = grid:0\n").find("grid"), std::string::npos);
    EXPECT_NE(message(base + "no equals sign\n").find("line 4"), std::string::npos);
    EXPECT_THROW(parse_config_text(base + "cell_radius_m = -5\n"), ParameterError);
    EXPECT_THROW(parse_config_file("/nonexistent/mgca.cfg"), IoError);
}

TEST(Sweep, AppliesEachVariable)
{
    ExperimentConfig c;
    c.schemes = {SchemeConfig::optimal(), SchemeConfig::fixed_equal(1), SchemeConfig::fixed_musca(1)};
    c.sweep_values = {1};
    c.sweep_variable = SweepVariable::D;
    EXPECT_EQ(apply_sweep(c, 75).params.exclusion_radius_m, 75);
    c.sweep_variable = SweepVariable::R;
    EXPECT_EQ(apply_sweep(c, 300).params.cell_radius_m, 300);
    c.sweep_variable = SweepVariable::R_c_min;
    EXPECT_NEAR(apply_sweep(c, 1).params.cu_sir_threshold(), 1.0, 1e-12);
    c.sweep_variable = SweepVariable::P_G;
    EXPECT_EQ(apply_sweep(c, 20).params.max_mg_power_dbm, 20);
    c.sweep_variable = SweepVariable::lambda_g;
    EXPECT_EQ(apply_sweep(c, 5e-5).params.receiver_density_per_m2, 5e-5);
    c.sweep_variable = SweepVariable::n_per_channel;
    const auto s = apply_sweep(c, 2);
    EXPECT_EQ(s.params.num_groups, 6);
    EXPECT_EQ(s.schemes[0].name, "optimal");
    EXPECT_EQ(s.schemes[1].name, "fixed_equal:2");
    EXPECT_EQ(s.schemes[1].selection.n, 2);
    EXPECT_EQ(s.schemes[2].name, "fixed_musca:2");
    EXPECT_EQ(s.schemes[2].method, AssignmentMethod::musca);
    EXPECT_THROW(apply_sweep(c, 1.5), ConfigError);
}

TEST(Experiment, DeterministicAcrossThreadCounts)
{
    auto c = parse_config_text(kSmallConfig);
    c.parallelism = 1;
    const auto one = render_csv(run_experiment(c));
    c.parallelism = 8;
    const auto eight = render_csv(run_experiment(c));
    EXPECT_EQ(one, eight);
    c.parallelism = 3;
    EXPECT_EQ(render_csv(run_experiment(c)), one);
}

TEST(Experiment, RowsAreConsistent)
{
    const auto c = parse_config_text(kSmallConfig);
    const auto points = simulate(c);
    const auto rows = summarize(c, points);
    ASSERT_EQ(rows.size(), 2U * 4U);
    for (const auto& r : rows) {
        EXPECT_EQ(r.n_valid + r.n_degenerate, 12);
        EXPECT_EQ(r.wall_ms, 0.0);
        EXPECT_GE(r.std_dev, 0.0);
    }
    // mean recomputed by hand for the first row
    double sum = 0.0;
    int n = 0;
    for (const auto& s : points[0].scenarios) {
        if (!s.degenerate) {
            sum += s.throughput[0];
            ++n;
        }
    }
    ASSERT_GT(n, 0);
    EXPECT_DOUBLE_EQ(rows[0].mean_throughput, sum / n);
    for (std::size_t i = 0; i < rows.size(); i += 4) {
        EXPECT_GE(rows[i].mean_throughput, rows[i + 1].mean_throughput - 1e-12);
        EXPECT_GE(rows[i].mean_throughput, rows[i + 2].mean_throughput - 1e-12);
    }
}

TEST(Experiment, ScenarioSeedsFollowTheDerivation)
{
    const auto c = parse_config_text(kSmallConfig);
    const auto points = simulate(c);
    const auto setup = apply_sweep(c, c.sweep_values[1]);
    const auto direct = run_scenario(setup, derive_seed(77, {1, 5}), false);
    EXPECT_EQ(direct.degenerate, points[1].scenarios[5].degenerate);
    EXPECT_EQ(direct.throughput, points[1].scenarios[5].throughput);
}

TEST(Experiment, TimingOnlyWhenRequested)
{
    auto c = parse_config_text(kSmallConfig);
    c.record_timing = true;
    c.n_scenarios = 3;
    double total = 0.0;
    for (const auto& r : run_experiment(c)) {
        total += r.wall_ms;
    }
    EXPECT_GT(total, 0.0);
}

TEST(Experiment, DegenerateScenariosAreCountedNotAveraged)
{
    auto c = parse_config_text(kSmallConfig);
    c.base.receiver_density_per_m2 = 0.0;
    c.n_scenarios = 4;
    for (const auto& r : run_experiment(c)) {
        EXPECT_EQ(r.n_degenerate, 4);
        EXPECT_EQ(r.n_valid, 0);
        EXPECT_EQ(r.mean_throughput, 0.0);
    }
}

TEST(Experiment, GuardErrorPropagates)
{
    auto c = parse_config_text(kSmallConfig);
    c.base.num_groups = 12;
    c.base.receiver_density_per_m2 = 1e-3;
    c.base.assoc_min_rx_power_dbm = -60;
    c.n_scenarios = 2;
    EXPECT_THROW(run_experiment(c), SearchGuardError);
}

TEST(Histogram, CountsSumToValidScenarios)
{
    const auto c = parse_config_text(kSmallConfig);
    const auto hist = winning_combination_histogram(c);
    const auto rows = run_experiment(c);
    ASSERT_EQ(hist.size(), 2U);
    for (std::size_t i = 0; i < hist.size(); ++i) {
        int total = 0;
        for (const auto& [sizes, count] : hist[i]) {
            EXPECT_EQ(sizes.size(), 3U);
            EXPECT_TRUE(std::is_sorted(sizes.rbegin(), sizes.rend()));
            total += count;
        }
        EXPECT_EQ(total, rows[i * 4].n_valid);
    }
}

TEST(Csv, HeaderAndFormatting)
{
    ResultRow r;
    r.sweep_variable = SweepVariable::P_G;
    r.sweep_value = 23.0;
    r.scheme_name = "equal";
    r.mean_throughput = 61.234567891;
    r.std_dev = 2.5;
    r.n_degenerate = 3;
    const auto text = render_csv({r});
    EXPECT_EQ(text, std::string(kCsvHeader) + "\nP_G,23,equal,61.2346,2.5,3,0\n");
    const auto path = temp_path("rows.csv");
    write_csv({r}, path.string());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), text);
    std::filesystem::remove(path);
    EXPECT_THROW(write_csv({r}, "/nonexistent/dir/out.csv"), IoError);
}

TEST(DbGap, Values)
{
    EXPECT_NEAR(db_gap(100.0, 10.0), 10.0, 1e-12);
    EXPECT_NEAR(db_gap(2.0, 1.0), 3.0103, 1e-4);
    EXPECT_THROW(db_gap(0.0, 1.0), ParameterError);
}

TEST(Trends, InteriorPeak)
{
    EXPECT_TRUE(single_interior_peak({1, 3, 5, 4, 2}, {0.1, 0.1, 0.1, 0.1, 0.1}).pass);
    EXPECT_FALSE(single_interior_peak({1, 2, 3, 4, 5}, {0.1, 0.1, 0.1, 0.1, 0.1}).pass);
    EXPECT_FALSE(single_interior_peak({5, 5, 5, 5, 5}, {0.1, 0.1, 0.1, 0.1, 0.1}).pass);
    EXPECT_FALSE(single_interior_peak({1, 5, 1, 5, 1}, {0.1, 0.1, 0.1, 0.1, 0.1}).pass);
    // a dip inside the noise does not break the shape
    EXPECT_TRUE(single_interior_peak({1, 3, 2.9, 5, 2}, {0.1, 0.1, 0.1, 0.1, 0.1}).pass);
    EXPECT_EQ(single_interior_peak({1, 3, 5, 4, 2}, {0.1, 0.1, 0.1, 0.1, 0.1}).peak_index, 2U);
}

TEST(Trends, IncreasingThenSaturating)
{
    EXPECT_TRUE(increasing_then_saturating({1, 5, 8, 9, 9.2, 9.3}, std::vector<double>(6, 0.1)).pass);
    EXPECT_FALSE(increasing_then_saturating({1, 2, 3, 4, 5, 6}, std::vector<double>(6, 0.1)).pass);
    EXPECT_FALSE(increasing_then_saturating({5, 4, 3, 2, 1, 0}, std::vector<double>(6, 0.1)).pass);
    EXPECT_FALSE(increasing_then_saturating({1, 1, 1, 1, 1, 1}, std::vector<double>(6, 0.1)).pass);
}

TEST(Cli, CountCommandPrintsCounts)
{
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cli::count_command(7, 3, "all", out, err), 0);
    EXPECT_NE(out.str().find("1841"), std::string::npos);
    EXPECT_NE(out.str().find("1701"), std::string::npos);
    std::ostringstream out2;
    EXPECT_NE(cli::count_command(2, 3, "all", out2, err), 0);
    EXPECT_THROW(cli::parse_selection("most"), std::exception);
    EXPECT_EQ(cli::parse_selection("fixed:2").n, 2);
}

TEST(Cli, RunCommandWritesCsvAndOverrides)
{
    const auto cfg = temp_path("run.cfg");
    const auto csv = temp_path("run.csv");
    {
        std::ofstream f(cfg);
        f << kSmallConfig;
    }
    cli::RunOptions opt;
    opt.config_path = cfg.string();
    opt.out_path = csv.string();
    opt.scenarios = 3;
    opt.parallel = 2;
    std::ostringstream out;
    std::ostringstream err;
    EXPECT_EQ(cli::run_command(opt, out, err), 0) << err.str();
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, kCsvHeader);
    int lines = 0;
    for (std::string l; std::getline(in, l);) {
        ++lines;
    }
    EXPECT_EQ(lines, 8);
    opt.config_path = "/nonexistent.cfg";
    EXPECT_NE(cli::run_command(opt, out, err), 0);
    std::filesystem::remove(cfg);
    std::filesystem::remove(csv);
}
