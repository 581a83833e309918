// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo experiment driver: configuration text format, parameter sweeps,
// deterministic parallel evaluation and CSV output.
//
// Configuration is line oriented `key = value`; `#` starts a comment. Keys:
//
//   sweep_variable   D | R | R_c_min | P_G | lambda_g | n_per_channel  (required)
//   sweep_values     comma separated, ascending                        (required)
//   schemes          comma separated scheme names                      (required)
//                    optimal, almost_equal, equal, fixed_equal:N, musca, fixed_musca:N
//   n_scenarios      default 500
//   parallelism      worker threads, default 1
//   output_path      CSV destination, default results.csv
//   power_policy     max_feasible | grid:K
//   throughput_mode  instantaneous | analytic_per_area | analytic_per_network
//   allow_large_search  true | false
//   record_timing    true | false; when false wall_ms is written as 0
//   any SimParams field by name, e.g. cell_radius_m = 500
//
// Sweep semantics: D sets exclusion_radius_m, R sets cell_radius_m, R_c_min
// sets the CU rate floor and its SIR threshold, P_G sets max_mg_power_dbm,
// lambda_g sets receiver_density_per_m2, n_per_channel sets num_groups to
// n*C and the subset size of every fixed scheme to n.
//
// Scenario j of sweep point i is generated from
// derive_seed(master_seed, {i, j}); its fading from the scenario seed.

#ifndef MGCA_HARNESS_HPP
#define MGCA_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "allocation.hpp"
#include "combinatorics.hpp"
#include "geometry.hpp"
#include "params.hpp"
#include "power.hpp"
#include "radio.hpp"
#include "rng.hpp"

namespace mgca {

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SweepVariable { D, R, R_c_min, P_G, lambda_g, n_per_channel };

inline std::string to_string(SweepVariable v)
{
    switch (v) {
    case SweepVariable::D: return "D";
    case SweepVariable::R: return "R";
    case SweepVariable::R_c_min: return "R_c_min";
    case SweepVariable::P_G: return "P_G";
    case SweepVariable::lambda_g: return "lambda_g";
    case SweepVariable::n_per_channel: return "n_per_channel";
    }
    return "?";
}

struct ExperimentConfig {
    SimParams base;
    SweepVariable sweep_variable = SweepVariable::D;
    std::vector<double> sweep_values;
    std::vector<SchemeConfig> schemes;
    int n_scenarios = 500;
    std::string output_path = "results.csv";
    int parallelism = 1;
    PowerPolicy power = PowerPolicy::max_feasible();
    ThroughputMode mode = ThroughputMode::instantaneous;
    bool allow_large_search = false;
    bool record_timing = false;

    void validate() const
    {
        base.validate();
        if (sweep_values.empty()) {
            throw ConfigError("sweep_values must not be empty");
        }
        if (!std::is_sorted(sweep_values.begin(), sweep_values.end())) {
            throw ConfigError("sweep_values must be sorted ascending");
        }
        if (schemes.empty()) {
            throw ConfigError("schemes must not be empty");
        }
        if (n_scenarios < 1) {
            throw ConfigError("n_scenarios must be >= 1");
        }
        if (parallelism < 1) {
            throw ConfigError("parallelism must be >= 1");
        }
    }

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// --------------------------------------------------------------------------
// Text format

namespace detail {

inline std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

inline std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

inline double parse_double(const std::string& key, const std::string& v)
{
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(x)) {
        throw ConfigError("malformed number for '" + key + "': '" + v + "'");
    }
    return x;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& v)
{
    Int x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError("malformed integer for '" + key + "': '" + v + "'");
    }
    return x;
}

inline bool parse_bool(const std::string& key, const std::string& v)
{
    if (v == "true" || v == "1") {
        return true;
    }
    if (v == "false" || v == "0") {
        return false;
    }
    throw ConfigError("malformed boolean for '" + key + "': '" + v + "'");
}

inline std::string format_exact(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string format_6g(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace detail

inline SweepVariable parse_sweep_variable(const std::string& v)
{
    for (auto s : {SweepVariable::D, SweepVariable::R, SweepVariable::R_c_min, SweepVariable::P_G,
                   SweepVariable::lambda_g, SweepVariable::n_per_channel}) {
        if (to_string(s) == v) {
            return s;
        }
    }
    throw ConfigError("unknown sweep_variable '" + v +
                      "' (expected D, R, R_c_min, P_G, lambda_g, n_per_channel)");
}

inline PowerPolicy parse_power_policy(const std::string& v)
{
    if (v == "max_feasible") {
        return PowerPolicy::max_feasible();
    }
    if (v.rfind("grid:", 0) == 0) {
        const int k = detail::parse_int<int>("power_policy", v.substr(5));
        if (k < 1) {
            throw ConfigError("power_policy grid size must be >= 1");
        }
        return PowerPolicy::grid(k);
    }
    throw ConfigError("unknown power_policy '" + v + "' (expected max_feasible or grid:K)");
}

inline std::string to_string(const PowerPolicy& p)
{
    return p.kind == PowerPolicy::Kind::max_feasible ? "max_feasible"
                                                     : "grid:" + std::to_string(p.grid_points);
}

inline ThroughputMode parse_throughput_mode(const std::string& v)
{
    if (v == "instantaneous") {
        return ThroughputMode::instantaneous;
    }
    if (v == "analytic_per_area") {
        return ThroughputMode::analytic_per_area;
    }
    if (v == "analytic_per_network") {
        return ThroughputMode::analytic_per_network;
    }
    throw ConfigError("unknown throughput_mode '" + v + "'");
}

inline std::string to_string(ThroughputMode m)
{
    switch (m) {
    case ThroughputMode::instantaneous: return "instantaneous";
    case ThroughputMode::analytic_per_area: return "analytic_per_area";
    case ThroughputMode::analytic_per_network: return "analytic_per_network";
    }
    return "?";
}

/// Scheme from its configuration name; policy, mode and guard left default.
inline SchemeConfig parse_scheme(const std::string& v)
{
    auto fixed_n = [&](std::string_view prefix) {
        const int n = detail::parse_int<int>("schemes", v.substr(prefix.size()));
        if (n < 1) {
            throw ConfigError("scheme '" + v + "': subset size must be >= 1");
        }
        return n;
    };
    if (v == "optimal") {
        return SchemeConfig::optimal();
    }
    if (v == "almost_equal") {
        return SchemeConfig::almost_equal();
    }
    if (v == "equal") {
        return SchemeConfig::equal();
    }
    if (v == "musca") {
        return SchemeConfig::musca();
    }
    if (v.rfind("fixed_equal:", 0) == 0) {
        return SchemeConfig::fixed_equal(fixed_n("fixed_equal:"));
    }
    if (v.rfind("fixed_musca:", 0) == 0) {
        return SchemeConfig::fixed_musca(fixed_n("fixed_musca:"));
    }
    throw ConfigError("unknown scheme '" + v +
                      "' (expected optimal, almost_equal, equal, fixed_equal:N, musca, fixed_musca:N)");
}

namespace detail {

struct ParamField {
    const char* key;
    double SimParams::*real;
    int SimParams::*integer;
};

inline const std::vector<ParamField>& param_fields()
{
    static const std::vector<ParamField> fields = {
        {"cell_radius_m", &SimParams::cell_radius_m, nullptr},
        {"exclusion_radius_m", &SimParams::exclusion_radius_m, nullptr},
        {"num_channels", nullptr, &SimParams::num_channels},
        {"num_groups", nullptr, &SimParams::num_groups},
        {"receiver_density_per_m2", &SimParams::receiver_density_per_m2, nullptr},
        {"group_density_per_channel", &SimParams::group_density_per_channel, nullptr},
        {"cu_density_per_channel", &SimParams::cu_density_per_channel, nullptr},
        {"max_cu_power_dbm", &SimParams::max_cu_power_dbm, nullptr},
        {"max_mg_power_dbm", &SimParams::max_mg_power_dbm, nullptr},
        {"cu_sir_threshold_db", &SimParams::cu_sir_threshold_db, nullptr},
        {"mg_sir_threshold_db", &SimParams::mg_sir_threshold_db, nullptr},
        {"cu_outage_threshold", &SimParams::cu_outage_threshold, nullptr},
        {"mg_outage_threshold", &SimParams::mg_outage_threshold, nullptr},
        {"cu_min_rate_bps_per_hz", &SimParams::cu_min_rate_bps_per_hz, nullptr},
        {"path_loss_exponent", &SimParams::path_loss_exponent, nullptr},
        {"bandwidth_hz", &SimParams::bandwidth_hz, nullptr},
        {"assoc_min_rx_power_dbm", &SimParams::assoc_min_rx_power_dbm, nullptr},
    };
    return fields;
}

inline void apply_global_scheme_settings(ExperimentConfig& c)
{
    for (auto& s : c.schemes) {
        s.power = c.power;
        s.mode = c.mode;
        s.guard.allow_large = c.allow_large_search;
    }
}

}  // namespace detail

inline constexpr const char* kRequiredKeys = "sweep_variable, sweep_values, schemes";

/// Parses configuration text. Unknown keys, malformed values and missing
/// required keys are errors naming the offending key.
inline ExperimentConfig parse_config_text(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        }
        if (!kv.emplace(key, value).second) {
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
    }

    std::vector<std::string> missing;
    for (const char* k : {"sweep_variable", "sweep_values", "schemes"}) {
        if (!kv.contains(k)) {
            missing.emplace_back(k);
        }
    }
    if (!missing.empty()) {
        std::string msg = "missing required key(s):";
        for (const auto& m : missing) {
            msg += " " + m;
        }
        msg += std::string(" (required: ") + kRequiredKeys + ")";
        throw ConfigError(msg);
    }

    ExperimentConfig c;
    std::set<std::string> used;
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) {
            return std::nullopt;
        }
        used.insert(key);
        return it->second;
    };

    c.sweep_variable = parse_sweep_variable(*take("sweep_variable"));
    for (const auto& v : detail::split_list(*take("sweep_values"))) {
        c.sweep_values.push_back(detail::parse_double("sweep_values", v));
    }
    for (const auto& v : detail::split_list(*take("schemes"))) {
        c.schemes.push_back(parse_scheme(v));
    }
    if (auto v = take("n_scenarios")) {
        c.n_scenarios = detail::parse_int<int>("n_scenarios", *v);
    }
    if (auto v = take("parallelism")) {
        c.parallelism = detail::parse_int<int>("parallelism", *v);
    }
    if (auto v = take("output_path")) {
        c.output_path = *v;
    }
    if (auto v = take("power_policy")) {
        c.power = parse_power_policy(*v);
    }
    if (auto v = take("throughput_mode")) {
        c.mode = parse_throughput_mode(*v);
    }
    if (auto v = take("allow_large_search")) {
        c.allow_large_search = detail::parse_bool("allow_large_search", *v);
    }
    if (auto v = take("record_timing")) {
        c.record_timing = detail::parse_bool("record_timing", *v);
    }
    if (auto v = take("master_seed")) {
        c.base.master_seed = detail::parse_int<std::uint64_t>("master_seed", *v);
    }
    if (auto v = take("cu_min_rate_bps_per_hz")) {
        c.base.set_cu_min_rate(detail::parse_double("cu_min_rate_bps_per_hz", *v));
    }
    for (const auto& f : detail::param_fields()) {
        if (std::string_view(f.key) == "cu_min_rate_bps_per_hz") {
            continue;
        }
        if (auto v = take(f.key)) {
            if (f.real) {
                c.base.*f.real = detail::parse_double(f.key, *v);
            } else {
                c.base.*f.integer = detail::parse_int<int>(f.key, *v);
            }
        }
    }
    for (const auto& [key, value] : kv) {
        if (!used.contains(key)) {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    detail::apply_global_scheme_settings(c);
    c.validate();
    return c;
}

inline ExperimentConfig parse_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

/// Renders every key so that parse_config_text(render_config(c)) == c.
inline std::string render_config(const ExperimentConfig& c)
{
    std::string out;
    auto line = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
    line("sweep_variable", to_string(c.sweep_variable));
    std::string values;
    for (std::size_t i = 0; i < c.sweep_values.size(); ++i) {
        values += (i ? ", " : "") + detail::format_exact(c.sweep_values[i]);
    }
    line("sweep_values", values);
    std::string schemes;
    for (std::size_t i = 0; i < c.schemes.size(); ++i) {
        schemes += (i ? ", " : "") + c.schemes[i].name;
    }
    line("schemes", schemes);
    line("n_scenarios", std::to_string(c.n_scenarios));
    line("parallelism", std::to_string(c.parallelism));
    line("output_path", c.output_path);
    line("power_policy", to_string(c.power));
    line("throughput_mode", to_string(c.mode));
    line("allow_large_search", c.allow_large_search ? "true" : "false");
    line("record_timing", c.record_timing ? "true" : "false");
    line("master_seed", std::to_string(c.base.master_seed));
    for (const auto& f : detail::param_fields()) {
        line(f.key, f.real ? detail::format_exact(c.base.*f.real) : std::to_string(c.base.*f.integer));
    }
    return out;
}

// --------------------------------------------------------------------------
// Simulation

/// Parameters and schemes in force at one sweep value.
struct SweepPointSetup {
    SimParams params;
    std::vector<SchemeConfig> schemes;
};

inline SweepPointSetup apply_sweep(const ExperimentConfig& c, double value)
{
    SweepPointSetup s{c.base, c.schemes};
    switch (c.sweep_variable) {
    case SweepVariable::D: s.params.exclusion_radius_m = value; break;
    case SweepVariable::R: s.params.cell_radius_m = value; break;
    case SweepVariable::R_c_min: s.params.set_cu_min_rate(value); break;
    case SweepVariable::P_G: s.params.max_mg_power_dbm = value; break;
    case SweepVariable::lambda_g: s.params.receiver_density_per_m2 = value; break;
    case SweepVariable::n_per_channel: {
        const int n = static_cast<int>(std::lround(value));
        if (n < 1 || static_cast<double>(n) != value) {
            throw ConfigError("n_per_channel sweep values must be positive integers");
        }
        s.params.num_groups = n * s.params.num_channels;
        for (auto& sc : s.schemes) {
            if (sc.selection.kind == Selection::Kind::fixed) {
                const bool musca = sc.method == AssignmentMethod::musca;
                SchemeConfig fresh = musca ? SchemeConfig::fixed_musca(n) : SchemeConfig::fixed_equal(n);
                fresh.power = sc.power;
                fresh.mode = sc.mode;
                fresh.guard = sc.guard;
                sc = fresh;
            }
        }
        break;
    }
    }
    s.params.validate();
    return s;
}

/// Sizes of the groups actually on the air per channel, sorted descending
/// (zeros for channels left to their CU).
inline SizeVector used_sizes(const AllocationResult& r)
{
    SizeVector v;
    for (const auto& groups : r.assignment.channel_to_groups) {
        int n = 0;
        for (int g : groups) {
            if (!r.powers.muted[static_cast<std::size_t>(g)] &&
                r.powers.mg_power_w[static_cast<std::size_t>(g)] > 0.0) {
                ++n;
            }
        }
        v.push_back(n);
    }
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

struct ScenarioOutcome {
    bool degenerate = false;
    std::vector<double> throughput;  ///< per scheme
    std::vector<SizeVector> sizes;   ///< per scheme, see used_sizes
    std::vector<double> elapsed_ms;  ///< per scheme, 0 unless timed
};

struct SweepPointOutcome {
    double value = 0.0;
    SweepPointSetup setup;
    std::vector<ScenarioOutcome> scenarios;
};

inline ScenarioOutcome run_scenario(const SweepPointSetup& setup, std::uint64_t seed, bool timed)
{
    ScenarioOutcome out;
    const NetworkScenario s = generate_scenario_from_seed(setup.params, seed);
    if (s.degenerate || s.groups.empty()) {
        out.degenerate = true;
        return out;
    }
    const FadingRealization f = FadingRealization::draw(s);
    for (const auto& scheme : setup.schemes) {
        const auto t0 = std::chrono::steady_clock::now();
        AllocationResult r;
        try {
            r = allocate(s, f, scheme);
        } catch (const SearchGuardError&) {
            throw;
        } catch (const ParameterError&) {
            out.degenerate = true;
            out.throughput.clear();
            out.sizes.clear();
            out.elapsed_ms.clear();
            return out;
        }
        const auto t1 = std::chrono::steady_clock::now();
        out.throughput.push_back(r.throughput);
        out.sizes.push_back(used_sizes(r));
        out.elapsed_ms.push_back(timed ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                                       : 0.0);
    }
    return out;
}

/// Evaluates every (sweep value, scenario) pair on `config.parallelism`
/// workers. Each task writes only its own slot, so the result does not
/// depend on scheduling.
inline std::vector<SweepPointOutcome> simulate(const ExperimentConfig& config)
{
    config.validate();
    std::vector<SweepPointOutcome> points(config.sweep_values.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i].value = config.sweep_values[i];
        points[i].setup = apply_sweep(config, config.sweep_values[i]);
        points[i].scenarios.resize(static_cast<std::size_t>(config.n_scenarios));
    }
    const std::size_t per_point = static_cast<std::size_t>(config.n_scenarios);
    const std::size_t total = points.size() * per_point;
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) {
                return;
            }
            const std::size_t i = task / per_point;
            const std::size_t j = task % per_point;
            try {
                const std::uint64_t seed = derive_seed(config.base.master_seed, {i, j});
                points[i].scenarios[j] = run_scenario(points[i].setup, seed, config.record_timing);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(total);
                return;
            }
        }
    };

    const int threads = std::max(1, std::min<int>(config.parallelism, static_cast<int>(total)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return points;
}

struct ResultRow {
    SweepVariable sweep_variable = SweepVariable::D;
    double sweep_value = 0.0;
    std::string scheme_name;
    double mean_throughput = 0.0;
    double std_dev = 0.0;  ///< sample standard deviation over valid scenarios
    int n_degenerate = 0;
    int n_valid = 0;
    double wall_ms = 0.0;

    double std_error() const { return n_valid > 0 ? std_dev / std::sqrt(n_valid) : 0.0; }
};

/// Per (sweep value, scheme) mean and spread, reduced in scenario order.
inline std::vector<ResultRow> summarize(const ExperimentConfig& config,
                                        const std::vector<SweepPointOutcome>& points)
{
    std::vector<ResultRow> rows;
    for (const auto& p : points) {
        for (std::size_t k = 0; k < p.setup.schemes.size(); ++k) {
            ResultRow row;
            row.sweep_variable = config.sweep_variable;
            row.sweep_value = p.value;
            row.scheme_name = p.setup.schemes[k].name;
            double sum = 0.0;
            for (const auto& s : p.scenarios) {
                if (s.degenerate) {
                    ++row.n_degenerate;
                    continue;
                }
                ++row.n_valid;
                sum += s.throughput[k];
                row.wall_ms += s.elapsed_ms[k];
            }
            if (row.n_valid > 0) {
                row.mean_throughput = sum / row.n_valid;
                double ss = 0.0;
                for (const auto& s : p.scenarios) {
                    if (!s.degenerate) {
                        const double d = s.throughput[k] - row.mean_throughput;
                        ss += d * d;
                    }
                }
                row.std_dev = row.n_valid > 1 ? std::sqrt(ss / (row.n_valid - 1)) : 0.0;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

inline std::vector<ResultRow> run_experiment(const ExperimentConfig& config)
{
    return summarize(config, simulate(config));
}

/// Per sweep value, how often each used-size vector is the optimum of the
/// unrestricted search (only the optimal scheme is run).
inline std::vector<std::map<SizeVector, int>> winning_combination_histogram(ExperimentConfig config)
{
    SchemeConfig opt = SchemeConfig::optimal();
    opt.power = config.power;
    opt.mode = config.mode;
    opt.guard.allow_large = config.allow_large_search;
    config.schemes = {opt};
    const auto points = simulate(config);
    std::vector<std::map<SizeVector, int>> out;
    for (const auto& p : points) {
        std::map<SizeVector, int> h;
        for (const auto& s : p.scenarios) {
            if (!s.degenerate) {
                ++h[s.sizes.front()];
            }
        }
        out.push_back(std::move(h));
    }
    return out;
}

/// 10*log10(a/b).
inline double db_gap(double a, double b)
{
    if (!(a > 0.0 && b > 0.0)) {
        throw ParameterError("db_gap: both values must be > 0");
    }
    return 10.0 * std::log10(a / b);
}

inline constexpr const char* kCsvHeader = "sweep_var,sweep_value,scheme,mean_bps_hz,std,degenerate,wall_ms";

inline std::string render_csv(const std::vector<ResultRow>& rows)
{
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += to_string(r.sweep_variable) + "," + detail::format_6g(r.sweep_value) + "," +
               r.scheme_name + "," + detail::format_6g(r.mean_throughput) + "," +
               detail::format_6g(r.std_dev) + "," + std::to_string(r.n_degenerate) + "," +
               detail::format_6g(r.wall_ms) + "\n";
    }
    return out;
}

inline void write_csv(const std::vector<ResultRow>& rows, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + path + "'");
    }
    out << render_csv(rows);
    if (!out) {
        throw IoError("write failed for '" + path + "'");
    }
}

}  // namespace mgca

#endif  // MGCA_HARNESS_HPP
