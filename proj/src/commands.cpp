// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <cstdio>
#include <exception>
#include <ostream>

#include "mgca/harness.hpp"

namespace mgca::cli {

int run_command(const RunOptions& opt, std::ostream& out, std::ostream& err)
{
    try {
        ExperimentConfig cfg = parse_config_file(opt.config_path);
        if (opt.seed) {
            cfg.base.master_seed = *opt.seed;
        }
        if (opt.out_path) {
            cfg.output_path = *opt.out_path;
        }
        if (opt.parallel) {
            cfg.parallelism = *opt.parallel;
        }
        if (opt.scenarios) {
            cfg.n_scenarios = *opt.scenarios;
        }
        if (opt.allow_large) {
            cfg.allow_large_search = true;
            for (auto& s : cfg.schemes) {
                s.guard.allow_large = true;
            }
        }
        cfg.validate();
        const auto rows = run_experiment(cfg);
        write_csv(rows, cfg.output_path);
        out << "wrote " << rows.size() << " rows to " << cfg.output_path << "\n";
        for (const auto& r : rows) {
            if (r.scheme_name == rows.front().scheme_name || r.mean_throughput <= 0.0) {
                continue;
            }
            for (const auto& ref : rows) {
                if (ref.sweep_value == r.sweep_value && ref.scheme_name == rows.front().scheme_name &&
                    ref.mean_throughput > 0.0) {
                    char buf[160];
                    std::snprintf(buf, sizeof buf, "  %s=%g: %s vs %s gap %.3f dB\n",
                                  to_string(r.sweep_variable).c_str(), r.sweep_value,
                                  ref.scheme_name.c_str(), r.scheme_name.c_str(),
                                  db_gap(ref.mean_throughput, r.mean_throughput));
                    out << buf;
                }
            }
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

Selection parse_selection(const std::string& mode)
{
    if (mode == "all") {
        return Selection::all();
    }
    if (mode == "almost_equal") {
        return Selection::almost_equal();
    }
    if (mode == "equal") {
        return Selection::equal();
    }
    if (mode.rfind("fixed:", 0) == 0) {
        return Selection::fixed(std::stoi(mode.substr(6)));
    }
    throw ParameterError("unknown mode '" + mode + "' (expected all, almost_equal, equal, fixed:N)");
}

int count_command(int num_groups, int num_channels, const std::string& mode, std::ostream& out,
                  std::ostream& err)
{
    try {
        const Selection sel = parse_selection(mode);
        out << "G=" << num_groups << " C=" << num_channels << " mode=" << to_string(sel) << "\n";
        const auto vectors = enumerate_size_vectors(num_groups, num_channels, sel);
        out << "size vectors (" << vectors.size() << "):";
        for (const auto& v : vectors) {
            out << " " << to_string(v);
        }
        out << "\n";
        out << "paper_count: " << paper_count(num_groups, num_channels, sel) << "\n";
        if (sel.kind == Selection::Kind::all) {
            out << "paper_count by subset total q:";
            for (const auto& [q, n] : paper_count_by_q(num_groups, num_channels, sel)) {
                out << " q=" << q << ":" << n;
            }
            out << "\n";
        }
        out << "exact_count: " << exact_count(num_groups, num_channels, sel) << "\n";
        out << "allocation_search_space: " << allocation_search_space(num_groups, num_channels, sel)
            << "\n";
        out << "complexity_lower_bound: " << complexity_lower_bound(num_groups, num_channels) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int validate_lemmas_command(const LemmaCheckOptions& opt, std::ostream& out)
{
    const auto rows = run_lemma_checks(opt);
    out << render_check_table(rows);
    bool ok = true;
    for (const auto& r : rows) {
        ok = ok && r.pass;
    }
    return ok ? 0 : 2;
}

}  // namespace mgca::cli
