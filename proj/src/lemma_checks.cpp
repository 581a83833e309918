// SPDX-License-Identifier: Apache-2.0

#include "lemma_checks.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "mgca/outage.hpp"
#include "mgca/params.hpp"
#include "mgca/power.hpp"
#include "mgca/rng.hpp"

namespace mgca::cli {

namespace {

OutageInputs mg_point()
{
    OutageInputs in;
    in.cu_density = 2e-5;
    in.group_density = 2e-5;
    in.cu_power_w = 1.0;
    in.mg_power_w = 1.0;
    in.exclusion_radius_m = 50.0;
    in.link_dist_m = 25.0;
    in.sir_threshold = db_to_linear(25.0);
    return in;
}

OutageInputs cu_point()
{
    OutageInputs in;
    in.group_density = 2e-5;
    in.cu_power_w = 1.0;
    in.mg_power_w = 1.0;
    in.link_dist_m = 200.0;
    in.sir_threshold = db_to_linear(6.0);
    return in;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

CheckRow check_outage_mg_mc(const LemmaCheckOptions& opt)
{
    OutageGeometry g;
    g.link = OutageGeometry::Link::mg_receiver;
    g.inputs = mg_point();
    const auto est = mc_outage(g, opt.mc_trials, opt.seed);
    CheckRow row;
    row.name = "outage_mg vs Monte Carlo";
    row.value = outage_mg(g.inputs);
    row.reference = est.probability;
    row.tolerance = 0.10;
    row.pass = std::abs(row.value - row.reference) <= row.tolerance;
    row.note = "MC 95% half-width " + fmt(est.ci_halfwidth);
    return row;
}

CheckRow check_outage_cu_mc(const LemmaCheckOptions& opt)
{
    OutageGeometry g;
    g.link = OutageGeometry::Link::cu_uplink;
    g.inputs = cu_point();
    const auto est = mc_outage(g, opt.mc_trials, opt.seed + 1);
    CheckRow row;
    row.name = "outage_cu vs Monte Carlo";
    row.value = outage_cu(g.inputs);
    row.reference = est.probability;
    row.tolerance = 0.05;
    row.pass = std::abs(row.value - row.reference) <= row.tolerance;
    row.note = "MC 95% half-width " + fmt(est.ci_halfwidth);
    return row;
}

CheckRow check_p_high_inversion(const LemmaCheckOptions& opt)
{
    Rng rng(derive_seed(opt.seed, {0x9e1dULL}));
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, u(rng)); };
    double worst = 0.0;
    for (std::size_t i = 0; i < opt.inversion_points; ++i) {
        UpperBoundInputs hi;
        hi.group_density = log_uniform(1e-7, 1e-4);
        hi.cu_power_w = log_uniform(1e-2, 10.0);
        hi.cu_bs_dist_m = 10.0 + 490.0 * u(rng);
        hi.sir_threshold = db_to_linear(30.0 * u(rng));
        hi.outage_target = 0.01 + 0.89 * u(rng);
        const double p = compute_p_high(hi);
        OutageInputs in;
        in.group_density = hi.group_density;
        in.cu_power_w = hi.cu_power_w;
        in.mg_power_w = p;
        in.link_dist_m = hi.cu_bs_dist_m;
        in.sir_threshold = hi.sir_threshold;
        const double rel = std::abs(outage_cu(in) - hi.outage_target) / hi.outage_target;
        worst = std::max(worst, rel);
    }
    CheckRow row;
    row.name = "p_high inverts outage_cu";
    row.value = worst;
    row.reference = 0.0;
    row.tolerance = 1e-9;
    row.pass = worst <= row.tolerance;
    row.note = std::to_string(opt.inversion_points) + " random points, worst relative error";
    return row;
}

CheckRow check_p_low_bisection(const LemmaCheckOptions&)
{
    const OutageInputs base = mg_point();
    const double theta = 0.1;
    LowerBoundInputs lo;
    lo.cu_density = base.cu_density;
    lo.group_density = base.group_density;
    lo.cu_power_w = base.cu_power_w;
    lo.exclusion_radius_m = base.exclusion_radius_m;
    lo.link_dist_m = base.link_dist_m;
    lo.sir_threshold = base.sir_threshold;
    lo.outage_target = theta;
    const auto p_low = compute_p_low(lo);

    CheckRow row;
    row.name = "p_low vs bisection root";
    row.value = p_low.value_or(std::numeric_limits<double>::quiet_NaN());
    row.tolerance = 0.10;

    auto outage_at = [&](double p) {
        OutageInputs in = base;
        in.mg_power_w = p;
        return outage_mg(in);
    };
    // outage_mg falls with power towards 1 - L0, which does not depend on it.
    const double floor = outage_at(1e30);
    if (floor > theta) {
        row.reference = std::numeric_limits<double>::quiet_NaN();
        row.pass = false;
        row.note = "no root: outage_mg >= " + fmt(floor) + " at every power";
        return row;
    }
    double a = 1e-30;
    double b = 1e30;
    for (int i = 0; i < 400; ++i) {
        const double m = std::sqrt(a * b);
        (outage_at(m) > theta ? a : b) = m;
    }
    row.reference = b;
    row.pass = p_low && std::abs(*p_low - b) <= row.tolerance * b;
    row.note = "relative tolerance";
    return row;
}

CheckRow check_l0_precision()
{
    const double lambda = 2e-5;
    const double gamma = db_to_linear(25.0);
    const double d = 30.0;
    const double p = 1.0;
    const double s = gamma * std::pow(d, 4.0) / p;
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double ref = std::exp(-static_cast<long double>(lambda) * pi * pi / 2.0L *
                                     std::sqrt(static_cast<long double>(p)) *
                                     std::sqrt(static_cast<long double>(s)));
    CheckRow row;
    row.name = "laplace_l0 vs long double";
    row.value = laplace_l0(lambda, p, s);
    row.reference = static_cast<double>(ref);
    row.tolerance = 1e-12;
    row.pass = std::abs(row.value - row.reference) <= row.tolerance;
    row.note = "lambda=2e-5, 25 dB, d=30 m";
    return row;
}

std::vector<CheckRow> run_lemma_checks(const LemmaCheckOptions& opt)
{
    return {check_l0_precision(), check_outage_mg_mc(opt), check_outage_cu_mc(opt),
            check_p_high_inversion(opt), check_p_low_bisection(opt)};
}

std::string render_check_table(const std::vector<CheckRow>& rows)
{
    std::string out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-28s %-14s %-14s %-10s %-5s %s\n", "check", "value", "reference",
                  "tolerance", "pass", "note");
    out += buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%-28s %-14s %-14s %-10s %-5s %s\n", r.name.c_str(),
                      fmt(r.value).c_str(), fmt(r.reference).c_str(), fmt(r.tolerance).c_str(),
                      r.pass ? "yes" : "no", r.note.c_str());
        out += buf;
    }
    return out;
}

}  // namespace mgca::cli
