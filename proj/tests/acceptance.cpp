// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "sqsl/dephasing_model.hpp"
#include "sqsl/scan.hpp"
#include "sqsl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace sqsl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    std::string name;
    double time_limit = 0.0; // seconds
    std::function<Outcome()> run;
};

std::string fmt(const char* format, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// Suites and preset scans are shared between criteria; each is run once.
class Cache {
public:
    const verify::Report& report(verify::Suite suite)
    {
        auto it = reports_.find(suite);
        if (it == reports_.end()) {
            it = reports_.emplace(suite, verify::run(suite)).first;
        }
        return it->second;
    }

    const std::vector<scan::ScanRecord>& preset(const std::string& name)
    {
        auto it = scans_.find(name);
        if (it == scans_.end()) {
            it = scans_.emplace(name, scan::run_scan(scan::preset(name))).first;
        }
        return it->second;
    }

private:
    std::map<verify::Suite, verify::Report> reports_;
    std::map<std::string, std::vector<scan::ScanRecord>> scans_;
};

Cache cache;

Outcome from_checks(verify::Suite suite, const std::vector<std::string>& names)
{
    const verify::Report& report = cache.report(suite);
    Outcome out{true, ""};
    for (const std::string& name : names) {
        const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                     [&](const verify::Check& c) { return c.name == name; });
        if (it == report.checks.end()) {
            return {false, "missing check " + name};
        }
        out.pass = out.pass && it->pass;
        out.detail += fmt("%s%s max %.3g (tol %.0e)", out.detail.empty() ? "" : "; ", name.c_str(),
                          it->max_deviation, it->tolerance);
    }
    return out;
}

// Ratio surface of a two-axis preset, indexed [outer][inner].
std::vector<std::vector<double>> ratio_grid(const std::string& name)
{
    const scan::ScanConfig config = scan::preset(name);
    const auto& records = cache.preset(name);
    const std::size_t inner = static_cast<std::size_t>(config.axes[1].count);
    std::vector<std::vector<double>> grid(records.size() / inner, std::vector<double>(inner));
    for (std::size_t k = 0; k < records.size(); ++k) {
        grid[k / inner][k % inner] =
            records[k].status == scan::RowStatus::ok ? records[k].result.qsl.ratio : std::nan("");
    }
    return grid;
}

Outcome all_rows_ok(const std::string& name)
{
    for (const auto& rec : cache.preset(name)) {
        if (rec.status != scan::RowStatus::ok) {
            return {false, "preset " + name + " has failed rows"};
        }
    }
    return {true, ""};
}

Outcome fig1a_structure()
{
    if (auto ok = all_rows_ok("fig1a"); !ok.pass) {
        return ok;
    }
    // outer axis theta on [0, 2pi) with 64 points: theta_k and theta_{64-k} mirror about pi
    const auto grid = ratio_grid("fig1a");
    const std::size_t n = grid.size();
    double asymmetry = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = 0; j < grid[k].size(); ++j) {
            asymmetry = std::max(asymmetry, std::abs(grid[k][j] - grid[n - k][j]));
        }
    }
    std::size_t misplaced = 0;
    for (std::size_t j = 0; j < grid[0].size(); ++j) {
        for (std::size_t k = 1; k < n; ++k) {
            if (grid[k][j] > grid[0][j]) {
                ++misplaced;
                break;
            }
        }
    }
    return {asymmetry <= 1e-10 && misplaced == 0,
            fmt("max |R(theta) - R(2pi - theta)| = %.3g (tol 1e-10); gamma0 columns with max away from theta=0: %zu",
                asymmetry, misplaced)};
}

Outcome fig1b_structure()
{
    if (auto ok = all_rows_ok("fig1b"); !ok.pass) {
        return ok;
    }
    constexpr double slack = 1e-10;
    const scan::ScanConfig config = scan::preset("fig1b");
    const auto r_values = config.axes[0].values();
    const auto g_values = config.axes[1].values();
    const auto grid = ratio_grid("fig1b"); // [r][gamma0]

    double worst_r = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid[i].size(); ++j) {
            worst_r = std::min(worst_r, grid[i][j] - grid[i - 1][j]);
        }
    }
    double worst_g = 0.0;
    std::size_t bad_rows = 0;
    double first_bad_r = std::nan("");
    double worst_g_at = std::nan("");
    double worst_g_r = std::nan("");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        bool bad = false;
        for (std::size_t j = 1; j < grid[i].size(); ++j) {
            const double step = grid[i][j] - grid[i][j - 1];
            if (step < -slack) {
                bad = true;
            }
            if (step < worst_g) {
                worst_g = step;
                worst_g_at = g_values[j];
                worst_g_r = r_values[i];
            }
        }
        if (bad) {
            ++bad_rows;
            if (std::isnan(first_bad_r)) {
                first_bad_r = r_values[i];
            }
        }
    }
    const bool pass = worst_r >= -slack && worst_g >= -slack;
    std::string detail = fmt("min step along r = %.3g; min step along gamma0 = %.3g at r=%.4g gamma0=%.4g (slack 1e-10)",
                             worst_r, worst_g, worst_g_r, worst_g_at);
    if (bad_rows) {
        detail += fmt("; %zu r rows decrease in gamma0, first at r=%.4g", bad_rows, first_bad_r);
    }
    return {pass, detail};
}

Outcome saturation_law()
{
    constexpr double tol = 1e-8;
    constexpr double tau = 3.0;
    const auto vacuum = SqueezedEnvironment::vacuum();

    // monotone decoherence on [0, tau] saturates the bound: fig2 cells plus a vacuum s sweep
    double worst_saturated = 0.0;
    std::size_t saturated_points = 0;
    for (const auto& rec : cache.preset("fig2")) {
        if (rec.status != scan::RowStatus::ok) {
            return {false, "preset fig2 has failed rows"};
        }
        if (!rec.result.dephasing->negative_on_interval) {
            worst_saturated = std::max(worst_saturated, std::abs(rec.result.qsl.ratio - 1.0));
            ++saturated_points;
        }
    }

    const double s_star = dephasing::vacuum_speedup_threshold(tau);
    std::size_t wrong_side = 0;
    double closest_below = 0.0;
    double smallest_gap_above = 1.0;
    for (int k = 1; k <= 80; ++k) {
        const double s = 0.05 * k;
        const OhmicSpectrum spec{1.0, s};
        const double ratio = dephasing::qsl(tau, vacuum, spec).ratio;
        if (dephasing::sign_cell(tau, vacuum, spec).min_rate >= 0.0) {
            worst_saturated = std::max(worst_saturated, std::abs(ratio - 1.0));
            ++saturated_points;
        }
        const bool speedup = ratio < 1.0 - tol;
        if (speedup != (s > s_star)) {
            ++wrong_side;
        }
        if (s < s_star) {
            closest_below = std::max(closest_below, std::abs(ratio - 1.0));
        } else {
            smallest_gap_above = std::min(smallest_gap_above, 1.0 - ratio);
        }
    }
    const bool pass = worst_saturated <= tol && wrong_side == 0 && s_star >= 2.510 && s_star <= 2.520;
    return {pass, fmt("max |ratio - 1| over %zu monotone points = %.3g (tol 1e-8); s* = %.16g (need [2.510, 2.520]); "
                      "vacuum sweep points on the wrong side of s*: %zu; min 1 - ratio above s*: %.3g",
                      saturated_points, worst_saturated, s_star, wrong_side, smallest_gap_above)};
}

Outcome fig2_structure()
{
    const auto& records = cache.preset("fig2");
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t negative_low_s = 0;
    std::size_t interval_negative_low_s = 0;
    for (const auto& rec : records) {
        if (rec.status != scan::RowStatus::ok) {
            return {false, "preset fig2 has failed rows"};
        }
        const double s = rec.params[3]; // r, theta, eta, s, omega_c, tau
        const auto& d = *rec.result.dephasing;
        positive += d.sign_at_tau == dephasing::RateSign::positive;
        negative += d.sign_at_tau == dephasing::RateSign::negative;
        if (s < 2.5) {
            negative_low_s += d.sign_at_tau == dephasing::RateSign::negative;
            interval_negative_low_s += d.negative_on_interval;
        }
    }
    return {positive > 0 && negative > 0 && negative_low_s > 0,
            fmt("gamma'(tau) > 0 in %zu cells, < 0 in %zu cells, < 0 with s < 2.5 in %zu cells "
                "(negative somewhere on [0, tau] with s < 2.5: %zu)",
                positive, negative, negative_low_s, interval_negative_low_s)};
}

Outcome determinism()
{
    std::string detail;
    bool pass = true;
    for (const auto& name : scan::preset_names()) {
        std::string runs[2];
        for (int k = 0; k < 2; ++k) {
            scan::ScanConfig config = scan::preset(name);
            config.threads = k == 0 ? 1 : 4;
            std::ostringstream out;
            scan::write_csv(out, config, scan::run_scan(config));
            runs[k] = out.str();
        }
        const bool same = runs[0] == runs[1];
        pass = pass && same;
        detail += fmt("%s%s %s (%zu bytes)", detail.empty() ? "" : "; ", name.c_str(), same ? "identical" : "DIFFER",
                      runs[0].size());
    }
    return {pass, detail};
}

} // namespace

int main()
{
    using verify::Suite;
    const std::vector<Criterion> criteria{
        {"norm chain exactness", 1.0,
         [] { return from_checks(Suite::norms, {"norm_ratios_vs_eigensolver"}); }},
        {"JC closed form vs master equation", 120.0,
         [] { return from_checks(Suite::jc_oracle, {"jc_closed_form_vs_master_equation"}); }},
        {"JC generator vs finite differences", 10.0,
         [] { return from_checks(Suite::derivatives, {"jc_generator_vs_finite_difference"}); }},
        {"fig1a symmetry and theta=0 maximum", 60.0, fig1a_structure},
        {"fig1b monotone in r and gamma0", 60.0, fig1b_structure},
        {"dephasing closed form vs quadrature", 30.0,
         [] { return from_checks(Suite::dephasing_oracle, {"gamma_analytic_vs_quadrature"}); }},
        {"dephasing rate consistency", 10.0,
         [] {
             return from_checks(Suite::derivatives,
                                {"gamma_rate_vs_finite_difference", "closed_form_imaginary_residual"});
         }},
        {"saturation law and vacuum threshold", 30.0, saturation_law},
        {"fig2 sign map", 60.0, fig2_structure},
        {"preset determinism", 300.0, determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds <= c.time_limit;
        const bool pass = outcome.pass && in_time;
        failures += !pass;
        std::printf("%s  %-40s %7.2fs (limit %.0fs)  %s%s\n", pass ? "PASS" : "FAIL", c.name.c_str(), seconds,
                    c.time_limit, outcome.detail.c_str(), in_time ? "" : "  [over time limit]");
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
