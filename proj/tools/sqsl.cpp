// sqsl: parameter sweeps, single-point evaluations and oracle checks for
// quantum speed limits of a qubit in a squeezed vacuum reservoir.

#include "sqsl/errors.hpp"
#include "sqsl/scan.hpp"
#include "sqsl/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

int run_scan_command(const std::optional<std::string>& preset, const std::optional<std::string>& config_path,
                     const std::vector<std::string>& settings, const std::optional<std::string>& out,
                     const std::optional<unsigned>& threads)
{
    using namespace sqsl::scan;
    ScanConfig config = preset ? sqsl::scan::preset(*preset) : load_config(*config_path);
    for (const std::string& kv : settings) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        }
        apply_setting(config, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (out) {
        config.out = *out;
    }
    if (threads) {
        config.threads = *threads;
    }

    const auto start = std::chrono::steady_clock::now();
    const auto records = run_scan(config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (config.out.empty()) {
        write_csv(std::cout, config, records);
    } else {
        std::ofstream file(config.out, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot open output file '" + config.out + "'");
        }
        write_csv(file, config, records);
    }

    std::size_t failed = 0;
    for (const auto& rec : records) {
        failed += rec.status != RowStatus::ok;
    }
    std::cerr << "scan: " << records.size() << " points in " << seconds << " s";
    if (failed) {
        std::cerr << ", " << failed << " failed";
    }
    std::cerr << '\n';
    return 0;
}

int run_point_command(const std::string& model_name, const std::map<std::string, double>& given,
                      const sqsl::QuadratureSettings& quad)
{
    using namespace sqsl::scan;
    const Model model = parse_model(model_name);
    ParamMap params = default_parameters(model);
    for (const auto& [name, value] : given) {
        if (!params.contains(name)) {
            throw std::invalid_argument("--" + name + " does not apply to model " + model_name);
        }
        params[name] = value;
    }
    const PointResult result = evaluate_point(model, params, quad);
    const sqsl::QslResult& q = result.qsl;

    nlohmann::json doc;
    doc["model"] = model_name;
    for (const auto& [name, value] : params) {
        doc["parameters"][name] = value;
    }
    doc["tau"] = q.tau;
    doc["tau_qsl"] = q.tau_qsl;
    doc["ratio"] = q.ratio;
    doc["tight_norm"] = sqsl::to_string(q.tight_norm);
    doc["quad_error"] = q.quad_error;
    doc["sin2_bures"] = q.sin2_bures;
    doc["rates"] = {{"op", q.rates.op}, {"hs", q.rates.hs}, {"tr", q.rates.tr}};
    if (result.dephasing) {
        doc["gamma_tau"] = result.dephasing->gamma_tau;
        doc["gamma_rate_tau"] = result.dephasing->gamma_rate_tau;
        doc["sign_at_tau"] = sqsl::dephasing::to_string(result.dephasing->sign_at_tau);
        doc["negative_on_interval"] = result.dephasing->negative_on_interval;
    }
    std::cout << doc.dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quantum speed limits of a qubit in a squeezed vacuum reservoir"};
    app.require_subcommand(1);

    // scan
    auto* scan = app.add_subcommand("scan", "Sweep a parameter grid and write a CSV");
    std::optional<std::string> preset;
    std::optional<std::string> config_path;
    std::vector<std::string> settings;
    std::optional<std::string> out;
    std::optional<unsigned> threads;
    auto* preset_opt = scan->add_option("--preset", preset, "Built-in grid: fig1a, fig1b or fig2");
    auto* config_opt = scan->add_option("--config", config_path, "Flat JSON key/value config file");
    preset_opt->excludes(config_opt);
    scan->add_option("--set", settings, "Override a config key (key=value); repeatable");
    scan->add_option("--out", out, "Output CSV path (default: stdout)");
    scan->add_option("--threads", threads, "Worker threads (0 = all cores)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run oracle comparisons and print a JSON report");
    std::string suite;
    verify->add_option("suite", suite, "norms | jc-oracle | dephasing-oracle | derivatives | all")->required();

    // point
    auto* point = app.add_subcommand("point", "Evaluate a single parameter point and print JSON");
    std::string model = "jc";
    point->add_option("--model", model, "jc or dephasing")->required();
    std::map<std::string, double> given;
    for (const char* name : {"r", "theta", "gamma0", "lambda", "eta", "s", "omega_c", "tau"}) {
        point->add_option_function<double>(std::string("--") + name,
                                           [&given, key = std::string(name)](double v) { given[key] = v; });
    }
    sqsl::QuadratureSettings quad;
    point->add_option("--abs-tol", quad.abs_tol, "Absolute quadrature tolerance");
    point->add_option("--rel-tol", quad.rel_tol, "Relative quadrature tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (scan->parsed()) {
            if (!preset && !config_path) {
                std::cerr << "scan: one of --preset or --config is required\n";
                return 2;
            }
            return run_scan_command(preset, config_path, settings, out, threads);
        }
        if (verify->parsed()) {
            std::vector<sqsl::verify::Suite> suites;
            if (suite == "all") {
                for (const auto& name : sqsl::verify::suite_names()) {
                    suites.push_back(sqsl::verify::parse_suite(name));
                }
            } else {
                suites.push_back(sqsl::verify::parse_suite(suite));
            }
            bool ok = true;
            for (auto s : suites) {
                const auto report = sqsl::verify::run(s);
                std::cout << report.to_json() << '\n';
                ok = ok && report.pass();
            }
            return ok ? 0 : 1;
        }
        if (point->parsed()) {
            return run_point_command(model, given, quad);
        }
    } catch (const sqsl::ConvergenceError& e) {
        std::cerr << "convergence failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
