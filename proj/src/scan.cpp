#include "sqsl/scan.hpp"

#include "sqsl/errors.hpp"
#include "sqsl/jc_model.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sqsl::scan {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

[[noreturn]] void invalid(const std::string& what)
{
    throw std::invalid_argument("scan config: " + what);
}

double parse_double(std::string_view key, std::string_view text)
{
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        invalid("value for '" + std::string(key) + "' is not a finite number: '" + std::string(text) + "'");
    }
    return value;
}

long parse_integer(std::string_view key, std::string_view text)
{
    long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        invalid("value for '" + std::string(key) + "' is not an integer: '" + std::string(text) + "'");
    }
    return value;
}

Spacing parse_spacing(std::string_view text)
{
    if (text == "linear") {
        return Spacing::linear;
    }
    if (text == "log") {
        return Spacing::log;
    }
    invalid("spacing must be 'linear' or 'log', got '" + std::string(text) + "'");
}

const char* to_string(Spacing spacing)
{
    return spacing == Spacing::linear ? "linear" : "log";
}

Bounds parse_bounds(std::string_view text)
{
    if (text == "[]") {
        return Bounds::closed;
    }
    if (text == "[)") {
        return Bounds::open_max;
    }
    if (text == "(]") {
        return Bounds::open_min;
    }
    invalid("bounds must be one of [] [) (], got '" + std::string(text) + "'");
}

const char* to_string(Bounds bounds)
{
    switch (bounds) {
    case Bounds::closed: return "[]";
    case Bounds::open_max: return "[)";
    case Bounds::open_min: return "(]";
    }
    return "?";
}

bool is_parameter(Model model, std::string_view name)
{
    const auto& names = parameter_names(model);
    return std::find(names.begin(), names.end(), name) != names.end();
}

// Domain of each parameter; false means the value can never be evaluated.
bool in_domain(std::string_view name, double v)
{
    if (!std::isfinite(v)) {
        return false;
    }
    if (name == "r") {
        return v >= 0.0;
    }
    if (name == "theta") {
        return true;
    }
    return v > 0.0; // gamma0, lambda, eta, s, omega_c, tau
}

double param(const ParamMap& params, const ParamMap& defaults, const std::string& name)
{
    const auto it = params.find(name);
    return it != params.end() ? it->second : defaults.at(name);
}

} // namespace

std::vector<double> Axis::values() const
{
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::max(count, 0)));
    const bool log = spacing == Spacing::log;
    const double lo = log ? std::log(min) : min;
    const double hi = log ? std::log(max) : max;
    for (int k = 0; k < count; ++k) {
        double frac = 0.0;
        switch (bounds) {
        case Bounds::closed: frac = static_cast<double>(k) / (count - 1); break;
        case Bounds::open_max: frac = static_cast<double>(k) / count; break;
        case Bounds::open_min: frac = static_cast<double>(k + 1) / count; break;
        }
        const double x = lo + (hi - lo) * frac;
        out.push_back(log ? std::exp(x) : x);
    }
    if (bounds == Bounds::closed && !out.empty()) {
        out.back() = max;
    }
    return out;
}

const std::vector<std::string>& parameter_names(Model model)
{
    static const std::vector<std::string> jc{"r", "theta", "gamma0", "lambda", "tau"};
    static const std::vector<std::string> deph{"r", "theta", "eta", "s", "omega_c", "tau"};
    return model == Model::jc ? jc : deph;
}

ParamMap default_parameters(Model model)
{
    if (model == Model::jc) {
        return {{"r", 0.0}, {"theta", 0.0}, {"gamma0", 1.0}, {"lambda", 1.0}, {"tau", 1.0}};
    }
    return {{"r", 0.0}, {"theta", 0.0}, {"eta", 1.0}, {"s", 1.0}, {"omega_c", 1.0}, {"tau", 1.0}};
}

const char* to_string(Model model)
{
    return model == Model::jc ? "jc" : "dephasing";
}

Model parse_model(std::string_view text)
{
    if (text == "jc") {
        return Model::jc;
    }
    if (text == "dephasing") {
        return Model::dephasing;
    }
    invalid("model must be 'jc' or 'dephasing', got '" + std::string(text) + "'");
}

const char* to_string(RowStatus status)
{
    switch (status) {
    case RowStatus::ok: return "ok";
    case RowStatus::no_convergence: return "no_convergence";
    case RowStatus::failed: return "failed";
    }
    return "unknown";
}

void ScanConfig::validate() const
{
    if (axes.empty() || axes.size() > 2) {
        invalid("need one or two swept axes");
    }
    for (const auto& [name, value] : fixed) {
        if (!is_parameter(model, name)) {
            invalid("parameter '" + name + "' does not apply to model " + to_string(model));
        }
        if (!in_domain(name, value)) {
            invalid("fixed value of '" + name + "' is out of range: " + format_number(value));
        }
    }
    for (std::size_t i = 0; i < axes.size(); ++i) {
        const Axis& axis = axes[i];
        const std::string label = "axis" + std::to_string(i + 1);
        if (!is_parameter(model, axis.name)) {
            invalid(label + " '" + axis.name + "' is not a parameter of model " + to_string(model));
        }
        if (axis.name == "omega_c") {
            invalid("omega_c is fixed and cannot be swept");
        }
        if (fixed.contains(axis.name)) {
            invalid(label + " '" + axis.name + "' is also given a fixed value");
        }
        if (axis.count < 2) {
            invalid(label + " needs count >= 2");
        }
        if (!(axis.min < axis.max)) {
            invalid(label + " needs min < max");
        }
        if (axis.spacing == Spacing::log && !(axis.min > 0.0)) {
            invalid(label + " with log spacing needs min > 0");
        }
        const auto values = axis.values();
        if (!in_domain(axis.name, values.front()) || !in_domain(axis.name, values.back())) {
            invalid(label + " '" + axis.name + "' leaves the parameter's valid range");
        }
    }
    if (axes.size() == 2 && axes[0].name == axes[1].name) {
        invalid("the two axes sweep the same parameter");
    }
    quad.validate();
}

ParamMap ScanConfig::resolved_fixed() const
{
    ParamMap out = default_parameters(model);
    for (const auto& [name, value] : fixed) {
        out[name] = value;
    }
    for (const Axis& axis : axes) {
        out.erase(axis.name);
    }
    return out;
}

std::vector<std::string> preset_names()
{
    return {"fig1a", "fig1b", "fig2"};
}

ScanConfig preset(std::string_view name)
{
    ScanConfig c;
    c.preset = std::string(name);
    if (name == "fig1a") {
        c.model = Model::jc;
        c.fixed = {{"r", 0.5}, {"lambda", 1.0}, {"tau", 1.0}};
        c.axes = {Axis{"theta", 0.0, two_pi, 64, Spacing::linear, Bounds::open_max},
                  Axis{"gamma0", 0.1, 10.0, 64, Spacing::linear, Bounds::closed}};
    } else if (name == "fig1b") {
        c.model = Model::jc;
        c.fixed = {{"theta", 0.5 * std::numbers::pi}, {"lambda", 1.0}, {"tau", 1.0}};
        c.axes = {Axis{"r", 0.0, 1.0, 64, Spacing::linear, Bounds::closed},
                  Axis{"gamma0", 0.1, 10.0, 64, Spacing::linear, Bounds::closed}};
    } else if (name == "fig2") {
        c.model = Model::dephasing;
        c.fixed = {{"r", 1.0}, {"tau", 3.0}, {"eta", 1.0}, {"omega_c", 1.0}};
        c.axes = {Axis{"s", 0.0, 4.0, 64, Spacing::linear, Bounds::open_min},
                  Axis{"theta", 0.0, two_pi, 64, Spacing::linear, Bounds::open_max}};
    } else {
        invalid("unknown preset '" + std::string(name) + "' (expected fig1a, fig1b or fig2)");
    }
    return c;
}

void apply_setting(ScanConfig& config, std::string_view key, std::string_view value)
{
    if (key == "model") {
        config.model = parse_model(value);
        return;
    }
    if (key == "preset") {
        config.preset = std::string(value);
        return;
    }
    if (key == "abs_tol") {
        config.quad.abs_tol = parse_double(key, value);
        return;
    }
    if (key == "rel_tol") {
        config.quad.rel_tol = parse_double(key, value);
        return;
    }
    if (key == "max_subdivisions") {
        config.quad.max_subdivisions = static_cast<int>(parse_integer(key, value));
        return;
    }
    if (key == "threads") {
        const long n = parse_integer(key, value);
        if (n < 0) {
            invalid("threads must be >= 0");
        }
        config.threads = static_cast<unsigned>(n);
        return;
    }
    if (key == "out") {
        config.out = std::string(value);
        return;
    }
    if (key.starts_with("axis") && key.size() >= 5 && (key[4] == '1' || key[4] == '2')) {
        const std::size_t index = static_cast<std::size_t>(key[4] - '1');
        if (config.axes.size() <= index) {
            config.axes.resize(index + 1);
        }
        Axis& axis = config.axes[index];
        const std::string_view field = key.substr(5);
        if (field.empty()) {
            axis.name = std::string(value);
        } else if (field == "_min") {
            axis.min = parse_double(key, value);
        } else if (field == "_max") {
            axis.max = parse_double(key, value);
        } else if (field == "_count") {
            axis.count = static_cast<int>(parse_integer(key, value));
        } else if (field == "_spacing") {
            axis.spacing = parse_spacing(value);
        } else if (field == "_bounds") {
            axis.bounds = parse_bounds(value);
        } else {
            invalid("unknown key '" + std::string(key) + "'");
        }
        return;
    }
    // anything else must be a model parameter; checked against the model in validate()
    static const std::set<std::string, std::less<>> known{"r", "theta", "gamma0", "lambda", "eta", "s",
                                                          "omega_c", "tau"};
    if (!known.contains(key)) {
        invalid("unknown key '" + std::string(key) + "'");
    }
    config.fixed[std::string(key)] = parse_double(key, value);
}

ScanConfig config_from_pairs(const KeyValues& pairs)
{
    ScanConfig config;
    for (const auto& [key, value] : pairs) {
        if (key == "model") {
            apply_setting(config, key, value);
        }
    }
    for (const auto& [key, value] : pairs) {
        if (key != "model") {
            apply_setting(config, key, value);
        }
    }
    return config;
}

ScanConfig config_from_json_text(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        invalid(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        invalid("config must be a flat JSON object");
    }
    KeyValues pairs;
    for (const auto& [key, value] : doc.items()) {
        if (value.is_string()) {
            pairs.emplace_back(key, value.get<std::string>());
        } else if (value.is_number_integer()) {
            pairs.emplace_back(key, std::to_string(value.get<long long>()));
        } else if (value.is_number()) {
            pairs.emplace_back(key, format_number(value.get<double>()));
        } else {
            invalid("value of '" + key + "' must be a string or a number");
        }
    }
    return config_from_pairs(pairs);
}

ScanConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        invalid("cannot open config file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return config_from_json_text(text.str());
}

KeyValues config_echo(const ScanConfig& config)
{
    KeyValues out;
    out.emplace_back("model", to_string(config.model));
    if (!config.preset.empty()) {
        out.emplace_back("preset", config.preset);
    }
    const ParamMap fixed = config.resolved_fixed();
    for (const auto& name : parameter_names(config.model)) {
        if (const auto it = fixed.find(name); it != fixed.end()) {
            out.emplace_back(name, format_number(it->second));
        }
    }
    for (std::size_t i = 0; i < config.axes.size(); ++i) {
        const Axis& axis = config.axes[i];
        const std::string prefix = "axis" + std::to_string(i + 1);
        out.emplace_back(prefix, axis.name);
        out.emplace_back(prefix + "_min", format_number(axis.min));
        out.emplace_back(prefix + "_max", format_number(axis.max));
        out.emplace_back(prefix + "_count", std::to_string(axis.count));
        out.emplace_back(prefix + "_spacing", to_string(axis.spacing));
        out.emplace_back(prefix + "_bounds", to_string(axis.bounds));
    }
    out.emplace_back("abs_tol", format_number(config.quad.abs_tol));
    out.emplace_back("rel_tol", format_number(config.quad.rel_tol));
    out.emplace_back("max_subdivisions", std::to_string(config.quad.max_subdivisions));
    return out;
}

PointResult evaluate_point(Model model, const ParamMap& params, const QuadratureSettings& settings)
{
    const ParamMap defaults = default_parameters(model);
    for (const auto& [name, value] : params) {
        if (!defaults.contains(name)) {
            throw std::invalid_argument("parameter '" + name + "' does not apply to model " + to_string(model));
        }
    }
    auto get = [&](const std::string& name) { return param(params, defaults, name); };

    const SqueezedEnvironment env{get("r"), get("theta")};
    const double tau = get("tau");
    PointResult out;
    if (model == Model::jc) {
        const LorentzianSpectrum spec{get("gamma0"), get("lambda")};
        out.qsl = jc::qsl(tau, env, spec, settings);
        return out;
    }

    const OhmicSpectrum spec{get("eta"), get("s"), get("omega_c")};
    out.qsl = dephasing::qsl(tau, env, spec, settings);
    const dephasing::SignCell cell = dephasing::sign_cell(tau, env, spec);
    out.dephasing = DephasingExtras{dephasing::gamma_analytic(tau, env, spec), cell.rate_at_tau, cell.at_tau,
                                    cell.negative_on_interval};
    return out;
}

std::vector<ScanRecord> run_scan(const ScanConfig& config)
{
    config.validate();

    const ParamMap fixed = config.resolved_fixed();
    const auto& names = parameter_names(config.model);
    const std::vector<double> outer = config.axes[0].values();
    const std::vector<double> inner = config.axes.size() == 2 ? config.axes[1].values() : std::vector<double>{0.0};
    const std::size_t total = outer.size() * inner.size();

    std::vector<ScanRecord> records(total);
    auto evaluate = [&](std::size_t index) {
        ParamMap point = fixed;
        point[config.axes[0].name] = outer[index / inner.size()];
        if (config.axes.size() == 2) {
            point[config.axes[1].name] = inner[index % inner.size()];
        }
        ScanRecord& rec = records[index];
        rec.params.reserve(names.size());
        for (const auto& name : names) {
            rec.params.push_back(point.at(name));
        }
        try {
            rec.result = evaluate_point(config.model, point, config.quad);
            rec.status = RowStatus::ok;
        } catch (const ConvergenceError&) {
            rec.status = RowStatus::no_convergence;
        } catch (const std::exception&) {
            rec.status = RowStatus::failed;
        }
    };

    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) {
                    evaluate(i);
                }
            });
        }
    }
    return records;
}

std::vector<std::string> csv_columns(Model model)
{
    std::vector<std::string> cols = parameter_names(model);
    for (const char* c : {"tau_qsl", "ratio", "tight_norm", "quad_error"}) {
        cols.emplace_back(c);
    }
    if (model == Model::dephasing) {
        for (const char* c : {"gamma_tau", "gamma_rate_tau", "sign_at_tau", "negative_on_interval"}) {
            cols.emplace_back(c);
        }
    }
    cols.emplace_back("status");
    return cols;
}

std::string format_number(double value)
{
    char buf[64];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(n));
}

void write_csv(std::ostream& out, const ScanConfig& config, const std::vector<ScanRecord>& records)
{
    out << "# squeezed-qsl scan\n";
    for (const auto& [key, value] : config_echo(config)) {
        out << "# " << key << '=' << value << '\n';
    }
    const auto cols = csv_columns(config.model);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << '\n';

    const std::string nan = "nan";
    for (const ScanRecord& rec : records) {
        for (double p : rec.params) {
            out << format_number(p) << ',';
        }
        const bool ok = rec.status == RowStatus::ok;
        const QslResult& q = rec.result.qsl;
        out << (ok ? format_number(q.tau_qsl) : nan) << ',' << (ok ? format_number(q.ratio) : nan) << ','
            << (ok ? to_string(q.tight_norm) : "") << ',' << (ok ? format_number(q.quad_error) : nan) << ',';
        if (config.model == Model::dephasing) {
            if (ok && rec.result.dephasing) {
                const DephasingExtras& d = *rec.result.dephasing;
                out << format_number(d.gamma_tau) << ',' << format_number(d.gamma_rate_tau) << ','
                    << dephasing::to_string(d.sign_at_tau) << ',' << (d.negative_on_interval ? 1 : 0) << ',';
            } else {
                out << nan << ',' << nan << ",,,";
            }
        }
        out << to_string(rec.status) << '\n';
    }
}

} // namespace sqsl::scan
