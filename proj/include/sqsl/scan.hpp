#pragma once

// Parameter-grid sweeps over either model, with deterministic CSV output.

#include "sqsl/dephasing_model.hpp"
#include "sqsl/qsl.hpp"
#include "sqsl/quadrature.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqsl::scan {

enum class Model { jc, dephasing };
enum class Spacing { linear, log };

/// Which ends of [min, max] belong to the grid: "[]", "[)" or "(]".
enum class Bounds { closed, open_max, open_min };

using ParamMap = std::map<std::string, double>;
using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct Axis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int count = 64;
    Spacing spacing = Spacing::linear;
    Bounds bounds = Bounds::closed;

    std::vector<double> values() const;
};

struct ScanConfig {
    Model model = Model::jc;
    std::string preset;        ///< empty unless built from a preset
    ParamMap fixed;            ///< explicitly fixed parameters; the rest take defaults
    std::vector<Axis> axes;    ///< one or two; axes[0] is the outer (row) axis
    QuadratureSettings quad;
    unsigned threads = 0;      ///< 0 = hardware concurrency
    std::string out;           ///< empty = stdout

    /// Throws std::invalid_argument with a diagnostic on any inconsistency.
    void validate() const;

    /// Defaults overlaid with `fixed`, for every parameter not on an axis.
    ParamMap resolved_fixed() const;
};

/// Parameter names in output-column order.
const std::vector<std::string>& parameter_names(Model model);
ParamMap default_parameters(Model model);

const char* to_string(Model model);
Model parse_model(std::string_view text);

/// `fig1a`, `fig1b` or `fig2`; throws std::invalid_argument otherwise.
ScanConfig preset(std::string_view name);
std::vector<std::string> preset_names();

/// Apply one `key=value` setting. Keys: model, any parameter name,
/// axisN / axisN_min / axisN_max / axisN_count / axisN_spacing / axisN_bounds
/// (N = 1, 2), abs_tol, rel_tol, max_subdivisions, threads, out.
void apply_setting(ScanConfig& config, std::string_view key, std::string_view value);

/// Build from flat key/value pairs; `model` is applied first wherever it appears.
ScanConfig config_from_pairs(const KeyValues& pairs);

/// Parse a flat JSON object (string or number values).
ScanConfig config_from_json_text(std::string_view text);
ScanConfig load_config(const std::string& path);

/// The key/value lines echoed in the CSV header. Excludes `out` and `threads`,
/// which do not affect the data.
KeyValues config_echo(const ScanConfig& config);

struct DephasingExtras {
    double gamma_tau = 0.0;
    double gamma_rate_tau = 0.0;
    dephasing::RateSign sign_at_tau = dephasing::RateSign::boundary;
    bool negative_on_interval = false;
};

struct PointResult {
    QslResult qsl;
    std::optional<DephasingExtras> dephasing;
};

/// Evaluate one parameter point. Missing parameters take model defaults.
/// Propagates ConvergenceError.
PointResult evaluate_point(Model model, const ParamMap& params, const QuadratureSettings& settings = {});

enum class RowStatus { ok, no_convergence, failed };
const char* to_string(RowStatus status);

struct ScanRecord {
    std::vector<double> params; ///< in parameter_names(model) order
    RowStatus status = RowStatus::ok;
    PointResult result;
};

/// Evaluate the grid (outer axis major) on up to config.threads workers.
/// Records come back in grid order regardless of completion order.
std::vector<ScanRecord> run_scan(const ScanConfig& config);

std::vector<std::string> csv_columns(Model model);
void write_csv(std::ostream& out, const ScanConfig& config, const std::vector<ScanRecord>& records);

/// 17 significant digits, shortest form otherwise ("%.17g").
std::string format_number(double value);

} // namespace sqsl::scan
