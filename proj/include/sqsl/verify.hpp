#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sqsl::verify {

enum class Suite { norms, jc_oracle, dephasing_oracle, derivatives };

Suite parse_suite(std::string_view name);
const char* to_string(Suite suite);
std::vector<std::string> suite_names();

struct Check {
    std::string name;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool pass() const;
    /// {"suite": ..., "pass": ..., "checks": [{name, max_deviation, tolerance, pass}]}
    std::string to_json() const;
};

/// Run the oracle comparisons of one suite at their documented grids.
Report run(Suite suite);

} // namespace sqsl::verify
