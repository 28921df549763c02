#pragma once

#include <functional>
#include <span>

namespace sqsl {

struct QuadratureSettings {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;

    /// Throws std::invalid_argument for non-positive tolerances or a zero budget.
    void validate() const;
};

struct QuadratureOutcome {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = false;
};

using RealFunction = std::function<double(double)>;

/// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
/// The panel with the largest |K21 - G10| is bisected until the summed error
/// estimate drops below max(abs_tol, rel_tol * |value|). Running out of
/// subdivisions returns converged = false with the best estimate; a NaN from f
/// throws std::domain_error.
QuadratureOutcome integrate(const RealFunction& f, double a, double b,
                            const QuadratureSettings& settings = {});

/// Same engine, seeded with the panels between consecutive breakpoints
/// (sorted, at least two). Use this to isolate kinks or oscillation periods.
QuadratureOutcome integrate(const RealFunction& f, std::span<const double> breakpoints,
                            const QuadratureSettings& settings = {});

/// Bracketing root search on [lo, hi]. Requires a strict sign change;
/// stops once the bracket is no wider than tol or f vanishes exactly.
/// Throws std::invalid_argument without a sign change, ConvergenceError
/// after max_iterations.
double find_root(const RealFunction& f, double lo, double hi, double tol,
                 int max_iterations = 200);

} // namespace sqsl
