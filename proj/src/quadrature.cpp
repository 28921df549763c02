#include "sqsl/quadrature.hpp"

#include "sqsl/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sqsl {

void QuadratureSettings::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
        throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (max_subdivisions < 1) {
        throw std::invalid_argument("quadrature needs at least one subdivision");
    }
}

namespace {

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

double checked(const RealFunction& f, double x)
{
    const double y = f(x);
    if (std::isnan(y)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrand returned NaN at x = " << x;
        throw std::domain_error(msg.str());
    }
    return y;
}

// K21 with the embedded G10 rule; same node pairing as Boost's own
// non-adaptive Kronrod pass. The error estimate uses the QUADPACK scaling of
// |K - G| against the panel's mean absolute deviation.
Panel kronrod_panel(const RealFunction& f, double a, double b)
{
    using kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
    using gauss = boost::math::quadrature::gauss<double, 10>;
    const auto& x = kronrod::abscissa();
    const auto& wk = kronrod::weights();
    const auto& wg = gauss::weights();
    constexpr double eps = std::numeric_limits<double>::epsilon();

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<std::pair<double, double>, 11> samples{};
    const double centre = checked(f, mid);
    double k = centre * wk[0];
    double k_abs = std::abs(centre) * wk[0];
    double g = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        samples[i] = {checked(f, mid + half * x[i]), checked(f, mid - half * x[i])};
        const double sum = samples[i].first + samples[i].second;
        k += sum * wk[i];
        k_abs += (std::abs(samples[i].first) + std::abs(samples[i].second)) * wk[i];
        if (i % 2 == 1) {
            g += sum * wg[i / 2];
        }
    }
    const double mean = 0.5 * k;
    double deviation = std::abs(centre - mean) * wk[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
        deviation += (std::abs(samples[i].first - mean) + std::abs(samples[i].second - mean)) * wk[i];
    }
    deviation *= std::abs(half);

    const double value = half * k;
    double error = std::abs(half * (k - g));
    if (deviation != 0.0 && error != 0.0) {
        error = deviation * std::min(1.0, std::pow(200.0 * error / deviation, 1.5));
    }
    error = std::max(error, 50.0 * eps * std::abs(half) * k_abs);
    return {a, b, value, error};
}

QuadratureOutcome run_adaptive(const RealFunction& f, std::span<const double> breakpoints,
                               const QuadratureSettings& settings)
{
    settings.validate();
    if (breakpoints.size() < 2) {
        throw std::invalid_argument("integrate: need at least two breakpoints");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i - 1] <= breakpoints[i])) {
            throw std::invalid_argument("integrate: breakpoints must be finite and ascending");
        }
    }

    std::vector<Panel> panels;
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (breakpoints[i] > breakpoints[i - 1]) {
            panels.push_back(kronrod_panel(f, breakpoints[i - 1], breakpoints[i]));
        }
    }
    if (panels.empty()) {
        return {0.0, 0.0, 0, true};
    }

    const std::size_t budget =
        std::max(static_cast<std::size_t>(settings.max_subdivisions), panels.size());
    while (true) {
        double value = 0.0;
        double error = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < panels.size(); ++i) {
            value += panels[i].value;
            error += panels[i].error;
            if (panels[i].error > panels[worst].error) {
                worst = i;
            }
        }
        const int used = static_cast<int>(panels.size());
        if (error <= std::max(settings.abs_tol, settings.rel_tol * std::abs(value))) {
            return {value, error, used, true};
        }
        const double a = panels[worst].a;
        const double b = panels[worst].b;
        const double mid = 0.5 * (a + b);
        if (panels.size() >= budget || !(mid > a && mid < b)) {
            return {value, error, used, false};
        }
        panels[worst] = kronrod_panel(f, a, mid);
        panels.push_back(kronrod_panel(f, mid, b));
    }
}

} // namespace

QuadratureOutcome integrate(const RealFunction& f, double a, double b,
                            const QuadratureSettings& settings)
{
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw std::invalid_argument("integrate: need finite a <= b");
    }
    const double ends[] = {a, b};
    return run_adaptive(f, ends, settings);
}

QuadratureOutcome integrate(const RealFunction& f, std::span<const double> breakpoints,
                            const QuadratureSettings& settings)
{
    return run_adaptive(f, breakpoints, settings);
}

double find_root(const RealFunction& f, double lo, double hi, double tol, int max_iterations)
{
    if (!(lo < hi) || !(tol > 0.0) || max_iterations < 1) {
        throw std::invalid_argument("find_root: need lo < hi, tol > 0, max_iterations >= 1");
    }
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) {
        return lo;
    }
    if (f_hi == 0.0) {
        return hi;
    }
    if (!(f_lo * f_hi < 0.0)) {
        throw std::invalid_argument("find_root: f(lo) and f(hi) do not bracket a sign change");
    }

    std::uintmax_t iterations = static_cast<std::uintmax_t>(max_iterations);
    auto narrow_enough = [tol](double a, double b) { return std::abs(b - a) <= tol; };
    const auto [a, b] = boost::math::tools::toms748_solve(
        [&f](double x) { return f(x); }, lo, hi, f_lo, f_hi, narrow_enough, iterations);

    const double f_a = f(a);
    const double f_b = f(b);
    if (f_a == 0.0) {
        return a;
    }
    if (f_b == 0.0) {
        return b;
    }
    if (!narrow_enough(a, b)) {
        throw ConvergenceError("find_root: bracket still wider than tol after " +
                               std::to_string(max_iterations) + " iterations");
    }
    return std::abs(f_a) <= std::abs(f_b) ? a : b;
}

} // namespace sqsl
