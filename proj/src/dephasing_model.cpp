#include "sqsl/dephasing_model.hpp"

#include "sqsl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sqsl::dephasing {

namespace {

constexpr double tol_tail = 1e-12;
constexpr double tol_imag = 1e-10;
constexpr int interval_samples = 512;

void require_time(double t)
{
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("dephasing: time must be finite and >= 0");
    }
}

double checked_real(cplx z, const char* what)
{
    if (std::abs(z.imag()) > tol_imag * (1.0 + std::abs(z.real()))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << ": imaginary residual " << z.imag() << " exceeds tolerance (real part " << z.real() << ")";
        throw std::logic_error(msg.str());
    }
    return z.real();
}

double cutoff_multiple(double s)
{
    return std::max(50.0, 40.0 + 10.0 * s);
}

// Upper bound on the frequency integral beyond x = w/omega_c > cut, using
// (1 - cos) <= 2 and cosh 2r - cos(.) sinh 2r <= e^{2r}.
double tail_bound(double cut, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    const double p = spec.s() - 2.0;
    const double shrink = 1.0 - std::max(0.0, p) / cut;
    return 2.0 * spec.eta() * std::exp(2.0 * env.r()) * std::pow(cut, p) * std::exp(-cut) / shrink;
}

} // namespace

QuadratureSettings frequency_settings()
{
    return {1e-13, 1e-12, 20000};
}

cplx gamma_closed_form(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    require_time(t);
    const double s = spec.s();
    const double x = spec.omega_c() * t; // gamma(t; omega_c) = gamma(omega_c t; 1)
    const double p = 1.0 - s;
    const double r2 = 2.0 * env.r();
    const cplx i{0.0, 1.0};
    const cplx up = std::pow(1.0 + i * x, p);
    const cplx down = std::pow(1.0 - i * x, p);
    const cplx up2 = std::pow(1.0 + 2.0 * i * x, p);
    const cplx down2 = std::pow(1.0 - 2.0 * i * x, p);
    const cplx phase = std::polar(1.0, env.theta());

    const cplx bracket = 2.0 * std::cosh(r2) * (2.0 - up - down) +
                         std::conj(phase) * std::sinh(r2) * (1.0 - 2.0 * down + down2) +
                         phase * std::sinh(r2) * (1.0 - 2.0 * up + up2);
    return 0.25 * spec.eta() * std::tgamma(s - 1.0) * bracket;
}

cplx gamma_rate_closed_form(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    require_time(t);
    const double s = spec.s();
    const double x = spec.omega_c() * t;
    const double r2 = 2.0 * env.r();
    const cplx i{0.0, 1.0};
    const cplx up = std::pow(1.0 + i * x, -s);
    const cplx down = std::pow(1.0 - i * x, -s);
    const cplx up2 = std::pow(1.0 + 2.0 * i * x, -s);
    const cplx down2 = std::pow(1.0 - 2.0 * i * x, -s);
    const cplx phase = std::polar(1.0, env.theta());

    const cplx bracket = std::cosh(r2) * (up - down) + std::conj(phase) * std::sinh(r2) * (down2 - down) +
                         phase * std::sinh(r2) * (up - up2);
    return spec.omega_c() * 0.5 * i * spec.eta() * std::tgamma(s) * bracket;
}

double gamma_analytic(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    if (std::abs(spec.s() - 1.0) < eps_pole) {
        return gamma_quadrature(t, env, spec);
    }
    return checked_real(gamma_closed_form(t, env, spec), "gamma_analytic");
}

double gamma_quadrature(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec,
                        const QuadratureSettings& settings)
{
    require_time(t);
    if (t == 0.0) {
        return 0.0;
    }
    const double cut = cutoff_multiple(spec.s());
    const double w_max = spec.omega_c() * cut;
    const double tail = tail_bound(cut, env, spec);
    if (tail > tol_tail) {
        std::ostringstream msg;
        msg << "gamma_quadrature: truncation tail bound " << tail << " exceeds " << tol_tail;
        throw ConvergenceError(msg.str());
    }

    // one seed panel per half period of cos(w t)
    const double period = std::numbers::pi / t;
    const auto panels = static_cast<std::size_t>(std::ceil(w_max / period));
    std::vector<double> breaks;
    breaks.reserve(panels + 1);
    for (std::size_t k = 0; k < panels; ++k) {
        breaks.push_back(static_cast<double>(k) * period);
    }
    breaks.push_back(w_max);

    const double c2 = std::cosh(2.0 * env.r());
    const double s2 = std::sinh(2.0 * env.r());
    const double theta = env.theta();
    auto integrand = [&](double w) {
        const double half_sin = std::sin(0.5 * w * t);
        const double one_minus_cos = 2.0 * half_sin * half_sin;
        return spec.density(w) * one_minus_cos / (w * w) * (c2 - std::cos(w * t - theta) * s2);
    };

    const QuadratureOutcome out = integrate(integrand, breaks, settings);
    if (!out.converged) {
        std::ostringstream msg;
        msg << "gamma_quadrature: frequency integral did not converge (t = " << t << ", s = " << spec.s()
            << ", error " << out.error_estimate << ")";
        throw ConvergenceError(msg.str());
    }
    return out.value;
}

double gamma_rate(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    return checked_real(gamma_rate_closed_form(t, env, spec), "gamma_rate");
}

DephasingTrajectory trajectory(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    return {t, gamma_analytic(t, env, spec), gamma_rate(t, env, spec)};
}

QubitState evolve(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    return {0.5, 0.5 * std::exp(-gamma_analytic(t, env, spec))};
}

HermitianGenerator generator(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    const DephasingTrajectory p = trajectory(t, env, spec);
    return {0.0, -0.5 * p.gamma_rate * std::exp(-p.gamma)};
}

std::vector<double> rate_sign_changes(double tau, const SqueezedEnvironment& env, const OhmicSpectrum& spec,
                                      int samples)
{
    if (!(tau > 0.0) || samples < 1) {
        throw std::invalid_argument("rate_sign_changes: need tau > 0 and samples >= 1");
    }
    auto rate = [&](double t) { return gamma_rate(t, env, spec); };
    const double root_tol = 1e-14 * std::max(1.0, tau);

    std::vector<double> roots;
    double t_prev = tau / samples;
    double f_prev = rate(t_prev);
    for (int k = 2; k <= samples; ++k) {
        const double t = tau * k / samples;
        const double f = rate(t);
        if (f_prev * f < 0.0) {
            roots.push_back(find_root(rate, t_prev, t, root_tol));
        } else if (f == 0.0 && k < samples) {
            roots.push_back(t);
        }
        t_prev = t;
        f_prev = f;
    }
    return roots;
}

QslResult qsl(double tau, const SqueezedEnvironment& env, const OhmicSpectrum& spec,
              const QuadratureSettings& settings)
{
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("dephasing: driving time tau must be finite and > 0");
    }
    std::vector<double> breaks{0.0};
    for (double root : rate_sign_changes(tau, env, spec)) {
        if (root > breaks.back() && root < tau) {
            breaks.push_back(root);
        }
    }
    breaks.push_back(tau);

    return unified_qsl(tau, QubitState::maximal_coherent(), evolve(tau, env, spec),
                       [&](double t) { return generator(t, env, spec); }, breaks, settings);
}

const char* to_string(RateSign sign)
{
    switch (sign) {
    case RateSign::positive: return "positive";
    case RateSign::negative: return "negative";
    case RateSign::boundary: return "boundary";
    }
    return "unknown";
}

RateSign classify_rate(double rate)
{
    if (std::abs(rate) < tol_sign) {
        return RateSign::boundary;
    }
    return rate > 0.0 ? RateSign::positive : RateSign::negative;
}

SignCell sign_cell(double tau, const SqueezedEnvironment& env, const OhmicSpectrum& spec)
{
    if (!(tau > 0.0)) {
        throw std::invalid_argument("sign_cell: tau must be > 0");
    }
    SignCell cell;
    cell.s = spec.s();
    cell.theta = env.theta();
    cell.rate_at_tau = gamma_rate(tau, env, spec);
    cell.at_tau = classify_rate(cell.rate_at_tau);

    double lowest = 0.0; // gamma'(0) = 0
    for (int k = 1; k <= interval_samples; ++k) {
        lowest = std::min(lowest, gamma_rate(tau * k / interval_samples, env, spec));
    }
    cell.min_rate = lowest;
    cell.negative_on_interval = lowest < -tol_sign;
    return cell;
}

SignMap sign_region(double r, double tau, std::span<const double> s_grid, std::span<const double> theta_grid,
                    double eta, double omega_c)
{
    if (s_grid.empty() || theta_grid.empty()) {
        throw std::invalid_argument("sign_region: grids must be non-empty");
    }
    if (!(tau > 0.0)) {
        throw std::invalid_argument("sign_region: tau must be > 0");
    }
    SignMap map;
    map.r = r;
    map.tau = tau;
    map.s_values.assign(s_grid.begin(), s_grid.end());
    map.theta_values.assign(theta_grid.begin(), theta_grid.end());
    map.cells.reserve(s_grid.size() * theta_grid.size());
    for (double s : s_grid) {
        const OhmicSpectrum spec{eta, s, omega_c};
        for (double theta : theta_grid) {
            map.cells.push_back(sign_cell(tau, SqueezedEnvironment{r, theta}, spec));
        }
    }
    return map;
}

double vacuum_speedup_threshold(double tau, double s_lo, double s_hi, double tol)
{
    if (!(tau > 0.0) || !(s_lo > 0.0) || !(s_hi > s_lo)) {
        throw std::invalid_argument("vacuum_speedup_threshold: need tau > 0 and 0 < s_lo < s_hi");
    }
    const auto vacuum = SqueezedEnvironment::vacuum();
    auto rate = [&](double s) { return gamma_rate(tau, vacuum, OhmicSpectrum{1.0, s}); };

    constexpr double step = 0.01;
    double s_prev = s_lo;
    double f_prev = rate(s_prev);
    const int steps = static_cast<int>(std::ceil((s_hi - s_lo) / step));
    for (int k = 1; k <= steps; ++k) {
        const double s = std::min(s_hi, s_lo + k * step);
        const double f = rate(s);
        if (f_prev > 0.0 && f <= 0.0) {
            return f == 0.0 ? s : find_root(rate, s_prev, s, tol);
        }
        s_prev = s;
        f_prev = f;
    }
    throw std::domain_error("vacuum_speedup_threshold: gamma'(tau) keeps its sign on the s range");
}

} // namespace sqsl::dephasing
