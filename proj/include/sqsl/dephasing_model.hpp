#pragma once

// Pure-dephasing qubit in a squeezed vacuum reservoir with an Ohmic-family
// spectrum. The coherence of the maximal coherent state decays as
// e^{-gamma(t)}/2; populations stay at 1/2.

#include "sqsl/environment.hpp"
#include "sqsl/qsl.hpp"
#include "sqsl/quadrature.hpp"
#include "sqsl/qubit.hpp"

#include <span>
#include <vector>

namespace sqsl::dephasing {

/// Half-width of the window around s = 1 where Gamma(s - 1) has its pole and
/// gamma(t) is evaluated by quadrature instead of the closed form.
inline constexpr double eps_pole = 1e-3;

/// Cells with |gamma'| below this are reported as boundary cells.
inline constexpr double tol_sign = 1e-12;

/// Tolerances used for the frequency integral unless the caller overrides them.
QuadratureSettings frequency_settings();

struct DephasingTrajectory {
    double t = 0.0;
    double gamma = 0.0;
    double gamma_rate = 0.0;
};

/// Raw complex value of the closed-form dephasing factor (principal-branch
/// powers of 1 +- it and 1 +- 2it). Its imaginary part is rounding noise.
/// No pole routing: s must not equal 1.
cplx gamma_closed_form(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

/// Raw complex value of the closed-form dephasing rate.
cplx gamma_rate_closed_form(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

/// Dephasing factor from the closed form, or from gamma_quadrature when
/// |s - 1| < eps_pole. Throws std::logic_error if the closed form leaves an
/// imaginary residual above 1e-10 (1 + |Re|).
double gamma_analytic(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

/// Frequency-domain integral
///
///     int_0^wmax J(w) (1 - cos wt)/w^2 [cosh 2r - cos(wt - theta) sinh 2r] dw
///
/// with wmax = omega_c max(50, 40 + 10 s), seeded with panels of width pi/t.
/// Throws ConvergenceError if the integral or its tail bound misses tolerance.
double gamma_quadrature(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec,
                        const QuadratureSettings& settings = frequency_settings());

/// gamma'(t) from the closed form; negative values mark coherence revival.
double gamma_rate(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

DephasingTrajectory trajectory(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

QubitState evolve(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

HermitianGenerator generator(double t, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

/// Times in (0, tau) where gamma' changes sign, located on a uniform sample
/// of `samples` points and refined with find_root.
std::vector<double> rate_sign_changes(double tau, const SqueezedEnvironment& env, const OhmicSpectrum& spec,
                                      int samples = 256);

/// Speed-limit time. The rate integral is split at the sign changes of gamma'
/// so each panel has a smooth integrand.
QslResult qsl(double tau, const SqueezedEnvironment& env, const OhmicSpectrum& spec,
              const QuadratureSettings& settings = {});

enum class RateSign { positive, negative, boundary };

const char* to_string(RateSign sign);

struct SignCell {
    double s = 0.0;
    double theta = 0.0;
    double rate_at_tau = 0.0;
    double min_rate = 0.0;       ///< min of gamma' over the sampled [0, tau]
    RateSign at_tau = RateSign::boundary;
    bool negative_on_interval = false;
};

/// Sign of gamma' at t = tau (and min over [0, tau]) on an s x theta grid;
/// row-major with s outer.
struct SignMap {
    double r = 0.0;
    double tau = 0.0;
    std::vector<double> s_values;
    std::vector<double> theta_values;
    std::vector<SignCell> cells;

    const SignCell& at(std::size_t i_s, std::size_t i_theta) const
    {
        return cells[i_s * theta_values.size() + i_theta];
    }
};

RateSign classify_rate(double rate);

/// Single-cell evaluation shared by sign_region and the scan front end.
SignCell sign_cell(double tau, const SqueezedEnvironment& env, const OhmicSpectrum& spec);

SignMap sign_region(double r, double tau, std::span<const double> s_grid, std::span<const double> theta_grid,
                    double eta = 1.0, double omega_c = 1.0);

/// Smallest s in [s_lo, s_hi] at which the vacuum (r = 0) rate gamma'(tau)
/// turns negative, found by bracketing on an s grid then find_root.
double vacuum_speedup_threshold(double tau, double s_lo = 0.5, double s_hi = 10.0, double tol = 1e-12);

} // namespace sqsl::dephasing
