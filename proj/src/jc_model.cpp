#include "sqsl/jc_model.hpp"

#include <cmath>
#include <stdexcept>

namespace sqsl::jc {

namespace {

void require_time(double t)
{
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("jc: time must be finite and >= 0");
    }
}

} // namespace

double alpha(double t, const LorentzianSpectrum& spec)
{
    require_time(t);
    if (t == 0.0) {
        return 0.0;
    }
    return -0.5 * spec.gamma0() * std::expm1(-spec.lambda() * t);
}

double vartheta(double t, const LorentzianSpectrum& spec)
{
    require_time(t);
    return 0.5 * spec.gamma0() * (t + std::expm1(-spec.lambda() * t) / spec.lambda());
}

QubitState evolve(double t, const SqueezedEnvironment& env, const LorentzianSpectrum& spec)
{
    const double v = vartheta(t, spec);
    const double r = env.r();
    const double c2 = std::cosh(2.0 * r);
    const cplx phase = std::polar(1.0, env.theta());

    const double rho11 = 0.5 * (1.0 + std::expm1(-2.0 * v * c2) / c2);
    const cplx rho10 = 0.25 * (std::exp(-std::exp(2.0 * r) * v) * (1.0 + phase) +
                               std::exp(-std::exp(-2.0 * r) * v) * (1.0 - phase));
    return {rho11, rho10};
}

HermitianGenerator generator(double t, const SqueezedEnvironment& env, const LorentzianSpectrum& spec)
{
    const double a = alpha(t, spec);
    const double v = vartheta(t, spec);
    const double r = env.r();
    const cplx phase = std::polar(1.0, env.theta());

    HermitianGenerator g;
    g.d11 = -std::exp(-2.0 * std::cosh(2.0 * r) * v) * a;
    g.d10 = 0.25 * a * (std::exp(-2.0 * r - std::exp(-2.0 * r) * v) * (phase - 1.0) -
                        std::exp(2.0 * r - std::exp(2.0 * r) * v) * (phase + 1.0));
    return g;
}

QslResult qsl(double tau, const SqueezedEnvironment& env, const LorentzianSpectrum& spec,
              const QuadratureSettings& settings)
{
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("jc: driving time tau must be finite and > 0");
    }
    // the rate integrand is smooth on [0, tau]: a single seed panel suffices
    const double panel[] = {0.0, tau};
    return unified_qsl(tau, QubitState::maximal_coherent(), evolve(tau, env, spec),
                       [&](double t) { return generator(t, env, spec); }, panel, settings);
}

} // namespace sqsl::jc
