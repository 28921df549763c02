#include "sqsl/environment.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sqsl {

SqueezedEnvironment::SqueezedEnvironment(double r, double theta) : r_(r), theta_(theta)
{
    if (!std::isfinite(r) || r < 0.0) {
        throw std::invalid_argument("squeezing magnitude r must be finite and >= 0");
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("squeezing phase theta must be finite");
    }
}

double SqueezedEnvironment::n() const
{
    const double sh = std::sinh(r_);
    return sh * sh;
}

cplx SqueezedEnvironment::m() const
{
    return -std::cosh(r_) * std::sinh(r_) * std::polar(1.0, theta_);
}

LorentzianSpectrum::LorentzianSpectrum(double gamma0, double lambda) : gamma0_(gamma0), lambda_(lambda)
{
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0)) {
        throw std::invalid_argument("gamma0 must be finite and > 0");
    }
    if (!(lambda > 0.0)) {
        throw std::invalid_argument("lambda must be > 0");
    }
}

double LorentzianSpectrum::density(double detuning) const
{
    return gamma0_ / (2.0 * std::numbers::pi) * lambda_ * lambda_ /
           (detuning * detuning + lambda_ * lambda_);
}

OhmicSpectrum::OhmicSpectrum(double eta, double s, double omega_c) : eta_(eta), s_(s), omega_c_(omega_c)
{
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("eta must be finite and > 0");
    }
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("Ohmicity exponent s must be finite and > 0");
    }
    if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
        throw std::invalid_argument("cutoff omega_c must be finite and > 0");
    }
}

Ohmicity OhmicSpectrum::kind() const
{
    if (s_ < 1.0) {
        return Ohmicity::sub_ohmic;
    }
    return s_ == 1.0 ? Ohmicity::ohmic : Ohmicity::super_ohmic;
}

double OhmicSpectrum::density(double omega) const
{
    return eta_ * std::pow(omega, s_) / std::pow(omega_c_, s_ - 1.0) * std::exp(-omega / omega_c_);
}

const char* to_string(Ohmicity kind)
{
    switch (kind) {
    case Ohmicity::sub_ohmic: return "sub-ohmic";
    case Ohmicity::ohmic: return "ohmic";
    case Ohmicity::super_ohmic: return "super-ohmic";
    }
    return "unknown";
}

} // namespace sqsl
