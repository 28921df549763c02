#pragma once

#include "sqsl/qubit.hpp"

namespace sqsl {

/// Squeezed vacuum reservoir with squeezing magnitude r >= 0 and phase theta.
class SqueezedEnvironment {
public:
    SqueezedEnvironment(double r, double theta);

    double r() const { return r_; }
    double theta() const { return theta_; }

    /// Effective photon number sinh^2 r.
    double n() const;
    /// Squeezing correlation -cosh r sinh r e^{i theta}; |M|^2 = N (N + 1).
    cplx m() const;

    static SqueezedEnvironment vacuum() { return {0.0, 0.0}; }

private:
    double r_;
    double theta_;
};

/// Lorentzian coupling spectrum centred on the qubit frequency, which sets the
/// unit of frequency (omega_0 = 1).
class LorentzianSpectrum {
public:
    LorentzianSpectrum(double gamma0, double lambda);

    double gamma0() const { return gamma0_; }
    double lambda() const { return lambda_; }

    /// J(omega) at detuning omega - omega_0.
    double density(double detuning) const;

private:
    double gamma0_;
    double lambda_;
};

enum class Ohmicity { sub_ohmic, ohmic, super_ohmic };

/// J(omega) = eta omega^s / omega_c^{s-1} exp(-omega / omega_c).
class OhmicSpectrum {
public:
    OhmicSpectrum(double eta, double s, double omega_c = 1.0);

    double eta() const { return eta_; }
    double s() const { return s_; }
    double omega_c() const { return omega_c_; }
    Ohmicity kind() const;

    double density(double omega) const;

private:
    double eta_;
    double s_;
    double omega_c_;
};

const char* to_string(Ohmicity kind);

} // namespace sqsl
