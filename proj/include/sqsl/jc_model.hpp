#pragma once

// Damped Jaynes-Cummings qubit in a squeezed vacuum reservoir with a
// Lorentzian spectrum, starting from the maximal coherent state
// (|0> + |1>)/sqrt(2). Times are in units of 1/omega_0.

#include "sqsl/environment.hpp"
#include "sqsl/qsl.hpp"
#include "sqsl/quadrature.hpp"
#include "sqsl/qubit.hpp"

namespace sqsl::jc {

/// Memory kernel (gamma0/2)(1 - e^{-lambda t}).
double alpha(double t, const LorentzianSpectrum& spec);

/// Integrated kernel (gamma0/2)(t + (e^{-lambda t} - 1)/lambda); vartheta' = alpha.
double vartheta(double t, const LorentzianSpectrum& spec);

QubitState evolve(double t, const SqueezedEnvironment& env, const LorentzianSpectrum& spec);

/// Closed-form d rho / dt of `evolve`.
HermitianGenerator generator(double t, const SqueezedEnvironment& env, const LorentzianSpectrum& spec);

/// Speed-limit time for driving time tau. The op-norm rate integral sets the
/// bound; hs and tr are evaluated as well and reported through tight_norm.
QslResult qsl(double tau, const SqueezedEnvironment& env, const LorentzianSpectrum& spec,
              const QuadratureSettings& settings = {});

} // namespace sqsl::jc
