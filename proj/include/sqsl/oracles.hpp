#pragma once

// Brute-force reference computations. Nothing here is used on a production
// path; these exist so the closed forms can be checked against something that
// shares none of their algebra.

#include "sqsl/environment.hpp"
#include "sqsl/qubit.hpp"
#include "sqsl/quadrature.hpp"

#include <span>
#include <vector>

namespace sqsl::oracles {

struct OdeSettings {
    double step = 1e-4;
};

/// Fixed-step RK4 integration of the squeezed-reservoir master equation for
/// the damped Jaynes-Cummings qubit,
///
///   d rho/dt = -(N+1) a (s+s- rho - s- rho s+) - (N+1) a* (rho s+s- - s- rho s+)
///              - N a (rho s-s+ - s+ rho s-) - N a* (s-s+ rho - s+ rho s-)
///              + 2 (a* M s+ rho s+ + a M* s- rho s-),
///
/// with a(t) the real Lorentzian memory kernel, built from explicit 2x2
/// operator products. Starts in the maximal coherent state and returns the
/// state at each of the ascending `times`. Throws std::logic_error if the
/// trace drifts by more than 1e-8 or positivity is lost beyond tol_psd.
std::vector<QubitState> propagate_master_equation(std::span<const double> times, const SqueezedEnvironment& env,
                                                  const LorentzianSpectrum& spec, const OdeSettings& settings = {});

QubitState propagate_master_equation(double t_end, const SqueezedEnvironment& env, const LorentzianSpectrum& spec,
                                     const OdeSettings& settings = {});

/// Largest |trace - 1| seen by the most recent propagation on this thread.
double last_trace_drift();

/// (f(x + h) - f(x - h)) / (2h)
double finite_difference(const RealFunction& f, double x, double h);

/// Composite trapezoid rule on `points` equally spaced nodes.
double dense_trapezoid(const RealFunction& f, double a, double b, long points);

/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2 using eigendecomposition
/// square roots.
double fidelity_by_matrix_sqrt(const QubitState& a, const QubitState& b);

/// Norms from a general Hermitian eigensolver: op = max |l|, hs = sqrt(sum l^2),
/// tr = sum |l|.
MatrixNorms norms_by_eigensolver(const HermitianGenerator& g);

/// Eigenvalues (descending) of a 2x2 Hermitian matrix via Eigen.
EigenPair eigenvalues_by_eigensolver(double m11, double m22, cplx m12);

} // namespace sqsl::oracles
