#pragma once

#include "sqsl/qubit.hpp"
#include "sqsl/quadrature.hpp"

#include <functional>
#include <span>

namespace sqsl {

enum class NormKind { op, hs, tr };

const char* to_string(NormKind kind);

struct QslResult {
    double tau = 0.0;
    double tau_qsl = 0.0;
    double ratio = 0.0;
    NormKind tight_norm = NormKind::op;
    double quad_error = 0.0;     ///< propagated error on tau_qsl
    MatrixNorms rates;           ///< time-averaged evolution rates Lambda_tau
    double sin2_bures = 0.0;     ///< sin^2 L(rho_0, rho_tau)
};

/// Unified bound
///
///     tau_qsl = max{1/Lambda_op, 1/Lambda_tr, 1/Lambda_hs} sin^2 L(rho_0, rho_tau)
///
/// with Lambda = (1/tau) int_0^tau ||L_t(rho_t)|| dt. Each norm of `generator`
/// is integrated separately over the panels given by `breakpoints` (which must
/// start at 0 and end at tau). Throws ConvergenceError if any integral fails
/// to reach the requested tolerance.
QslResult unified_qsl(double tau, const QubitState& initial, const QubitState& final_state,
                      const std::function<HermitianGenerator(double)>& generator,
                      std::span<const double> breakpoints, const QuadratureSettings& settings);

} // namespace sqsl
