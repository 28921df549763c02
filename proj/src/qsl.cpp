#include "sqsl/qsl.hpp"

#include "sqsl/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sqsl {

const char* to_string(NormKind kind)
{
    switch (kind) {
    case NormKind::op: return "op";
    case NormKind::hs: return "hs";
    case NormKind::tr: return "tr";
    }
    return "unknown";
}

QslResult unified_qsl(double tau, const QubitState& initial, const QubitState& final_state,
                      const std::function<HermitianGenerator(double)>& generator,
                      std::span<const double> breakpoints, const QuadratureSettings& settings)
{
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw std::invalid_argument("driving time tau must be finite and > 0");
    }

    // sin^2(arccos sqrt F) = 1 - F
    const double sin2 = infidelity(initial, final_state);

    constexpr std::array kinds{NormKind::op, NormKind::hs, NormKind::tr};
    std::array<QuadratureOutcome, 3> integrals;
    for (std::size_t k = 0; k < kinds.size(); ++k) {
        const NormKind kind = kinds[k];
        integrals[k] = integrate(
            [&generator, kind](double t) {
                const MatrixNorms n = norms(generator(t));
                return kind == NormKind::op ? n.op : kind == NormKind::hs ? n.hs : n.tr;
            },
            breakpoints, settings);
        if (!integrals[k].converged) {
            std::ostringstream msg;
            msg << "evolution-rate integral (" << to_string(kind) << " norm) did not converge: error "
                << integrals[k].error_estimate << " after " << integrals[k].subdivisions_used << " panels";
            throw ConvergenceError(msg.str());
        }
    }

    QslResult result;
    result.tau = tau;
    result.sin2_bures = sin2;
    result.rates = {integrals[0].value / tau, integrals[1].value / tau, integrals[2].value / tau};

    // max over 1/Lambda is the min over the integrals; ties resolve to op
    std::size_t tight = 0;
    for (std::size_t k = 1; k < kinds.size(); ++k) {
        if (integrals[k].value < integrals[tight].value) {
            tight = k;
        }
    }
    const QuadratureOutcome& best = integrals[tight];
    result.tight_norm = kinds[tight];
    if (best.value > 0.0) {
        result.tau_qsl = sin2 * tau / best.value;
        result.quad_error = result.tau_qsl * best.error_estimate / best.value;
    } else {
        // a state that never moves has no speed limit to speak of
        result.tau_qsl = sin2 > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        result.quad_error = 0.0;
    }
    result.ratio = result.tau_qsl / tau;
    return result;
}

} // namespace sqsl
