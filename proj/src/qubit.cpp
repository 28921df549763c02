#include "sqsl/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqsl {

QubitState::QubitState(double rho11, cplx rho10) : rho11_(rho11), rho10_(rho10)
{
    if (!std::isfinite(rho11) || !std::isfinite(rho10.real()) || !std::isfinite(rho10.imag())) {
        throw std::invalid_argument("QubitState: non-finite matrix element");
    }
}

namespace {

double clamped_determinant(const QubitState& s, const char* which)
{
    const double det = s.determinant();
    if (det < -tol_psd) {
        throw std::domain_error(std::string("fidelity: state ") + which +
                                " is not positive semidefinite (det = " + std::to_string(det) + ")");
    }
    return std::max(det, 0.0);
}

} // namespace

double infidelity(const QubitState& a, const QubitState& b)
{
    const double det_a = clamped_determinant(a, "a");
    const double det_b = clamped_determinant(b, "b");
    const double population = a.rho11() - b.rho11();
    const double purity = std::sqrt(det_a) - std::sqrt(det_b);
    const double d = std::norm(a.rho10() - b.rho10()) + population * population + purity * purity;
    return std::min(d, 1.0);
}

double fidelity(const QubitState& a, const QubitState& b)
{
    return 1.0 - infidelity(a, b);
}

double bures_angle(const QubitState& a, const QubitState& b)
{
    return std::asin(std::sqrt(infidelity(a, b)));
}

MatrixNorms norms(const HermitianGenerator& g)
{
    const double m = std::hypot(g.d11, std::abs(g.d10));
    return {m, std::numbers::sqrt2 * m, 2.0 * m};
}

EigenPair eigenvalues_2x2_hermitian(double m11, double m22, cplx m12)
{
    const double mean = 0.5 * (m11 + m22);
    const double radius = std::hypot(0.5 * (m11 - m22), std::abs(m12));
    return {mean + radius, mean - radius};
}

} // namespace sqsl
