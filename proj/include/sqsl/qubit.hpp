#pragma once

// Exact 2x2 density-matrix algebra for a single qubit.
//
// Matrices are written in the ordered basis {|1>, |0>}:
//
//     rho = | rho11  rho10 |
//           | rho01  rho00 |
//
// Only rho11 and rho10 are stored; rho00 = 1 - rho11 and rho01 = conj(rho10),
// so every QubitState is unit-trace and Hermitian by construction.

#include <complex>

namespace sqsl {

using cplx = std::complex<double>;

/// Rounding slack allowed on the determinant of a closed-form state.
inline constexpr double tol_psd = 1e-12;

class QubitState {
public:
    QubitState(double rho11, cplx rho10);

    static QubitState maximal_coherent() { return {0.5, 0.5}; }
    static QubitState maximally_mixed() { return {0.5, 0.0}; }

    double rho11() const { return rho11_; }
    double rho00() const { return 1.0 - rho11_; }
    cplx rho10() const { return rho10_; }
    cplx rho01() const { return std::conj(rho10_); }

    double trace() const { return rho11_ + rho00(); }
    double determinant() const { return rho11_ * rho00() - std::norm(rho10_); }

    /// Positive semidefinite up to `tol` on the determinant.
    bool is_positive(double tol = tol_psd) const { return determinant() >= -tol; }

private:
    double rho11_;
    cplx rho10_;
};

/// Traceless Hermitian matrix diag(d11, -d11) with off-diagonal d10; used for
/// the time derivative L_t(rho_t) = d rho / dt of a QubitState.
struct HermitianGenerator {
    double d11 = 0.0;
    cplx d10 = 0.0;
};

struct MatrixNorms {
    double op = 0.0; ///< largest singular value
    double hs = 0.0; ///< Hilbert-Schmidt (Frobenius)
    double tr = 0.0; ///< trace norm, sum of singular values
};

struct EigenPair {
    double upper = 0.0;
    double lower = 0.0;
};

/// Uhlmann fidelity. For 2x2 states F = tr(ab) + 2 sqrt(det a det b), evaluated
/// as 1 - infidelity(a, b). Throws std::domain_error when either state is not
/// positive within tol_psd.
double fidelity(const QubitState& a, const QubitState& b);

/// 1 - F = |a10 - b10|^2 + (a11 - b11)^2 + (sqrt(det a) - sqrt(det b))^2,
/// a sum of squares that is exactly zero for identical states.
double infidelity(const QubitState& a, const QubitState& b);

/// arcsin(sqrt(1 - F)), in [0, pi/2].
double bures_angle(const QubitState& a, const QubitState& b);

/// Eigenvalues of the traceless generator are +-m with m = sqrt(d11^2 + |d10|^2),
/// so the three norms are m, sqrt(2) m and 2 m.
MatrixNorms norms(const HermitianGenerator& g);

EigenPair eigenvalues_2x2_hermitian(double m11, double m22, cplx m12);

} // namespace sqsl
