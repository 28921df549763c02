#include "sqsl/oracles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sqsl::oracles {

namespace {

using Mat = Eigen::Matrix2cd;

thread_local double trace_drift = 0.0;

// basis order {|1>, |0>}: sigma_+ = |1><0| sits at (0, 1)
Mat sigma_plus()
{
    Mat m = Mat::Zero();
    m(0, 1) = 1.0;
    return m;
}

Mat sigma_minus()
{
    return sigma_plus().adjoint();
}

class MasterEquation {
public:
    MasterEquation(const SqueezedEnvironment& env, const LorentzianSpectrum& spec)
        : n_(env.n()), m_(env.m()), gamma0_(spec.gamma0()), lambda_(spec.lambda()),
          sp_(sigma_plus()), sm_(sigma_minus()), spsm_(sp_ * sm_), smsp_(sm_ * sp_)
    {
    }

    Mat operator()(double t, const Mat& rho) const
    {
        // memory kernel written out here rather than borrowed from the model
        const cplx a = 0.5 * gamma0_ * (1.0 - std::exp(-lambda_ * t));
        const cplx ac = std::conj(a);
        const Mat sm_rho_sp = sm_ * rho * sp_;
        const Mat sp_rho_sm = sp_ * rho * sm_;
        Mat out = -(n_ + 1.0) * a * (spsm_ * rho - sm_rho_sp);
        out -= (n_ + 1.0) * ac * (rho * spsm_ - sm_rho_sp);
        out -= n_ * a * (rho * smsp_ - sp_rho_sm);
        out -= n_ * ac * (smsp_ * rho - sp_rho_sm);
        out += 2.0 * (ac * m_ * sp_ * rho * sp_ + a * std::conj(m_) * sm_ * rho * sm_);
        return out;
    }

private:
    double n_;
    cplx m_;
    double gamma0_;
    double lambda_;
    Mat sp_, sm_, spsm_, smsp_;
};

QubitState to_state(const Mat& rho)
{
    return {rho(0, 0).real(), rho(0, 1)};
}

void check_step(const Mat& rho, double t)
{
    const double drift = std::abs((rho(0, 0) + rho(1, 1)).real() - 1.0);
    trace_drift = std::max(trace_drift, drift);
    const double hermitian_gap = std::abs(rho(0, 1) - std::conj(rho(1, 0)));
    const double det = (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
    if (drift > 1e-8 || hermitian_gap > 1e-8 || det < -tol_psd) {
        std::ostringstream msg;
        msg << "master-equation oracle left the state space at t = " << t << " (trace drift " << drift
            << ", hermiticity gap " << hermitian_gap << ", det " << det << ")";
        throw std::logic_error(msg.str());
    }
}

Mat matrix_of(const QubitState& s)
{
    Mat m;
    m << s.rho11(), s.rho10(), s.rho01(), s.rho00();
    return m;
}

Mat hermitian_sqrt(const Mat& m)
{
    Eigen::SelfAdjointEigenSolver<Mat> solver(m);
    const Eigen::Vector2d roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.cast<cplx>().asDiagonal() * solver.eigenvectors().adjoint();
}

} // namespace

std::vector<QubitState> propagate_master_equation(std::span<const double> times, const SqueezedEnvironment& env,
                                                  const LorentzianSpectrum& spec, const OdeSettings& settings)
{
    if (!(settings.step > 0.0)) {
        throw std::invalid_argument("ODE step must be > 0");
    }
    const MasterEquation rhs(env, spec);
    trace_drift = 0.0;

    Mat rho = matrix_of(QubitState::maximal_coherent());
    double t = 0.0;
    std::vector<QubitState> out;
    out.reserve(times.size());
    for (double target : times) {
        if (!(target >= t)) {
            throw std::invalid_argument("propagate_master_equation: times must be ascending and >= 0");
        }
        const auto steps = static_cast<long>(std::ceil((target - t) / settings.step - 1e-9));
        const double h = steps > 0 ? (target - t) / static_cast<double>(steps) : 0.0;
        const double start = t;
        for (long k = 0; k < steps; ++k) {
            const double tk = start + static_cast<double>(k) * h;
            const Mat k1 = rhs(tk, rho);
            const Mat k2 = rhs(tk + 0.5 * h, rho + 0.5 * h * k1);
            const Mat k3 = rhs(tk + 0.5 * h, rho + 0.5 * h * k2);
            const Mat k4 = rhs(tk + h, rho + h * k3);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            check_step(rho, tk + h);
        }
        t = target;
        out.push_back(to_state(rho));
    }
    return out;
}

QubitState propagate_master_equation(double t_end, const SqueezedEnvironment& env, const LorentzianSpectrum& spec,
                                     const OdeSettings& settings)
{
    const double times[] = {t_end};
    return propagate_master_equation(times, env, spec, settings).front();
}

double last_trace_drift()
{
    return trace_drift;
}

double finite_difference(const RealFunction& f, double x, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite_difference: h must be > 0");
    }
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

double dense_trapezoid(const RealFunction& f, double a, double b, long points)
{
    if (points < 2) {
        throw std::invalid_argument("dense_trapezoid: need at least two points");
    }
    const double h = (b - a) / static_cast<double>(points - 1);
    // Neumaier summation: 1e6+ terms otherwise lose several digits
    double sum = 0.0;
    double carry = 0.0;
    for (long k = 0; k < points; ++k) {
        const double w = (k == 0 || k == points - 1) ? 0.5 : 1.0;
        const double term = w * f(a + static_cast<double>(k) * h);
        const double next = sum + term;
        carry += std::abs(sum) >= std::abs(term) ? (sum - next) + term : (term - next) + sum;
        sum = next;
    }
    return h * (sum + carry);
}

double fidelity_by_matrix_sqrt(const QubitState& a, const QubitState& b)
{
    const Mat root_a = hermitian_sqrt(matrix_of(a));
    const Mat inner = root_a * matrix_of(b) * root_a;
    const double trace = hermitian_sqrt(0.5 * (inner + inner.adjoint())).trace().real();
    return trace * trace;
}

MatrixNorms norms_by_eigensolver(const HermitianGenerator& g)
{
    const EigenPair e = eigenvalues_by_eigensolver(g.d11, -g.d11, g.d10);
    return {std::max(std::abs(e.upper), std::abs(e.lower)), std::sqrt(e.upper * e.upper + e.lower * e.lower),
            std::abs(e.upper) + std::abs(e.lower)};
}

EigenPair eigenvalues_by_eigensolver(double m11, double m22, cplx m12)
{
    Mat m;
    m << m11, m12, std::conj(m12), m22;
    Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
    const Eigen::Vector2d ev = solver.eigenvalues(); // ascending
    return {ev(1), ev(0)};
}

} // namespace sqsl::oracles
