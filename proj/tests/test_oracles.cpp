#include "sqsl/jc_model.hpp"
#include "sqsl/oracles.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

using namespace sqsl;

TEST_CASE("RK4 error shrinks by about 2^4 when the step halves")
{
    const SqueezedEnvironment env{0.6, 1.0};
    const LorentzianSpectrum spec{5.0, 1.0};
    const double t = 2.0;
    const QubitState exact = jc::evolve(t, env, spec);
    auto error = [&](double step) {
        const QubitState s = oracles::propagate_master_equation(t, env, spec, {step});
        return std::abs(s.rho11() - exact.rho11()) + std::abs(s.rho10() - exact.rho10());
    };
    const double coarse = error(0.04);
    const double fine = error(0.02);
    REQUIRE(fine > 0.0);
    const double order = std::log2(coarse / fine);
    CHECK(order > 3.7);
    CHECK(order < 4.3);
}

TEST_CASE("propagation preserves trace and returns the requested times")
{
    const std::array<double, 3> times{0.0, 0.35, 1.0};
    const auto states =
        oracles::propagate_master_equation(times, SqueezedEnvironment{1.0, 2.0}, LorentzianSpectrum{10.0, 1.0});
    REQUIRE(states.size() == 3);
    CHECK(states[0].rho11() == 0.5);
    CHECK(oracles::last_trace_drift() < 1e-12);
    for (const auto& s : states) {
        CHECK(s.is_positive());
    }
}

TEST_CASE("propagation argument checks")
{
    const SqueezedEnvironment env{0.0, 0.0};
    const LorentzianSpectrum spec{1.0, 1.0};
    const std::array<double, 2> backwards{1.0, 0.5};
    CHECK_THROWS_AS(oracles::propagate_master_equation(backwards, env, spec), std::invalid_argument);
    CHECK_THROWS_AS(oracles::propagate_master_equation(1.0, env, spec, {0.0}), std::invalid_argument);
}

TEST_CASE("finite difference and dense trapezoid")
{
    CHECK(oracles::finite_difference([](double x) { return std::sin(x); }, 0.3, 1e-5) ==
          doctest::Approx(std::cos(0.3)).epsilon(1e-10));
    CHECK_THROWS_AS(oracles::finite_difference([](double x) { return x; }, 0.0, 0.0), std::invalid_argument);

    CHECK(oracles::dense_trapezoid([](double x) { return x; }, 0.0, 1.0, 2) == doctest::Approx(0.5));
    CHECK(oracles::dense_trapezoid([](double x) { return std::exp(x); }, 0.0, 1.0, 100001) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-10));
    CHECK_THROWS_AS(oracles::dense_trapezoid([](double x) { return x; }, 0.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("eigensolver norms of a known matrix")
{
    const MatrixNorms n = oracles::norms_by_eigensolver({0.0, {1.0, 0.0}});
    CHECK(n.op == doctest::Approx(1.0));
    CHECK(n.hs == doctest::Approx(std::sqrt(2.0)));
    CHECK(n.tr == doctest::Approx(2.0));
}

TEST_CASE("finite difference reference values")
{
    CHECK(std::abs(oracles::finite_difference([](double x) { return x * x; }, 3.0, 1e-5) - 6.0) < 1e-9);
    CHECK(std::abs(oracles::finite_difference([](double x) { return std::exp(x); }, 0.0, 1e-5) - 1.0) < 1e-10);
}
