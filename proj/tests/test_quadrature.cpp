#include "sqsl/errors.hpp"
#include "sqsl/oracles.hpp"
#include "sqsl/quadrature.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

using namespace sqsl;

TEST_CASE("smooth integrands")
{
    const auto sine = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(sine.converged);
    CHECK(sine.value == doctest::Approx(2.0).epsilon(1e-14));

    const auto gauss = integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0);
    CHECK(gauss.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
}

TEST_CASE("kinks are handled with and without breakpoints")
{
    const double exact = 2.0 - std::sin(3.0);
    auto f = [](double x) { return std::abs(std::cos(x)); };
    const auto blind = integrate(f, 0.0, 3.0);
    CHECK(blind.converged);
    CHECK(blind.value == doctest::Approx(exact).epsilon(1e-10));

    const std::array<double, 3> cuts{0.0, std::numbers::pi / 2, 3.0};
    const auto split = integrate(f, cuts);
    CHECK(split.converged);
    CHECK(split.value == doctest::Approx(exact).epsilon(1e-14));
    CHECK(split.subdivisions_used <= blind.subdivisions_used);
}

TEST_CASE("integrable endpoint singularity")
{
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {1e-10, 1e-10, 5000});
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("tightening the tolerance does not move the answer by more than the looser bound")
{
    auto f = [](double x) { return std::sin(10.0 * x) * std::exp(-x); };
    const auto loose = integrate(f, 0.0, 5.0, {1e-6, 1e-6, 2000});
    const auto tight = integrate(f, 0.0, 5.0, {1e-13, 1e-13, 2000});
    CHECK(std::abs(loose.value - tight.value) <= 1e-6);
    CHECK(tight.error_estimate <= loose.error_estimate);
}

TEST_CASE("empty and reversed ranges")
{
    auto f = [](double x) { return x * x; };
    CHECK(integrate(f, 1.0, 1.0).value == 0.0);
    CHECK_THROWS_AS(integrate(f, 2.0, 0.0), std::invalid_argument);
    const std::array<double, 3> unsorted{0.0, 2.0, 1.0};
    CHECK_THROWS_AS(integrate(f, unsorted), std::invalid_argument);
}

TEST_CASE("budget exhaustion is reported, not thrown")
{
    const auto r = integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, {1e-14, 1e-14, 3});
    CHECK_FALSE(r.converged);
    CHECK(r.subdivisions_used <= 3);
}

TEST_CASE("invalid settings and NaN integrands")
{
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, {-1.0, 1e-9, 10}), std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, {1e-10, 1e-9, 0}), std::invalid_argument);
    CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
                    std::domain_error);
    const std::array<double, 1> lonely{0.0};
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, lonely), std::invalid_argument);
}

TEST_CASE("dense trapezoid oracle agrees with the adaptive rule")
{
    auto f = [](double x) { return std::exp(std::sin(x)); };
    const double adaptive = integrate(f, 0.0, 2.0).value;
    CHECK(std::abs(oracles::dense_trapezoid(f, 0.0, 2.0, 200001) - adaptive) < 1e-9);
}

TEST_CASE("root finding")
{
    const double root = find_root([](double x) { return std::cos(x) - x; }, 0.0, 1.0, 1e-14);
    CHECK(root == doctest::Approx(0.73908513321516064).epsilon(1e-14));

    CHECK(find_root([](double x) { return x - 2.0; }, 2.0, 3.0, 1e-12) == 2.0);
    CHECK_THROWS_AS(find_root([](double x) { return x * x + 1.0; }, -1.0, 1.0, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(find_root([](double x) { return std::exp(x) - 1.5; }, -1.0, 3.0, 1e-14, 1), ConvergenceError);
}

TEST_CASE("refining the tolerance stays within the previous error estimate")
{
    const std::array<RealFunction, 3> integrands{
        [](double x) { return std::exp(-x) * std::cos(7.0 * x); },
        [](double x) { return 1.0 / (1.0 + 25.0 * x * x); },
        [](double x) { return std::sqrt(x) * std::log1p(x); },
    };
    for (const auto& f : integrands) {
        double tol = 1e-4;
        QuadratureOutcome prev = integrate(f, 0.0, 2.0, {tol, tol, 4000});
        for (int k = 0; k < 6; ++k) {
            tol /= 10.0;
            const QuadratureOutcome next = integrate(f, 0.0, 2.0, {tol, tol, 4000});
            REQUIRE(prev.converged);
            CHECK(std::abs(next.value - prev.value) <= prev.error_estimate);
            prev = next;
        }
    }
}

TEST_CASE("integration is linear up to the combined error estimates")
{
    auto f = [](double x) { return std::sin(3.0 * x) * std::exp(-0.5 * x); };
    auto g = [](double x) { return 1.0 / (2.0 + std::cos(x)); };
    const double a = 2.5;
    const double b = -1.25;
    const auto If = integrate(f, 0.0, 4.0);
    const auto Ig = integrate(g, 0.0, 4.0);
    const auto Ih = integrate([&](double x) { return a * f(x) + b * g(x); }, 0.0, 4.0);
    CHECK(std::abs(Ih.value - (a * If.value + b * Ig.value)) <=
          Ih.error_estimate + std::abs(a) * If.error_estimate + std::abs(b) * Ig.error_estimate + 1e-15);
}

TEST_CASE("root finding examples")
{
    CHECK(find_root([](double x) { return x - 1.0; }, 0.0, 2.0, 1e-14) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(find_root([](double s) { return std::sin(s * std::atan(3.0)); }, 2.0, 3.0, 1e-14) ==
          doctest::Approx(std::numbers::pi / std::atan(3.0)).epsilon(1e-13));
    CHECK(find_root([](double x) { return x * x * x - 2.0; }, 1.0, 2.0, 1e-14) ==
          doctest::Approx(std::cbrt(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(find_root([](double x) { return x; }, 1.0, -1.0, 1e-12), std::invalid_argument);
}
