#include "sqsl/verify.hpp"

#include "sqsl/dephasing_model.hpp"
#include "sqsl/jc_model.hpp"
#include "sqsl/oracles.hpp"
#include "sqsl/qubit.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <stdexcept>

namespace sqsl::verify {

namespace {

constexpr double pi = std::numbers::pi;

struct Tracker {
    double worst = 0.0;
    void add(double deviation) { worst = std::max(worst, std::isnan(deviation) ? std::numeric_limits<double>::infinity() : deviation); }
};

Check make_check(std::string name, const Tracker& t, double tolerance)
{
    return {std::move(name), t.worst, tolerance, t.worst <= tolerance};
}

QubitState random_state(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double rho11 = unit(rng);
    const double radius = std::sqrt(rho11 * (1.0 - rho11)) * std::sqrt(unit(rng));
    return {rho11, std::polar(radius, 2.0 * pi * unit(rng))};
}

const std::array jc_r{0.0, 0.4, 0.8};
const std::array jc_theta{0.0, 1.2, pi, 5.0};
const std::array jc_gamma0{0.1, 1.0, 5.0, 10.0};

const std::array deph_s{0.5, 0.999, 1.001, 1.5, 2.0, 2.5, 3.0, 4.0};
const std::array deph_r{0.0, 0.5, 1.0};
const std::array deph_theta{0.0, 0.5 * pi, pi, 1.5 * pi};
const std::array deph_t{0.5, 1.0, 3.0, 5.0};

Report norms_suite()
{
    std::mt19937_64 rng(20240611);
    std::normal_distribution<double> normal(0.0, 1.0);

    Tracker ratios;
    Tracker ordering;
    for (int i = 0; i < 1000; ++i) {
        const HermitianGenerator g{normal(rng), {normal(rng), normal(rng)}};
        const MatrixNorms n = norms(g);
        const MatrixNorms ref = oracles::norms_by_eigensolver(g);
        const double m = ref.op;
        ratios.add(std::abs(n.op - m) / m);
        ratios.add(std::abs(n.hs - std::numbers::sqrt2 * m) / (std::numbers::sqrt2 * m));
        ratios.add(std::abs(n.tr - 2.0 * m) / (2.0 * m));
        ordering.add(std::max(0.0, n.op - n.hs) + std::max(0.0, n.hs - n.tr));
    }

    Tracker closed_vs_sqrt;
    Tracker symmetry;
    for (int i = 0; i < 1000; ++i) {
        const QubitState a = random_state(rng);
        const QubitState b = random_state(rng);
        closed_vs_sqrt.add(std::abs(fidelity(a, b) - oracles::fidelity_by_matrix_sqrt(a, b)));
        symmetry.add(std::abs(fidelity(a, b) - fidelity(b, a)));
    }

    return {"norms",
            {make_check("norm_ratios_vs_eigensolver", ratios, 1e-14), make_check("norm_ordering", ordering, 0.0),
             make_check("fidelity_closed_form_vs_matrix_sqrt", closed_vs_sqrt, 1e-12),
             make_check("fidelity_symmetry", symmetry, 1e-14)}};
}

Report jc_oracle_suite()
{
    std::vector<double> times;
    for (int k = 0; k <= 50; ++k) {
        times.push_back(0.1 * k);
    }
    Tracker elements;
    Tracker drift;
    for (double r : jc_r) {
        for (double theta : jc_theta) {
            for (double g0 : jc_gamma0) {
                const SqueezedEnvironment env{r, theta};
                const LorentzianSpectrum spec{g0, 1.0};
                const auto states = oracles::propagate_master_equation(times, env, spec);
                drift.add(oracles::last_trace_drift());
                for (std::size_t k = 0; k < times.size(); ++k) {
                    const QubitState closed = jc::evolve(times[k], env, spec);
                    elements.add(std::abs(closed.rho11() - states[k].rho11()));
                    elements.add(std::abs(closed.rho10() - states[k].rho10()));
                }
            }
        }
    }
    return {"jc-oracle",
            {make_check("jc_closed_form_vs_master_equation", elements, 1e-7),
             make_check("master_equation_trace_drift", drift, 1e-10)}};
}

Report dephasing_oracle_suite()
{
    Tracker relative;
    for (double s : deph_s) {
        for (double r : deph_r) {
            for (double theta : deph_theta) {
                for (double t : deph_t) {
                    const SqueezedEnvironment env{r, theta};
                    const OhmicSpectrum spec{1.0, s};
                    const double closed = dephasing::gamma_analytic(t, env, spec);
                    const double quad = dephasing::gamma_quadrature(t, env, spec);
                    relative.add(std::abs(closed - quad) / std::abs(quad));
                }
            }
        }
    }
    Tracker vacuum;
    for (double t : deph_t) {
        const double quad = dephasing::gamma_quadrature(t, SqueezedEnvironment::vacuum(), OhmicSpectrum{1.0, 1.0});
        vacuum.add(std::abs(quad - 0.5 * std::log1p(t * t)));
    }
    return {"dephasing-oracle",
            {make_check("gamma_analytic_vs_quadrature", relative, 1e-8),
             make_check("vacuum_ohmic_limit", vacuum, 1e-10)}};
}

Report derivatives_suite()
{
    constexpr double h = 1e-5;
    Tracker jc_fd;
    Tracker kernel;
    for (double r : jc_r) {
        for (double theta : jc_theta) {
            for (double g0 : jc_gamma0) {
                const SqueezedEnvironment env{r, theta};
                const LorentzianSpectrum spec{g0, 1.0};
                for (int k = 1; k <= 50; ++k) {
                    const double t = 0.1 * k;
                    const HermitianGenerator g = jc::generator(t, env, spec);
                    const double d11 = oracles::finite_difference(
                        [&](double x) { return jc::evolve(x, env, spec).rho11(); }, t, h);
                    const double d10_re = oracles::finite_difference(
                        [&](double x) { return jc::evolve(x, env, spec).rho10().real(); }, t, h);
                    const double d10_im = oracles::finite_difference(
                        [&](double x) { return jc::evolve(x, env, spec).rho10().imag(); }, t, h);
                    jc_fd.add(std::abs(g.d11 - d11));
                    jc_fd.add(std::abs(g.d10 - cplx{d10_re, d10_im}));
                    kernel.add(std::abs(jc::alpha(t, spec) -
                                        oracles::finite_difference([&](double x) { return jc::vartheta(x, spec); },
                                                                   t, h)));
                }
            }
        }
    }

    Tracker rate_fd;
    Tracker residual;
    for (double s : deph_s) {
        for (double r : deph_r) {
            for (double theta : deph_theta) {
                for (double t : deph_t) {
                    const SqueezedEnvironment env{r, theta};
                    const OhmicSpectrum spec{1.0, s};
                    const double fd = oracles::finite_difference(
                        [&](double x) { return dephasing::gamma_analytic(x, env, spec); }, t, h);
                    rate_fd.add(std::abs(dephasing::gamma_rate(t, env, spec) - fd));
                    for (cplx z : {dephasing::gamma_closed_form(t, env, spec),
                                   dephasing::gamma_rate_closed_form(t, env, spec)}) {
                        residual.add(std::abs(z.imag()) / (1.0 + std::abs(z.real())));
                    }
                }
            }
        }
    }
    return {"derivatives",
            {make_check("jc_generator_vs_finite_difference", jc_fd, 1e-7),
             make_check("vartheta_derivative_vs_alpha", kernel, 1e-8),
             make_check("gamma_rate_vs_finite_difference", rate_fd, 1e-6),
             make_check("closed_form_imaginary_residual", residual, 1e-10)}};
}

} // namespace

Suite parse_suite(std::string_view name)
{
    if (name == "norms") {
        return Suite::norms;
    }
    if (name == "jc-oracle") {
        return Suite::jc_oracle;
    }
    if (name == "dephasing-oracle") {
        return Suite::dephasing_oracle;
    }
    if (name == "derivatives") {
        return Suite::derivatives;
    }
    throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

const char* to_string(Suite suite)
{
    switch (suite) {
    case Suite::norms: return "norms";
    case Suite::jc_oracle: return "jc-oracle";
    case Suite::dephasing_oracle: return "dephasing-oracle";
    case Suite::derivatives: return "derivatives";
    }
    return "unknown";
}

std::vector<std::string> suite_names()
{
    return {"norms", "jc-oracle", "dephasing-oracle", "derivatives"};
}

bool Report::pass() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::to_json() const
{
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["pass"] = pass();
    doc["checks"] = nlohmann::json::array();
    for (const Check& c : checks) {
        doc["checks"].push_back(
            {{"name", c.name}, {"max_deviation", c.max_deviation}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    return doc.dump(2);
}

Report run(Suite suite)
{
    switch (suite) {
    case Suite::norms: return norms_suite();
    case Suite::jc_oracle: return jc_oracle_suite();
    case Suite::dephasing_oracle: return dephasing_oracle_suite();
    case Suite::derivatives: return derivatives_suite();
    }
    throw std::invalid_argument("unknown verify suite");
}

} // namespace sqsl::verify
