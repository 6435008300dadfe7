#pragma once

// Conformance run of the closed-form model against the numerical oracles.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "blsmech/format.hpp"
#include "blsmech/fixtures.hpp"
#include "blsmech/mechanics.hpp"
#include "blsmech/oracles.hpp"

namespace blsmech {

struct VerifyGrid {
    std::string name;
    std::vector<double> alphas;
    std::vector<double> lambdas;
    std::vector<double> nus;
    QuadratureSpec quadrature;

    /// alpha = 0.1, 0.2, ..., 3.1 plus pi, lambda in {0.25, 0.5, 1, 2}, nu in {0, 0.35, 0.49}.
    static VerifyGrid full(int n_intervals = 10000) {
        VerifyGrid g{"full", {}, {0.25, 0.5, 1.0, 2.0}, {0.0, 0.35, 0.49}, {n_intervals}};
        for (int i = 1; i <= 31; ++i) g.alphas.push_back(0.1 * i);
        g.alphas.push_back(kPi);
        return g;
    }

    static VerifyGrid coarse(int n_intervals = 2000) {
        return {"coarse", {0.5, 1.0, 1.5, 2.0, 2.5, 3.0, kPi}, {0.25, 1.0, 2.0}, {0.0, 0.35}, {n_intervals}};
    }
};

struct VerificationCheck {
    std::string name;
    double worst = 0.0;
    double tolerance = 0.0;
    int cases = 0;
    bool passed = false;
};

struct VerificationReport {
    std::string grid;
    std::vector<VerificationCheck> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }

    std::string render() const {
        std::string out = "verification grid: " + grid + "\n";
        for (const auto& c : checks) {
            out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + "  cases=" + std::to_string(c.cases) +
                   "  worst=" + format_g(c.worst) + "  tol=" + format_g(c.tolerance) + "\n";
        }
        out += passed() ? "result: PASS\n" : "result: FAIL\n";
        return out;
    }
};

struct VerifySetup {
    double E = 2000.0;      // MPa
    double width = 10.0;    // mm, h = lambda * width
    double C = 100.0;       // mm
};

namespace detail {

inline void finish(VerificationCheck& c) { c.passed = std::isfinite(c.worst) && c.worst <= c.tolerance; }

inline void track(VerificationCheck& c, double err) {
    ++c.cases;
    c.worst = std::isfinite(err) ? std::max(c.worst, err) : std::numeric_limits<double>::infinity();
}

}  // namespace detail

inline VerificationReport run_verification(const VerifyGrid& grid, const EvaluationModel& model = evaluation_function,
                                           const VerifySetup& setup = {}) {
    VerificationReport rep;
    rep.grid = grid.name;

    VerificationCheck quad{"closed form vs quadrature stiffness (rel)", 0.0, 1e-6};
    VerificationCheck cast{"finite-difference delta vs 2U/F and 1/k (rel)", 0.0, 1e-6};
    for (double nu : grid.nus) {
        const Material mat(setup.E, nu);
        for (double lambda : grid.lambdas) {
            const BeamSection sec(lambda * setup.width, setup.width);
            for (double alpha : grid.alphas) {
                const ArcGeometry arc(setup.C, alpha);
                detail::track(quad, stiffness_via_quadrature(mat, sec, arc, grid.quadrature, model).rel_error);

                constexpr double F = 1.0;
                const double delta_fd = displacement_castigliano_fd(F, default_fd_step(F), mat, sec, arc, grid.quadrature);
                const double delta_energy = 2.0 * strain_energy_quadrature(F, mat, sec, arc, grid.quadrature) / F;
                const double delta_closed = F / model_stiffness(model, mat, sec, arc);
                detail::track(cast, std::max(make_report(delta_fd, delta_energy).rel_error,
                                             make_report(delta_fd, delta_closed).rel_error));
            }
        }
    }
    detail::finish(quad);
    detail::finish(cast);

    // Moments are compared on the natural scale F*R, since either component vanishes somewhere on the arc.
    VerificationCheck moments{"internal moments vs cross-product decomposition (rel to F*R)", 0.0, 1e-10};
    SplitMix64 rng(20240601);
    for (int i = 0; i < 100; ++i) {
        const double F = 0.1 + 9.9 * rng.uniform();
        const double C = 10.0 + 190.0 * rng.uniform();
        const double alpha = 0.01 + (kTwoPi - 0.01) * rng.uniform();
        const double phi = alpha * rng.uniform();
        const ArcGeometry arc(C, alpha);
        const SectionMoments a = internal_moments(F, arc, phi);
        const SectionMoments b = moment_decomposition_oracle(F, arc, phi);
        const double scale = F * arc.R();
        detail::track(moments, std::max(std::abs(a.bending - b.bending), std::abs(a.torsion - b.torsion)) / scale);
    }
    detail::finish(moments);

    VerificationCheck straight{"straight limit k vs 3EI/C^3 (rel)", 0.0, 1e-8};
    for (double nu : grid.nus) {
        const Material mat(setup.E, nu);
        for (double lambda : grid.lambdas) {
            const BeamSection sec(lambda * setup.width, setup.width);
            for (double alpha : {0.0, 1e-9, 1e-6}) {
                const ArcGeometry arc(setup.C, alpha);
                const double k_ref = 3.0 * mat.E() * sec.I() / (setup.C * setup.C * setup.C);
                detail::track(straight, make_report(model_stiffness(model, mat, sec, arc), k_ref).rel_error);
            }
        }
    }
    detail::finish(straight);

    VerificationCheck chain{"discrete chain N=200 vs closed form (rel)", 0.0, 1e-2};
    for (double lambda : grid.lambdas) {
        const Material mat(setup.E, 0.35);
        const BeamSection sec(lambda * setup.width, setup.width);
        for (double alpha : {kPi / 4.0, kPi / 2.0, kPi}) {
            const ArcGeometry arc(setup.C, alpha);
            detail::track(chain, make_report(discrete_chain_stiffness(200, mat, sec, arc),
                                             model_stiffness(model, mat, sec, arc)).rel_error);
        }
    }
    detail::finish(chain);

    rep.checks = {quad, cast, moments, straight, chain};
    return rep;
}

/// Evaluation function with the torsion term's sign flipped. Only used to show that verification catches it.
inline EvaluationBreakdown torsion_sign_flipped(double alpha, double nu, double lambda) {
    EvaluationBreakdown b = evaluation_function(alpha, nu, lambda);
    b.A_torsion = -b.A_torsion;
    b.F_alpha = 1.0 / (b.A_bending + 2.0 * (1.0 + nu) * b.A_torsion / (1.0 + lambda * lambda));
    return b;
}

}  // namespace blsmech
