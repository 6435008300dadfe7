#pragma once

// Independent numerical references for the closed-form stiffness model. Nothing in here
// calls evaluation_function: the energy route only uses internal_moments (checked on its own
// against moment_decomposition_oracle) and the raw material and section constants.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "blsmech/error.hpp"
#include "blsmech/kinematics.hpp"
#include "blsmech/mechanics.hpp"
#include "blsmech/quadrature.hpp"

namespace blsmech {

struct OracleReport {
    double value = 0.0;
    double reference = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
};

inline OracleReport make_report(double value, double reference) {
    OracleReport r{value, reference, std::abs(value - reference), 0.0};
    r.rel_error = r.abs_error / std::max(std::abs(reference), 1e-30);
    return r;
}

namespace oracle {

using Vec3 = std::array<double, 3>;

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

/// Exact integral of M^2 over a straight piece on which M varies linearly from m0 to m1.
inline double linear_moment_energy(double m0, double m1, double length) {
    return length * (m0 * m0 + m0 * m1 + m1 * m1) / 3.0;
}

}  // namespace oracle

/// Moments from r x F in the base frame: torsion is the projection on the section tangent,
/// bending the projection on the in-plane normal pointing away from the centre of curvature.
inline SectionMoments moment_decomposition_oracle(double tip_force, const ArcGeometry& arc, double phi) {
    detail::require_domain(!arc.is_straight(), "moment decomposition needs a curved arc (alpha > 0)");
    detail::require_domain(std::isfinite(phi) && phi >= 0.0 && phi <= arc.alpha(),
                           "section angle phi must lie in [0, alpha] (got " + format_g(phi) + ")");
    const double R = arc.R();
    const double theta_tip = arc.alpha();
    const double theta = theta_tip - phi;
    const oracle::Vec3 tip{R * std::sin(theta_tip), R - R * std::cos(theta_tip), 0.0};
    const oracle::Vec3 section{R * std::sin(theta), R - R * std::cos(theta), 0.0};
    const oracle::Vec3 load{0.0, 0.0, tip_force};
    const oracle::Vec3 moment = oracle::cross(oracle::sub(tip, section), load);
    const oracle::Vec3 tangent{std::cos(theta), std::sin(theta), 0.0};
    const oracle::Vec3 outward{std::sin(theta), -std::cos(theta), 0.0};
    return {oracle::dot(moment, outward), oracle::dot(moment, tangent)};
}

/// U = int_0^alpha [M_b^2 / (2EI) + M_t^2 / (2 G I_p)] R dphi by composite Simpson.
inline double strain_energy_quadrature(double tip_force, const Material& mat, const BeamSection& sec,
                                       const ArcGeometry& arc, const QuadratureSpec& spec = {}) {
    if (arc.is_straight()) {
        throw DomainError("strain_energy_quadrature needs alpha > 0; a straight beam has the closed form U = F^2 C^3 / (6EI)");
    }
    const double EI = mat.E() * sec.I();
    const double GIp = mat.G() * sec.I_p();
    const double R = arc.R();
    auto density = [&](double phi) {
        const SectionMoments m = internal_moments(tip_force, arc, std::min(phi, arc.alpha()));
        return (m.bending * m.bending / (2.0 * EI) + m.torsion * m.torsion / (2.0 * GIp)) * R;
    };
    return composite_simpson(density, 0.0, arc.alpha(), spec);
}

inline double default_fd_step(double tip_force) { return std::max(1e-3 * std::abs(tip_force), 1e-6); }

/// Central difference of the quadrature strain energy with respect to the tip load.
inline double displacement_castigliano_fd(double tip_force, double step, const Material& mat, const BeamSection& sec,
                                          const ArcGeometry& arc, const QuadratureSpec& spec = {}) {
    detail::require_domain(std::isfinite(tip_force) && tip_force > 0.0,
                           "tip force must be positive (got " + format_g(tip_force) + ")");
    detail::require_domain(step > 0.0 && step < tip_force / 10.0,
                           "finite-difference step " + format_g(step) + " N must lie in (0, F/10)");
    detail::require_domain(step >= 1e-9 * tip_force,
                           "finite-difference step " + format_g(step) + " N is too small relative to F");
    const double up = strain_energy_quadrature(tip_force + step, mat, sec, arc, spec);
    const double down = strain_energy_quadrature(tip_force - step, mat, sec, arc, spec);
    return (up - down) / (2.0 * step);
}

/// Closed-form stiffness expressed through any F(alpha) model; lets verification swap in a mutated model.
using EvaluationModel = std::function<EvaluationBreakdown(double alpha, double nu, double lambda)>;

inline double model_stiffness(const EvaluationModel& model, const Material& mat, const BeamSection& sec,
                              const ArcGeometry& arc) {
    const double C = arc.C();
    return 4.0 * mat.E() * sec.I() / (C * C * C) * model(arc.alpha(), mat.nu(), sec.lambda()).F_alpha;
}

/// value = closed-form k, reference = F / delta with delta from the finite-difference Castigliano route.
inline OracleReport stiffness_via_quadrature(const Material& mat, const BeamSection& sec, const ArcGeometry& arc,
                                             const QuadratureSpec& spec = {}, const EvaluationModel& model = {}) {
    constexpr double kUnitLoad = 1.0;
    const double delta = displacement_castigliano_fd(kUnitLoad, default_fd_step(kUnitLoad), mat, sec, arc, spec);
    const double k_closed = model ? model_stiffness(model, mat, sec, arc) : closed_form_stiffness(mat, sec, arc);
    return make_report(k_closed, kUnitLoad / delta);
}

/// Tip stiffness of a polygon of N straight elastic segments inscribed in the arc, by unit-load virtual work.
inline double discrete_chain_stiffness(int segments, const Material& mat, const BeamSection& sec,
                                       const ArcGeometry& arc) {
    detail::require_domain(segments >= 2, "discrete chain needs at least 2 segments (got " + std::to_string(segments) + ")");
    const double EI = mat.E() * sec.I();
    const double GIp = mat.G() * sec.I_p();
    const double C = arc.C();

    std::vector<oracle::Vec3> nodes(static_cast<std::size_t>(segments) + 1);
    for (int j = 0; j <= segments; ++j) {
        const PlanarPoint p = point_on_arc(arc, C * static_cast<double>(j) / segments);
        nodes[static_cast<std::size_t>(j)] = {p.x, p.y, 0.0};
    }
    const oracle::Vec3& tip = nodes.back();
    const oracle::Vec3 unit_load{0.0, 0.0, 1.0};

    double compliance = 0.0;
    for (int j = 0; j < segments; ++j) {
        const oracle::Vec3& a = nodes[static_cast<std::size_t>(j)];
        const oracle::Vec3& b = nodes[static_cast<std::size_t>(j) + 1];
        const oracle::Vec3 chord = oracle::sub(b, a);
        const double length = std::sqrt(oracle::dot(chord, chord));
        const oracle::Vec3 tangent{chord[0] / length, chord[1] / length, 0.0};
        const oracle::Vec3 normal = oracle::cross(unit_load, tangent);
        const oracle::Vec3 m_a = oracle::cross(oracle::sub(tip, a), unit_load);
        const oracle::Vec3 m_b = oracle::cross(oracle::sub(tip, b), unit_load);
        compliance += oracle::linear_moment_energy(oracle::dot(m_a, normal), oracle::dot(m_b, normal), length) / EI;
        compliance += oracle::linear_moment_energy(oracle::dot(m_a, tangent), oracle::dot(m_b, tangent), length) / GIp;
    }
    return 1.0 / compliance;
}

}  // namespace blsmech
