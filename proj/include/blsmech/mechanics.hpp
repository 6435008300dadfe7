#pragma once

// Lateral stiffness of a tensioned bone-like chain modelled as a curved cantilever
// of constant curvature, loaded at its free end perpendicular to the plane of the arc.
//
// Units throughout: N, mm, MPa (N/mm^2), rad.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "blsmech/error.hpp"
#include "blsmech/format.hpp"
#include "blsmech/units.hpp"

namespace blsmech {

inline constexpr double kTwoPi = 2.0 * kPi;

/// Elastic constants of the rigid chain material. G is always derived from E and nu.
class Material {
public:
    Material(double youngs_modulus, double poisson_ratio) : E_(youngs_modulus), nu_(poisson_ratio) {
        detail::require_domain(std::isfinite(E_) && E_ > 0.0,
                               "E must be positive (got " + format_g(E_) + ")");
        detail::require_domain(std::isfinite(nu_) && nu_ >= 0.0 && nu_ < 0.5,
                               "nu must lie in [0, 0.5) (got " + format_g(nu_) + ")");
    }

    double E() const { return E_; }
    double nu() const { return nu_; }
    double G() const { return E_ / (2.0 * (1.0 + nu_)); }

private:
    double E_;
    double nu_;
};

inline double shear_modulus(double E, double nu) { return Material(E, nu).G(); }

/// Rectangular section: h is the height, b the width; the lateral load bends about the axis giving I = h b^3 / 12.
class BeamSection {
public:
    BeamSection(double height, double width) : h_(height), b_(width) {
        detail::require_domain(std::isfinite(h_) && h_ > 0.0,
                               "section height h must be positive (got " + format_g(h_) + ")");
        detail::require_domain(std::isfinite(b_) && b_ > 0.0,
                               "section width b must be positive (got " + format_g(b_) + ")");
    }

    double h() const { return h_; }
    double b() const { return b_; }
    double I() const { return h_ * b_ * b_ * b_ / 12.0; }
    double lambda() const { return h_ / b_; }
    double I_p() const { return I() * (1.0 + lambda() * lambda()); }

private:
    double h_;
    double b_;
};

inline BeamSection section_properties(double h, double b) { return BeamSection(h, b); }

/// Constant-curvature state of the backbone: arc length C, centre angle alpha, radius R = C / alpha.
class ArcGeometry {
public:
    /// Below this angle the arc is treated as straight and R as infinite.
    static constexpr double kStraightAngle = 1e-12;

    ArcGeometry(double arc_length, double angle) : C_(arc_length), alpha_(angle) {
        detail::require_domain(std::isfinite(C_) && C_ > 0.0,
                               "arc length C must be positive (got " + format_g(C_) + ")");
        detail::require_domain(std::isfinite(alpha_) && alpha_ >= 0.0 && alpha_ <= kTwoPi,
                               "bending angle alpha must lie in [0, 2*pi] rad (got " + format_g(alpha_) + ")");
    }

    double C() const { return C_; }
    double alpha() const { return alpha_; }
    bool is_straight() const { return alpha_ < kStraightAngle; }
    double R() const { return is_straight() ? std::numeric_limits<double>::infinity() : C_ / alpha_; }

    /// Angles above a half turn were never characterised experimentally.
    bool is_extrapolated() const { return alpha_ > kPi; }

private:
    double C_;
    double alpha_;
};

inline ArcGeometry arc_from_angle(double C, double alpha) { return ArcGeometry(C, alpha); }

/// Chain-level parameters: height h, rigid-chain length L, rope pre-tension F_T, segment count N.
class BLSChain {
public:
    BLSChain(double height, double length, double tension, int segments)
        : h_(height), L_(length), F_T_(tension), N_(segments) {
        detail::require_domain(std::isfinite(h_) && h_ > 0.0, "chain height h must be positive (got " + format_g(h_) + ")");
        detail::require_domain(std::isfinite(L_) && L_ > 0.0, "chain length L must be positive (got " + format_g(L_) + ")");
        detail::require_domain(std::isfinite(F_T_) && F_T_ >= 0.0,
                               "rope tension F_T must be non-negative (got " + format_g(F_T_) + ")");
        detail::require_domain(N_ >= 1, "segment count N must be at least 1 (got " + std::to_string(N_) + ")");
        detail::require_domain(L_ >= h_, "chain length L (" + format_g(L_) + ") is shorter than its height h (" +
                                             format_g(h_) + ")");
    }

    double h() const { return h_; }
    double L() const { return L_; }
    double F_T() const { return F_T_; }
    int N() const { return N_; }

    /// Largest tip force the chain carries before the segments separate.
    double break_threshold() const { return F_T_ * h_ / L_; }

private:
    double h_;
    double L_;
    double F_T_;
    int N_;
};

struct EvaluationBreakdown {
    double alpha = 0.0;
    double A_bending = 0.0;
    double A_torsion = 0.0;
    double F_alpha = 0.0;

    bool operator==(const EvaluationBreakdown&) const = default;
};

struct StiffnessResult {
    double k = 0.0;            // N/mm
    double F_alpha = 0.0;
    double break_force = 0.0;  // N
    EvaluationBreakdown breakdown;
    bool extrapolated = false;
};

struct SectionMoments {
    double bending = 0.0;  // N mm
    double torsion = 0.0;  // N mm
};

namespace detail {

// Below this angle both shape functions are summed from their Maclaurin series. The direct
// forms lose about log10(1/alpha^2) digits to cancellation, so the switch sits where the
// direct form is still good to ~1e-13 and the truncated series to machine precision.
inline constexpr double kSeriesThreshold = 0.5;
inline constexpr int kSeriesTerms = 14;

// A_b = sum_{k>=1} 2 (-1)^(k+1) 4^k alpha^(2k-2) / (2k+1)!
inline double bending_series(double alpha) {
    const double a2 = alpha * alpha;
    double sum = 0.0;
    double pow4 = 4.0;
    double fact = 6.0;  // 3!
    double apow = 1.0;
    double sign = 1.0;
    for (int k = 1; k <= kSeriesTerms; ++k) {
        sum += sign * 2.0 * pow4 * apow / fact;
        pow4 *= 4.0;
        fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
        apow *= a2;
        sign = -sign;
    }
    return sum;
}

// A_t = sum_{k>=2} (-1)^k (2^(2k+1) - 8) alpha^(2k-2) / (2k+1)!
inline double torsion_series(double alpha) {
    const double a2 = alpha * alpha;
    double sum = 0.0;
    double pow2 = 32.0;  // 2^(2k+1) at k = 2
    double fact = 120.0;
    double apow = a2;
    double sign = 1.0;
    for (int k = 2; k <= kSeriesTerms + 1; ++k) {
        sum += sign * (pow2 - 8.0) * apow / fact;
        pow2 *= 4.0;
        fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
        apow *= a2;
        sign = -sign;
    }
    return sum;
}

}  // namespace detail

/// Normalised bending compliance 2(alpha - sin(alpha)cos(alpha)) / alpha^3; tends to 4/3 when straight.
inline double bending_factor(double alpha) {
    if (alpha < detail::kSeriesThreshold) return detail::bending_series(alpha);
    return 2.0 * (alpha - std::sin(alpha) * std::cos(alpha)) / (alpha * alpha * alpha);
}

/// Normalised torsion compliance (6 alpha - 8 sin(alpha) + 2 sin(alpha)cos(alpha)) / alpha^3; zero when straight.
inline double torsion_factor(double alpha) {
    if (alpha < detail::kSeriesThreshold) return detail::torsion_series(alpha);
    const double s = std::sin(alpha);
    return (6.0 * alpha - 8.0 * s + 2.0 * s * std::cos(alpha)) / (alpha * alpha * alpha);
}

/// F(alpha) = 1 / (A_b + 2(1+nu) A_t / (1+lambda^2)), so that k = 4EI/C^3 * F(alpha).
inline EvaluationBreakdown evaluation_function(double alpha, double nu, double lambda) {
    detail::require_domain(std::isfinite(alpha) && alpha >= 0.0 && alpha <= kTwoPi,
                           "bending angle alpha must lie in [0, 2*pi] rad (got " + format_g(alpha) + ")");
    detail::require_domain(std::isfinite(nu) && nu >= 0.0 && nu < 0.5,
                           "nu must lie in [0, 0.5) (got " + format_g(nu) + ")");
    detail::require_domain(std::isfinite(lambda) && lambda > 0.0,
                           "aspect ratio lambda must be positive (got " + format_g(lambda) + ")");
    EvaluationBreakdown out;
    out.alpha = alpha;
    if (alpha == 0.0) {
        out.A_bending = 4.0 / 3.0;
        out.A_torsion = 0.0;
        out.F_alpha = 0.75;
        return out;
    }
    out.A_bending = bending_factor(alpha);
    out.A_torsion = torsion_factor(alpha);
    out.F_alpha = 1.0 / (out.A_bending + 2.0 * (1.0 + nu) * out.A_torsion / (1.0 + lambda * lambda));
    return out;
}

/// Bending and torsion moments at the section a centre angle phi back from the loaded tip.
inline SectionMoments internal_moments(double tip_force, const ArcGeometry& arc, double phi) {
    detail::require_domain(!arc.is_straight(), "internal_moments needs a curved arc (alpha > 0)");
    detail::require_domain(std::isfinite(phi) && phi >= 0.0 && phi <= arc.alpha(),
                           "section angle phi must lie in [0, alpha] (got " + format_g(phi) + ")");
    const double FR = tip_force * arc.R();
    // 1 - cos(phi) written as 2 sin^2(phi/2) to keep precision at small phi.
    const double half = std::sin(0.5 * phi);
    return {FR * std::sin(phi), FR * 2.0 * half * half};
}

/// Stiffness 4EI/C^3 * F(alpha) of the curved section without reference to a chain.
inline double closed_form_stiffness(const Material& mat, const BeamSection& sec, const ArcGeometry& arc) {
    const double F = evaluation_function(arc.alpha(), mat.nu(), sec.lambda()).F_alpha;
    const double C = arc.C();
    return 4.0 * mat.E() * sec.I() / (C * C * C) * F;
}

inline StiffnessResult lateral_stiffness(const Material& mat, const BeamSection& sec, const ArcGeometry& arc,
                                         const BLSChain& chain) {
    if (std::abs(chain.h() - sec.h()) > 1e-9 * std::max(std::abs(chain.h()), std::abs(sec.h()))) {
        throw ValidationError("chain height h (" + format_g(chain.h()) + " mm) does not match section height h (" +
                              format_g(sec.h()) + " mm)");
    }
    StiffnessResult out;
    out.breakdown = evaluation_function(arc.alpha(), mat.nu(), sec.lambda());
    out.F_alpha = out.breakdown.F_alpha;
    const double C = arc.C();
    out.k = 4.0 * mat.E() * sec.I() / (C * C * C) * out.F_alpha;
    out.break_force = chain.break_threshold();
    out.extrapolated = arc.is_extrapolated();
    return out;
}

/// True when the tip force separates the chain segments. A force exactly at the threshold leaves it intact.
inline bool break_check(double applied_force, const BLSChain& chain) {
    detail::require_domain(std::isfinite(applied_force) && applied_force >= 0.0,
                           "applied force must be non-negative (got " + format_g(applied_force) + ")");
    return applied_force > chain.break_threshold();
}

}  // namespace blsmech
