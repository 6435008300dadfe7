#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "blsmech/mechanics.hpp"

using namespace blsmech;

namespace {

// Reference values of F(alpha) from an independent 30-digit quadrature of the strain energy
// integral (mpmath.quad on M_b = R sin(phi), M_t = R (1 - cos(phi))), not from the closed form.
constexpr double kF_halfpi_nu035_lam1 = 0.76520271616190680509;
constexpr double kF_pi_nu035_lam2 = 1.8835122902842286096;
constexpr double kF_0p2_nu0_lam025 = 0.74755484528011470758;
constexpr double kF_1em3_nu035_lam1 = 0.74999999812500379933;
constexpr double kF_0p5_nu035_lam1 = 0.74976444909404292762;

double direct_bending(double a) { return 2.0 * (a - std::sin(a) * std::cos(a)) / (a * a * a); }
double direct_torsion(double a) { return (6.0 * a - 8.0 * std::sin(a) + 2.0 * std::sin(a) * std::cos(a)) / (a * a * a); }

}  // namespace

TEST(SectionProperties, SquareSection) {
    const BeamSection s = section_properties(12, 12);
    EXPECT_DOUBLE_EQ(s.I(), 1728.0);
    EXPECT_DOUBLE_EQ(s.lambda(), 1.0);
    EXPECT_DOUBLE_EQ(s.I_p(), 3456.0);
}

TEST(SectionProperties, FlatAndTallSectionsShareThePolarMoment) {
    const BeamSection flat = section_properties(10, 20);
    EXPECT_NEAR(flat.I(), 6666.6666666667, 1e-9);
    EXPECT_DOUBLE_EQ(flat.lambda(), 0.5);
    EXPECT_NEAR(flat.I_p(), 8333.3333333333, 1e-9);

    const BeamSection tall = section_properties(20, 10);
    EXPECT_DOUBLE_EQ(tall.lambda(), 2.0);
    EXPECT_NEAR(tall.I(), 1666.6666666667, 1e-9);
    EXPECT_NEAR(tall.I_p(), 8333.3333333333, 1e-9);
}

TEST(SectionProperties, PolarMomentMatchesSumOfBothAxes) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dim(0.5, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double h = dim(rng), b = dim(rng);
        const BeamSection s(h, b);
        EXPECT_NEAR(s.I_p(), h * b * b * b / 12.0 + b * h * h * h / 12.0, 1e-12 * s.I_p());
    }
}

TEST(SectionProperties, RejectsNonPositiveDimensionsByName) {
    try {
        section_properties(0.0, 5.0);
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("height h"), std::string::npos);
    }
    try {
        section_properties(5.0, -1.0);
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("width b"), std::string::npos);
    }
}

TEST(ShearModulus, Examples) {
    EXPECT_NEAR(shear_modulus(2000, 0.35), 740.74074074, 1e-7);
    EXPECT_DOUBLE_EQ(shear_modulus(1, 0), 0.5);
    EXPECT_DOUBLE_EQ(shear_modulus(2700, 0.35), 1000.0);
}

TEST(ShearModulus, PoissonRatioOutsideRangeIsRejected) {
    EXPECT_THROW(shear_modulus(2000, 0.5), DomainError);
    EXPECT_THROW(shear_modulus(2000, -0.01), DomainError);
    EXPECT_THROW(shear_modulus(0, 0.3), DomainError);
}

TEST(ArcGeometry, RadiusFromAngle) {
    EXPECT_NEAR(arc_from_angle(100, kPi).R(), 31.830988618, 1e-8);
    EXPECT_NEAR(arc_from_angle(100, kPi / 2).R(), 63.661977237, 1e-8);
    const ArcGeometry straight = arc_from_angle(100, 0);
    EXPECT_TRUE(straight.is_straight());
    EXPECT_TRUE(std::isinf(straight.R()));
}

TEST(ArcGeometry, AngleOutsideFullTurnIsRejected) {
    EXPECT_THROW(arc_from_angle(100, -0.1), DomainError);
    EXPECT_THROW(arc_from_angle(100, kTwoPi + 1e-9), DomainError);
    EXPECT_THROW(arc_from_angle(0, 1.0), DomainError);
    EXPECT_NO_THROW(arc_from_angle(100, kTwoPi));
}

TEST(ArcGeometry, BeyondHalfTurnIsFlaggedAsExtrapolation) {
    EXPECT_FALSE(arc_from_angle(100, kPi).is_extrapolated());
    EXPECT_TRUE(arc_from_angle(100, 4.0).is_extrapolated());
}

TEST(InternalMoments, Examples) {
    const ArcGeometry arc(50.0 * kPi, kPi);  // R = 50
    const auto tip = internal_moments(1, arc, 0);
    EXPECT_EQ(tip.bending, 0.0);
    EXPECT_EQ(tip.torsion, 0.0);

    const auto quarter = internal_moments(1, arc, kPi / 2);
    EXPECT_NEAR(quarter.bending, 50.0, 1e-12);
    EXPECT_NEAR(quarter.torsion, 50.0, 1e-12);

    const auto opposite = internal_moments(2, arc, kPi);
    EXPECT_NEAR(opposite.bending, 0.0, 1e-12);
    EXPECT_NEAR(opposite.torsion, 200.0, 1e-12);
}

TEST(InternalMoments, SectionOutsideArcIsRejected) {
    const ArcGeometry arc(100, 1.0);
    EXPECT_THROW(internal_moments(1, arc, 1.1), DomainError);
    EXPECT_THROW(internal_moments(1, arc, -0.1), DomainError);
    EXPECT_THROW(internal_moments(1, ArcGeometry(100, 0), 0), DomainError);
}

TEST(EvaluationFunction, MatchesHighPrecisionQuadrature) {
    EXPECT_NEAR(evaluation_function(kPi / 2, 0.35, 1).F_alpha, kF_halfpi_nu035_lam1, 1e-14);
    EXPECT_NEAR(evaluation_function(kPi, 0.35, 2).F_alpha, kF_pi_nu035_lam2, 1e-14);
    EXPECT_NEAR(evaluation_function(0.2, 0.0, 0.25).F_alpha, kF_0p2_nu0_lam025, 1e-14);
    EXPECT_NEAR(evaluation_function(1e-3, 0.35, 1).F_alpha, kF_1em3_nu035_lam1, 1e-15);
    EXPECT_NEAR(evaluation_function(0.5, 0.35, 1).F_alpha, kF_0p5_nu035_lam1, 1e-15);
}

TEST(EvaluationFunction, StraightLimitIsThreeQuarters) {
    const auto zero = evaluation_function(0.0, 0.35, 1.0);
    EXPECT_EQ(zero.F_alpha, 0.75);
    EXPECT_EQ(zero.A_torsion, 0.0);
    EXPECT_DOUBLE_EQ(zero.A_bending, 4.0 / 3.0);
    for (double alpha : {1e-12, 1e-9, 1e-6}) {
        for (double lambda : {0.25, 1.0, 2.0}) {
            EXPECT_LE(std::abs(evaluation_function(alpha, 0.49, lambda).F_alpha - 0.75), 1e-9) << alpha;
        }
    }
}

TEST(EvaluationFunction, SeriesAndDirectFormsAgreeAtTheSwitch) {
    for (double a : {0.45, 0.49, 0.4999999, 0.5}) {
        EXPECT_NEAR(detail::bending_series(a), direct_bending(a), 1e-13) << a;
        EXPECT_NEAR(detail::torsion_series(a), direct_torsion(a), 1e-13) << a;
    }
    // leading Maclaurin terms
    const double a = 1e-4;
    EXPECT_NEAR(bending_factor(a), 4.0 / 3.0 - 4.0 * a * a / 15.0, 1e-18);
    EXPECT_NEAR(torsion_factor(a), a * a / 5.0 - a * a * a * a / 42.0, 1e-24);
}

TEST(EvaluationFunction, TorsionVanishesOnlyWhenStraight) {
    EXPECT_EQ(evaluation_function(0.0, 0.3, 1).A_torsion, 0.0);
    for (int i = 1; i <= 200; ++i) {
        const double alpha = kTwoPi * i / 200.0;
        const auto b = evaluation_function(alpha, 0.3, 1.0);
        EXPECT_GT(b.A_torsion, 0.0) << alpha;
        EXPECT_GT(b.A_bending, 0.0) << alpha;
    }
    EXPECT_GT(torsion_factor(1e-8), 0.0);
}

TEST(EvaluationFunction, BreakdownIsInternallyConsistent) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> alpha(0.0, kTwoPi), nu(0.0, 0.49), lam(0.1, 4.0);
    for (int i = 0; i < 500; ++i) {
        const double a = alpha(rng), n = nu(rng), l = lam(rng);
        const auto b = evaluation_function(a, n, l);
        EXPECT_NEAR(b.F_alpha, 1.0 / (b.A_bending + 2.0 * (1.0 + n) * b.A_torsion / (1.0 + l * l)), 1e-15 * b.F_alpha);
    }
}

TEST(EvaluationFunction, TrendsAcrossAspectRatios) {
    std::vector<double> alphas;
    for (int i = 1; i <= 31; ++i) alphas.push_back(0.1 * i);
    alphas.push_back(kPi);
    for (std::size_t i = 1; i < alphas.size(); ++i) {
        EXPECT_GT(evaluation_function(alphas[i], 0.35, 2.0).F_alpha, evaluation_function(alphas[i - 1], 0.35, 2.0).F_alpha);
    }
    EXPECT_LT(std::abs(evaluation_function(kPi / 2, 0.35, 1.0).F_alpha - evaluation_function(1e-9, 0.35, 1.0).F_alpha), 0.05);
}

TEST(EvaluationFunction, FlatSectionDipsThenRecovers) {
    // lambda = 0.25 falls until alpha ~ 2.3785 rad and rises again towards pi; the minimum location
    // comes from an mpmath root of dF/dalpha on the quadrature-based F, independent of the closed form.
    constexpr double kMinimum = 2.378463489498008;
    auto F = [](double a) { return evaluation_function(a, 0.35, 0.25).F_alpha; };
    for (int i = 1; i < 200; ++i) {
        const double a0 = kMinimum * (i - 1) / 199.0 + 1e-3, a1 = kMinimum * i / 199.0;
        EXPECT_LT(F(a1), F(a0)) << a1;
    }
    for (int i = 1; i < 50; ++i) {
        const double a0 = kMinimum + (kPi - kMinimum) * (i - 1) / 49.0 + 1e-6, a1 = kMinimum + (kPi - kMinimum) * i / 49.0;
        EXPECT_GT(F(a1), F(a0)) << a1;
    }
    EXPECT_NEAR(F(kPi), 0.57224855, 1e-8);
}

TEST(EvaluationFunction, RejectsOutOfRangeArguments) {
    EXPECT_THROW(evaluation_function(-1e-3, 0.3, 1), DomainError);
    EXPECT_THROW(evaluation_function(7.0, 0.3, 1), DomainError);
    EXPECT_THROW(evaluation_function(1.0, 0.5, 1), DomainError);
    EXPECT_THROW(evaluation_function(1.0, 0.3, 0), DomainError);
}

TEST(LateralStiffness, StraightCantilever) {
    const Material mat(2000, 0.35);
    const BeamSection sec(10, 10);
    const BLSChain chain(10, 100, 10, 20);
    const auto r = lateral_stiffness(mat, sec, ArcGeometry(100, 0), chain);
    EXPECT_NEAR(sec.I(), 833.333333333, 1e-8);
    EXPECT_NEAR(r.k, 5.0, 1e-12);
    EXPECT_NEAR(r.k, 3.0 * mat.E() * sec.I() / 1e6, 1e-12);
    EXPECT_DOUBLE_EQ(r.break_force, 1.0);
    EXPECT_FALSE(r.extrapolated);
}

TEST(LateralStiffness, CubeLawInArcLength) {
    const Material mat(2000, 0.35);
    const BeamSection sec(10, 10);
    const BLSChain chain(10, 100, 10, 20);
    for (double alpha : {0.0, 0.7, kPi / 2, 3.0}) {
        const double k1 = lateral_stiffness(mat, sec, ArcGeometry(100, alpha), chain).k;
        const double k2 = lateral_stiffness(mat, sec, ArcGeometry(200, alpha), chain).k;
        EXPECT_DOUBLE_EQ(k1 / k2, 8.0) << alpha;
    }
}

TEST(LateralStiffness, ScaleLawsAndBreakdownIndependence) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double alpha = kTwoPi * u(rng), nu = 0.49 * u(rng);
        const double E = 500 + 3000 * u(rng), h = 2 + 20 * u(rng), b = 2 + 20 * u(rng), C = 20 + 200 * u(rng);
        const double s = std::pow(2.0, std::floor(8 * u(rng)) - 4);  // powers of two keep the scaling exact
        const BLSChain chain(h, std::max(h, 100.0), 10, 10);
        const auto base = lateral_stiffness(Material(E, nu), BeamSection(h, b), ArcGeometry(C, alpha), chain);

        const auto e_scaled = lateral_stiffness(Material(E * s, nu), BeamSection(h, b), ArcGeometry(C, alpha), chain);
        EXPECT_DOUBLE_EQ(e_scaled.k, base.k * s);
        EXPECT_EQ(e_scaled.breakdown, base.breakdown);

        const auto c_scaled = lateral_stiffness(Material(E, nu), BeamSection(h, b), ArcGeometry(C * s, alpha), chain);
        EXPECT_DOUBLE_EQ(c_scaled.k, base.k / (s * s * s));
        EXPECT_EQ(c_scaled.breakdown, base.breakdown);

        // same lambda, I scaled by s^4
        const BLSChain chain_s(h * s, std::max(h * s, 100.0), 10, 10);
        const auto i_scaled = lateral_stiffness(Material(E, nu), BeamSection(h * s, b * s), ArcGeometry(C, alpha), chain_s);
        EXPECT_DOUBLE_EQ(i_scaled.k, base.k * s * s * s * s);
        EXPECT_EQ(i_scaled.breakdown, base.breakdown);
    }
}

TEST(LateralStiffness, MismatchedChainHeightIsAConfigurationError) {
    EXPECT_THROW(lateral_stiffness(Material(2000, 0.35), BeamSection(10, 10), ArcGeometry(100, 1.0), BLSChain(11, 100, 10, 5)),
                 ValidationError);
    EXPECT_NO_THROW(lateral_stiffness(Material(2000, 0.35), BeamSection(10, 10), ArcGeometry(100, 1.0),
                                      BLSChain(10 * (1 + 1e-12), 100, 10, 5)));
}

TEST(BreakCheck, ThresholdAndTieConvention) {
    const BLSChain chain(10, 100, 10, 5);
    EXPECT_DOUBLE_EQ(chain.break_threshold(), 1.0);
    EXPECT_FALSE(break_check(0.99, chain));
    EXPECT_TRUE(break_check(1.01, chain));
    EXPECT_FALSE(break_check(1.0, chain));
    EXPECT_FALSE(break_check(0.0, BLSChain(3, 40, 0, 5)));
    EXPECT_THROW(break_check(-0.1, chain), DomainError);
}

TEST(BreakCheck, ThresholdIsLinearInTensionAndHeight) {
    for (int t = 0; t <= 40; ++t) {
        EXPECT_EQ(BLSChain(8, 64, t, 4).break_threshold(), t * 8.0 / 64.0);
        EXPECT_LE(BLSChain(8, 64, t, 4).break_threshold(), BLSChain(8, 64, t + 1, 4).break_threshold());
    }
    EXPECT_EQ(BLSChain(20, 100, 10, 4).break_threshold(), 2.0);
    EXPECT_EQ(BLSChain(10, 200, 10, 4).break_threshold(), 0.5);
}

TEST(BLSChain, InvariantsAreEnforced) {
    EXPECT_THROW(BLSChain(10, 9, 10, 5), DomainError);
    EXPECT_THROW(BLSChain(10, 100, -1, 5), DomainError);
    EXPECT_THROW(BLSChain(10, 100, 10, 0), DomainError);
    EXPECT_THROW(BLSChain(0, 100, 10, 1), DomainError);
}
