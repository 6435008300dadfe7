#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <regex>

#include "blsmech/design.hpp"
#include "blsmech/io.hpp"
#include "blsmech/plot.hpp"

using namespace blsmech;
namespace fs = std::filesystem;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
    return n;
}

fs::path temp_path(const std::string& name) { return fs::temp_directory_path() / ("blsmech_design_" + name); }

}  // namespace

TEST(Sweep, AspectRatioStudyTrends) {
    const SweepTable t = run_sweep(SweepSpec::aspect_ratio_study(0.35, 64));
    ASSERT_EQ(t.rows.size(), 512u);
    ASSERT_EQ(t.lambdas().size(), 8u);
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
        const auto& p = t.rows[i - 1];
        const auto& r = t.rows[i];
        EXPECT_TRUE(p.lambda < r.lambda || (p.lambda == r.lambda && p.alpha < r.alpha));
        EXPECT_GT(r.F_alpha, 0.0);
        if (p.lambda == r.lambda && r.lambda == 2.0) {
            EXPECT_GT(r.F_alpha, p.F_alpha);
        }
        if (p.lambda == r.lambda && r.lambda == 0.25 && r.alpha < 2.3) {
            EXPECT_LT(r.F_alpha, p.F_alpha);
        }
    }
    EXPECT_FALSE(t.has_stiffness());
}

TEST(Sweep, TwoSamplesForOneRatio) {
    SweepSpec s;
    s.lambda_values = {1.0};
    s.alpha_max = kPi / 2;
    s.n_alpha = 2;
    const SweepTable t = run_sweep(s);
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_EQ(t.rows[0].alpha, 0.0);
    EXPECT_EQ(t.rows[0].F_alpha, 0.75);
    EXPECT_NEAR(t.rows[1].F_alpha, 0.76520271616190680509, 1e-14);
}

TEST(Sweep, AttachesStiffnessWhenPhysicsGiven) {
    SweepSpec s;
    s.lambda_values = {2.0, 0.5};
    s.n_alpha = 3;
    const SweepTable t = run_sweep(s, SweepPhysics{Material(2000, 0.35), 10.0, 100.0});
    ASSERT_TRUE(t.has_stiffness());
    EXPECT_EQ(t.rows.front().lambda, 0.5);
    for (const auto& r : t.rows) {
        const BeamSection sec(r.lambda * 10.0, 10.0);
        EXPECT_DOUBLE_EQ(*r.k, closed_form_stiffness(Material(2000, 0.35), sec, ArcGeometry(100, r.alpha)));
    }
}

TEST(Sweep, InvalidSpecsAreRejected) {
    SweepSpec s;
    EXPECT_THROW(run_sweep(s), ValidationError);
    s.lambda_values = {1.0};
    s.n_alpha = 1;
    EXPECT_THROW(run_sweep(s), ValidationError);
    s.n_alpha = 4;
    s.alpha_max = 7.0;
    EXPECT_THROW(run_sweep(s), ValidationError);
    s.alpha_max = 1.0;
    s.lambda_values = {-1.0};
    EXPECT_THROW(run_sweep(s), ValidationError);
}

TEST(SweepCsv, HeaderFormattingAndLineEndings) {
    SweepTable t;
    t.rows = {{1.0, 0.0, 0.75, std::nullopt}, {1.0, 1.5707963267948966, 0.7652027161619068, 5.1}};
    const std::string csv = sweep_to_csv(t);
    EXPECT_EQ(csv, "lambda,alpha_rad,F_alpha,k_N_per_mm\n1,0,0.75,\n1,1.57079633,0.765202716,5.1\n");
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(SweepCsv, EmissionIsByteIdenticalAcrossRuns) {
    const SweepTable t = run_sweep(SweepSpec::aspect_ratio_study());
    const fs::path a = temp_path("a.csv"), b = temp_path("b.csv");
    emit_csv(t, a.string());
    emit_csv(run_sweep(SweepSpec::aspect_ratio_study()), b.string());
    EXPECT_EQ(read_file(a.string()), read_file(b.string()));
    fs::remove(a);
    fs::remove(b);
}

TEST(SweepCsv, EmptyTableAndBadPathAreReported) {
    EXPECT_THROW(emit_csv(SweepTable{}, temp_path("x.csv").string()), ValidationError);
    SweepTable t;
    t.rows = {{1.0, 0.0, 0.75, std::nullopt}};
    EXPECT_THROW(emit_csv(t, "/nonexistent_dir/x.csv"), IoError);
}

TEST(SweepSvg, StructureContract) {
    SweepSpec s;
    s.lambda_values = {1.0};
    s.n_alpha = 10;
    const std::string one = sweep_to_svg(run_sweep(s));
    EXPECT_EQ(count_of(one, "<polyline"), 1u);
    EXPECT_NE(one.find("viewBox=\"0 0 800 600\""), std::string::npos);
    EXPECT_NE(one.find("bending angle (rad)"), std::string::npos);
    EXPECT_NE(one.find("F(alpha)"), std::string::npos);
    EXPECT_EQ(one.find("href"), std::string::npos);

    const std::string eight = sweep_to_svg(run_sweep(SweepSpec::aspect_ratio_study()));
    EXPECT_EQ(count_of(eight, "<polyline"), 8u);
    EXPECT_NE(eight.find("lambda = 0.25"), std::string::npos);
    EXPECT_EQ(eight, sweep_to_svg(run_sweep(SweepSpec::aspect_ratio_study())));

    const SweepTable with_k = run_sweep(s, SweepPhysics{Material(2000, 0.35), 10, 100});
    EXPECT_NE(sweep_to_svg(with_k, PlotQuantity::Stiffness).find("k (N/mm)"), std::string::npos);
    EXPECT_THROW(sweep_to_svg(run_sweep(s), PlotQuantity::Stiffness), ValidationError);
}

TEST(SectionSearch, MonotoneObjectivePicksTheLargestCorner) {
    SectionSearchSpec spec;
    spec.b_range = {5, 15};
    spec.h_range = {5, 15};
    spec.objective = SearchObjective::MaxStiffnessAtAlpha;
    spec.alpha_star = kPi;
    const auto r = find_best_section(spec, Material(2000, 0.35), 100);
    ASSERT_TRUE(r.feasible);
    EXPECT_EQ(r.h, 15.0);
    EXPECT_EQ(r.b, 15.0);
    ASSERT_EQ(r.slice.rows.size(), 1u);
    EXPECT_DOUBLE_EQ(*r.slice.rows[0].k, r.objective_value);
}

TEST(SectionSearch, BindingHeightLimitLeavesOneSlice) {
    SectionSearchSpec spec;
    spec.b_range = {5, 15};
    spec.h_range = {5, 15};
    spec.max_height = 5;
    const auto r = find_best_section(spec, Material(2000, 0.35), 100);
    ASSERT_TRUE(r.feasible);
    EXPECT_EQ(r.h, 5.0);
}

TEST(SectionSearch, InfeasibleConstraintIsAResultNotAnException) {
    SectionSearchSpec spec;
    spec.b_range = {5, 15};
    spec.h_range = {5, 15};
    spec.max_height = 4;
    const auto r = find_best_section(spec, Material(2000, 0.35), 100);
    EXPECT_FALSE(r.feasible);
    EXPECT_NE(r.reason.find("max_height"), std::string::npos);
}

TEST(SectionSearch, WorstCaseObjectiveAtFixedWidthPrefersTallSections) {
    SectionSearchSpec spec;
    spec.b_range = {8, 8};
    spec.h_range = {2, 16};
    spec.n_h = 15;
    spec.alpha_grid = linspace(0.1, kPi, 32);
    const auto r = find_best_section(spec, Material(2000, 0.35), 100);
    ASSERT_TRUE(r.feasible);
    EXPECT_GE(r.h / r.b, 1.0);

    // brute force over the same h grid: every flat section (lambda < 1) scores below the chosen one
    for (double h : linspace(2, 16, 15)) {
        const BeamSection sec(h, 8);
        double worst = 1e300;
        for (double a : spec.alpha_grid) worst = std::min(worst, closed_form_stiffness(Material(2000, 0.35), sec, ArcGeometry(100, a)));
        EXPECT_LE(worst, r.objective_value) << h;
        if (h < 8) {
            EXPECT_LT(worst, r.objective_value) << h;
        }
    }
}

TEST(SectionSearch, MatchesIndependentEnumeration) {
    const Material mat(2000, 0.35);
    for (int variant = 0; variant < 4; ++variant) {
        SectionSearchSpec spec;
        spec.b_range = {3, 12};
        spec.h_range = {2, 18};
        spec.n_b = 8;
        spec.n_h = 8;
        spec.max_height = variant % 2 ? 9.0 : 100.0;
        spec.objective = variant < 2 ? SearchObjective::MaxMinStiffnessOverAlpha : SearchObjective::MaxStiffnessAtAlpha;
        spec.alpha_star = 2.0;
        spec.alpha_grid = {0.0, 0.5, 1.5, 3.0};
        const auto r = find_best_section(spec, mat, 120);

        double best = -1;
        for (int i = 0; i < 8; ++i) {
            const double h = 2 + 16.0 * i / 7;
            if (h > spec.max_height) continue;
            for (int j = 0; j < 8; ++j) {
                const double b = 3 + 9.0 * j / 7;
                double value = 1e300;
                const BeamSection sec(h, b);
                if (spec.objective == SearchObjective::MaxStiffnessAtAlpha) {
                    value = closed_form_stiffness(mat, sec, ArcGeometry(120, 2.0));
                } else {
                    for (double a : spec.alpha_grid) value = std::min(value, closed_form_stiffness(mat, sec, ArcGeometry(120, a)));
                }
                best = std::max(best, value);
            }
        }
        ASSERT_TRUE(r.feasible);
        EXPECT_NEAR(r.objective_value, best, 1e-12 * best) << variant;
        EXPECT_LE(r.h, spec.max_height);
        EXPECT_GE(r.h, 2.0);
        EXPECT_LE(r.b, 12.0);
    }
}

TEST(SectionSearch, InvalidRangesAreRejected) {
    SectionSearchSpec spec;
    spec.b_range = {5, 4};
    spec.h_range = {1, 2};
    EXPECT_THROW(find_best_section(spec, Material(2000, 0.35), 100), ValidationError);
}
