#pragma once

// Aspect-ratio sweeps of the evaluation function and brute-force section search.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "blsmech/error.hpp"
#include "blsmech/format.hpp"
#include "blsmech/mechanics.hpp"

namespace blsmech {

struct SweepSpec {
    std::vector<double> lambda_values;
    double alpha_min = 0.0;
    double alpha_max = kPi;
    int n_alpha = 64;
    double nu = 0.35;

    void validate() const {
        detail::require_valid(!lambda_values.empty(), "sweep needs at least one lambda value");
        for (double l : lambda_values)
            detail::require_valid(std::isfinite(l) && l > 0.0, "lambda values must be positive (got " + format_g(l) + ")");
        detail::require_valid(alpha_min >= 0.0 && alpha_max <= kTwoPi && alpha_min < alpha_max,
                              "alpha range must satisfy 0 <= min < max <= 2*pi (got [" + format_g(alpha_min) + ", " +
                                  format_g(alpha_max) + "])");
        detail::require_valid(n_alpha >= 2, "n_alpha must be at least 2 (got " + std::to_string(n_alpha) + ")");
        detail::require_valid(nu >= 0.0 && nu < 0.5, "nu must lie in [0, 0.5) (got " + format_g(nu) + ")");
    }

    /// The eight aspect ratios 0.25, 0.5, ..., 2 over (0, pi].
    static SweepSpec aspect_ratio_study(double nu = 0.35, int n_alpha = 64) {
        SweepSpec s;
        for (int i = 1; i <= 8; ++i) s.lambda_values.push_back(0.25 * i);
        s.n_alpha = n_alpha;
        s.nu = nu;
        return s;
    }
};

/// Physical context that turns F(alpha) into k. The section width is kept and h = lambda * b.
struct SweepPhysics {
    Material material;
    double width;       // mm
    double arc_length;  // mm
};

struct SweepRow {
    double lambda = 0.0;
    double alpha = 0.0;
    double F_alpha = 0.0;
    std::optional<double> k;

    bool operator==(const SweepRow&) const = default;
};

struct SweepTable {
    std::vector<SweepRow> rows;

    bool has_stiffness() const { return !rows.empty() && rows.front().k.has_value(); }
    std::vector<double> lambdas() const {
        std::vector<double> out;
        for (const auto& r : rows)
            if (out.empty() || out.back() != r.lambda) out.push_back(r.lambda);
        return out;
    }
};

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = lo;
        return out;
    }
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    out.back() = hi;
    return out;
}

inline void sort_canonical(SweepTable& table) {
    std::stable_sort(table.rows.begin(), table.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        return std::tie(a.lambda, a.alpha) < std::tie(b.lambda, b.alpha);
    });
}

inline SweepTable run_sweep(const SweepSpec& spec, const std::optional<SweepPhysics>& physics = std::nullopt) {
    spec.validate();
    std::vector<double> lambdas = spec.lambda_values;
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    const std::vector<double> alphas = linspace(spec.alpha_min, spec.alpha_max, spec.n_alpha);

    SweepTable table;
    table.rows.reserve(lambdas.size() * alphas.size());
    for (double lambda : lambdas) {
        for (double alpha : alphas) {
            SweepRow row{lambda, alpha, 0.0, std::nullopt};
            try {
                row.F_alpha = evaluation_function(alpha, spec.nu, lambda).F_alpha;
                if (physics) {
                    const BeamSection sec(lambda * physics->width, physics->width);
                    const ArcGeometry arc(physics->arc_length, alpha);
                    const double C = arc.C();
                    row.k = 4.0 * physics->material.E() * sec.I() / (C * C * C) * row.F_alpha;
                }
            } catch (const DomainError& e) {
                throw DomainError(std::string(e.what()) + " at lambda=" + format_g(lambda) + ", alpha=" + format_g(alpha));
            }
            table.rows.push_back(row);
        }
    }
    sort_canonical(table);
    return table;
}

enum class SearchObjective { MaxMinStiffnessOverAlpha, MaxStiffnessAtAlpha };

struct Range {
    double min = 0.0;
    double max = 0.0;
};

struct SectionSearchSpec {
    Range b_range;
    Range h_range;
    double max_height = std::numeric_limits<double>::infinity();
    SearchObjective objective = SearchObjective::MaxMinStiffnessOverAlpha;
    double alpha_star = kPi;
    std::vector<double> alpha_grid = linspace(0.0, kPi, 32);
    int n_b = 64;
    int n_h = 64;

    void validate() const {
        auto check = [](const Range& r, const char* name) {
            detail::require_valid(r.min > 0.0 && r.min <= r.max,
                                  std::string(name) + " must be positive and ordered (got [" + format_g(r.min) + ", " +
                                      format_g(r.max) + "])");
        };
        check(b_range, "b_range");
        check(h_range, "h_range");
        detail::require_valid(max_height > 0.0, "max_height must be positive");
        detail::require_valid(n_b >= 1 && n_h >= 1, "grid resolution must be at least 1x1");
        if (objective == SearchObjective::MaxMinStiffnessOverAlpha) {
            detail::require_valid(!alpha_grid.empty(), "alpha_grid must not be empty");
            for (double a : alpha_grid)
                detail::require_valid(a >= 0.0 && a <= kTwoPi, "alpha_grid values must lie in [0, 2*pi]");
        } else {
            detail::require_valid(alpha_star >= 0.0 && alpha_star <= kTwoPi, "alpha_star must lie in [0, 2*pi]");
        }
    }
};

struct SectionSearchResult {
    bool feasible = false;
    std::string reason;  // set when infeasible
    double h = 0.0;
    double b = 0.0;
    double objective_value = 0.0;
    SweepTable slice;    // k over the objective's alpha values for the chosen section
};

inline std::vector<double> search_axis(const Range& r, int n) {
    return r.min == r.max ? std::vector<double>{r.min} : linspace(r.min, r.max, n);
}

inline double section_objective(const SectionSearchSpec& spec, const Material& mat, double C, const BeamSection& sec) {
    auto k_at = [&](double alpha) { return closed_form_stiffness(mat, sec, ArcGeometry(C, alpha)); };
    if (spec.objective == SearchObjective::MaxStiffnessAtAlpha) return k_at(spec.alpha_star);
    double worst = std::numeric_limits<double>::infinity();
    for (double a : spec.alpha_grid) worst = std::min(worst, k_at(a));
    return worst;
}

/// Exhaustive grid search. Ties go to larger I, then smaller h, then smaller b.
inline SectionSearchResult find_best_section(const SectionSearchSpec& spec, const Material& mat, double C) {
    spec.validate();
    detail::require_valid(C > 0.0, "arc length C must be positive");
    const std::vector<double> bs = search_axis(spec.b_range, spec.n_b);
    const std::vector<double> hs = search_axis(spec.h_range, spec.n_h);

    SectionSearchResult best;
    double best_I = 0.0;
    for (double h : hs) {
        if (h > spec.max_height) continue;
        for (double b : bs) {
            const BeamSection sec(h, b);
            const double value = section_objective(spec, mat, C, sec);
            bool take = !best.feasible || value > best.objective_value;
            if (best.feasible && value == best.objective_value) {
                take = std::make_tuple(sec.I(), best.h, best.b) > std::make_tuple(best_I, h, b);
            }
            if (take) {
                best.feasible = true;
                best.h = h;
                best.b = b;
                best.objective_value = value;
                best_I = sec.I();
            }
        }
    }
    if (!best.feasible) {
        best.reason = "no section satisfies h <= max_height (" + format_g(spec.max_height) + " mm) within h_range [" +
                      format_g(spec.h_range.min) + ", " + format_g(spec.h_range.max) + "]";
        return best;
    }

    const BeamSection sec(best.h, best.b);
    const std::vector<double> alphas = spec.objective == SearchObjective::MaxStiffnessAtAlpha
                                           ? std::vector<double>{spec.alpha_star}
                                           : spec.alpha_grid;
    for (double a : alphas) {
        const double F = evaluation_function(a, mat.nu(), sec.lambda()).F_alpha;
        best.slice.rows.push_back({sec.lambda(), a, F, closed_form_stiffness(mat, sec, ArcGeometry(C, a))});
    }
    sort_canonical(best.slice);
    return best;
}

}  // namespace blsmech
