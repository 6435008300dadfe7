#pragma once

// Subcommand wiring for the blsmech executable. Exit codes: 0 success, 1 verification breach,
// 2 invalid input or configuration, 3 math domain error, 4 I/O failure.

#include <cmath>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blsmech/blsmech.hpp"
#include "blsmech/io.hpp"
#include "run_config.hpp"

namespace blsmech::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kMathDomain = 3, kIoFailure = 4 };

struct Overrides {
    std::optional<std::string> config;
    std::optional<double> E_MPa, nu, h_mm, b_mm, C_mm, L_mm, tension_N;

    void attach(CLI::App& cmd) {
        cmd.add_option("--config", config, "JSON run configuration");
        cmd.add_option("--E-MPa", E_MPa, "Young's modulus (overrides material.E_MPa)");
        cmd.add_option("--nu", nu, "Poisson's ratio (overrides material.nu)");
        cmd.add_option("--h-mm", h_mm, "section height (overrides section.h_mm)");
        cmd.add_option("--b-mm", b_mm, "section width (overrides section.b_mm)");
        cmd.add_option("--C-mm", C_mm, "arc length (overrides geometry.C_mm)");
        cmd.add_option("--L-mm", L_mm, "rigid-chain length (overrides chain.L_mm)");
        cmd.add_option("--tension-N", tension_N, "rope tension (overrides chain.F_T_N)");
    }

    RunConfig resolve() const {
        RunConfig cfg = load_config(config);
        if (E_MPa) cfg.E_MPa = *E_MPa;
        if (nu) cfg.nu = *nu;
        if (h_mm) cfg.h_mm = *h_mm;
        if (b_mm) cfg.b_mm = *b_mm;
        if (C_mm) cfg.C_mm = *C_mm;
        if (L_mm) cfg.L_mm = *L_mm;
        if (tension_N) cfg.F_T_N = *tension_N;
        cfg.validate();
        return cfg;
    }
};

/// Runs `build`, reporting precondition failures on user-supplied values as invalid input.
template <class F>
auto from_input(F&& build) {
    try {
        return build();
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
}

inline double checked_angle_deg(double deg, const char* flag) {
    if (!std::isfinite(deg) || deg < 0.0 || deg > 360.0)
        throw ValidationError(std::string(flag) + ": bending angle must lie in [0, 360] deg (got " + format_g(deg) + ")");
    return deg_to_rad(deg);
}

// ---------------------------------------------------------------------------

struct StiffnessCmd {
    Overrides o;
    double alpha_deg = 0.0;
    std::optional<std::string> out_csv;

    void attach(CLI::App& app) {
        CLI::App* c = app.add_subcommand("stiffness", "Closed-form lateral stiffness at one bending angle");
        o.attach(*c);
        c->add_option("--alpha-deg", alpha_deg, "bending angle in degrees")->capture_default_str();
        c->add_option("--out-csv", out_csv, "also write the result as CSV");
    }

    int run(std::ostream& out) const {
        const RunConfig cfg = o.resolve();
        const double alpha = checked_angle_deg(alpha_deg, "--alpha-deg");
        const ArcGeometry arc = from_input([&] { return ArcGeometry(cfg.C_mm, alpha); });
        const StiffnessResult r = lateral_stiffness(cfg.material(), cfg.section(), arc, cfg.chain());
        out << "alpha        " << format_g(alpha) << " rad (" << format_g(alpha_deg) << " deg)\n";
        out << "A_bending    " << format_g(r.breakdown.A_bending) << "\n";
        out << "A_torsion    " << format_g(r.breakdown.A_torsion) << "\n";
        out << "F(alpha)     " << format_g(r.F_alpha) << "\n";
        out << "k            " << format_g(r.k) << " N/mm\n";
        out << "break_force  " << format_g(r.break_force) << " N\n";
        if (r.extrapolated) out << "note: bending angle beyond 180 deg is an extrapolation\n";
        const std::string path = out_csv.value_or(cfg.out_csv);
        if (!path.empty()) {
            write_file(path, "alpha_rad,F_alpha,A_bending,A_torsion,k_N_per_mm,break_force_N,extrapolated\n" +
                                 format_csv_number(alpha) + ',' + format_csv_number(r.F_alpha) + ',' +
                                 format_csv_number(r.breakdown.A_bending) + ',' + format_csv_number(r.breakdown.A_torsion) +
                                 ',' + format_csv_number(r.k) + ',' + format_csv_number(r.break_force) + ',' +
                                 (r.extrapolated ? "1" : "0") + '\n');
        }
        return kOk;
    }
};

struct SweepCmd {
    Overrides o;
    std::vector<double> lambdas{0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0};
    double alpha_max_deg = 180.0;
    int samples = 64;
    bool with_k = false;
    std::optional<std::string> out_csv, out_svg;

    void attach(CLI::App& app) {
        CLI::App* c = app.add_subcommand("sweep", "Evaluation function over bending angle for several aspect ratios");
        o.attach(*c);
        c->add_option("--lambda", lambdas, "aspect ratios h/b")->capture_default_str();
        c->add_option("--alpha-max-deg", alpha_max_deg, "largest bending angle")->capture_default_str();
        c->add_option("--samples", samples, "angles per series, 0 deg included")->capture_default_str();
        c->add_flag("--with-k", with_k, "attach k using E, b and C from the configuration (h = lambda * b)");
        c->add_option("--out-csv", out_csv, "CSV destination (stdout when absent)");
        c->add_option("--out-svg", out_svg, "SVG chart destination");
    }

    int run(std::ostream& out) const {
        const RunConfig cfg = o.resolve();
        SweepSpec spec;
        spec.lambda_values = lambdas;
        spec.alpha_max = checked_angle_deg(alpha_max_deg, "--alpha-max-deg");
        spec.n_alpha = samples;
        spec.nu = cfg.nu;
        spec.validate();
        std::optional<SweepPhysics> physics;
        if (with_k) physics = SweepPhysics{cfg.material(), cfg.b_mm, cfg.C_mm};
        const SweepTable table = run_sweep(spec, physics);

        const std::string csv_path = out_csv.value_or(cfg.out_csv);
        const std::string svg_path = out_svg.value_or(cfg.out_svg);
        if (csv_path.empty()) {
            out << sweep_to_csv(table);
        } else {
            emit_csv(table, csv_path);
            out << "wrote " << table.rows.size() << " rows to " << csv_path << "\n";
        }
        if (!svg_path.empty()) {
            emit_svg(table, svg_path, with_k ? PlotQuantity::Stiffness : PlotQuantity::EvaluationFunction);
            out << "wrote chart to " << svg_path << "\n";
        }
        return kOk;
    }
};

struct BreakCmd {
    std::optional<std::string> config;
    std::optional<double> tension, height, length;
    double force = 0.0;

    void attach(CLI::App& app) {
        CLI::App* c = app.add_subcommand("break", "Granular-separation check for a tip force");
        c->add_option("--config", config, "JSON run configuration");
        c->add_option("--tension-N", tension, "rope tension F_T");
        c->add_option("--height-mm", height, "chain height h");
        c->add_option("--length-mm", length, "rigid-chain length L");
        c->add_option("--force-N", force, "applied tip force")->required();
    }

    int run(std::ostream& out) const {
        const RunConfig cfg = load_config(config);
        const BLSChain chain = from_input([&] {
            return BLSChain(height.value_or(cfg.h_mm), length.value_or(cfg.L_mm), tension.value_or(cfg.F_T_N),
                            cfg.N_segments);
        });
        const bool separated = from_input([&] { return break_check(force, chain); });
        out << (separated ? "separated" : "intact") << ", threshold " << format_fixed(chain.break_threshold(), 3) << " N\n";
        return kOk;
    }
};

struct KinematicsCmd {
    std::optional<std::string> config;
    double alpha_deg = 0.0;
    std::optional<double> C_mm;
    int samples = 21;
    std::optional<std::string> out_csv;

    void attach(CLI::App& app) {
        CLI::App* c = app.add_subcommand("kinematics", "Constant-curvature backbone points and tip pose");
        c->add_option("--config", config, "JSON run configuration");
        c->add_option("--alpha-deg", alpha_deg, "bending angle in degrees")->capture_default_str();
        c->add_option("--C-mm", C_mm, "arc length (overrides geometry.C_mm)");
        c->add_option("--samples", samples, "points along the arc, base and tip included")->capture_default_str();
        c->add_option("--out-csv", out_csv, "CSV destination (stdout when absent)");
    }

    int run(std::ostream& out) const {
        const RunConfig cfg = load_config(config);
        const double alpha = checked_angle_deg(alpha_deg, "--alpha-deg");
        const Backbone bb = from_input([&] { return backbone_and_tip(ArcGeometry(C_mm.value_or(cfg.C_mm), alpha), samples); });
        std::string csv = "s_mm,x_mm,y_mm\n";
        for (const auto& p : bb.points)
            csv += format_csv_number(p.s) + ',' + format_csv_number(p.x) + ',' + format_csv_number(p.y) + '\n';
        if (out_csv) {
            write_file(*out_csv, csv);
            out << "tip x=" << format_g(bb.tip.x) << " mm, y=" << format_g(bb.tip.y) << " mm, heading=" << format_g(bb.tip.heading)
                << " rad\n";
        } else {
            out << csv;
        }
        return kOk;
    }
};

struct AnalyzeCmd {
    std::string input;
    std::optional<std::string> config;
    double window_mm = 10.0;
    std::string estimator = "ols";
    std::optional<std::string> report_out;
    std::optional<std::string> fingertip;

    void attach(CLI::App& app) {
        CLI::App* c = app.add_subcommand("analyze", "Fit stiffness per condition and summarise ratios");
        c->add_option("csv", input, "measurement CSV")->required();
        c->add_option("--config", config, "JSON run configuration; adds closed-form model rows");
        c->add_option("--window-mm", window_mm, "upper end of the displacement fit window")->capture_default_str();
        c->add_option("--estimator", estimator, "ols or pairwise")
            ->check(CLI::IsMember({"ols", "pairwise"}))
            ->capture_default_str();
        c->add_option("--report-out", report_out, "prefix for <prefix>.txt, <prefix>_estimates.csv, <prefix>_ratios.csv");
        c->add_option("--fingertip", fingertip, "fingertip-force CSV (label,force_N,pressure_kPa)");
    }

    int run(std::ostream& out) const {
        if (!(window_mm > 0.0)) throw ValidationError("--window-mm must be positive");
        const auto records = parse_measurements(read_file(input));
        FitOptions opts;
        opts.window_max = Millimeters(window_mm);
        opts.estimator = estimator == "pairwise" ? SlopeEstimator::PairwiseIncrementalMean : SlopeEstimator::OrdinaryLeastSquares;
        SummaryReport rep = build_report(fit_all(records, opts));

        if (config) {
            const RunConfig cfg = load_config(config);
            cfg.validate();
            std::set<Degrees> angles;
            for (const auto& e : rep.estimates)
                if (e.condition.bls_present) angles.insert(e.condition.bending_angle);
            for (Degrees a : angles) {
                const ArcGeometry arc = from_input([&] { return ArcGeometry(cfg.C_mm, deg_to_rad(a.value())); });
                rep.model.push_back({a, NewtonsPerMm(closed_form_stiffness(cfg.material(), cfg.section(), arc))});
            }
        }

        std::string text = render_report_text(rep);
        if (fingertip) {
            text += "\nFingertip force comparison\n";
            text += render_fingertip_table(fingertip_table(parse_fingertip_csv(read_file(*fingertip))));
        }
        out << text;
        if (report_out) {
            write_file(*report_out + ".txt", text);
            write_file(*report_out + "_estimates.csv", render_estimates_csv(rep));
            write_file(*report_out + "_ratios.csv", render_ratios_csv(rep));
        }
        return kOk;
    }
};

struct VerifyCmd {
    std::string grid = "coarse";
    std::optional<int> n_intervals;
    std::string inject_fault = "none";

    void attach(CLI::App& app) {
        CLI::App* c = app.add_subcommand("verify", "Check the closed form against the numerical oracles");
        c->add_option("--grid", grid, "coarse or full")->check(CLI::IsMember({"coarse", "full"}))->capture_default_str();
        c->add_option("--n-intervals", n_intervals, "Simpson sub-intervals (default 2000 coarse, 10000 full)");
        c->add_option("--inject-fault", inject_fault, "none or torsion-sign (mutation check of the verifier)")
            ->check(CLI::IsMember({"none", "torsion-sign"}))
            ->capture_default_str();
    }

    int run(std::ostream& out) const {
        VerifyGrid g = grid == "full" ? VerifyGrid::full() : VerifyGrid::coarse();
        if (n_intervals) g.quadrature.n_intervals = *n_intervals;
        from_input([&] { g.quadrature.validate(); return 0; });
        const EvaluationModel model = inject_fault == "torsion-sign" ? EvaluationModel(torsion_sign_flipped)
                                                                     : EvaluationModel(evaluation_function);
        const VerificationReport rep = run_verification(g, model);
        out << rep.render();
        return rep.passed() ? kOk : kVerifyFailed;
    }
};

inline int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lateral stiffness model of a tensioned bone-like chain", "blsmech"};
    app.require_subcommand(1);
    StiffnessCmd stiffness;
    SweepCmd sweep;
    BreakCmd brk;
    KinematicsCmd kinematics;
    AnalyzeCmd analyze;
    VerifyCmd verify;
    stiffness.attach(app);
    sweep.attach(app);
    brk.attach(app);
    kinematics.attach(app);
    analyze.attach(app);
    verify.attach(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (app.got_subcommand("stiffness")) return stiffness.run(out);
        if (app.got_subcommand("sweep")) return sweep.run(out);
        if (app.got_subcommand("break")) return brk.run(out);
        if (app.got_subcommand("kinematics")) return kinematics.run(out);
        if (app.got_subcommand("analyze")) return analyze.run(out);
        if (app.got_subcommand("verify")) return verify.run(out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kMathDomain;
    }
    return kInvalid;
}

}  // namespace blsmech::cli
