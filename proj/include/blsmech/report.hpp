#pragma once

// Summary tables over fitted stiffness estimates, and the fingertip-force comparison table.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "blsmech/error.hpp"
#include "blsmech/experiment.hpp"
#include "blsmech/format.hpp"
#include "blsmech/units.hpp"

namespace blsmech {

struct EnhancementRow {
    std::string with_id;
    std::string without_id;
    Degrees bending_angle;
    KiloPascals pressure;
    Kilograms weight;
    double ratio = 0.0;
};

struct ModulationRow {
    Degrees bending_angle;
    bool bls_present = false;
    std::string fixed_label;  // e.g. "weight_kg=1" or "pressure_kPa=20"
    ModulationRange range;
};

/// Closed-form lateral stiffness at a bending angle, shown next to the measurements without reconciliation.
struct ModelRow {
    Degrees bending_angle;
    NewtonsPerMm k_model;
};

struct SummaryReport {
    std::vector<StiffnessEstimate> estimates;
    std::vector<EnhancementRow> enhancements;
    std::vector<ModulationRow> modulations;
    std::vector<ModelRow> model;
};

inline SummaryReport build_report(std::vector<StiffnessEstimate> estimates) {
    SummaryReport rep;
    std::sort(estimates.begin(), estimates.end(), [](const StiffnessEstimate& a, const StiffnessEstimate& b) {
        const Condition& x = a.condition;
        const Condition& y = b.condition;
        return std::make_tuple(x.bending_angle, !x.bls_present, x.weight, x.pressure, x.id) <
               std::make_tuple(y.bending_angle, !y.bls_present, y.weight, y.pressure, y.id);
    });
    rep.estimates = estimates;

    for (const auto& with : estimates) {
        if (!with.condition.bls_present) continue;
        for (const auto& without : estimates) {
            if (without.condition.bls_present) continue;
            if (without.condition.bending_angle != with.condition.bending_angle ||
                without.condition.pressure != with.condition.pressure)
                continue;
            rep.enhancements.push_back({with.condition.id, without.condition.id, with.condition.bending_angle,
                                        with.condition.pressure, with.condition.weight, enhancement_ratio(with, without)});
            break;
        }
    }

    // Pressure sweeps at fixed (angle, bls, weight); weight sweeps at fixed (angle, pressure) with the chain fitted.
    std::map<std::tuple<Degrees, bool, Kilograms>, std::vector<StiffnessEstimate>> by_pressure;
    std::map<std::tuple<Degrees, KiloPascals>, std::vector<StiffnessEstimate>> by_weight;
    for (const auto& e : estimates) {
        const Condition& c = e.condition;
        by_pressure[{c.bending_angle, c.bls_present, c.weight}].push_back(e);
        if (c.bls_present) by_weight[{c.bending_angle, c.pressure}].push_back(e);
    }
    auto distinct = [](const std::vector<StiffnessEstimate>& v, auto key) {
        std::set<double> s;
        for (const auto& e : v) s.insert(key(e.condition));
        return s.size();
    };
    for (const auto& [key, group] : by_pressure) {
        if (distinct(group, [](const Condition& c) { return c.pressure.value(); }) < 2) continue;
        rep.modulations.push_back({std::get<0>(key), std::get<1>(key), "weight_kg=" + format_g(std::get<2>(key).value()),
                                   modulation_range(group, SweepVariable::Pressure)});
    }
    for (const auto& [key, group] : by_weight) {
        if (distinct(group, [](const Condition& c) { return c.weight.value(); }) < 2) continue;
        rep.modulations.push_back({std::get<0>(key), true, "pressure_kPa=" + format_g(std::get<1>(key).value()),
                                   modulation_range(group, SweepVariable::Weight)});
    }
    return rep;
}

namespace detail {

inline std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace detail

inline std::string render_report_text(const SummaryReport& rep) {
    using detail::pad;
    std::string out;
    out += "Stiffness estimates (least-squares slope of force vs displacement)\n";
    out += pad("condition", 16) + pad("angle_deg", 11) + pad("BLS", 5) + pad("weight_kg", 11) + pad("pressure_kPa", 14) +
           pad("k_N/mm", 12) + pad("r2", 10) + "n\n";
    std::optional<Degrees> last_angle;
    for (const auto& e : rep.estimates) {
        const Condition& c = e.condition;
        if (last_angle && *last_angle != c.bending_angle) out += '\n';
        last_angle = c.bending_angle;
        out += pad(c.id, 16) + pad(format_g(c.bending_angle.value()), 11) + pad(c.bls_present ? "yes" : "no", 5) +
               pad(format_g(c.weight.value()), 11) + pad(format_g(c.pressure.value()), 14) + pad(format_g(e.k.value()), 12) +
               pad(format_g(e.r_squared), 10) + std::to_string(e.n_points) + (e.degenerate ? "  (degenerate)" : "") + '\n';
    }
    if (!rep.enhancements.empty()) {
        out += "\nEnhancement with/without BLS\n";
        out += pad("with", 16) + pad("without", 16) + pad("angle_deg", 11) + pad("pressure_kPa", 14) + pad("weight_kg", 11) +
               "ratio\n";
        for (const auto& r : rep.enhancements)
            out += pad(r.with_id, 16) + pad(r.without_id, 16) + pad(format_g(r.bending_angle.value()), 11) +
                   pad(format_g(r.pressure.value()), 14) + pad(format_g(r.weight.value()), 11) + format_g(r.ratio) + '\n';
    }
    if (!rep.modulations.empty()) {
        out += "\nModulation ranges\n";
        out += pad("angle_deg", 11) + pad("BLS", 5) + pad("swept", 10) + pad("fixed", 18) + pad("k_min", 12) +
               pad("k_max", 12) + "ratio\n";
        for (const auto& m : rep.modulations)
            out += pad(format_g(m.bending_angle.value()), 11) + pad(m.bls_present ? "yes" : "no", 5) +
                   pad(to_string(m.range.variable), 10) + pad(m.fixed_label, 18) + pad(format_g(m.range.k_min.value()), 12) +
                   pad(format_g(m.range.k_max.value()), 12) + format_g(m.range.ratio) + '\n';
    }
    if (!rep.model.empty()) {
        out += "\nClosed-form lateral stiffness of the chain (model, not fitted)\n";
        out += pad("angle_deg", 11) + "k_model_N/mm\n";
        for (const auto& m : rep.model)
            out += pad(format_g(m.bending_angle.value()), 11) + format_g(m.k_model.value()) + '\n';
    }
    return out;
}

inline std::string render_estimates_csv(const SummaryReport& rep) {
    std::string out = "condition_id,bending_angle_deg,pressure_kPa,weight_kg,bls_present,k_N_per_mm,intercept_N,r_squared,n_points,degenerate\n";
    for (const auto& e : rep.estimates) {
        const Condition& c = e.condition;
        out += c.id + ',' + format_csv_number(c.bending_angle.value()) + ',' + format_csv_number(c.pressure.value()) + ',' +
               format_csv_number(c.weight.value()) + ',' + (c.bls_present ? "1" : "0") + ',' +
               format_csv_number(e.k.value()) + ',' + format_csv_number(e.intercept.value()) + ',' +
               format_csv_number(e.r_squared) + ',' + std::to_string(e.n_points) + ',' + (e.degenerate ? "1" : "0") + '\n';
    }
    return out;
}

inline std::string render_ratios_csv(const SummaryReport& rep) {
    std::string out = "kind,bending_angle_deg,numerator_id,denominator_id,k_numerator_N_per_mm,k_denominator_N_per_mm,ratio,detail\n";
    auto k_of = [&](const std::string& id) {
        for (const auto& e : rep.estimates)
            if (e.condition.id == id) return e.k.value();
        return 0.0;
    };
    for (const auto& r : rep.enhancements)
        out += "enhancement," + format_csv_number(r.bending_angle.value()) + ',' + r.with_id + ',' + r.without_id + ',' +
               format_csv_number(k_of(r.with_id)) + ',' + format_csv_number(k_of(r.without_id)) + ',' +
               format_csv_number(r.ratio) + ",pressure_kPa=" + format_g(r.pressure.value()) + '\n';
    for (const auto& m : rep.modulations)
        out += std::string("modulation_") + to_string(m.range.variable) + ',' + format_csv_number(m.bending_angle.value()) +
               ',' + m.range.max_condition + ',' + m.range.min_condition + ',' + format_csv_number(m.range.k_max.value()) +
               ',' + format_csv_number(m.range.k_min.value()) + ',' + format_csv_number(m.range.ratio) + ',' +
               (m.bls_present ? "bls;" : "no_bls;") + m.fixed_label + '\n';
    return out;
}

// ---------------------------------------------------------------------------
// Fingertip (blocked) force comparison

struct FingertipRow {
    std::string label;
    Newtons force;
    KiloPascals pressure;
};

struct FingertipTable {
    std::vector<FingertipRow> rows;  // force descending
    std::size_t max_index = 0;
};

inline FingertipTable fingertip_table(std::vector<FingertipRow> rows) {
    detail::require_valid(!rows.empty(), "fingertip table needs at least one row");
    for (const auto& r : rows) {
        detail::require_valid(r.force.value() >= 0.0, "negative force for '" + r.label + "'");
        detail::require_valid(r.pressure.value() >= 0.0, "negative pressure for '" + r.label + "'");
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.force > b.force; });
    return {std::move(rows), 0};
}

inline std::string render_fingertip_table(const FingertipTable& table) {
    using detail::pad;
    std::size_t width = 8;
    for (const auto& r : table.rows) width = std::max(width, r.label.size() + 2);
    std::string out = pad("work", width) + pad("force_N", 10) + pad("pressure_kPa", 14) + "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        out += pad(r.label, width) + pad(format_g(r.force.value()), 10) + pad(format_g(r.pressure.value()), 14) +
               (i == table.max_index ? "<- max" : "") + '\n';
    }
    // trailing spaces are not part of the format
    std::string trimmed;
    std::size_t pos = 0;
    while (pos < out.size()) {
        std::size_t nl = out.find('\n', pos);
        std::string line = out.substr(pos, nl - pos);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        trimmed += line + '\n';
        pos = nl + 1;
    }
    return trimmed;
}

/// CSV with header label,force_N,pressure_kPa.
inline std::vector<FingertipRow> parse_fingertip_csv(std::string_view source) {
    std::vector<FingertipRow> rows;
    std::size_t start = 0, line_no = 0;
    while (start < source.size()) {
        std::size_t nl = source.find('\n', start);
        if (nl == std::string_view::npos) nl = source.size();
        const std::string_view line = detail::trim(source.substr(start, nl - start));
        start = nl + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != "label,force_N,pressure_kPa") throw ParseError(1, "", "expected header label,force_N,pressure_kPa");
            continue;
        }
        if (line.empty()) continue;
        const auto cells = detail::split_csv_line(line);
        if (cells.size() != 3) throw ParseError(line_no, "", "expected 3 fields");
        const auto force = detail::parse_double(cells[1]);
        if (!force) throw ParseError(line_no, "force_N", "not a number");
        const auto pressure = detail::parse_double(cells[2]);
        if (!pressure) throw ParseError(line_no, "pressure_kPa", "not a number");
        rows.push_back({std::string(detail::trim(cells[0])), Newtons(*force), KiloPascals(*pressure)});
    }
    return rows;
}

}  // namespace blsmech
