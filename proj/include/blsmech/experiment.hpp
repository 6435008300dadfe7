#pragma once

// Force-displacement measurements: parsing, per-condition stiffness fits, and ratios.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "blsmech/error.hpp"
#include "blsmech/format.hpp"
#include "blsmech/units.hpp"

namespace blsmech {

/// Everything that identifies an experimental condition, apart from the displacement sweep.
struct Condition {
    std::string id;
    Degrees bending_angle;
    KiloPascals pressure;
    Kilograms weight;
    bool bls_present = false;

    bool operator==(const Condition&) const = default;
};

struct MeasurementRecord {
    Condition condition;
    Millimeters displacement;
    Newtons force;
};

inline constexpr std::string_view kMeasurementHeader =
    "condition_id,bending_angle_deg,pressure_kPa,weight_kg,bls_present,displacement_mm,force_N";

namespace detail {

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    if (s.empty()) return std::nullopt;
    if (s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
}

}  // namespace detail

/// Parses the measurement CSV contract. Columns are matched by header name; any bad row aborts the whole parse.
inline std::vector<MeasurementRecord> parse_measurements(std::string_view source) {
    static const std::vector<std::string> required = {"condition_id", "bending_angle_deg", "pressure_kPa", "weight_kg",
                                                      "bls_present",  "displacement_mm",   "force_N"};
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < source.size()) {
        std::size_t nl = source.find('\n', start);
        if (nl == std::string_view::npos) nl = source.size();
        lines.push_back(source.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) throw ParseError(1, "", "empty input, expected header: " + std::string(kMeasurementHeader));

    const auto header = detail::split_csv_line(detail::trim(lines[0]));
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name(detail::trim(header[i]));
        if (!index.emplace(name, i).second) throw ParseError(1, name, "duplicate column");
    }
    std::vector<std::size_t> col(required.size());
    for (std::size_t i = 0; i < required.size(); ++i) {
        const auto it = index.find(required[i]);
        if (it == index.end()) throw ParseError(1, required[i], "missing column");
        col[i] = it->second;
    }

    std::vector<MeasurementRecord> records;
    std::map<std::string, Condition, std::less<>> conditions;
    std::set<std::pair<std::string, double>> seen;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        if (detail::trim(lines[ln]).empty()) continue;
        const auto cells = detail::split_csv_line(lines[ln]);
        if (cells.size() != header.size()) {
            throw ParseError(line_no, "", "expected " + std::to_string(header.size()) + " fields, found " +
                                              std::to_string(cells.size()));
        }
        auto number = [&](std::size_t field) {
            const std::string& name = required[field];
            const auto v = detail::parse_double(cells[col[field]]);
            if (!v) throw ParseError(line_no, name, "not a number: '" + std::string(detail::trim(cells[col[field]])) + "'");
            return *v;
        };

        MeasurementRecord rec;
        rec.condition.id = std::string(detail::trim(cells[col[0]]));
        if (rec.condition.id.empty()) throw ParseError(line_no, required[0], "empty condition id");
        const double angle = number(1);
        const double pressure = number(2);
        const double weight = number(3);
        const std::string_view bls = detail::trim(cells[col[4]]);
        if (bls != "0" && bls != "1") throw ParseError(line_no, required[4], "must be 0 or 1, got '" + std::string(bls) + "'");
        const double displacement = number(5);
        const double force = number(6);

        if (angle < 0.0 || angle >= 360.0) throw ParseError(line_no, required[1], "angle must lie in [0, 360)");
        if (pressure < 0.0) throw ParseError(line_no, required[2], "pressure must be non-negative");
        if (weight < 0.0) throw ParseError(line_no, required[3], "weight must be non-negative");
        if (displacement < 0.0) throw ParseError(line_no, required[5], "displacement must be non-negative");
        if (force < 0.0) throw ParseError(line_no, required[6], "force must be non-negative");

        rec.condition.bending_angle = Degrees(angle);
        rec.condition.pressure = KiloPascals(pressure);
        rec.condition.weight = Kilograms(weight);
        rec.condition.bls_present = bls == "1";
        rec.displacement = Millimeters(displacement);
        rec.force = Newtons(force);

        const auto [it, inserted] = conditions.emplace(rec.condition.id, rec.condition);
        if (!inserted && !(it->second == rec.condition)) {
            throw ParseError(line_no, "", "condition '" + rec.condition.id + "' changes its angle, pressure, weight or bls_present");
        }
        if (!seen.emplace(rec.condition.id, displacement).second) {
            throw ParseError(line_no, required[5], "duplicate displacement " + format_g(displacement) + " mm for condition '" +
                                                      rec.condition.id + "'");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

inline std::string serialize_measurements(const std::vector<MeasurementRecord>& records) {
    std::string out(kMeasurementHeader);
    out += '\n';
    for (const auto& r : records) {
        out += r.condition.id + ',' + format_csv_number(r.condition.bending_angle.value()) + ',' +
               format_csv_number(r.condition.pressure.value()) + ',' + format_csv_number(r.condition.weight.value()) + ',' +
               (r.condition.bls_present ? "1" : "0") + ',' + format_csv_number(r.displacement.value()) + ',' +
               format_csv_number(r.force.value()) + '\n';
    }
    return out;
}

struct ConditionSamples {
    Condition condition;
    std::vector<MeasurementRecord> records;
};

/// Groups records by condition id, ordered by id.
inline std::vector<ConditionSamples> group_by_condition(const std::vector<MeasurementRecord>& records) {
    std::map<std::string, ConditionSamples> groups;
    for (const auto& r : records) {
        auto& g = groups[r.condition.id];
        g.condition = r.condition;
        g.records.push_back(r);
    }
    std::vector<ConditionSamples> out;
    out.reserve(groups.size());
    for (auto& [id, g] : groups) out.push_back(std::move(g));
    return out;
}

enum class SlopeEstimator {
    OrdinaryLeastSquares,
    PairwiseIncrementalMean,  // mean of (F[i+1]-F[i]) / (d[i+1]-d[i]) over sorted displacements
};

struct FitOptions {
    Millimeters window_min{0.0};
    Millimeters window_max{10.0};
    SlopeEstimator estimator = SlopeEstimator::OrdinaryLeastSquares;
};

struct StiffnessEstimate {
    Condition condition;
    NewtonsPerMm k;
    Newtons intercept;
    double r_squared = 0.0;
    int n_points = 0;
    bool degenerate = false;  // force does not vary over the window, r_squared forced to 0
};

inline StiffnessEstimate fit_stiffness(const Condition& condition, const std::vector<MeasurementRecord>& records,
                                       const FitOptions& options = {}) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) {
        detail::require_valid(r.condition.id == condition.id,
                              "record for condition '" + r.condition.id + "' passed to fit of '" + condition.id + "'");
        if (r.displacement >= options.window_min && r.displacement <= options.window_max)
            pts.emplace_back(r.displacement.value(), r.force.value());
    }
    std::sort(pts.begin(), pts.end());
    std::set<double> distinct;
    for (const auto& p : pts) distinct.insert(p.first);
    detail::require_valid(distinct.size() >= 3, "condition '" + condition.id + "' has " + std::to_string(distinct.size()) +
                                                     " distinct displacements in the fit window, need at least 3");

    const double n = static_cast<double>(pts.size());
    double mean_d = 0.0, mean_f = 0.0;
    for (const auto& [d, f] : pts) {
        mean_d += d;
        mean_f += f;
    }
    mean_d /= n;
    mean_f /= n;
    double sdd = 0.0, sdf = 0.0, sff = 0.0;
    for (const auto& [d, f] : pts) {
        sdd += (d - mean_d) * (d - mean_d);
        sdf += (d - mean_d) * (f - mean_f);
        sff += (f - mean_f) * (f - mean_f);
    }
    detail::require_valid(sdd > 0.0, "condition '" + condition.id + "' has zero displacement variance");

    double slope = sdf / sdd;
    if (options.estimator == SlopeEstimator::PairwiseIncrementalMean) {
        double acc = 0.0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            acc += (pts[i + 1].second - pts[i].second) / (pts[i + 1].first - pts[i].first);
        slope = acc / static_cast<double>(pts.size() - 1);
    }
    const double intercept = mean_f - slope * mean_d;

    StiffnessEstimate est;
    est.condition = condition;
    est.k = NewtonsPerMm(slope);
    est.intercept = Newtons(intercept);
    est.n_points = static_cast<int>(pts.size());
    if (sff == 0.0) {
        est.degenerate = true;
        est.r_squared = 0.0;
    } else {
        double ss_res = 0.0;
        for (const auto& [d, f] : pts) {
            const double e = f - (intercept + slope * d);
            ss_res += e * e;
        }
        est.r_squared = std::clamp(1.0 - ss_res / sff, 0.0, 1.0);
    }
    return est;
}

inline std::vector<StiffnessEstimate> fit_all(const std::vector<MeasurementRecord>& records, const FitOptions& options = {}) {
    std::vector<StiffnessEstimate> out;
    for (const auto& g : group_by_condition(records)) out.push_back(fit_stiffness(g.condition, g.records, options));
    return out;
}

/// Unchecked k_num / k_den.
inline double stiffness_ratio(NewtonsPerMm numerator, NewtonsPerMm denominator) {
    detail::require_valid(denominator.value() > 0.0,
                          "denominator stiffness must be positive (got " + format_g(denominator.value()) + " N/mm)");
    return numerator / denominator;
}

/// k(with chain) / k(without chain) at the same bending angle and pressure.
inline double enhancement_ratio(const StiffnessEstimate& with_bls, const StiffnessEstimate& without_bls) {
    const Condition& a = with_bls.condition;
    const Condition& b = without_bls.condition;
    detail::require_valid(a.bending_angle == b.bending_angle,
                          "bending angle mismatch: " + format_g(a.bending_angle.value()) + " deg vs " +
                              format_g(b.bending_angle.value()) + " deg");
    detail::require_valid(a.pressure == b.pressure, "pressure mismatch: " + format_g(a.pressure.value()) + " kPa vs " +
                                                        format_g(b.pressure.value()) + " kPa");
    return stiffness_ratio(with_bls.k, without_bls.k);
}

enum class SweepVariable { Pressure, Weight };

inline const char* to_string(SweepVariable v) { return v == SweepVariable::Pressure ? "pressure" : "weight"; }

struct ModulationRange {
    SweepVariable variable = SweepVariable::Pressure;
    NewtonsPerMm k_min;
    NewtonsPerMm k_max;
    double ratio = 0.0;
    std::string min_condition;
    std::string max_condition;
};

/// Extremes of stiffness across estimates that differ only in the swept variable.
inline ModulationRange modulation_range(const std::vector<StiffnessEstimate>& estimates, SweepVariable variable) {
    detail::require_valid(estimates.size() >= 2, "modulation range needs at least 2 estimates (got " +
                                                     std::to_string(estimates.size()) + ")");
    const Condition& ref = estimates.front().condition;
    for (const auto& e : estimates) {
        const Condition& c = e.condition;
        const bool same = c.bending_angle == ref.bending_angle && c.bls_present == ref.bls_present &&
                          (variable == SweepVariable::Pressure ? c.weight == ref.weight : c.pressure == ref.pressure);
        detail::require_valid(same, "condition '" + c.id + "' differs from '" + ref.id + "' in more than the swept " +
                                        to_string(variable));
    }
    const auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end(),
                                              [](const auto& a, const auto& b) { return a.k < b.k; });
    ModulationRange out;
    out.variable = variable;
    out.k_min = lo->k;
    out.k_max = hi->k;
    out.ratio = stiffness_ratio(hi->k, lo->k);
    out.min_condition = lo->condition.id;
    out.max_condition = hi->condition.id;
    return out;
}

}  // namespace blsmech
