#pragma once

// JSON run configuration shared by the CLI subcommands. Precedence: built-in defaults,
// then the --config file, then per-command flags.

#include <optional>
#include <set>
#include <string>

#include <json.hpp>

#include "blsmech/error.hpp"
#include "blsmech/io.hpp"
#include "blsmech/mechanics.hpp"

namespace blsmech::cli {

struct RunConfig {
    double E_MPa = 2000.0;
    double nu = 0.35;
    double h_mm = 10.0;
    double b_mm = 10.0;
    double C_mm = 100.0;
    double L_mm = 100.0;
    double F_T_N = 10.0;
    int N_segments = 20;
    double rel_error = 1e-6;
    int n_intervals = 10000;
    std::string out_csv;
    std::string out_svg;
    std::string report;

    Material material() const { return {E_MPa, nu}; }
    BeamSection section() const { return {h_mm, b_mm}; }
    BLSChain chain() const { return {h_mm, L_mm, F_T_N, N_segments}; }

    /// Checks every module invariant, reporting the JSON field path of the first violation.
    void validate() const {
        auto at = [](const std::string& path, auto&& build) {
            try {
                build();
            } catch (const DomainError& e) {
                throw ValidationError(path + ": " + e.what());
            }
        };
        at("material", [&] { (void)material(); });
        at("section", [&] { (void)section(); });
        at("geometry.C_mm", [&] { (void)ArcGeometry(C_mm, 0.0); });
        at("chain", [&] { (void)chain(); });
        if (!(rel_error > 0.0)) throw ValidationError("tolerances.rel_error: must be positive");
        if (n_intervals < 2 || n_intervals % 2 != 0)
            throw ValidationError("tolerances.n_intervals: must be even and >= 2");
    }
};

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ValidationError((path.empty() ? std::string("<root>") : path) + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key)) throw ValidationError((path.empty() ? key : path + "." + key) + ": unknown field");
    }
}

inline void read_number(const json& obj, const std::string& section, const char* key, double& dst) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_number()) throw ValidationError(section + "." + key + ": expected a number");
    dst = v.get<double>();
}

inline void read_int(const json& obj, const std::string& section, const char* key, int& dst) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ValidationError(section + "." + key + ": expected an integer");
    dst = v.get<int>();
}

inline void read_string(const json& obj, const std::string& section, const char* key, std::string& dst) {
    if (!obj.contains(key)) return;
    const json& v = obj.at(key);
    if (!v.is_string()) throw ValidationError(section + "." + key + ": expected a string");
    dst = v.get<std::string>();
}

}  // namespace detail

inline RunConfig parse_config(const std::string& text, const std::string& origin = "config") {
    using detail::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(origin + ": invalid JSON: " + e.what());
    }
    RunConfig cfg;
    detail::reject_unknown(doc, "", {"material", "section", "geometry", "chain", "tolerances", "output"});
    auto section = [&](const char* name, const std::set<std::string>& keys) -> const json* {
        if (!doc.contains(name)) return nullptr;
        detail::reject_unknown(doc.at(name), name, keys);
        return &doc.at(name);
    };
    if (const json* m = section("material", {"E_MPa", "nu"})) {
        detail::read_number(*m, "material", "E_MPa", cfg.E_MPa);
        detail::read_number(*m, "material", "nu", cfg.nu);
    }
    if (const json* s = section("section", {"h_mm", "b_mm"})) {
        detail::read_number(*s, "section", "h_mm", cfg.h_mm);
        detail::read_number(*s, "section", "b_mm", cfg.b_mm);
    }
    if (const json* g = section("geometry", {"C_mm"})) detail::read_number(*g, "geometry", "C_mm", cfg.C_mm);
    if (const json* c = section("chain", {"L_mm", "F_T_N", "N_segments"})) {
        detail::read_number(*c, "chain", "L_mm", cfg.L_mm);
        detail::read_number(*c, "chain", "F_T_N", cfg.F_T_N);
        detail::read_int(*c, "chain", "N_segments", cfg.N_segments);
    }
    if (const json* t = section("tolerances", {"rel_error", "n_intervals"})) {
        detail::read_number(*t, "tolerances", "rel_error", cfg.rel_error);
        detail::read_int(*t, "tolerances", "n_intervals", cfg.n_intervals);
    }
    if (const json* o = section("output", {"csv", "svg", "report"})) {
        detail::read_string(*o, "output", "csv", cfg.out_csv);
        detail::read_string(*o, "output", "svg", cfg.out_svg);
        detail::read_string(*o, "output", "report", cfg.report);
    }
    return cfg;
}

inline RunConfig load_config(const std::optional<std::string>& path) {
    if (!path) return {};
    return parse_config(read_file(*path), *path);
}

}  // namespace blsmech::cli
