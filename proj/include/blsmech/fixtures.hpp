#pragma once

// Deterministic synthetic measurement files. The generator uses its own SplitMix64 stream and
// Box-Muller transform so the bytes do not depend on the standard library's distributions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "blsmech/error.hpp"
#include "blsmech/experiment.hpp"

namespace blsmech {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform on (0, 1).
    double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

private:
    std::uint64_t state_;
};

struct FixtureCondition {
    Condition condition;
    double slope = 0.0;      // N/mm
    double intercept = 0.0;  // N
};

struct FixtureSpec {
    std::vector<FixtureCondition> conditions;
    int n_points = 11;         // displacements 0, step, ..., (n-1) step
    double step_mm = 1.0;
    double noise_sigma = 0.0;  // N
    std::uint64_t seed = 1;
};

inline std::vector<MeasurementRecord> generate_fixture_records(const FixtureSpec& spec) {
    detail::require_valid(spec.n_points >= 1 && spec.step_mm > 0.0, "fixture needs n_points >= 1 and a positive step");
    detail::require_valid(spec.noise_sigma >= 0.0, "noise sigma must be non-negative");
    SplitMix64 rng(spec.seed);
    std::vector<MeasurementRecord> out;
    for (const auto& fc : spec.conditions) {
        detail::require_valid(fc.slope > 0.0, "fixture slope for '" + fc.condition.id + "' must be positive");
        for (int i = 0; i < spec.n_points; ++i) {
            const double d = spec.step_mm * i;
            double f = fc.intercept + fc.slope * d;
            if (spec.noise_sigma > 0.0) f += spec.noise_sigma * rng.normal();
            out.push_back({fc.condition, Millimeters(d), Newtons(std::max(f, 0.0))});
        }
    }
    return out;
}

inline std::string generate_fixtures(const FixtureSpec& spec) {
    return serialize_measurements(generate_fixture_records(spec));
}

}  // namespace blsmech
