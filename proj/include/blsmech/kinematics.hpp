#pragma once

#include <cmath>
#include <vector>

#include "blsmech/error.hpp"
#include "blsmech/mechanics.hpp"

namespace blsmech {

struct PlanarPoint {
    double s = 0.0;  // arc length from the base, mm
    double x = 0.0;
    double y = 0.0;
};

struct TipPose {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;  // tangent angle from +x, rad
};

struct Backbone {
    std::vector<PlanarPoint> points;
    TipPose tip;
};

/// Point at arc length s on a constant-curvature backbone rooted at the origin, tangent +x, bending toward +y.
inline PlanarPoint point_on_arc(const ArcGeometry& arc, double s) {
    if (arc.is_straight()) return {s, s, 0.0};
    const double R = arc.R();
    const double theta = s / R;
    const double half = std::sin(0.5 * theta);
    return {s, R * std::sin(theta), 2.0 * R * half * half};
}

/// Samples n_samples points evenly in arc length, base and tip included.
inline Backbone backbone_and_tip(const ArcGeometry& arc, int n_samples) {
    detail::require_domain(n_samples >= 2, "n_samples must be at least 2 (got " + std::to_string(n_samples) + ")");
    Backbone out;
    out.points.reserve(static_cast<std::size_t>(n_samples));
    const double C = arc.C();
    for (int i = 0; i < n_samples; ++i) {
        const double s = (i == n_samples - 1) ? C : C * static_cast<double>(i) / (n_samples - 1);
        out.points.push_back(point_on_arc(arc, s));
    }
    const PlanarPoint& last = out.points.back();
    out.tip = {last.x, last.y, arc.is_straight() ? 0.0 : arc.alpha()};
    return out;
}

}  // namespace blsmech
