#pragma once

#include <string>

#include "blsmech/error.hpp"

namespace blsmech {

/// Composite Simpson rule with a fixed, even number of sub-intervals.
struct QuadratureSpec {
    int n_intervals = 10000;

    void validate() const {
        detail::require_domain(n_intervals >= 2 && n_intervals % 2 == 0,
                               "n_intervals must be even and >= 2 (got " + std::to_string(n_intervals) + ")");
    }
};

template <class Func>
double composite_simpson(Func&& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.validate();
    const int n = spec.n_intervals;
    const double h = (b - a) / n;
    double odd = 0.0;
    double even = 0.0;
    for (int i = 1; i < n; ++i) {
        const double x = a + h * i;
        if (i % 2 == 1)
            odd += f(x);
        else
            even += f(x);
    }
    return h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

}  // namespace blsmech
