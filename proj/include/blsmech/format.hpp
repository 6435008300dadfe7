#pragma once

#include <cstdio>
#include <string>

namespace blsmech {

/// printf-style `%.<digits>g` rendering. Used for every numeric output so files are reproducible.
inline std::string format_g(double value, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

inline std::string format_csv_number(double value) { return format_g(value, 9); }

inline std::string format_fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    return buf;
}

}  // namespace blsmech
