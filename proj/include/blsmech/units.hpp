#pragma once

#include <compare>

namespace blsmech {

// Thin tagged wrapper so that a stiffness cannot be passed where a pressure is expected.
template <class Tag>
class Quantity {
public:
    constexpr Quantity() = default;
    constexpr explicit Quantity(double v) : value_(v) {}

    constexpr double value() const { return value_; }

    constexpr auto operator<=>(const Quantity&) const = default;

    constexpr Quantity operator+(Quantity o) const { return Quantity(value_ + o.value_); }
    constexpr Quantity operator-(Quantity o) const { return Quantity(value_ - o.value_); }
    constexpr Quantity operator*(double s) const { return Quantity(value_ * s); }
    constexpr Quantity operator/(double s) const { return Quantity(value_ / s); }
    constexpr double operator/(Quantity o) const { return value_ / o.value_; }

private:
    double value_ = 0.0;
};

namespace unit_tag {
struct Newton {};
struct Millimeter {};
struct NewtonPerMillimeter {};
struct KiloPascal {};
struct Kilogram {};
struct Degree {};
}  // namespace unit_tag

using Newtons = Quantity<unit_tag::Newton>;
using Millimeters = Quantity<unit_tag::Millimeter>;
using NewtonsPerMm = Quantity<unit_tag::NewtonPerMillimeter>;
using KiloPascals = Quantity<unit_tag::KiloPascal>;
using Kilograms = Quantity<unit_tag::Kilogram>;
using Degrees = Quantity<unit_tag::Degree>;

constexpr NewtonsPerMm operator/(Newtons f, Millimeters d) { return NewtonsPerMm(f.value() / d.value()); }
constexpr Newtons operator*(NewtonsPerMm k, Millimeters d) { return Newtons(k.value() * d.value()); }

inline constexpr double kPi = 3.14159265358979323846;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

}  // namespace blsmech
