#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qwc {

/// Exact angle value num/den * pi with den > 0 and gcd(num, den) == 1.
struct PiFraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

/// An angle in radians, canonicalized into (-pi, pi].
///
/// Angles entered as rational multiples of pi keep their exact fraction so
/// that arithmetic conditions on them (integrality of N*zeta/pi) can be
/// decided without floating-point drift.
class Angle {
public:
    Angle() = default;

    /// Throws std::invalid_argument for non-finite input.
    static Angle from_radians(double radians);
    /// Throws std::invalid_argument when den == 0.
    static Angle from_pi_fraction(std::int64_t num, std::int64_t den);

    double radians() const { return radians_; }
    const std::optional<PiFraction>& pi_fraction() const { return exact_; }

    Angle operator-() const;

private:
    double radians_ = 0.0;
    std::optional<PiFraction> exact_ = PiFraction{};
};

/// Parses `0.25`, `pi`, `-pi/2`, `3pi/4`, `3*pi/4`, `2/3pi` style tokens.
/// Throws std::invalid_argument on malformed input.
Angle parse_angle(std::string_view token);

/// Same grammar as parse_angle, without canonicalization.
double parse_radians(std::string_view token);

std::string to_string(const Angle& a);

}  // namespace qwc
