#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qwc/core.hpp"
#include "qwc/thermo.hpp"

namespace qwc::cli {

/// Raised for any malformed or inconsistent command-line configuration.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class OutputFormat { csv, json };

enum class ScanKind { none, bloch, phase };

struct RunConfig {
    std::size_t n_nodes = 0;
    std::string coin_text = "hadamard";
    CoinParams coin = hadamard_params();
    std::string init_text = "local:0";
    InitialStateSpec init = LocalSpec{};
    std::optional<std::string> out;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 20240601;
    double e0 = 1.0;
    std::uint64_t t_max = 200000;
    bool reduce = false;
    ScanKind scan = ScanKind::none;
    Angle scan_theta = Angle::from_pi_fraction(1, 4);
    std::optional<thermo::AxisRange> axis1;
    std::optional<thermo::AxisRange> axis2;
};

/// `hadamard` | `diaz:THETA` | `u2:THETA,ZETA,XI[,ETA]`.
CoinParams parse_coin(std::string_view text);

/// Inverse of parse_coin for the u2 form, exact fractions kept as `a*pi/b`.
std::string format_coin(const CoinParams& coin);

/// `LO:HI:N`; each bound accepts the angle grammar without wrapping.
thermo::AxisRange parse_axis(std::string_view text, std::string name);

OutputFormat parse_format(std::string_view text);
ScanKind parse_scan(std::string_view text);

}  // namespace qwc::cli
