#include "qwc/cli/config.hpp"

#include <charconv>
#include <vector>

namespace qwc::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

template <typename F>
auto rethrow_as_config(std::string_view what, F&& f) {
    try {
        return f();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

CoinParams parse_coin(std::string_view text) {
    if (text == "hadamard") {
        return hadamard_params();
    }
    return rethrow_as_config("coin '" + std::string(text) + "'", [&] {
        if (text.starts_with("diaz:")) {
            return diaz_params(parse_angle(text.substr(5)));
        }
        if (text.starts_with("u2:")) {
            const auto parts = split(text.substr(3), ',');
            if (parts.size() != 3 && parts.size() != 4) {
                throw ConfigError("u2 needs THETA,ZETA,XI[,ETA]");
            }
            const Angle eta = parts.size() == 4 ? parse_angle(parts[3]) : Angle{};
            return CoinParams(parse_angle(parts[0]), parse_angle(parts[1]), parse_angle(parts[2]), eta);
        }
        throw ConfigError("expected hadamard, diaz:THETA or u2:THETA,ZETA,XI[,ETA]");
    });
}

std::string format_coin(const CoinParams& coin) {
    return "u2:" + to_string(coin.theta()) + "," + to_string(coin.zeta()) + "," + to_string(coin.xi()) +
           "," + to_string(coin.eta());
}

thermo::AxisRange parse_axis(std::string_view text, std::string name) {
    return rethrow_as_config("axis '" + std::string(text) + "'", [&] {
        const auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw ConfigError("expected LO:HI:N");
        }
        std::size_t n = 0;
        const auto tok = parts[2];
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || n == 0) {
            throw ConfigError("N must be a positive integer");
        }
        return thermo::AxisRange{std::move(name), parse_radians(parts[0]), parse_radians(parts[1]), n};
    });
}

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw ConfigError("format must be csv or json");
}

ScanKind parse_scan(std::string_view text) {
    if (text == "none") {
        return ScanKind::none;
    }
    if (text == "bloch") {
        return ScanKind::bloch;
    }
    if (text == "phase") {
        return ScanKind::phase;
    }
    throw ConfigError("scan must be none, bloch or phase");
}

}  // namespace qwc::cli
