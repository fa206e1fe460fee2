#include "qwc/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qwc {

namespace {

double wrap_radians(double x) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (x > -std::numbers::pi && x <= std::numbers::pi) {
        return x;
    }
    double w = std::fmod(x - std::numbers::pi, two_pi);
    if (w > 0.0) {
        w -= two_pi;
    }
    w += std::numbers::pi;
    // fmod can land exactly on -pi after the shift for inputs like pi + eps.
    if (w <= -std::numbers::pi) {
        w += two_pi;
    }
    return w;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
    }
    return v;
}

}  // namespace

Angle Angle::from_radians(double radians) {
    if (!std::isfinite(radians)) {
        throw std::invalid_argument("angle must be finite");
    }
    Angle a;
    a.radians_ = wrap_radians(radians);
    a.exact_.reset();
    if (radians == 0.0) {
        a.exact_ = PiFraction{};
    }
    return a;
}

Angle Angle::from_pi_fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator in angle");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
    // Reduce num/den modulo 2 into (-1, 1].
    const std::int64_t period = 2 * den;
    std::int64_t r = (num - den) % period;
    if (r > 0) {
        r -= period;
    }
    num = r + den;
    const std::int64_t g2 = std::gcd(num, den);
    if (g2 > 1) {
        num /= g2;
        den /= g2;
    }
    if (num == 0) {
        den = 1;
    }

    Angle a;
    a.exact_ = PiFraction{num, den};
    a.radians_ = static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
    return a;
}

Angle Angle::operator-() const {
    if (exact_) {
        return from_pi_fraction(-exact_->num, exact_->den);
    }
    return from_radians(-radians_);
}

namespace {

struct ParsedAngle {
    double raw = 0.0;
    std::optional<PiFraction> exact;
};

ParsedAngle parse_impl(std::string_view token) {
    std::string s;
    for (char c : token) {
        if (c != ' ' && c != '*') {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty angle");
    }

    const auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed angle '" + std::string(token) + "'");
        }
        if (used != s.size() || !std::isfinite(v)) {
            throw std::invalid_argument("malformed angle '" + std::string(token) + "'");
        }
        return {v, std::nullopt};
    }

    // [sign][A[/B]]pi[/C]
    std::string prefix = s.substr(0, pi_pos);
    std::string suffix = s.substr(pi_pos + 2);
    std::int64_t num = 1;
    std::int64_t den = 1;
    bool negative = false;
    if (!prefix.empty() && (prefix[0] == '-' || prefix[0] == '+')) {
        negative = prefix[0] == '-';
        prefix.erase(0, 1);
    }
    if (!prefix.empty()) {
        const auto slash = prefix.find('/');
        if (slash == std::string::npos) {
            num = parse_int(prefix, token);
        } else {
            num = parse_int(std::string_view(prefix).substr(0, slash), token);
            den = parse_int(std::string_view(prefix).substr(slash + 1), token);
        }
    }
    if (!suffix.empty()) {
        if (suffix[0] != '/') {
            throw std::invalid_argument("malformed angle '" + std::string(token) + "'");
        }
        den *= parse_int(std::string_view(suffix).substr(1), token);
    }
    if (den == 0) {
        throw std::invalid_argument("zero denominator in angle '" + std::string(token) + "'");
    }
    if (negative) {
        num = -num;
    }
    return {static_cast<double>(num) * std::numbers::pi / static_cast<double>(den), PiFraction{num, den}};
}

}  // namespace

Angle parse_angle(std::string_view token) {
    const ParsedAngle p = parse_impl(token);
    if (p.exact) {
        return Angle::from_pi_fraction(p.exact->num, p.exact->den);
    }
    return Angle::from_radians(p.raw);
}

double parse_radians(std::string_view token) { return parse_impl(token).raw; }

std::string to_string(const Angle& a) {
    std::ostringstream os;
    if (const auto& f = a.pi_fraction()) {
        if (f->num == 0) {
            os << "0";
        } else {
            if (f->num == -1) {
                os << "-";
            } else if (f->num != 1) {
                os << f->num;
            }
            os << "pi";
            if (f->den != 1) {
                os << "/" << f->den;
            }
        }
    } else {
        os.precision(17);
        os << a.radians();
    }
    return os.str();
}

}  // namespace qwc
