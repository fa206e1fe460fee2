#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qwc/core.hpp"

namespace qwc {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::size_t to_index(const std::string& tok, std::string_view what) {
    const std::string t = trim(tok);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
        throw std::invalid_argument("bad " + std::string(what) + " '" + tok + "'");
    }
    return v;
}

double to_real(const std::string& tok) {
    const std::string t = trim(tok);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad number '" + tok + "'");
    }
    if (used != t.size()) {
        throw std::invalid_argument("bad number '" + tok + "'");
    }
    return v;
}

}  // namespace

RawSpec read_raw_state_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open raw state file '" + path + "'");
    }
    RawSpec raw;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        const bool header = first && !(std::isdigit(static_cast<unsigned char>(t[0])) || t[0] == '-' || t[0] == '+');
        first = false;
        if (header) {
            continue;
        }
        const auto cols = split(t, ',');
        if (cols.size() != 4) {
            throw std::invalid_argument("raw state rows need 4 columns s,j,re,im: '" + t + "'");
        }
        const std::size_t s = to_index(cols[0], "coin index");
        if (s > 1) {
            throw std::invalid_argument("coin index must be 0 or 1");
        }
        raw.entries.push_back({static_cast<int>(s), to_index(cols[1], "position"),
                               cplx{to_real(cols[2]), to_real(cols[3])}});
    }
    if (raw.entries.empty()) {
        throw std::invalid_argument("raw state file '" + path + "' has no amplitudes");
    }
    return raw;
}

InitialStateSpec parse_initial_state(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("initial state needs KIND:ARGS, got '" + std::string(text) + "'");
    }
    const std::string kind = trim(text.substr(0, colon));
    const std::string args = trim(text.substr(colon + 1));
    if (args.empty()) {
        throw std::invalid_argument("missing arguments for initial state '" + kind + "'");
    }

    if (kind == "local") {
        const auto f = split(args, ',');
        if (f.size() != 1 && f.size() != 5) {
            throw std::invalid_argument("local takes J or J,c0re,c0im,c1re,c1im");
        }
        LocalSpec spec;
        spec.position = to_index(f[0], "position");
        if (f.size() == 5) {
            spec.c0 = {to_real(f[1]), to_real(f[2])};
            spec.c1 = {to_real(f[3]), to_real(f[4])};
        }
        return spec;
    }
    if (kind == "bloch") {
        std::string body = args;
        BlochSpec spec;
        if (const auto at = body.find('@'); at != std::string::npos) {
            spec.position = to_index(body.substr(at + 1), "position");
            body.resize(at);
        }
        const auto f = split(body, ',');
        if (f.size() != 2) {
            throw std::invalid_argument("bloch takes GAMMA,PHI[@J]");
        }
        // Unwrapped: the spinor uses gamma/2, so gamma and gamma - 2pi differ.
        spec.gamma = parse_radians(f[0]);
        spec.phi = parse_radians(f[1]);
        return spec;
    }
    if (kind == "entangled") {
        return EntangledPairSpec{to_index(args, "pair offset")};
    }
    if (kind == "separable") {
        return SeparablePairSpec{to_index(args, "pair offset")};
    }
    if (kind == "raw") {
        if (args[0] != '@') {
            throw std::invalid_argument("raw state expects raw:@FILE");
        }
        return read_raw_state_csv(args.substr(1));
    }
    throw std::invalid_argument("unknown initial state kind '" + kind + "'");
}

}  // namespace qwc
