#include "qwc/cli/output.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace qwc::cli {

namespace {

using nlohmann::json;

json real_json(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return format_real(x);
}

}  // namespace

std::string format_real(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_distribution(std::ostream& os, const Distribution& d, OutputFormat fmt) {
    const Distribution checked(d.probs());
    if (fmt == OutputFormat::json) {
        json j;
        j["n_nodes"] = checked.size();
        j["distribution"] = checked.probs();
        os << j.dump(2) << '\n';
        return;
    }
    os << "v,pi_v\n";
    for (std::size_t v = 0; v < checked.size(); ++v) {
        os << v << ',' << format_real(checked[v]) << '\n';
    }
}

void write_reduced_density(std::ostream& os, const ReducedDensity& rho, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json m = json::array();
        for (int r = 0; r < 2; ++r) {
            json row = json::array();
            for (int c = 0; c < 2; ++c) {
                row.push_back({rho(r, c).real(), rho(r, c).imag()});
            }
            m.push_back(row);
        }
        const auto [l1, l2] = rho.eigenvalues();
        json j;
        j["rho"] = m;
        j["eigenvalues"] = {l1, l2};
        os << j.dump(2) << '\n';
        return;
    }
    os << "row,col,re,im\n";
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            os << r << ',' << c << ',' << format_real(rho(r, c).real()) << ','
               << format_real(rho(r, c).imag()) << '\n';
        }
    }
}

void write_temperature(std::ostream& os, const thermo::TemperatureResult& t, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json j;
        j["lambda1"] = t.lambda1;
        j["lambda2"] = t.lambda2;
        j["temperature"] = real_json(t.temperature);
        os << j.dump(2) << '\n';
        return;
    }
    os << "lambda1,lambda2,temperature\n"
       << format_real(t.lambda1) << ',' << format_real(t.lambda2) << ',' << format_real(t.temperature) << '\n';
}

void write_scan(std::ostream& os, const thermo::ScanGrid& g, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        auto axis = [](const thermo::AxisRange& a) {
            return json{{"name", a.name}, {"lo", a.lo}, {"hi", a.hi}, {"n", a.n}};
        };
        json rows = json::array();
        for (std::size_t i = 0; i < g.axis1.n; ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < g.axis2.n; ++k) {
                row.push_back(real_json(g.ratio_at(i, k)));
            }
            rows.push_back(row);
        }
        json j;
        j["axis1"] = axis(g.axis1);
        j["axis2"] = axis(g.axis2);
        j["reference_temperature"] = real_json(g.reference_temperature);
        j["ratios"] = rows;
        os << j.dump(2) << '\n';
        return;
    }
    os << g.axis1.name << ',' << g.axis2.name << ",ratio\n";
    for (std::size_t i = 0; i < g.axis1.n; ++i) {
        for (std::size_t k = 0; k < g.axis2.n; ++k) {
            os << format_real(g.axis1.value(i)) << ',' << format_real(g.axis2.value(k)) << ','
               << format_real(g.ratio_at(i, k)) << '\n';
        }
    }
}

}  // namespace qwc::cli
