#include "qwc/thermo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qwc/asymptotics.hpp"
#include "qwc/spectral.hpp"

namespace qwc::thermo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_e0(double e0) {
    if (!(e0 > 0.0) || !std::isfinite(e0)) {
        throw std::invalid_argument("energy scale E0 must be positive and finite");
    }
}

void check_axis(const AxisRange& a) {
    if (a.n == 0 || !std::isfinite(a.lo) || !std::isfinite(a.hi)) {
        throw std::invalid_argument("scan axis '" + a.name + "' needs n >= 1 and finite bounds");
    }
}

ScanGrid make_grid(const AxisRange& a1, const AxisRange& a2) {
    check_axis(a1);
    check_axis(a2);
    ScanGrid g;
    g.axis1 = a1;
    g.axis2 = a2;
    g.temperatures.resize(a1.n * a2.n);
    g.ratios.resize(a1.n * a2.n);
    return g;
}

}  // namespace

TemperatureResult entanglement_temperature(const ReducedDensity& rho, double e0) {
    check_e0(e0);
    TemperatureResult r;
    std::tie(r.lambda1, r.lambda2) = rho.eigenvalues();
    if (r.lambda1 - r.lambda2 <= kInfiniteGapTol) {
        r.temperature = kInf;
    } else if (r.lambda2 <= kPureStateTol) {
        r.temperature = 0.0;
    } else {
        r.temperature = 2.0 * e0 / std::log(r.lambda1 / r.lambda2);
    }
    return r;
}

TemperatureResult entanglement_temperature(const Mat2& rho, double e0) {
    check_e0(e0);
    if (hermiticity_defect(rho) > 1e-10) {
        throw std::domain_error("coin density matrix is not Hermitian");
    }
    return entanglement_temperature(ReducedDensity(rho), e0);
}

double temperature_ratio(double t, double t_ref) {
    if (std::isinf(t) && std::isinf(t_ref)) {
        return 1.0;
    }
    if (std::isinf(t_ref)) {
        return 0.0;
    }
    if (t_ref == 0.0) {
        return t == 0.0 ? 1.0 : kInf;
    }
    return t / t_ref;
}

double AxisRange::value(std::size_t i) const {
    if (n <= 1) {
        return lo;
    }
    if (i + 1 == n) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

AxisRange default_gamma_axis() { return {"gamma", 0.0, std::numbers::pi, 101}; }
AxisRange default_phi_axis() { return {"phi", 0.0, 2.0 * std::numbers::pi, 101}; }
AxisRange default_zeta_axis() { return {"zeta", -std::numbers::pi, std::numbers::pi, 101}; }
AxisRange default_xi_axis() { return {"xi", -std::numbers::pi, std::numbers::pi, 101}; }

ScanGrid bloch_temperature_scan(const CoinParams& coin, std::size_t n_nodes, const AxisRange& gamma,
                                const AxisRange& phi, double e0) {
    check_e0(e0);
    ScanGrid g = make_grid(gamma, phi);
    const auto spectrum = spectral::analyze(coin, n_nodes);
    auto temp = [&](double ga, double ph) {
        const auto psi = project_all(make_state(BlochSpec{ga, ph, 0}, n_nodes));
        return entanglement_temperature(asymptotics::asymptotic_reduced_density(psi, spectrum), e0)
            .temperature;
    };
    g.reference_temperature = temp(std::numbers::pi, 0.0);
    for (std::size_t i = 0; i < gamma.n; ++i) {
        for (std::size_t j = 0; j < phi.n; ++j) {
            const double t = temp(gamma.value(i), phi.value(j));
            g.temperatures[i * phi.n + j] = t;
            g.ratios[i * phi.n + j] = temperature_ratio(t, g.reference_temperature);
        }
    }
    return g;
}

ScanGrid coin_phase_temperature_scan(Angle theta, const InitialStateSpec& init, std::size_t n_nodes,
                                     const AxisRange& zeta, const AxisRange& xi, double e0) {
    check_e0(e0);
    ScanGrid g = make_grid(zeta, xi);
    const auto psi = project_all(make_state(init, n_nodes));
    auto temp = [&](const CoinParams& c) {
        const auto spectrum = spectral::analyze(c, n_nodes);
        return entanglement_temperature(asymptotics::asymptotic_reduced_density(psi, spectrum), e0)
            .temperature;
    };
    const Angle half_pi = Angle::from_pi_fraction(1, 2);
    g.reference_temperature = temp(CoinParams(theta, half_pi, half_pi));
    for (std::size_t i = 0; i < zeta.n; ++i) {
        for (std::size_t j = 0; j < xi.n; ++j) {
            const CoinParams c(theta, Angle::from_radians(zeta.value(i)), Angle::from_radians(xi.value(j)));
            const double t = temp(c);
            g.temperatures[i * xi.n + j] = t;
            g.ratios[i * xi.n + j] = temperature_ratio(t, g.reference_temperature);
        }
    }
    return g;
}

}  // namespace qwc::thermo
