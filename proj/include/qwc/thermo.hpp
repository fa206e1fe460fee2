#pragma once

// Entanglement temperature of the asymptotic coin state,
// T = 2 E0 / ln(lambda1 / lambda2) from the eigenvalues of rho_c.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qwc/core.hpp"
#include "qwc/observables.hpp"

namespace qwc::thermo {

/// lambda1 - lambda2 at or below this gives T = +inf.
inline constexpr double kInfiniteGapTol = 1e-12;
/// lambda2 at or below this gives T = 0.
inline constexpr double kPureStateTol = 1e-14;

struct TemperatureResult {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double temperature = 0.0;
    std::optional<double> ratio_to_reference;
};

/// Throws std::invalid_argument for e0 <= 0.
TemperatureResult entanglement_temperature(const ReducedDensity& rho, double e0 = 1.0);

/// Validating overload: throws std::domain_error unless `rho` is Hermitian
/// to 1e-10, std::invalid_argument for e0 <= 0 or a non-density matrix.
TemperatureResult entanglement_temperature(const Mat2& rho, double e0 = 1.0);

/// t / t_ref with inf/inf = 1, finite/inf = 0 and x/0 = inf.
double temperature_ratio(double t, double t_ref);

/// n evenly spaced values from lo to hi inclusive.
struct AxisRange {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    std::size_t n = 1;

    double value(std::size_t i) const;
};

/// Row-major T/T0 values: ratios[i * axis2.n + j] for (axis1[i], axis2[j]).
struct ScanGrid {
    AxisRange axis1;
    AxisRange axis2;
    double reference_temperature = 0.0;
    std::vector<double> temperatures;
    std::vector<double> ratios;

    double ratio_at(std::size_t i, std::size_t j) const { return ratios[i * axis2.n + j]; }
    double temperature_at(std::size_t i, std::size_t j) const { return temperatures[i * axis2.n + j]; }
};

AxisRange default_gamma_axis();
AxisRange default_phi_axis();
AxisRange default_zeta_axis();
AxisRange default_xi_axis();

/// Temperature over Bloch initial states localized at node 0, relative to
/// the state with gamma = pi, phi = 0 under the same coin.
ScanGrid bloch_temperature_scan(const CoinParams& coin, std::size_t n_nodes,
                                const AxisRange& gamma = default_gamma_axis(),
                                const AxisRange& phi = default_phi_axis(), double e0 = 1.0);

/// Temperature over coin phases (zeta, xi) with eta = 0, for a fixed
/// initial state, relative to the same state under (theta, pi/2, pi/2).
ScanGrid coin_phase_temperature_scan(Angle theta, const InitialStateSpec& init, std::size_t n_nodes,
                                     const AxisRange& zeta = default_zeta_axis(),
                                     const AxisRange& xi = default_xi_axis(), double e0 = 1.0);

}  // namespace qwc::thermo
