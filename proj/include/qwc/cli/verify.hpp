#pragma once

// Randomized differential sweep: closed-form asymptotics against the
// brute-force finite-time averages.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qwc/core.hpp"
#include "qwc/spectral.hpp"

namespace qwc::cli {

struct VerifyOptions {
    std::uint64_t seed = 20240601;
    std::size_t n_min = 3;
    std::size_t n_max = 12;
    std::size_t coins_per_n = 20;
    std::size_t states_per_coin = 5;
    std::uint64_t t_max = 200000;
    double tolerance = 1e-2;
    /// Coins whose smallest non-zero eigenvalue separation is below this are
    /// redrawn: a finite average over t_max steps cannot resolve them.
    double min_gap = 5e-3;
};

struct VerifyCase {
    std::size_t n_nodes = 0;
    std::size_t coin_index = 0;
    std::size_t state_index = 0;
    CoinParams coin;
    ComplexVec initial;
    double ld_deviation = 0.0;
    double rho_deviation = 0.0;
    /// Worst of hermiticity defect, |trace - 1| and negative eigenvalue over
    /// both reduced densities.
    double validity_defect = 0.0;
    bool degenerate = false;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<VerifyCase> cases;
    double max_ld_deviation = 0.0;
    double max_rho_deviation = 0.0;
    double max_validity_defect = 0.0;
    std::size_t degenerate_coins = 0;
    std::size_t redrawn_coins = 0;

    bool passed() const;
    std::vector<const VerifyCase*> failures() const;
};

/// Half the coins get zeta = m pi / N (exact), which always creates
/// degenerate momentum pairs; the rest are uniform in every angle.
CoinParams random_coin(std::mt19937_64& rng, std::size_t n_nodes, bool rational_zeta);

/// State 0 of each coin is a random coin spinor at a random node; the others
/// have complex Gaussian amplitudes on every site.
WalkState random_state(std::mt19937_64& rng, std::size_t n_nodes, bool localized);

/// Smallest |lambda_a - lambda_b| over all eigenvalue pairs of the walk that
/// are not equal within 1e-9.
double min_eigenvalue_gap(const spectral::Spectrum& s);

VerifyReport run_verify(const VerifyOptions& opts,
                        const std::function<void(const VerifyCase&)>& on_case = {});

/// Human-readable report; offending cases carry enough data to reproduce.
std::string describe(const VerifyReport& r);

/// max(hermiticity defect, |trace - 1|, -lambda_min) of a 2x2 matrix.
double density_defect(const Mat2& rho);

}  // namespace qwc::cli
