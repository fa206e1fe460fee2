#pragma once

// Brute-force reference: direct time evolution and finite-time averages.
// Everything here works in position space and never touches the k-space
// machinery, so it can serve as an independent check of the closed forms.

#include <cstdint>

#include "qwc/core.hpp"
#include "qwc/observables.hpp"

namespace qwc::oracle {

/// (s, j) -> (s, j + (-1)^s mod N).
WalkState apply_shift(const WalkState& state);

/// S (coin (x) I_p) |psi>.
WalkState step(const WalkState& state, const CoinMatrix& coin);

WalkState evolve(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t);

Distribution position_distribution(const WalkState& state);

/// (1/T) sum_{t=1..T} |Psi(t)><Psi(t)|, accumulated in place. O(T N^2).
/// Throws std::invalid_argument for t_max == 0.
DensityMatrix time_avg_density(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t_max);

/// (1/T) sum_{t=1..T} p_t(v). O(T N).
Distribution time_avg_distribution(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t_max);

/// (rho_c)_{s,s'} = sum_j rho_{(s,j),(s',j)}.
ReducedDensity reduce_to_coin(const DensityMatrix& rho);

/// Equivalent to reduce_to_coin(time_avg_density(...)) without forming the
/// 2N x 2N matrix. O(T N).
ReducedDensity time_avg_reduced_density(const WalkState& state0, const CoinMatrix& coin,
                                        std::uint64_t t_max);

struct TimeAverages {
    Distribution distribution;
    ReducedDensity reduced;
};

/// Both streaming averages from a single trajectory.
TimeAverages time_averages(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t_max);

}  // namespace qwc::oracle
