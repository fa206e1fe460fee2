#pragma once

// k-space machinery. The Fourier basis |kappa_k> = N^{-1/2} sum_n
// e^{2 pi i k n / N} |n> block-diagonalizes the walk into 2x2 blocks
// U_k = diag(e^{-i omega}, e^{i omega}) * coin, omega = 2 pi k / N.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qwc/core.hpp"

namespace qwc::spectral {

/// |sin alpha| at or below this is treated as a scalar block.
inline constexpr double kScalarBlockTol = 1e-9;

enum class Zone : int { I = 0, II = 1 };

/// Eigen-data of one block.
///
/// eigenvalues[0] = e^{i eta/2} e^{+i alpha} (zone I) and eigenvalues[1] =
/// e^{i eta/2} e^{-i alpha} (zone II), alpha in [0, pi] with
/// cos(alpha) = cos(theta) cos(omega - zeta). With eta = 0 these are the
/// bare e^{+-i alpha}.
struct KBlock {
    std::size_t k = 0;
    std::size_t n_nodes = 0;
    double omega = 0.0;
    double alpha = 0.0;
    std::array<cplx, 2> eigenvalues{};
    std::array<Spinor, 2> eigenvectors{};
    /// True when the block is a multiple of the identity; the canonical
    /// basis is used and both eigenvalues coincide exactly.
    bool scalar = false;

    const cplx& eigenvalue(Zone z) const { return eigenvalues[static_cast<int>(z)]; }
    const Spinor& eigenvector(Zone z) const { return eigenvectors[static_cast<int>(z)]; }
};

/// diag(e^{-i omega}, e^{i omega}) * build_coin(coin). Throws
/// std::out_of_range for k >= N.
Mat2 block(std::size_t k, const CoinParams& coin, std::size_t n_nodes);

/// Throws std::out_of_range for k >= N.
KBlock solve_block(std::size_t k, const CoinParams& coin, std::size_t n_nodes);

/// Momentum pairs (k, k') with k + k' = N zeta / pi (mod N), whose
/// eigenvalues coincide zone by zone.
struct DegeneracyTable {
    std::size_t n_nodes = 0;
    Angle zeta;
    /// (N zeta / pi) mod N when N zeta / pi is an integer.
    std::optional<std::size_t> pair_sum;
    /// partner[k], empty when no degeneracy exists.
    std::vector<std::optional<std::size_t>> partner;
    /// k with partner(k) == k, ascending.
    std::vector<std::size_t> self_paired;
    /// cos(theta) == 0: every block has alpha = pi/2 and all momenta are
    /// mutually degenerate, beyond the pairs listed above.
    bool fully_degenerate = false;

    std::optional<std::size_t> partner_of(std::size_t k) const;
    bool has_pairs() const { return pair_sum.has_value(); }
};

/// Integrality of N zeta / pi is decided exactly when zeta carries a
/// rational-pi fraction, otherwise with absolute tolerance 1e-9.
DegeneracyTable degeneracy_table(const CoinParams& coin, std::size_t n_nodes);

/// Blocks for every k plus the degeneracy table.
struct Spectrum {
    std::size_t n_nodes = 0;
    CoinParams coin;
    std::vector<KBlock> blocks;
    DegeneracyTable table;
};

/// Throws std::invalid_argument for n_nodes == 0.
Spectrum analyze(const CoinParams& coin, std::size_t n_nodes);

/// Sum_i lambda_i |v_i><v_i| for one block.
Mat2 reconstruct(const KBlock& kb);

}  // namespace qwc::spectral
