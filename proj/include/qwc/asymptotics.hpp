#pragma once

// Exact long-time averages from the characteristic matrix M(k, k').
//
// M(k, k') = sum over eigenpairs (i, j) with lambda_k^i == lambda_{k'}^j of
//            |v_k^i><v_{k'}^j| (x) |v_{k'}^j><v_k^i|,
// a 4x4 matrix on coin (x) coin, row/column index 2a + b.
// Theta(k, k')_{ab} = sum_{j,m} (psi_k psi_{k'}^dagger)_{jm} M_{(a,m),(b,j)}
// is the coin part of the averaged density restricted to |kappa_k><kappa_k'|.

#include <cstddef>
#include <vector>

#include "qwc/core.hpp"
#include "qwc/observables.hpp"
#include "qwc/spectral.hpp"

namespace qwc::asymptotics {

/// Two eigenvalues are treated as equal below this distance.
inline constexpr double kEigenvalueMatchTol = 1e-9;

struct MMatrix {
    std::size_t k = 0;
    std::size_t k_prime = 0;
    Mat4 entries = Mat4::Zero();
};

/// Throws std::domain_error when no eigenvalue of `a` matches one of `b`.
MMatrix m_matrix(const spectral::KBlock& a, const spectral::KBlock& b,
                 double tol = kEigenvalueMatchTol);

/// Theta(k, k') for projections psi_k, psi_{k'}.
Mat2 theta_matrix(const MMatrix& m, const Spinor& psi_k, const Spinor& psi_kp);

/// Sum_k Theta(k, k). The second overload reuses a precomputed spectrum and
/// the projections from project_all().
ReducedDensity asymptotic_reduced_density(const WalkState& state, const CoinParams& coin);
ReducedDensity asymptotic_reduced_density(const std::vector<Spinor>& psi,
                                          const spectral::Spectrum& spectrum);

/// Interference part of the limiting distribution before taking the real
/// part: (1/N) sum_{k != k'} e^{2 pi i v (k - k') / N} Tr Theta(k, k'),
/// over degenerate pairs. Its imaginary part vanishes analytically.
std::vector<cplx> interference_terms(const std::vector<Spinor>& psi,
                                     const spectral::Spectrum& spectrum);

/// pi(v) = 1/N + Re(interference_terms[v]), dust-clipped and renormalized.
Distribution limiting_distribution(const WalkState& state, const CoinParams& coin);
Distribution limiting_distribution(const std::vector<Spinor>& psi,
                                   const spectral::Spectrum& spectrum);

/// Full averaged density sum_{k,k'} |kappa_k><kappa_k'| (x) Theta(k, k')
/// in the coin-major position basis. O(N^2) memory.
DensityMatrix asymptotic_density(const WalkState& state, const CoinParams& coin);

/// Closed-form limiting distribution of the Hadamard walk started from
/// |t> (x) |coin 0>. Uniform for odd N. Throws std::out_of_range for t >= N.
Distribution hadamard_local_ld(std::size_t n_nodes, std::size_t t = 0);

}  // namespace qwc::asymptotics
