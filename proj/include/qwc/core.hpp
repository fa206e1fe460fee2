#pragma once

// Shared domain types for coined walks on N-cycles.
//
// State layout: amplitudes are stored coin-major, index s*N + j for coin
// s in {0, 1} and position j in [0, N). Every matrix over the full walk
// space uses the same ordering.

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qwc/angle.hpp"

namespace qwc {

using cplx = std::complex<double>;
using Spinor = Eigen::Vector2cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using ComplexMat = Eigen::MatrixXcd;
using ComplexVec = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

/// Max-norm of (A^dagger A - I).
double unitarity_defect(const Mat2& m);

/// U(2) coin parameters; every angle is canonicalized into (-pi, pi].
class CoinParams {
public:
    CoinParams() = default;
    CoinParams(Angle theta, Angle zeta, Angle xi, Angle eta = Angle{});
    /// Throws std::invalid_argument if any value is non-finite.
    CoinParams(double theta, double zeta, double xi, double eta = 0.0);

    const Angle& theta() const { return theta_; }
    const Angle& zeta() const { return zeta_; }
    const Angle& xi() const { return xi_; }
    const Angle& eta() const { return eta_; }

    CoinParams with_eta(Angle eta) const { return {theta_, zeta_, xi_, eta}; }

private:
    Angle theta_;
    Angle zeta_;
    Angle xi_;
    Angle eta_;
};

class CoinMatrix {
public:
    /// Throws std::invalid_argument unless m is unitary to 1e-12.
    explicit CoinMatrix(const Mat2& m);

    const Mat2& matrix() const { return m_; }
    cplx operator()(int r, int c) const { return m_(r, c); }

private:
    Mat2 m_;
};

/// e^{i eta/2} [[e^{i zeta} cos t, e^{i xi} sin t], [-e^{-i xi} sin t, e^{-i zeta} cos t]]
CoinMatrix build_coin(const CoinParams& params);

/// theta = pi/4, zeta = xi = pi/2: i*H.
CoinParams hadamard_params();

/// Real reflection coin [[cos t, sin t], [sin t, -cos t]].
CoinParams diaz_params(Angle theta);
CoinParams diaz_params(double theta);

/// Normalized amplitude vector over coin (x) position, length 2N.
class WalkState {
public:
    /// Normalizes `amplitudes`. Throws std::invalid_argument on size
    /// mismatch, n_nodes == 0, or a zero vector.
    WalkState(std::size_t n_nodes, ComplexVec amplitudes);

    /// Takes amplitudes that are already unit-norm (within 1e-10) as-is,
    /// without rescaling. Throws std::invalid_argument otherwise.
    static WalkState from_normalized(std::size_t n_nodes, ComplexVec amplitudes);

    std::size_t n_nodes() const { return n_; }
    std::size_t dim() const { return 2 * n_; }
    const ComplexVec& amplitudes() const { return amps_; }
    cplx amplitude(int s, std::size_t j) const { return amps_(index(s, j)); }
    std::size_t index(int s, std::size_t j) const { return static_cast<std::size_t>(s) * n_ + j; }

    double norm_squared() const { return amps_.squaredNorm(); }

private:
    struct NoRescale {};
    WalkState(NoRescale, std::size_t n_nodes, ComplexVec amplitudes);

    std::size_t n_;
    ComplexVec amps_;
};

struct LocalSpec {
    std::size_t position = 0;
    cplx c0{1.0, 0.0};
    cplx c1{0.0, 0.0};
};

/// Coin [cos(gamma/2), e^{i phi} sin(gamma/2)] at `position`.
struct BlochSpec {
    double gamma = 0.0;
    double phi = 0.0;
    std::size_t position = 0;
};

/// (|0>|coin 0> + |p>|coin 1>)/sqrt(2), position (x) coin.
struct EntangledPairSpec {
    std::size_t p = 1;
};

/// (|0> + |p>)/sqrt(2) (x) |coin 0>.
struct SeparablePairSpec {
    std::size_t p = 1;
};

struct RawAmplitude {
    int s = 0;
    std::size_t j = 0;
    cplx value;
};

struct RawSpec {
    std::vector<RawAmplitude> entries;
};

using InitialStateSpec =
    std::variant<LocalSpec, BlochSpec, EntangledPairSpec, SeparablePairSpec, RawSpec>;

/// Throws std::out_of_range for positions >= N or pair offsets outside
/// (0, N), std::invalid_argument for zero-norm specs.
WalkState make_state(const InitialStateSpec& spec, std::size_t n_nodes);

/// psi_k = <kappa_k|Psi(0)> = N^{-1/2} sum_j e^{-2 pi i k j / N} (a_{0,j}, a_{1,j}).
/// Throws std::out_of_range for k >= N.
Spinor project_initial(const WalkState& state, std::size_t k);

/// All N projections, index k.
std::vector<Spinor> project_all(const WalkState& state);

/// Inverse of project_all.
ComplexVec reconstruct_amplitudes(const std::vector<Spinor>& psi);

/// Parses the initial-state mini-language:
///   local:J[,c0re,c0im,c1re,c1im]   bloch:GAMMA,PHI[@J]
///   entangled:P   separable:P   raw:@FILE   (CSV rows s,j,re,im)
/// Throws std::invalid_argument on malformed input or unreadable files.
InitialStateSpec parse_initial_state(std::string_view text);

/// Reads `s,j,re,im` rows. Blank lines, `#` comments and a non-numeric
/// header line are skipped.
RawSpec read_raw_state_csv(const std::string& path);

}  // namespace qwc
