#include "qwc/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwc {

double unitarity_defect(const Mat2& m) {
    return (m.adjoint() * m - Mat2::Identity()).cwiseAbs().maxCoeff();
}

CoinParams::CoinParams(Angle theta, Angle zeta, Angle xi, Angle eta)
    : theta_(theta), zeta_(zeta), xi_(xi), eta_(eta) {}

CoinParams::CoinParams(double theta, double zeta, double xi, double eta)
    : theta_(Angle::from_radians(theta)),
      zeta_(Angle::from_radians(zeta)),
      xi_(Angle::from_radians(xi)),
      eta_(Angle::from_radians(eta)) {}

CoinMatrix::CoinMatrix(const Mat2& m) : m_(m) {
    if (!m.allFinite() || unitarity_defect(m) > 1e-12) {
        throw std::invalid_argument("coin matrix is not unitary");
    }
}

CoinMatrix build_coin(const CoinParams& p) {
    const double t = p.theta().radians();
    const double z = p.zeta().radians();
    const double x = p.xi().radians();
    const cplx phase = std::polar(1.0, p.eta().radians() / 2.0);
    Mat2 m;
    // std::polar needs a non-negative magnitude; cos and sin here can be negative.
    m << std::cos(t) * std::polar(1.0, z), std::sin(t) * std::polar(1.0, x),
        -std::sin(t) * std::polar(1.0, -x), std::cos(t) * std::polar(1.0, -z);
    return CoinMatrix(phase * m);
}

CoinParams hadamard_params() {
    return {Angle::from_pi_fraction(1, 4), Angle::from_pi_fraction(1, 2),
            Angle::from_pi_fraction(1, 2), Angle{}};
}

CoinParams diaz_params(Angle theta) {
    return {theta, Angle::from_pi_fraction(-1, 2), Angle::from_pi_fraction(-1, 2),
            Angle::from_pi_fraction(1, 1)};
}

CoinParams diaz_params(double theta) { return diaz_params(Angle::from_radians(theta)); }

WalkState::WalkState(std::size_t n_nodes, ComplexVec amplitudes)
    : n_(n_nodes), amps_(std::move(amplitudes)) {
    if (n_ == 0) {
        throw std::invalid_argument("cycle needs at least one node");
    }
    if (static_cast<std::size_t>(amps_.size()) != 2 * n_) {
        throw std::invalid_argument("amplitude vector must have length 2N");
    }
    const double nrm = amps_.norm();
    if (!std::isfinite(nrm) || nrm == 0.0) {
        throw std::invalid_argument("state has zero or non-finite norm");
    }
    amps_ /= nrm;
}

WalkState::WalkState(NoRescale, std::size_t n_nodes, ComplexVec amplitudes)
    : n_(n_nodes), amps_(std::move(amplitudes)) {}

WalkState WalkState::from_normalized(std::size_t n_nodes, ComplexVec amplitudes) {
    if (n_nodes == 0 || static_cast<std::size_t>(amplitudes.size()) != 2 * n_nodes) {
        throw std::invalid_argument("amplitude vector must have length 2N");
    }
    if (!(std::abs(amplitudes.squaredNorm() - 1.0) <= 1e-10)) {
        throw std::invalid_argument("state is not normalized");
    }
    return WalkState(NoRescale{}, n_nodes, std::move(amplitudes));
}

namespace {

void check_position(std::size_t j, std::size_t n) {
    if (j >= n) {
        throw std::out_of_range("position " + std::to_string(j) + " outside cycle of " +
                                std::to_string(n) + " nodes");
    }
}

void check_pair_offset(std::size_t p, std::size_t n) {
    if (p == 0 || p >= n) {
        throw std::out_of_range("pair offset must satisfy 0 < p < N");
    }
}

}  // namespace

WalkState make_state(const InitialStateSpec& spec, std::size_t n_nodes) {
    if (n_nodes == 0) {
        throw std::invalid_argument("cycle needs at least one node");
    }
    ComplexVec a = ComplexVec::Zero(static_cast<Eigen::Index>(2 * n_nodes));
    const auto at = [&](int s, std::size_t j) -> cplx& {
        return a(static_cast<Eigen::Index>(static_cast<std::size_t>(s) * n_nodes + j));
    };
    const double r2 = 1.0 / std::numbers::sqrt2;

    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, LocalSpec>) {
                check_position(v.position, n_nodes);
                at(0, v.position) = v.c0;
                at(1, v.position) = v.c1;
            } else if constexpr (std::is_same_v<T, BlochSpec>) {
                check_position(v.position, n_nodes);
                at(0, v.position) = std::cos(v.gamma / 2.0);
                at(1, v.position) = std::sin(v.gamma / 2.0) * std::polar(1.0, v.phi);
            } else if constexpr (std::is_same_v<T, EntangledPairSpec>) {
                check_pair_offset(v.p, n_nodes);
                at(0, 0) = r2;
                at(1, v.p) = r2;
            } else if constexpr (std::is_same_v<T, SeparablePairSpec>) {
                check_pair_offset(v.p, n_nodes);
                at(0, 0) = r2;
                at(0, v.p) = r2;
            } else {
                for (const auto& e : v.entries) {
                    if (e.s != 0 && e.s != 1) {
                        throw std::out_of_range("coin index must be 0 or 1");
                    }
                    check_position(e.j, n_nodes);
                    at(e.s, e.j) += e.value;
                }
            }
        },
        spec);
    return WalkState(n_nodes, std::move(a));
}

Spinor project_initial(const WalkState& state, std::size_t k) {
    const std::size_t n = state.n_nodes();
    if (k >= n) {
        throw std::out_of_range("momentum index outside [0, N)");
    }
    Spinor out = Spinor::Zero();
    for (std::size_t j = 0; j < n; ++j) {
        // k*j reduced mod N keeps the phase argument small for large N.
        const cplx ph = std::polar(
            1.0, -2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n));
        out(0) += ph * state.amplitude(0, j);
        out(1) += ph * state.amplitude(1, j);
    }
    return out / std::sqrt(static_cast<double>(n));
}

std::vector<Spinor> project_all(const WalkState& state) {
    std::vector<Spinor> out;
    out.reserve(state.n_nodes());
    for (std::size_t k = 0; k < state.n_nodes(); ++k) {
        out.push_back(project_initial(state, k));
    }
    return out;
}

ComplexVec reconstruct_amplitudes(const std::vector<Spinor>& psi) {
    const std::size_t n = psi.size();
    ComplexVec a = ComplexVec::Zero(static_cast<Eigen::Index>(2 * n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        cplx s0{}, s1{};
        for (std::size_t k = 0; k < n; ++k) {
            const cplx ph = std::polar(
                scale, 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n));
            s0 += ph * psi[k](0);
            s1 += ph * psi[k](1);
        }
        a(static_cast<Eigen::Index>(j)) = s0;
        a(static_cast<Eigen::Index>(n + j)) = s1;
    }
    return a;
}

}  // namespace qwc
