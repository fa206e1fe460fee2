#include "qwc/oracle.hpp"

#include <stdexcept>

namespace qwc::oracle {

namespace {

// out(0, j+1) = c00 a0j + c01 a1j ; out(1, j-1) = c10 a0j + c11 a1j
void step_raw(const ComplexVec& a, ComplexVec& out, const Mat2& c, std::size_t n) {
    const cplx* a0 = a.data();
    const cplx* a1 = a.data() + n;
    cplx* o0 = out.data();
    cplx* o1 = out.data() + n;
    const cplx c00 = c(0, 0), c01 = c(0, 1), c10 = c(1, 0), c11 = c(1, 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        o0[j + 1] = c00 * a0[j] + c01 * a1[j];
    }
    o0[0] = c00 * a0[n - 1] + c01 * a1[n - 1];
    for (std::size_t j = 1; j < n; ++j) {
        o1[j - 1] = c10 * a0[j] + c11 * a1[j];
    }
    o1[n - 1] = c10 * a0[0] + c11 * a1[0];
}

void check_t_max(std::uint64_t t_max) {
    if (t_max == 0) {
        throw std::invalid_argument("averaging window needs t_max >= 1");
    }
}

}  // namespace

WalkState apply_shift(const WalkState& state) {
    const std::size_t n = state.n_nodes();
    ComplexVec out(state.amplitudes().size());
    step_raw(state.amplitudes(), out, Mat2::Identity(), n);
    return WalkState::from_normalized(n, std::move(out));
}

WalkState step(const WalkState& state, const CoinMatrix& coin) {
    const std::size_t n = state.n_nodes();
    ComplexVec out(state.amplitudes().size());
    step_raw(state.amplitudes(), out, coin.matrix(), n);
    return WalkState::from_normalized(n, std::move(out));
}

WalkState evolve(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t) {
    const std::size_t n = state0.n_nodes();
    ComplexVec a = state0.amplitudes();
    ComplexVec b(a.size());
    for (std::uint64_t i = 0; i < t; ++i) {
        step_raw(a, b, coin.matrix(), n);
        a.swap(b);
    }
    return WalkState::from_normalized(n, std::move(a));
}

Distribution position_distribution(const WalkState& state) {
    const std::size_t n = state.n_nodes();
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; ++j) {
        p[j] = std::norm(state.amplitude(0, j)) + std::norm(state.amplitude(1, j));
    }
    return Distribution::clipped(std::move(p));
}

DensityMatrix time_avg_density(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t_max) {
    check_t_max(t_max);
    const std::size_t n = state0.n_nodes();
    ComplexVec a = state0.amplitudes();
    ComplexVec b(a.size());
    ComplexMat acc = ComplexMat::Zero(a.size(), a.size());
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        step_raw(a, b, coin.matrix(), n);
        a.swap(b);
        acc.noalias() += a * a.adjoint();
    }
    acc /= static_cast<double>(t_max);
    return DensityMatrix(n, std::move(acc));
}

ReducedDensity reduce_to_coin(const DensityMatrix& rho) {
    const std::size_t n = rho.n_nodes();
    const auto& m = rho.matrix();
    Mat2 r = Mat2::Zero();
    for (int s = 0; s < 2; ++s) {
        for (int sp = 0; sp < 2; ++sp) {
            for (std::size_t j = 0; j < n; ++j) {
                r(s, sp) += m(static_cast<Eigen::Index>(s * n + j), static_cast<Eigen::Index>(sp * n + j));
            }
        }
    }
    return ReducedDensity(r);
}

TimeAverages time_averages(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t_max) {
    check_t_max(t_max);
    const std::size_t n = state0.n_nodes();
    ComplexVec a = state0.amplitudes();
    ComplexVec b(a.size());
    std::vector<double> p(n, 0.0);
    double r00 = 0.0, r11 = 0.0;
    cplx r01{};
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        step_raw(a, b, coin.matrix(), n);
        a.swap(b);
        const cplx* a0 = a.data();
        const cplx* a1 = a.data() + n;
        for (std::size_t j = 0; j < n; ++j) {
            const double q0 = std::norm(a0[j]);
            const double q1 = std::norm(a1[j]);
            p[j] += q0 + q1;
            r00 += q0;
            r11 += q1;
            r01 += a0[j] * std::conj(a1[j]);
        }
    }
    const double inv = 1.0 / static_cast<double>(t_max);
    for (double& x : p) {
        x *= inv;
    }
    Mat2 r;
    r << r00 * inv, r01 * inv, std::conj(r01) * inv, r11 * inv;
    return {Distribution::clipped(std::move(p)), ReducedDensity(r)};
}

Distribution time_avg_distribution(const WalkState& state0, const CoinMatrix& coin, std::uint64_t t_max) {
    check_t_max(t_max);
    const std::size_t n = state0.n_nodes();
    ComplexVec a = state0.amplitudes();
    ComplexVec b(a.size());
    std::vector<double> p(n, 0.0);
    for (std::uint64_t t = 1; t <= t_max; ++t) {
        step_raw(a, b, coin.matrix(), n);
        a.swap(b);
        for (std::size_t j = 0; j < n; ++j) {
            p[j] += std::norm(a(static_cast<Eigen::Index>(j))) + std::norm(a(static_cast<Eigen::Index>(n + j)));
        }
    }
    for (double& x : p) {
        x /= static_cast<double>(t_max);
    }
    return Distribution::clipped(std::move(p));
}

ReducedDensity time_avg_reduced_density(const WalkState& state0, const CoinMatrix& coin,
                                        std::uint64_t t_max) {
    return time_averages(state0, coin, t_max).reduced;
}

}  // namespace qwc::oracle
