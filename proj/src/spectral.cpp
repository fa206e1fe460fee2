#include "qwc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwc::spectral {

namespace {

inline constexpr double kIntegralTol = 1e-9;
// Below this |cos theta| the spread of alpha over k stays well under the
// eigenvalue matching tolerance.
inline constexpr double kFullDegeneracyTol = 1e-10;

double omega_of(std::size_t k, std::size_t n) {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
}

void check_k(std::size_t k, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("cycle needs at least one node");
    }
    if (k >= n) {
        throw std::out_of_range("momentum index outside [0, N)");
    }
}

// Candidate eigenvectors of [[A, B], [-conj(B), conj(A)]] for eigenvalue mu:
// (-B, A - mu) from the first row, (conj(A) - mu, conj(B)) from the second.
// The first is the textbook form; the larger-norm one is kept so that
// cancellation near sin(theta) = 0 never leaves a near-zero vector.
Spinor eigenvector_for(cplx a, cplx b, cplx mu) {
    Spinor first(-b, a - mu);
    Spinor second(std::conj(a) - mu, std::conj(b));
    const Spinor& v = first.norm() >= second.norm() ? first : second;
    return v / v.norm();
}

}  // namespace

Mat2 block(std::size_t k, const CoinParams& coin, std::size_t n_nodes) {
    check_k(k, n_nodes);
    const double w = omega_of(k, n_nodes);
    Mat2 d = Mat2::Zero();
    d(0, 0) = std::polar(1.0, -w);
    d(1, 1) = std::polar(1.0, w);
    return d * build_coin(coin).matrix();
}

KBlock solve_block(std::size_t k, const CoinParams& coin, std::size_t n_nodes) {
    check_k(k, n_nodes);
    KBlock kb;
    kb.k = k;
    kb.n_nodes = n_nodes;
    kb.omega = omega_of(k, n_nodes);

    const double th = coin.theta().radians();
    const double rel = kb.omega - coin.zeta().radians();
    const double cos_alpha = std::clamp(std::cos(th) * std::cos(rel), -1.0, 1.0);
    kb.alpha = std::acos(cos_alpha);
    const cplx global = std::polar(1.0, coin.eta().radians() / 2.0);

    if (std::abs(std::sin(kb.alpha)) <= kScalarBlockTol) {
        kb.scalar = true;
        kb.alpha = cos_alpha > 0.0 ? 0.0 : std::numbers::pi;
        const cplx mu = global * std::polar(1.0, kb.alpha);
        kb.eigenvalues = {mu, mu};
        kb.eigenvectors = {Spinor(1.0, 0.0), Spinor(0.0, 1.0)};
        return kb;
    }

    // Block without the global phase: [[A, B], [-conj(B), conj(A)]].
    const cplx a = std::cos(th) * std::polar(1.0, -rel);
    const cplx b = std::sin(th) * std::polar(1.0, coin.xi().radians() - kb.omega);
    const cplx mu_one = std::polar(1.0, kb.alpha);
    const cplx mu_two = std::polar(1.0, -kb.alpha);
    kb.eigenvalues = {global * mu_one, global * mu_two};
    kb.eigenvectors = {eigenvector_for(a, b, mu_one), eigenvector_for(a, b, mu_two)};
    return kb;
}

std::optional<std::size_t> DegeneracyTable::partner_of(std::size_t k) const {
    if (k >= partner.size()) {
        return std::nullopt;
    }
    return partner[k];
}

DegeneracyTable degeneracy_table(const CoinParams& coin, std::size_t n_nodes) {
    if (n_nodes == 0) {
        throw std::invalid_argument("cycle needs at least one node");
    }
    DegeneracyTable t;
    t.n_nodes = n_nodes;
    t.zeta = coin.zeta();
    t.partner.assign(n_nodes, std::nullopt);
    t.fully_degenerate = std::abs(std::cos(coin.theta().radians())) <= kFullDegeneracyTol;

    const auto n = static_cast<std::int64_t>(n_nodes);
    std::optional<std::int64_t> sum;
    if (const auto& f = coin.zeta().pi_fraction()) {
        // N * num / den is an integer iff den divides N * num.
        if ((n % f->den) == 0) {
            sum = (n / f->den) * f->num;
        } else if (((n * f->num) % f->den) == 0) {
            sum = (n * f->num) / f->den;
        }
    } else {
        const double x = static_cast<double>(n) * coin.zeta().radians() / std::numbers::pi;
        const double r = std::round(x);
        if (std::abs(x - r) <= kIntegralTol) {
            sum = static_cast<std::int64_t>(r);
        }
    }
    if (!sum) {
        return t;
    }

    const std::int64_t s = ((*sum % n) + n) % n;
    t.pair_sum = static_cast<std::size_t>(s);
    for (std::int64_t k = 0; k < n; ++k) {
        const std::int64_t kp = ((s - k) % n + n) % n;
        t.partner[static_cast<std::size_t>(k)] = static_cast<std::size_t>(kp);
        if (kp == k) {
            t.self_paired.push_back(static_cast<std::size_t>(k));
        }
    }
    return t;
}

Spectrum analyze(const CoinParams& coin, std::size_t n_nodes) {
    if (n_nodes == 0) {
        throw std::invalid_argument("cycle needs at least one node");
    }
    Spectrum s;
    s.n_nodes = n_nodes;
    s.coin = coin;
    s.blocks.reserve(n_nodes);
    for (std::size_t k = 0; k < n_nodes; ++k) {
        s.blocks.push_back(solve_block(k, coin, n_nodes));
    }
    s.table = degeneracy_table(coin, n_nodes);
    return s;
}

Mat2 reconstruct(const KBlock& kb) {
    Mat2 m = Mat2::Zero();
    for (int i = 0; i < 2; ++i) {
        m += kb.eigenvalues[i] * kb.eigenvectors[i] * kb.eigenvectors[i].adjoint();
    }
    return m;
}

}  // namespace qwc::spectral
