#include "qwc/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qwc::asymptotics {

namespace {

using spectral::KBlock;
using spectral::Spectrum;

// Partners k' != k whose blocks share an eigenvalue with block k.
std::vector<std::size_t> off_diagonal_partners(const Spectrum& s, std::size_t k) {
    std::vector<std::size_t> out;
    if (s.table.fully_degenerate) {
        out.reserve(s.n_nodes - 1);
        for (std::size_t kp = 0; kp < s.n_nodes; ++kp) {
            if (kp != k) {
                out.push_back(kp);
            }
        }
        return out;
    }
    if (auto p = s.table.partner_of(k); p && *p != k) {
        out.push_back(*p);
    }
    return out;
}

void check_sizes(const std::vector<Spinor>& psi, const Spectrum& s) {
    if (psi.size() != s.n_nodes || s.blocks.size() != s.n_nodes) {
        throw std::invalid_argument("projection count does not match the spectrum");
    }
}

}  // namespace

MMatrix m_matrix(const KBlock& a, const KBlock& b, double tol) {
    MMatrix m;
    m.k = a.k;
    m.k_prime = b.k;
    bool any = false;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (std::abs(a.eigenvalues[i] - b.eigenvalues[j]) >= tol) {
                continue;
            }
            any = true;
            const Mat2 left = a.eigenvectors[i] * b.eigenvectors[j].adjoint();
            const Mat2 right = b.eigenvectors[j] * a.eigenvectors[i].adjoint();
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    m.entries.block<2, 2>(2 * r, 2 * c) += left(r, c) * right;
                }
            }
        }
    }
    if (!any) {
        throw std::domain_error("blocks " + std::to_string(a.k) + " and " + std::to_string(b.k) +
                                " share no eigenvalue");
    }
    return m;
}

Mat2 theta_matrix(const MMatrix& m, const Spinor& psi_k, const Spinor& psi_kp) {
    const Mat2 x = psi_k * psi_kp.adjoint();
    Mat2 t = Mat2::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            cplx acc{};
            for (int j = 0; j < 2; ++j) {
                for (int mi = 0; mi < 2; ++mi) {
                    acc += x(j, mi) * m.entries(2 * a + mi, 2 * b + j);
                }
            }
            t(a, b) = acc;
        }
    }
    return t;
}

ReducedDensity asymptotic_reduced_density(const std::vector<Spinor>& psi, const Spectrum& spectrum) {
    check_sizes(psi, spectrum);
    Mat2 rho = Mat2::Zero();
    for (std::size_t k = 0; k < spectrum.n_nodes; ++k) {
        const auto& kb = spectrum.blocks[k];
        rho += theta_matrix(m_matrix(kb, kb), psi[k], psi[k]);
    }
    return ReducedDensity(rho);
}

ReducedDensity asymptotic_reduced_density(const WalkState& state, const CoinParams& coin) {
    return asymptotic_reduced_density(project_all(state), spectral::analyze(coin, state.n_nodes()));
}

std::vector<cplx> interference_terms(const std::vector<Spinor>& psi, const Spectrum& spectrum) {
    check_sizes(psi, spectrum);
    const std::size_t n = spectrum.n_nodes;
    const double nd = static_cast<double>(n);
    std::vector<cplx> terms(n, cplx{});
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t kp : off_diagonal_partners(spectrum, k)) {
            const auto m = m_matrix(spectrum.blocks[k], spectrum.blocks[kp]);
            const cplx tr = theta_matrix(m, psi[k], psi[kp]).trace();
            const auto dk = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(kp);
            for (std::size_t v = 0; v < n; ++v) {
                const auto phase_index = ((static_cast<std::int64_t>(v) * dk) % static_cast<std::int64_t>(n) +
                                          static_cast<std::int64_t>(n)) %
                                         static_cast<std::int64_t>(n);
                const double ph = 2.0 * std::numbers::pi * static_cast<double>(phase_index) / nd;
                terms[v] += std::polar(1.0, ph) * tr;
            }
        }
    }
    for (auto& t : terms) {
        t /= nd;
    }
    return terms;
}

Distribution limiting_distribution(const std::vector<Spinor>& psi, const Spectrum& spectrum) {
    const auto terms = interference_terms(psi, spectrum);
    const double base = 1.0 / static_cast<double>(spectrum.n_nodes);
    std::vector<double> p(terms.size());
    for (std::size_t v = 0; v < terms.size(); ++v) {
        p[v] = base + terms[v].real();
    }
    return Distribution::clipped(std::move(p));
}

Distribution limiting_distribution(const WalkState& state, const CoinParams& coin) {
    return limiting_distribution(project_all(state), spectral::analyze(coin, state.n_nodes()));
}

DensityMatrix asymptotic_density(const WalkState& state, const CoinParams& coin) {
    const std::size_t n = state.n_nodes();
    const auto psi = project_all(state);
    const auto spectrum = spectral::analyze(coin, n);
    const double nd = static_cast<double>(n);

    // f[k](j) = e^{2 pi i k j / N} / sqrt(N) = <j|kappa_k>
    auto basis = [&](std::size_t k, std::size_t j) {
        return std::polar(1.0 / std::sqrt(nd), 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / nd);
    };

    ComplexMat rho = ComplexMat::Zero(static_cast<Eigen::Index>(2 * n), static_cast<Eigen::Index>(2 * n));
    auto add_pair = [&](std::size_t k, std::size_t kp) {
        const Mat2 t = theta_matrix(m_matrix(spectrum.blocks[k], spectrum.blocks[kp]), psi[k], psi[kp]);
        ComplexVec fk(static_cast<Eigen::Index>(n));
        ComplexVec fkp(static_cast<Eigen::Index>(n));
        for (std::size_t j = 0; j < n; ++j) {
            fk(static_cast<Eigen::Index>(j)) = basis(k, j);
            fkp(static_cast<Eigen::Index>(j)) = basis(kp, j);
        }
        const ComplexMat outer = fk * fkp.adjoint();
        const auto ni = static_cast<Eigen::Index>(n);
        for (int s = 0; s < 2; ++s) {
            for (int sp = 0; sp < 2; ++sp) {
                rho.block(s * ni, sp * ni, ni, ni) += t(s, sp) * outer;
            }
        }
    };
    for (std::size_t k = 0; k < n; ++k) {
        add_pair(k, k);
        for (std::size_t kp : off_diagonal_partners(spectrum, k)) {
            add_pair(k, kp);
        }
    }
    return DensityMatrix(n, std::move(rho));
}

Distribution hadamard_local_ld(std::size_t n_nodes, std::size_t t) {
    if (n_nodes == 0) {
        throw std::invalid_argument("cycle needs at least one node");
    }
    if (t >= n_nodes) {
        throw std::out_of_range("start node outside [0, N)");
    }
    const double nd = static_cast<double>(n_nodes);
    if (n_nodes % 2 == 1) {
        return Distribution(std::vector<double>(n_nodes, 1.0 / nd));
    }
    const double two_pi_n = 2.0 * std::numbers::pi / nd;
    std::vector<double> p(n_nodes);
    for (std::size_t v = 0; v < n_nodes; ++v) {
        const std::size_t d = (v + n_nodes - t) % n_nodes;
        const double sign = (d % 2 == 0) ? 1.0 : -1.0;
        const auto odd = static_cast<double>((2 * d + 1) % n_nodes);
        double sum = 0.0;
        for (std::size_t k = 0; k < n_nodes; ++k) {
            if (4 * k == n_nodes || 4 * k == 3 * n_nodes) {
                continue;
            }
            const double w = two_pi_n * static_cast<double>(k);
            const double c = std::cos(w);
            sum += std::sin(w) * std::sin(w * odd) / (c * c + 1.0);
        }
        p[v] = 1.0 / nd + sign * sum / (nd * nd);
    }
    return Distribution::clipped(std::move(p));
}

}  // namespace qwc::asymptotics
