#include "qwc/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qwc/asymptotics.hpp"
#include "qwc/cli/config.hpp"
#include "qwc/cli/output.hpp"
#include "qwc/oracle.hpp"

namespace qwc::cli {

namespace {

double uniform_angle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    return u(rng);
}

}  // namespace

bool VerifyReport::passed() const {
    return max_ld_deviation < options.tolerance && max_rho_deviation < options.tolerance &&
           max_validity_defect <= 1e-10;
}

std::vector<const VerifyCase*> VerifyReport::failures() const {
    std::vector<const VerifyCase*> out;
    for (const auto& c : cases) {
        if (c.ld_deviation >= options.tolerance || c.rho_deviation >= options.tolerance) {
            out.push_back(&c);
        }
    }
    return out;
}

CoinParams random_coin(std::mt19937_64& rng, std::size_t n_nodes, bool rational_zeta) {
    const Angle theta = Angle::from_radians(uniform_angle(rng));
    Angle zeta;
    if (rational_zeta) {
        const auto n = static_cast<std::int64_t>(n_nodes);
        std::uniform_int_distribution<std::int64_t> m(-n, n - 1);
        zeta = Angle::from_pi_fraction(m(rng), n);
    } else {
        zeta = Angle::from_radians(uniform_angle(rng));
    }
    const Angle xi = Angle::from_radians(uniform_angle(rng));
    const Angle eta = Angle::from_radians(uniform_angle(rng));
    return {theta, zeta, xi, eta};
}

WalkState random_state(std::mt19937_64& rng, std::size_t n_nodes, bool localized) {
    std::normal_distribution<double> g;
    if (localized) {
        std::uniform_int_distribution<std::size_t> node(0, n_nodes - 1);
        const std::size_t j = node(rng);
        const cplx c0(g(rng), g(rng));
        const cplx c1(g(rng), g(rng));
        return make_state(LocalSpec{j, c0, c1}, n_nodes);
    }
    ComplexVec a(static_cast<Eigen::Index>(2 * n_nodes));
    for (auto& x : a) {
        const double re = g(rng);
        const double im = g(rng);
        x = cplx(re, im);
    }
    return WalkState(n_nodes, std::move(a));
}

double min_eigenvalue_gap(const spectral::Spectrum& s) {
    std::vector<cplx> ev;
    ev.reserve(2 * s.n_nodes);
    for (const auto& kb : s.blocks) {
        ev.push_back(kb.eigenvalues[0]);
        ev.push_back(kb.eigenvalues[1]);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < ev.size(); ++a) {
        for (std::size_t b = a + 1; b < ev.size(); ++b) {
            const double d = std::abs(ev[a] - ev[b]);
            if (d >= 1e-9) {
                best = std::min(best, d);
            }
        }
    }
    return best;
}

double density_defect(const Mat2& rho) {
    const auto [l1, l2] = hermitian_eigenvalues(rho);
    return std::max({hermiticity_defect(rho), std::abs(rho.trace() - 1.0), -std::min(l1, l2), 0.0});
}

VerifyReport run_verify(const VerifyOptions& opts, const std::function<void(const VerifyCase&)>& on_case) {
    if (opts.n_min == 0 || opts.n_min > opts.n_max || opts.t_max == 0) {
        throw ConfigError("verify needs 1 <= n_min <= n_max and t_max >= 1");
    }
    VerifyReport report;
    report.options = opts;
    std::mt19937_64 rng(opts.seed);

    for (std::size_t n = opts.n_min; n <= opts.n_max; ++n) {
        for (std::size_t ci = 0; ci < opts.coins_per_n; ++ci) {
            const bool rational = ci % 2 == 0;
            CoinParams coin = random_coin(rng, n, rational);
            spectral::Spectrum spectrum = spectral::analyze(coin, n);
            while (min_eigenvalue_gap(spectrum) < opts.min_gap) {
                ++report.redrawn_coins;
                coin = random_coin(rng, n, rational);
                spectrum = spectral::analyze(coin, n);
            }
            const bool degenerate = spectrum.table.has_pairs() || spectrum.table.fully_degenerate;
            report.degenerate_coins += degenerate ? 1 : 0;
            const CoinMatrix u = build_coin(coin);

            for (std::size_t si = 0; si < opts.states_per_coin; ++si) {
                const WalkState state = random_state(rng, n, si == 0);
                const auto psi = project_all(state);
                const auto ld = asymptotics::limiting_distribution(psi, spectrum);
                const auto rho = asymptotics::asymptotic_reduced_density(psi, spectrum);
                const auto avg = oracle::time_averages(state, u, opts.t_max);

                VerifyCase c;
                c.n_nodes = n;
                c.coin_index = ci;
                c.state_index = si;
                c.coin = coin;
                c.initial = state.amplitudes();
                c.degenerate = degenerate;
                c.ld_deviation = max_abs_diff(ld, avg.distribution);
                c.rho_deviation = (rho.matrix() - avg.reduced.matrix()).cwiseAbs().maxCoeff();
                c.validity_defect = std::max(density_defect(rho.matrix()), density_defect(avg.reduced.matrix()));
                report.max_validity_defect = std::max(report.max_validity_defect, c.validity_defect);
                report.max_ld_deviation = std::max(report.max_ld_deviation, c.ld_deviation);
                report.max_rho_deviation = std::max(report.max_rho_deviation, c.rho_deviation);
                if (on_case) {
                    on_case(c);
                }
                report.cases.push_back(std::move(c));
            }
        }
    }
    return report;
}

std::string describe(const VerifyReport& r) {
    std::ostringstream os;
    const auto& o = r.options;
    os << "seed " << o.seed << ", N " << o.n_min << ".." << o.n_max << ", " << o.coins_per_n << " coins x "
       << o.states_per_coin << " states, t_max " << o.t_max << '\n';
    os << "cases " << r.cases.size() << ", degenerate coins " << r.degenerate_coins << ", redrawn coins "
       << r.redrawn_coins << '\n';
    os << "max |LD - oracle| " << format_real(r.max_ld_deviation) << '\n';
    os << "max |rho_c - oracle| " << format_real(r.max_rho_deviation) << '\n';
    os << "max density defect " << format_real(r.max_validity_defect) << '\n';
    const auto bad = r.failures();
    constexpr std::size_t kShown = 5;
    if (bad.size() > kShown) {
        os << bad.size() << " failing cases, first " << kShown << " shown\n";
    }
    for (std::size_t b = 0; b < std::min(bad.size(), kShown); ++b) {
        const VerifyCase* c = bad[b];
        os << "FAIL N=" << c->n_nodes << " coin=" << format_coin(c->coin) << " coin#" << c->coin_index
           << " state#" << c->state_index << " ld_dev=" << format_real(c->ld_deviation)
           << " rho_dev=" << format_real(c->rho_deviation) << '\n';
        os << "  initial (s,j,re,im):";
        for (Eigen::Index i = 0; i < c->initial.size(); ++i) {
            const auto s = i / static_cast<Eigen::Index>(c->n_nodes);
            const auto j = i % static_cast<Eigen::Index>(c->n_nodes);
            os << ' ' << s << ',' << j << ',' << format_real(c->initial(i).real()) << ','
               << format_real(c->initial(i).imag());
        }
        os << '\n';
    }
    os << (r.passed() ? "PASS" : "FAIL") << " tolerance " << format_real(o.tolerance) << '\n';
    return os.str();
}

}  // namespace qwc::cli
