#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numbers>

#include "qwc/oracle.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace qwc;
using Catch::Matchers::WithinAbs;

namespace {

WalkState basis(std::size_t n, int s, std::size_t j) {
    ComplexVec a = ComplexVec::Zero(static_cast<Eigen::Index>(2 * n));
    a(static_cast<Eigen::Index>(s * n + j)) = 1.0;
    return WalkState(n, a);
}

const CoinMatrix& identity_coin() {
    static const CoinMatrix c = build_coin(CoinParams(0.0, 0.0, 0.0));
    return c;
}

}  // namespace

TEST_CASE("shift moves coin 0 right and coin 1 left") {
    CHECK(oracle::apply_shift(basis(4, 0, 1)).amplitude(0, 2) == cplx(1.0));
    CHECK(oracle::apply_shift(basis(4, 1, 0)).amplitude(1, 3) == cplx(1.0));

    testing::Gen g(21);
    const auto s0 = g.state(9);
    auto s = s0;
    for (int i = 0; i < 9; ++i) {
        s = oracle::apply_shift(s);
    }
    CHECK((s.amplitudes() - s0.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("shift is a permutation of amplitudes") {
    testing::Gen g(22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = g.state(2 + g.index(30));
        const auto out = oracle::apply_shift(s);
        std::vector<double> a, b;
        for (const auto& x : s.amplitudes()) a.push_back(std::abs(x));
        for (const auto& x : out.amplitudes()) b.push_back(std::abs(x));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        REQUIRE(a == b);
    }
}

TEST_CASE("single steps") {
    const auto out = oracle::step(basis(4, 0, 0), build_coin(hadamard_params()));
    const cplx v{0.0, 1.0 / std::sqrt(2.0)};
    CHECK(std::abs(out.amplitude(0, 1) - v) < 1e-15);
    CHECK(std::abs(out.amplitude(1, 3) - v) < 1e-15);
    CHECK_THAT(out.norm_squared(), WithinAbs(1.0, 1e-15));

    CHECK(oracle::step(basis(4, 0, 0), identity_coin()).amplitude(0, 1) == cplx(1.0));
}

TEST_CASE("step agrees with the dense walk operator") {
    testing::Gen g(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + g.index(12);
        const auto c = build_coin(g.coin());
        const auto s = g.state(n);
        const ComplexVec expected = testing::dense_walk_operator(c.matrix(), n) * s.amplitudes();
        REQUIRE((oracle::step(s, c).amplitudes() - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("evolve composes steps") {
    const auto c = build_coin(hadamard_params());
    const auto s0 = basis(8, 0, 0);
    const auto manual = oracle::step(oracle::step(oracle::step(s0, c), c), c);
    CHECK((oracle::evolve(s0, c, 3).amplitudes() - manual.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((oracle::evolve(s0, c, 0).amplitudes() - s0.amplitudes()).cwiseAbs().maxCoeff() == 0.0);

    testing::Gen g(24);
    const auto r = g.state(4);
    CHECK((oracle::evolve(r, identity_coin(), 4).amplitudes() - r.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
    const auto r7 = g.state(7);
    CHECK((oracle::evolve(r7, identity_coin(), 7).amplitudes() - r7.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("norm survives a million steps") {
    testing::Gen g(25);
    for (int trial = 0; trial < 2; ++trial) {
        const auto s = g.state(5);
        const auto out = oracle::evolve(s, build_coin(g.coin()), 1000000);
        REQUIRE_THAT(out.norm_squared(), WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("position distribution") {
    const auto p = oracle::position_distribution(basis(5, 1, 2));
    CHECK(p[2] == 1.0);
    CHECK(p.sum() == 1.0);

    const auto e = oracle::position_distribution(make_state(EntangledPairSpec{3}, 8));
    CHECK_THAT(e[0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(e[3], WithinAbs(0.5, 1e-15));

    ComplexVec flat = ComplexVec::Zero(12);
    flat.head(6).setOnes();
    const auto u = oracle::position_distribution(WalkState(6, flat));
    for (std::size_t v = 0; v < 6; ++v) {
        REQUIRE_THAT(u[v], WithinAbs(1.0 / 6.0, 1e-15));
    }
}

TEST_CASE("time averages of the identity walk") {
    const std::size_t n = 5;
    const auto s0 = basis(n, 0, 0);

    const auto d = oracle::time_avg_distribution(s0, identity_coin(), 3 * n);
    for (std::size_t v = 0; v < n; ++v) {
        REQUIRE_THAT(d[v], WithinAbs(0.2, 1e-15));
    }

    const auto rho = oracle::time_avg_density(s0, identity_coin(), n);
    ComplexMat expected = ComplexMat::Zero(2 * n, 2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        expected(j, j) = 0.2;
    }
    CHECK(testing::max_abs(rho.matrix() - expected) < 1e-15);

    const auto one = oracle::time_avg_density(s0, identity_coin(), 1);
    const auto s1 = oracle::step(s0, identity_coin());
    CHECK(testing::max_abs(one.matrix() - s1.amplitudes() * s1.amplitudes().adjoint()) == 0.0);

    CHECK_THROWS_AS(oracle::time_avg_distribution(s0, identity_coin(), 0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::time_avg_density(s0, identity_coin(), 0), std::invalid_argument);
    CHECK_THROWS_AS(oracle::time_averages(s0, identity_coin(), 0), std::invalid_argument);
}

TEST_CASE("streaming averages agree with the dense average") {
    testing::Gen g(26);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + g.index(8);
        const auto c = build_coin(g.coin());
        const auto s = g.state(n);
        const auto dense = oracle::time_avg_density(s, c, 500);
        const auto fast = oracle::time_averages(s, c, 500);
        const auto reduced = oracle::reduce_to_coin(dense);
        REQUIRE((reduced.matrix() - fast.reduced.matrix()).cwiseAbs().maxCoeff() < 1e-13);
        REQUIRE(max_abs_diff(fast.distribution, oracle::time_avg_distribution(s, c, 500)) < 1e-13);
        for (std::size_t v = 0; v < n; ++v) {
            const double diag = (dense.matrix()(v, v) + dense.matrix()(n + v, n + v)).real();
            REQUIRE_THAT(fast.distribution[v], WithinAbs(diag, 1e-13));
        }
        REQUIRE(dense.hermiticity_defect() < 1e-12);
        REQUIRE_THAT(dense.trace().real(), WithinAbs(1.0, 1e-12));
        REQUIRE(dense.min_eigenvalue() > -1e-10);
    }
}

TEST_CASE("reduce_to_coin") {
    const auto pure = basis(3, 0, 0);
    const auto r = oracle::reduce_to_coin(DensityMatrix(3, pure.amplitudes() * pure.amplitudes().adjoint()));
    CHECK(r(0, 0) == cplx(1.0));
    CHECK(r(1, 1) == cplx(0.0));

    const auto mixed = oracle::reduce_to_coin(DensityMatrix(4, ComplexMat::Identity(8, 8) / 8.0));
    CHECK(std::abs(mixed(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(mixed(1, 1) - 0.5) < 1e-15);
    CHECK(std::abs(mixed(0, 1)) == 0.0);
}

TEST_CASE("Hadamard odd cycle averages to uniform") {
    const auto d = oracle::time_avg_distribution(basis(5, 0, 0), build_coin(hadamard_params()), 100000);
    for (std::size_t v = 0; v < 5; ++v) {
        REQUIRE_THAT(d[v], WithinAbs(0.2, 1e-2));
    }
}
