#pragma once

// Seeded generators for property loops.

#include <cstdint>
#include <numbers>
#include <random>

#include "qwc/core.hpp"

namespace qwc::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double angle() { return uniform(-std::numbers::pi, std::numbers::pi); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }
    cplx gauss() {
        std::normal_distribution<double> g;
        const double re = g(rng_);
        const double im = g(rng_);
        return {re, im};
    }
    cplx phase() { return std::polar(1.0, angle()); }

    CoinParams coin() { return CoinParams(angle(), angle(), angle(), angle()); }

    /// zeta = m pi / N, so N zeta / pi is an integer.
    CoinParams coin_rational_zeta(std::size_t n) {
        const auto nn = static_cast<std::int64_t>(n);
        return CoinParams(Angle::from_radians(angle()), Angle::from_pi_fraction(integer(-nn, nn - 1), nn),
                          Angle::from_radians(angle()), Angle::from_radians(angle()));
    }

    Spinor spinor() {
        Spinor s(gauss(), gauss());
        return s / s.norm();
    }

    WalkState state(std::size_t n) {
        ComplexVec a(static_cast<Eigen::Index>(2 * n));
        for (auto& x : a) {
            x = gauss();
        }
        return WalkState(n, std::move(a));
    }

    WalkState local_state(std::size_t n) {
        const Spinor s = spinor();
        return make_state(LocalSpec{index(n), s(0), s(1)}, n);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace qwc::testing
