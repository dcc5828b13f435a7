#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <doctest.h>

#include "sptree/error.hpp"
#include "sptree/specfun.hpp"

using namespace sptree;
using namespace sptree::specfun;
using std::numbers::pi;

TEST_CASE("scaled Bessel against Boost") {
    for (double t : {0.0, 1e-3, 0.5, 2.0, 10.0, 29.9, 30.0, 30.1, 80.0, 400.0, 699.0, 701.0}) {
        for (int x : {0, 1, 2, 5, 17, 40}) {
            CAPTURE(t); CAPTURE(x);
            const double ref = t == 0.0 ? (x == 0 ? 1.0 : 0.0)
                                        : std::exp(-t) * boost::math::cyl_bessel_i(x, t);
            if (!std::isfinite(ref)) continue;
            CHECK(std::abs(bessel_i_scaled(x, t) - ref) <= 1e-13 * std::max(ref, 1e-3));
        }
    }
    // High orders where the asymptotic expansion is not usable.
    for (double t : {31.0, 40.0, 100.0, 650.0}) {
        for (int x : {60, 123, 300, 460}) {
            CAPTURE(t); CAPTURE(x);
            const double ref = std::exp(-t) * boost::math::cyl_bessel_i(x, t);
            CHECK(bessel_i_scaled(x, t) == doctest::Approx(ref).epsilon(1e-12));
        }
    }
    // Symmetry in the order and continuity across the large-t switch.
    CHECK(bessel_i_scaled(-3, 4.0) == bessel_i_scaled(3, 4.0));
    CHECK(bessel_i_scaled(2, 30.0 - 1e-12) == doctest::Approx(bessel_i_scaled(2, 30.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bessel_i_scaled(0, -1.0), InvalidArgument);
}

TEST_CASE("scaled Bessel large-t limit") {
    // e^{-t} I_x(t) sqrt(2 pi t) -> 1.
    for (double t : {1e4, 1e6}) CHECK(bessel_i_scaled(3, t) * std::sqrt(2 * pi * t) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("multi-Bessel reduces and factorizes") {
    for (double u : {0.1, 1.0, 7.0, 45.0})
        for (int m : {0, 1, 4}) CHECK(bessel_multi_scaled({1}, m, u) == doctest::Approx(bessel_i_scaled(m, u)).epsilon(1e-13));
    // Gamma = {1,2}: direct double sum e^{-u}I_a(u) e^{-u}I_b(u) over a + 2b = m.
    for (double u : {0.5, 3.0, 40.0}) {
        for (int m : {0, 3}) {
            double ref = 0;
            for (int b = -60; b <= 60; ++b) ref += bessel_i_scaled(m - 2 * b, u) * bessel_i_scaled(b, u);
            CHECK(bessel_multi_scaled({1, 2}, m, u) == doctest::Approx(ref).epsilon(1e-11).scale(1e-3));
        }
    }
}

TEST_CASE("Skellam tail bound dominates the tail") {
    for (double u : {0.1, 1.0, 10.0, 100.0}) {
        for (int K : {1, 5, 20, 60}) {
            double tail = 0;
            for (int k = K + 1; k < K + 400; ++k) tail += 2 * bessel_i_scaled(k, u);
            CHECK(bessel_tail_bound(K, u) >= tail * (1 - 1e-12));
        }
    }
}

TEST_CASE("theta inversion on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        graphs::GraphSpec spec;
        if (trial % 2) spec = graphs::CirculantSpec::make(8 + rng() % 60, {1, 2 + static_cast<std::int64_t>(rng() % 3)});
        else spec = graphs::TorusSpec::make({2 + static_cast<std::int64_t>(rng() % 6), 3 + static_cast<std::int64_t>(rng() % 6)});
        for (double t : {0.05, 0.5, 3.0}) {
            const auto a = theta_discrete_spectral(spec, t);
            const auto b = theta_discrete_bessel(spec, t);
            CHECK(std::abs(a.value - b.value) < 1e-10 * std::max(1.0, a.value));
            CHECK(b.tail_bound < 1e-12);
        }
    }
    const auto spec = graphs::CirculantSpec::make(30, {1, 2});
    CHECK_THROWS_AS(theta_discrete_bessel(spec, 5.0, 2), NumericalFailure);
}

TEST_CASE("circle theta satisfies Poisson summation") {
    for (double t : {0.01, 0.1, 0.3, 1.0, 4.0}) {
        double dual = 0;
        for (int k = -50; k <= 50; ++k) dual += std::exp(-k * k / (4 * t));
        CHECK(theta_circle(t) == doctest::Approx(dual / std::sqrt(4 * pi * t)).epsilon(1e-14));
    }
    // Real torus with sides (a, b) factorizes into scaled circle thetas.
    CHECK(theta_real_torus({2.0, 3.0}, 0.7) ==
          doctest::Approx(theta_circle(0.7 / 4) * theta_circle(0.7 / 9)).epsilon(1e-13));
    CHECK(theta_real_torus_minus_one({1.0}, 3.0) ==
          doctest::Approx(2 * std::exp(-4 * pi * pi * 3.0)).epsilon(1e-10));
}

TEST_CASE("eta, zeta, Catalan and Gamma against Boost") {
    CHECK(dedekind_eta(1.0) ==
          doctest::Approx(boost::math::tgamma(0.25) / (2 * std::pow(pi, 0.75))).epsilon(1e-14));
    // eta(i/y) = sqrt(y) eta(i y).
    for (double y : {0.3, 0.7, 2.5}) CHECK(dedekind_eta(1 / y) == doctest::Approx(std::sqrt(y) * dedekind_eta(y)).epsilon(1e-13));
    for (double s : {1.1, 1.5, 2.0, 3.0, 7.5}) CHECK(riemann_zeta_real(s) == doctest::Approx(boost::math::zeta(s)).epsilon(1e-13));
    CHECK(catalan_constant() == doctest::Approx(boost::math::constants::catalan<double>()).epsilon(1e-15));
    for (int d = 1; d <= 9; ++d) CHECK(gamma_half(d) == doctest::Approx(boost::math::tgamma(d / 2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(riemann_zeta_real(1.0), InvalidArgument);
}
