#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include "sptree/mp.hpp"
#include "sptree/quadrature.hpp"
#include "sptree/tanh_sinh.hpp"

using namespace sptree;
using namespace sptree::quadrature;
using std::numbers::pi;

TEST_CASE("Gauss-Kronrod is exact on polynomials and matches Boost on smooth integrands") {
    auto r = integrate_adaptive([](double x) { return 3 * x * x + 2 * x + 1; }, 0.0, 2.0);
    CHECK(r.value == doctest::Approx(14.0).epsilon(1e-15));
    for (auto f : {+[](double x) { return std::exp(-x) * std::cos(5 * x); },
                   +[](double x) { return 1.0 / (1.0 + 25 * x * x); },
                   +[](double x) { return std::sqrt(x); }}) {
        const double ours = integrate_adaptive(f, 0.0, 3.0).value;
        const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 3.0, 15, 1e-14);
        CHECK(ours == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("Gauss-Kronrod reports failure with a partial result") {
    QuadratureConfig cfg;
    cfg.max_subdivisions = 3;
    try {
        integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, cfg);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.partial().evaluations > 0);
    }
    QuadratureConfig bad;
    bad.abs_tol = -1;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("Mellin integrals: Frullani and Gamma-function identities") {
    // int (e^{-t} - e^{-a t}) dt/t = log a.
    for (double a : {2.0, 10.0, 0.5}) {
        auto r = integrate_mellin([a](double t) { return std::exp(-t) - std::exp(-a * t); });
        CHECK(r.value == doctest::Approx(std::log(a)).epsilon(1e-11));
        CHECK(r.error_estimate < 1e-9);
    }
    // int t^{1/2} e^{-t} dt/t = Gamma(1/2).
    auto g = integrate_mellin([](double t) { return std::sqrt(t) * std::exp(-t); });
    CHECK(g.value == doctest::Approx(std::sqrt(pi)).epsilon(1e-11));
    auto w = integrate_mellin_window([](double t) { return std::exp(-t); }, 1.0, 5.0);
    CHECK(w.value == doctest::Approx(std::expint(-1.0) * -1 - std::expint(-5.0) * -1).epsilon(1e-11));
}

TEST_CASE("periodic trapezoid converges geometrically") {
    // (1/2pi) int exp(x cos w) dw = I_0(x).
    auto r = integrate_periodic([](double w) { return std::exp(2.0 * std::cos(w)); }, 1e-14);
    CHECK(r.value == doctest::Approx(std::cyl_bessel_i(0.0, 2.0)).epsilon(1e-14));
    auto c = integrate_periodic([](double) { return 1.0; }, 1e-14);
    CHECK(c.value == doctest::Approx(1.0));
}

TEST_CASE("logarithmic endpoint singularities") {
    CHECK(integrate_log_endpoint([](double x) { return std::log(x); }, 1e-13).value ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(integrate_log_endpoint([](double x) { return std::log(std::sin(pi * x)); }, 1e-13).value ==
          doctest::Approx(-std::log(2.0)).epsilon(1e-12));
    // Two log zeros inside (0, 1) when integrated as two halves.
    const double golden = (1 + std::sqrt(5.0)) / 2;
    auto h = [](double w) {
        const double a = std::sin(pi * w), b = std::sin(2 * pi * w);
        return std::log(a * a + b * b);
    };
    CHECK(integrate_log_endpoint(h, 1e-13).value ==
          doctest::Approx(2 * std::log(golden) - std::log(4.0)).epsilon(1e-11));
    CHECK(integrate_log_endpoint([](double) { return 1.0; }, 1e-13).value == doctest::Approx(1.0));
}

TEST_CASE("tanh-sinh rejects non-integrable endpoints") {
    auto r = tanh_sinh([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-12, 1e-16);
    CHECK_FALSE(r.converged);
    // x^{-1/2} is integrable but the truncated window leaves ~1e-12 behind.
    auto ok = tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-9, 2.2e-16);
    CHECK(ok.converged);
    CHECK(ok.value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK_FALSE(tanh_sinh([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-13, 2.2e-16).converged);
}

TEST_CASE("tanh-sinh in multiprecision") {
    mp::PrecisionScope scope(60);
    using mp::Real;
    const Real eps = boost::multiprecision::pow(Real(10), -60);
    const Real tol = boost::multiprecision::pow(Real(10), -50);
    auto r = tanh_sinh([](const Real& x) { return Real(log(sin(mp::pi() * x))); }, Real(0), Real(1), tol, eps, 16);
    CHECK(r.converged);
    const Real err = abs(r.value + mp::log2());
    CHECK(err < tol * 10);
}
