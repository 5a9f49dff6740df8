// Tests of the lifespan integrals: frozen high-precision references, closed
// forms, landmark constants, and consistency with direct ODE escape times.

#include <catch2/catch_amalgamated.hpp>

#include "cubicwave/duffing.hpp"
#include "cubicwave/lifespan.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace cubicwave;
using std::numbers::pi;

TEST_CASE("direct-escape integral quad_R", "[lifespan]") {
    CHECK(quad_R({0.0, 2.0}) == Catch::Approx(1.717518751596024866).margin(1e-10));
    CHECK(quad_R({0.5, 1.0}) == Catch::Approx(2.141286630932677261).margin(1e-10));
    CHECK(quad_R({2.0, 0.0}) == Catch::Approx(1.001077380456106236).margin(1e-10));
    // Outside the convergence domain the integral is +inf, never partial.
    CHECK(std::isinf(quad_R({0.4, 0.3})));
    CHECK(std::isinf(quad_R({0.5, 0.1})));
}

TEST_CASE("reflected-escape integral quad_S", "[lifespan]") {
    CHECK(quad_S({2.0, -1.0}) == Catch::Approx(1.244321175809383424).margin(1e-10));
    CHECK(quad_S({2.0, -1.5}) == Catch::Approx(1.501154797820461613).margin(1e-10));
    CHECK(quad_S({3.0, -2.0}) == Catch::Approx(0.747282994268973140).margin(1e-10));
    // Even in X, independent of the sign of Y.
    CHECK(quad_S({-2.0, 1.0}) == Catch::Approx(quad_S({2.0, -1.0})).margin(1e-12));
    CHECK(quad_S({2.0, 1.0}) == Catch::Approx(quad_S({2.0, -1.0})).margin(1e-12));
    // Needs E < 1/4 and |X| > 1.
    CHECK(std::isinf(quad_S({0.5, 0.1})));
    CHECK(std::isinf(quad_S({2.0, 3.0}))); // E = 2.5 > 1/4
    CHECK(std::isinf(quad_S({0.9, 0.0}))); // |X| < 1
}

TEST_CASE("forward lifespan closed forms", "[lifespan]") {
    // Energy-0 secant orbit: T+ = arcsin(sqrt(2)/X) = pi/4 at X = 2.
    CHECK(t_plus({2.0, 2.0}) == Catch::Approx(pi / 4.0).margin(1e-10));
    // Energy-1/4 coth-type orbit through X = 2 moving outward:
    // T+ = sqrt(2) atanh(1/2).
    const double sqrt2 = std::sqrt(2.0);
    CHECK(t_plus({2.0, 3.0 / sqrt2}) ==
          Catch::Approx(sqrt2 * std::atanh(0.5)).margin(1e-10));
    CHECK(t_plus({2.0, 3.0 / sqrt2}) ==
          Catch::Approx(0.776836199212093224).margin(1e-10));
    // Nearby non-closed point resolved by the reflected branch.
    CHECK(t_plus({2.0, 1.5}) == Catch::Approx(0.824430890138598549).margin(1e-9));
    // Trapped orbits are forward-global.
    CHECK(std::isinf(t_plus({0.4, 0.3})));
    CHECK(std::isinf(t_plus({0.0, 0.0})));
}

TEST_CASE("backward lifespan mirrors the forward one", "[lifespan]") {
    CHECK(t_minus({2.0, -2.0}) == Catch::Approx(-pi / 4.0).margin(1e-10));
    CHECK(t_minus({2.0, 1.5}) == Catch::Approx(-t_plus({2.0, -1.5})).margin(1e-12));
    // Energy 0 through X = 2: T+ + |T-| spans the full secant period pi.
    CHECK(t_plus({2.0, 2.0}) - t_minus({2.0, 2.0}) ==
          Catch::Approx(pi).margin(1e-9));
}

TEST_CASE("lifespan agrees with the ODE escape time", "[lifespan]") {
    for (const PhasePoint p : {PhasePoint{2.0, 2.0}, PhasePoint{2.0, 1.5},
                               PhasePoint{0.0, 2.0}, PhasePoint{-1.5, -2.5}}) {
        const double T = t_plus(p);
        REQUIRE(std::isfinite(T));
        const DuffingSolution sol(p);
        const auto esc = sol.escape_time(+1, T + 1.0);
        REQUIRE(esc.has_value());
        // The cutoff crossing lies sqrt(2)/cutoff before the singularity.
        CHECK(*esc == Catch::Approx(T).margin(1e-6));
    }
}

TEST_CASE("total lifespan by energy", "[lifespan]") {
    CHECK(total_lifespan_by_energy(0.5) ==
          Catch::Approx(5.708418814960814288).margin(1e-9));
    CHECK(total_lifespan_by_energy(-1.0) ==
          Catch::Approx(2.274165199041081074).margin(1e-9));
    CHECK(total_lifespan_by_energy(0.0) == Catch::Approx(pi).margin(1e-9));
    CHECK(std::isinf(total_lifespan_by_energy(0.25)));
}

TEST_CASE("zero-velocity boundary lifespan", "[lifespan]") {
    CHECK(boundary_tplus(1.2) == Catch::Approx(2.085837063076828207).margin(1e-9));
    CHECK(boundary_tplus(2.0) == Catch::Approx(1.001077380456106236).margin(1e-9));
    CHECK(boundary_tplus(2.0) == Catch::Approx(quad_R({2.0, 0.0})).margin(1e-10));
    CHECK(boundary_tplus(-1.2) == Catch::Approx(boundary_tplus(1.2)).margin(1e-12));
    CHECK(std::isinf(boundary_tplus(1.0)));
    CHECK(std::isinf(boundary_tplus(0.3)));
}

TEST_CASE("landmark constants", "[lifespan]") {
    const double e_inf = e_infinity();
    const double x_c = x_critical();
    CHECK(e_inf == Catch::Approx(2.685354344761871874).margin(1e-9));
    CHECK(x_c == Catch::Approx(1.046200688768469494).margin(1e-9));
    // Defining properties.
    CHECK(total_lifespan_by_energy(e_inf) == Catch::Approx(pi).margin(1e-8));
    CHECK(boundary_tplus(x_c) == Catch::Approx(pi).margin(1e-8));
    CHECK(x_c > 1.0);
    CHECK(x_c < std::sqrt(2.0));
}

TEST_CASE("compute_lifespan assembles both endpoints", "[lifespan]") {
    const Lifespan both = compute_lifespan({2.0, 2.0});
    CHECK(both.finite_plus);
    CHECK(both.finite_minus);
    CHECK(both.t_plus == Catch::Approx(pi / 4.0).margin(1e-9));
    CHECK(both.t_minus == Catch::Approx(-3.0 * pi / 4.0).margin(1e-9));

    const Lifespan trapped = compute_lifespan({0.4, 0.3});
    CHECK_FALSE(trapped.finite_plus);
    CHECK_FALSE(trapped.finite_minus);
    CHECK(trapped.t_plus == std::numeric_limits<double>::infinity());
    CHECK(trapped.t_minus == -std::numeric_limits<double>::infinity());
}

TEST_CASE("lifespan decreases with outward velocity", "[lifespan]") {
    double prev = t_plus({2.0, 1.2});
    for (double Y : {1.6, 2.0, 2.5, 3.5}) {
        const double cur = t_plus({2.0, Y});
        CHECK(cur < prev);
        prev = cur;
    }
}
