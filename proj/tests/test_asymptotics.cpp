// Tests of the radiation field, the free-wave evolution, and light versions
// of the asymptotic checks (the full-window runs live in the acceptance gate).

#include <catch2/catch_amalgamated.hpp>

#include "cubicwave/asymptotics.hpp"
#include "cubicwave/duffing.hpp"
#include "cubicwave/freewave.hpp"
#include "cubicwave/threshold.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace cubicwave;
using std::numbers::pi;

namespace {
const double kBeta0 = beta(0.0);
constexpr double kSqrt2 = 1.4142135623730951;
}

TEST_CASE("C0 blow-up constant", "[asymptotics]") {
    // Closed form 2^{7/2} pi (pi/16) ((1+t*^2)/t*)^{3/2}; at t* = 1 this is
    // 2 pi^2.
    CHECK(c_zero(1.0) == Catch::Approx(2.0 * pi * pi).epsilon(1e-10));
    CHECK(c_zero(std::tan(pi / 8.0)) ==
          Catch::Approx(33.197259843393303711).epsilon(1e-10));
    const double t = 0.37;
    CHECK(c_zero(t) == Catch::Approx(std::pow(2.0, 3.5) * pi * (pi / 16.0) *
                                     std::pow((1.0 + t * t) / t, 1.5))
                           .epsilon(1e-10));
}

TEST_CASE("radiation profile frozen values", "[asymptotics]") {
    const DuffingSolution sol({0.0, kBeta0});
    CHECK(radiation_g(sol, 0.0) ==
          Catch::Approx(-1.135809087523525964).margin(1e-8));
    CHECK(radiation_g(sol, 3.0) ==
          Catch::Approx(-0.091261472363873344).margin(1e-8));
    CHECK(radiation_g(sol, -3.0) ==
          Catch::Approx(-1.413589162968301123).margin(1e-8));
    // g' agrees with a finite difference of g.
    const double h = 1e-6;
    for (double eta : {-2.0, 0.0, 1.5}) {
        CHECK(radiation_g_prime(sol, eta) ==
              Catch::Approx((radiation_g(sol, eta + h) -
                             radiation_g(sol, eta - h)) /
                            (2 * h))
                  .margin(1e-7));
    }
}

TEST_CASE("radiation free wave: data and wave equation", "[asymptotics]") {
    const DuffingSolution sol({0.0, kBeta0});
    // t = 0 data from the radiation profile.
    for (double r : {0.5, 2.0, 6.0}) {
        CHECK(radiation_free_wave(sol, 0.0, r) ==
              Catch::Approx((radiation_g(sol, -r) - radiation_g(sol, r)) / r)
                  .epsilon(1e-10));
        CHECK(radiation_free_wave_dt(sol, 0.0, r) ==
              Catch::Approx((radiation_g_prime(sol, r) -
                             radiation_g_prime(sol, -r)) /
                            r)
                  .epsilon(1e-10));
    }
    // Linear wave equation residual by finite differences.
    const double h = 1e-4;
    for (const auto& [t, r] : std::vector<std::pair<double, double>>{
             {1.0, 2.0}, {4.0, 1.5}, {-2.0, 3.0}}) {
        const double vtt = (radiation_free_wave_dt(sol, t + h, r) -
                            radiation_free_wave_dt(sol, t - h, r)) /
                           (2 * h);
        const double vrr = (radiation_free_wave_dr(sol, t, r + h) -
                            radiation_free_wave_dr(sol, t, r - h)) /
                           (2 * h);
        const double vr = radiation_free_wave_dr(sol, t, r);
        CHECK(vtt - vrr - 2.0 / r * vr == Catch::Approx(0.0).margin(1e-6));
    }
}

TEST_CASE("sampled free wave matches the exact radiation evolution",
          "[asymptotics]") {
    const DuffingSolution sol({0.0, kBeta0});
    std::vector<double> rs{0.0};
    for (int i = 0; i <= 800; ++i)
        rs.push_back(1e-2 * std::pow(6000.0, i / 800.0));
    const LinearProfileData data = linear_profile_data(sol, rs);
    REQUIRE(data.v0.size() == rs.size());
    // Exact r = 0 limits: v0(0) = -2 g'(0).
    CHECK(data.v0.front() ==
          Catch::Approx(-2.0 * radiation_g_prime(sol, 0.0)).epsilon(1e-10));
    const FreeWave fw(data);
    for (const auto& [t, r] : std::vector<std::pair<double, double>>{
             {0.0, 1.0}, {2.0, 1.5}, {5.0, 3.0}, {0.5, 4.0}, {8.0, 9.5}}) {
        CHECK(fw.value(t, r) ==
              Catch::Approx(radiation_free_wave(sol, t, r)).margin(2e-6));
        CHECK(fw.deriv_t(t, r) ==
              Catch::Approx(radiation_free_wave_dt(sol, t, r)).margin(2e-5));
        CHECK(fw.deriv_r(t, r) ==
              Catch::Approx(radiation_free_wave_dr(sol, t, r)).margin(2e-5));
    }
}

TEST_CASE("interior attractor weights stay bounded (light window)",
          "[asymptotics]") {
    const FitResult fit =
        interior_self_similar_check({0.0, kBeta0}, 5.0, 40.0, 0.5);
    CHECK(std::isfinite(fit.coefficient));
    CHECK(fit.coefficient < 10.0);
    CHECK(fit.slope < 0.3);
    CHECK(fit.window_lo == 5.0);
    CHECK(fit.window_hi == 40.0);
}

TEST_CASE("L3 blow-up rate (light window)", "[asymptotics]") {
    const FitResult fit = blowup_rate_l3({2.0, 2.0}, 1e-2, 1e-1);
    CHECK(fit.coefficient ==
          Catch::Approx(std::cbrt(33.197259843393303711)).epsilon(5e-2));
}

TEST_CASE("rescaled blow-up profile on the axis", "[asymptotics]") {
    const std::vector<double> sigmas{2.0, 4.0};
    const std::vector<double> ys{-0.6, -0.2, 0.0, 0.3, 0.7};
    const BlowupProfile prof = blowup_profile({2.0, 2.0}, 0.0, sigmas, ys);
    CHECK(prof.t_star == Catch::Approx(std::tan(pi / 8.0)).margin(1e-8));
    CHECK(prof.d == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(prof.samples.size() == 2);
    REQUIRE(prof.limit.size() == ys.size());
    for (double Lv : prof.limit) CHECK(Lv == Catch::Approx(kSqrt2).margin(1e-12));
    // Convergence: the later snapshot sits closer to the limit profile.
    CHECK(prof.samples[1].sup_err < prof.samples[0].sup_err);
    CHECK(prof.samples[1].sup_err < 0.1);
}

TEST_CASE("exact-family attractor deviation vanishes on the secant orbit",
          "[asymptotics]") {
    // (2, 2) lies on the closed energy-0 family, which is itself a member of
    // the attractor family: the deviation must vanish to solver precision.
    // The field reaches ~1.5e2 at the near edge of the window, so "solver
    // precision" in absolute terms is ~1e-9 relative * field size; a
    // non-member deviates at O(1) here.
    const AttractorDeviation dev = attractor_deviation({2.0, 2.0}, 1e-2, 1e-1);
    CHECK(dev.sup_raw < 1e-6);
    // Comparing the closed-form secant profile directly against the
    // attractor member removes the solver from the loop entirely: the gap
    // is pure rounding even at tau = 1e-3 where the field is ~1.5e3 (the
    // ulp-level error of the cos argument is amplified by the pole, giving
    // ~2e-9 on the late-blow-up branch).
    CHECK(zero_energy_attractor_gap({2.0, 2.0}, 1e-3, 1e-1) < 1e-8);
    CHECK(zero_energy_attractor_gap({2.0, -2.0}, 1e-3, 1e-1) < 1e-8);
    CHECK_THROWS_AS(zero_energy_attractor_gap({2.0, 3.0}, 1e-3, 1e-1),
                    std::invalid_argument);
    CHECK_THROWS_AS(zero_energy_attractor_gap({-2.0, 2.0}, 1e-3, 1e-1),
                    std::invalid_argument);
}

TEST_CASE("lightcone transition approaches sqrt(2) (light window)",
          "[asymptotics]") {
    const FitResult fit = transition_check({0.0, kBeta0}, 0.0, 10.0, 200.0);
    CHECK(fit.coefficient == Catch::Approx(kSqrt2).epsilon(2e-2));
    CHECK(fit.residual < 2e-2);
}

TEST_CASE("exterior scattering energy decays (light window)", "[asymptotics]") {
    const FitResult fit = exterior_scattering_check({0.0, kBeta0}, 0.0, 10.0, 100.0);
    CHECK(fit.coefficient < 0.5);
    CHECK(fit.slope < 0.0);
}

TEST_CASE("time-derivative Lp band (light window)", "[asymptotics]") {
    const FitResult fit = derivative_lp_bounds({0.0, kBeta0}, 2.0, 10.0, 100.0);
    CHECK(std::isfinite(fit.coefficient));
    CHECK(fit.coefficient < 3.0);
    CHECK(fit.slope > 0.0);
}
