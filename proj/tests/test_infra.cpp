// Tests of the numerical infrastructure: quadrature kernels, bracketed root
// solving, the cubic spline, and the discrete sine transform front end.

#include <catch2/catch_amalgamated.hpp>

#include "cubicwave/dst.hpp"
#include "cubicwave/interp.hpp"
#include "cubicwave/quadrature.hpp"
#include "cubicwave/roots.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace cubicwave;
using std::numbers::pi;

TEST_CASE("adaptive Gauss-Kronrod on smooth closed forms", "[infra]") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          Catch::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi) ==
          Catch::Approx(2.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::exp(x); }, -1.0, 2.0) ==
          Catch::Approx(std::exp(2.0) - std::exp(-1.0)).epsilon(1e-13));
    // Oscillatory but finite-interval.
    CHECK(integrate([](double x) { return std::cos(20.0 * x); }, 0.0, 1.0) ==
          Catch::Approx(std::sin(20.0) / 20.0).epsilon(1e-11));
}

TEST_CASE("tanh-sinh handles endpoint singularities", "[infra]") {
    CHECK(integrate_singular([](double x) { return 1.0 / std::sqrt(x); }, 0.0,
                             1.0) == Catch::Approx(2.0).epsilon(1e-11));
    CHECK(integrate_singular([](double x) { return std::log(x); }, 0.0, 1.0) ==
          Catch::Approx(-1.0).epsilon(1e-11));
    // Inverse-sqrt singularity at the *upper* endpoint: evaluating 1 - x^2
    // near x = 1 cancels, which caps the attainable accuracy around 1e-8.
    CHECK(integrate_singular(
              [](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, 0.0,
              1.0) == Catch::Approx(pi / 2.0).epsilon(1e-7));
}

TEST_CASE("exp-sinh handles semi-infinite ranges", "[infra]") {
    CHECK(integrate_to_inf([](double x) { return std::exp(-x); }, 0.0) ==
          Catch::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_to_inf([](double x) { return std::exp(-x * x); }, 0.0) ==
          Catch::Approx(std::sqrt(pi) / 2.0).epsilon(1e-12));
    CHECK(integrate_to_inf([](double x) { return x * x * std::exp(-x); },
                           0.0) == Catch::Approx(2.0).epsilon(1e-12));
    // Algebraic decay: int_1^inf x^-3 dx = 1/2.
    CHECK(integrate_to_inf([](double x) { return 1.0 / (x * x * x); }, 1.0) ==
          Catch::Approx(0.5).epsilon(1e-11));
}

TEST_CASE("sin-weighted panels with series acceleration", "[infra]") {
    // int_0^inf sin(rho r) e^{-r} dr = rho/(1+rho^2).
    for (double rho : {0.5, 1.0, 3.0}) {
        CHECK(integrate_sin_weighted([](double r) { return std::exp(-r); },
                                     rho, 0.0) ==
              Catch::Approx(rho / (1.0 + rho * rho)).epsilon(1e-9));
    }
    // Nonzero lower limit: int_a^inf sin(r) e^{-r} dr = e^{-a}(cos a + sin a)/2.
    const double a = 0.7;
    CHECK(integrate_sin_weighted([](double r) { return std::exp(-r); }, 1.0,
                                 a) ==
          Catch::Approx(0.5 * std::exp(-a) * (std::cos(a) + std::sin(a)))
              .epsilon(1e-9));
    // Slow algebraic decay (conditionally convergent after the r-weight):
    // int_0^inf sin(rho r) r e^{-r} dr = 2 rho/(1+rho^2)^2.
    const double rho = 2.0;
    CHECK(integrate_sin_weighted([](double r) { return r * std::exp(-r); },
                                 rho, 0.0) ==
          Catch::Approx(2.0 * rho / ((1.0 + rho * rho) * (1.0 + rho * rho)))
              .epsilon(1e-9));
}

TEST_CASE("bracketed root solving", "[infra]") {
    CHECK(solve_bracketed([](double x) { return std::cos(x); }, 1.0, 2.0) ==
          Catch::Approx(pi / 2.0).margin(1e-12));
    CHECK(solve_bracketed([](double x) { return x * x * x - 2.0; }, 1.0,
                          2.0) == Catch::Approx(std::cbrt(2.0)).margin(1e-12));
    CHECK_THROWS_AS(solve_bracketed([](double x) { return 1.0 + x * x; }, 0.0,
                                    1.0),
                    std::invalid_argument);
    // Expanding search walks right until it straddles the root.
    CHECK(solve_expanding([](double x) { return x * x - 1.0e6; }, 0.0, 1.0) ==
          Catch::Approx(1000.0).margin(1e-9));
}

TEST_CASE("natural cubic spline interpolates, differentiates, integrates",
          "[infra]") {
    // sin(pi x / 3) has vanishing second derivative at both ends of [0, 3],
    // so the natural spline converges at full fourth order.
    const int n = 61;
    std::vector<double> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = 3.0 * i / (n - 1);
        ys[i] = std::sin(pi * xs[i] / 3.0);
    }
    const CubicSpline sp(xs, ys);
    for (double x : {0.11, 0.77, 1.3, 2.02, 2.9}) {
        CHECK(sp(x) == Catch::Approx(std::sin(pi * x / 3.0)).margin(2e-7));
        CHECK(sp.derivative(x) ==
              Catch::Approx(pi / 3.0 * std::cos(pi * x / 3.0)).margin(2e-5));
    }
    CHECK(sp.integral(0.0, 3.0) == Catch::Approx(6.0 / pi).margin(1e-9));
    // Sub-interval integral and orientation.
    CHECK(sp.integral(1.0, 2.0) ==
          Catch::Approx(3.0 / pi * (std::cos(pi / 3.0) - std::cos(2.0 * pi / 3.0)))
              .margin(1e-9));
    CHECK(sp.integral(2.0, 1.0) == Catch::Approx(-sp.integral(1.0, 2.0)).margin(1e-14));

    // Straight-line data is reproduced exactly, including the linear
    // extrapolation beyond the knot range.
    std::vector<double> lx{0.0, 1.0, 2.5, 4.0};
    std::vector<double> ly{1.0, 3.0, 6.0, 9.0};
    const CubicSpline lin(lx, ly);
    CHECK(lin(1.75) == Catch::Approx(4.5).margin(1e-12));
    CHECK(lin(5.0) == Catch::Approx(11.0).margin(1e-12));
    CHECK(lin(-1.0) == Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("DST-I involution and smooth sizes", "[infra]") {
    std::mt19937 rng(12345);
    const std::size_t n = 127;
    std::vector<double> v(n);
    for (double& x : v) x = (rng() / 4294967296.0) - 0.5;
    // DST-I composed with itself scales by 2(n+1).
    const std::vector<double> w = dst_i(dst_i(v));
    for (std::size_t j = 0; j < n; ++j) {
        CHECK(w[j] == Catch::Approx(2.0 * double(n + 1) * v[j]).margin(1e-10));
    }
    CHECK(next_smooth_size(3999) == 4000);
    CHECK(next_smooth_size(7) == 8);
    CHECK(next_smooth_size(11) == 12);
    CHECK(next_smooth_size(6) == 6);
    CHECK(next_smooth_size(1) == 1);
}

TEST_CASE("DST radial transform matches the continuum kernel", "[infra]") {
    // f(r) = e^{-r}  =>  fhat(rho) = 8 pi / (1+rho^2)^2.
    const double h = 0.01;
    const std::size_t n = next_smooth_size(4000) - 1;
    std::vector<double> psi(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const double r = double(j) * h;
        psi[j - 1] = r * std::exp(-r);
    }
    const SpectralSamples sp = dst_radial_fourier(psi, h, 200);
    REQUIRE(sp.rhos.size() == 200);
    CHECK(sp.drho == Catch::Approx(pi / (double(n + 1) * h)).epsilon(1e-14));
    for (std::size_t k = 9; k < sp.rhos.size(); k += 40) {
        const double rho = sp.rhos[k];
        const double exact = 8.0 * pi / std::pow(1.0 + rho * rho, 2);
        CHECK(sp.fhat[k] == Catch::Approx(exact).epsilon(5e-4));
    }
}
