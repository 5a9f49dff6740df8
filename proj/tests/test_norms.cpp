// Tests of the radial Fourier transform, Lebesgue / Sobolev norms with
// divergence diagnosis, the spectral functional, and the kappa constant.

#include <catch2/catch_amalgamated.hpp>

#include "cubicwave/dst.hpp"
#include "cubicwave/norms.hpp"
#include "cubicwave/penrose.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace cubicwave;
using std::numbers::pi;

TEST_CASE("radial Fourier transform closed forms", "[norms]") {
    auto lorentz = [](double r) { return 1.0 / (1.0 + r * r); };
    auto lorentz2 = [](double r) {
        const double q = 1.0 + r * r;
        return 1.0 / (q * q);
    };
    auto yukawa = [](double r) { return std::exp(-r) / r; };
    for (double rho : {0.5, 1.0, 2.0}) {
        CHECK(radial_fourier(lorentz, rho) ==
              Catch::Approx(2.0 * pi * pi * std::exp(-rho) / rho).epsilon(1e-8));
        CHECK(radial_fourier(lorentz2, rho) ==
              Catch::Approx(pi * pi * std::exp(-rho)).epsilon(1e-8));
        CHECK(radial_fourier(yukawa, rho) ==
              Catch::Approx(4.0 * pi / (1.0 + rho * rho)).epsilon(1e-8));
    }
    // Frozen value.
    CHECK(radial_fourier(lorentz2, 0.7) ==
          Catch::Approx(4.901100499815991509).epsilon(1e-8));
}

TEST_CASE("Fourier inversion: double transform scales by (2 pi)^3", "[norms]") {
    // fhat of e^{-r}/r is 4 pi/(1+rho^2); transforming back must return
    // (2 pi)^3 e^{-r}/r.
    const double r = 1.3;
    const double back =
        radial_fourier([](double rho) { return 4.0 * pi / (1.0 + rho * rho); }, r);
    const double expected = std::pow(2.0 * pi, 3) * std::exp(-r) / r;
    CHECK(back == Catch::Approx(expected).epsilon(1e-7));
}

TEST_CASE("Cauchy data transforms", "[norms]") {
    const CauchyData d{0.7, -0.4};
    for (double rho : {0.3, 1.0, 2.5}) {
        CHECK(d.u0_hat(rho) ==
              Catch::Approx(4.0 * pi * pi * 0.7 * std::exp(-rho) / rho)
                  .epsilon(1e-12));
        CHECK(d.u1_hat(rho) ==
              Catch::Approx(4.0 * pi * pi * -0.4 * std::exp(-rho)).epsilon(1e-12));
        // Quadrature agrees with the closed forms.
        CHECK(radial_fourier([&](double r) { return d.u0(r); }, rho) ==
              Catch::Approx(d.u0_hat(rho)).epsilon(1e-8));
        CHECK(radial_fourier([&](double r) { return d.u1(r); }, rho) ==
              Catch::Approx(d.u1_hat(rho)).epsilon(1e-8));
    }
    CHECK_THROWS_AS(d.u0_hat(0.0), std::exception);
}

TEST_CASE("Lp norms of closed-form profiles", "[norms]") {
    auto lorentz = [](double r) { return 1.0 / (1.0 + r * r); };
    auto expf = [](double r) { return std::exp(-r); };
    const NormResult l2 = lp_norm(lorentz, 2.0);
    CHECK_FALSE(l2.divergent);
    CHECK(l2.value == Catch::Approx(pi).epsilon(1e-9));
    CHECK(lp_norm(expf, 1.0).value == Catch::Approx(8.0 * pi).epsilon(1e-9));
    CHECK(lp_norm(expf, 3.0).value ==
          Catch::Approx(std::cbrt(8.0 * pi / 27.0)).epsilon(1e-9));
    // Sub-unit exponent (quasi-norm branch): ||e^{-r}||_{1/2} = (64 pi)^2.
    CHECK(lp_norm(expf, 0.5).value ==
          Catch::Approx(std::pow(64.0 * pi, 2.0)).epsilon(1e-8));
    // A large r_scale only reshapes the quadrature windows.
    CHECK(lp_norm(expf, 2.0, default_tolerances(), 200.0).value ==
          Catch::Approx(std::sqrt(pi)).epsilon(1e-8));
}

TEST_CASE("Lp divergence diagnosis", "[norms]") {
    auto lorentz = [](double r) { return 1.0 / (1.0 + r * r); };
    // |f|^{3/2} r^2 ~ 1/r: logarithmically divergent.
    const NormResult bad = lp_norm(lorentz, 1.5);
    CHECK(bad.divergent);
    CHECK(std::isinf(bad.tail_estimate));
    // Quasi-norm divergence of the u1-type profile at p = 3/4.
    auto lorentz2 = [](double r) { return std::pow(1.0 + r * r, -2.0); };
    CHECK(lp_norm(lorentz2, 0.75).divergent);
    // The same profiles converge slightly above the critical exponent.
    CHECK_FALSE(lp_norm(lorentz, 1.6).divergent);
    CHECK_FALSE(lp_norm(lorentz2, 0.8).divergent);
}

TEST_CASE("Lp norm of sampled snapshots", "[norms]") {
    // Synthesize a snapshot of 1/(1+r^2) on a dense geometric grid.
    std::vector<double> rs{0.0};
    for (int i = 0; i <= 1200; ++i)
        rs.push_back(1e-3 * std::pow(1e6, i / 1200.0));
    RadialField f;
    f.t = 0.0;
    f.rs = rs;
    for (double r : rs) {
        f.u.push_back(1.0 / (1.0 + r * r));
        f.ut.push_back(0.0);
        f.in_domain.push_back(1);
    }
    const NormResult l2 = lp_norm(f, 2.0);
    CHECK_FALSE(l2.divergent);
    CHECK(l2.value == Catch::Approx(pi).epsilon(1e-5));
    // Restricted window with exact closed form:
    // int_0^10 r^2 (1+r^2)^{-3/2} dr = asinh(10) - 10/sqrt(101).
    const NormResult l32 = lp_norm(f, 1.5, 0.0, 10.0);
    const double exact =
        std::pow(4.0 * pi * (std::asinh(10.0) - 10.0 / std::sqrt(101.0)),
                 1.0 / 1.5);
    CHECK(l32.value == Catch::Approx(exact).epsilon(1e-5));
    // Unbounded window at the critical exponent: flagged divergent.
    CHECK(lp_norm(f, 1.5).divergent);
}

TEST_CASE("Sobolev norms from spectral data", "[norms]") {
    const CauchyData d{0.7, 0.0};
    auto u0hat = [&](double rho) { return d.u0_hat(rho); };
    // nu = 0 reduces to the L2 norm squared: ||2X/(1+r^2)||_2^2 = 4 pi^2 X^2.
    const NormResult l2sq = sobolev_norm_sq(u0hat, 0.0);
    CHECK(l2sq.value == Catch::Approx(4.0 * pi * pi * 0.49).epsilon(1e-8));
    // nu = 1/2 critical value: 2 pi^2 X^2.
    CHECK(sobolev_norm_sq(u0hat, 0.5).value ==
          Catch::Approx(2.0 * pi * pi * 0.49).epsilon(1e-8));
    // Low-frequency divergence diagnosis for the u1 transform, which tends
    // to a constant at rho = 0: rho^{2+2nu} is integrable iff nu > -3/2.
    const CauchyData e{0.0, 0.5};
    auto u1hat = [&](double rho) { return e.u1_hat(rho); };
    CHECK_FALSE(sobolev_norm_sq(u1hat, -1.45).divergent);
    CHECK(sobolev_norm_sq(u1hat, -1.5).divergent);
    CHECK(sobolev_norm_sq(u1hat, -1.55).divergent);
}

TEST_CASE("spectral functional normalizations agree", "[norms]") {
    auto ghat = [](double rho) { return std::exp(-rho * rho); };
    const double f0 = spectral_functional(ghat, 0.25).value;
    const double s0 = sobolev_norm_sq(ghat, 0.25).value;
    CHECK(f0 == Catch::Approx(8.0 * std::pow(pi, 3) * s0).epsilon(1e-10));
}

TEST_CASE("discrete spectral functional from DST samples", "[norms]") {
    // f = e^{-r}: F_0 = 4 pi int |8 pi/(1+rho^2)^2|^2 rho^2 drho = 8 pi^4.
    const double h = 0.005;
    const std::size_t n = next_smooth_size(16000) - 1;
    std::vector<double> psi(n);
    for (std::size_t j = 1; j <= n; ++j) {
        const double r = double(j) * h;
        psi[j - 1] = r * std::exp(-r);
    }
    const SpectralSamples sp = dst_radial_fourier(psi, h);
    const NormResult f0 = spectral_functional(sp, 0.0);
    CHECK(f0.value == Catch::Approx(8.0 * std::pow(pi, 4)).epsilon(2e-3));
}

TEST_CASE("kappa constant against frozen references", "[norms]") {
    CHECK(kappa(0.0) == Catch::Approx(2078.060608725385328).epsilon(1e-9));
    CHECK(kappa(0.1) == Catch::Approx(2625.800269391498023).epsilon(1e-9));
    CHECK(kappa(0.2) == Catch::Approx(3519.350263509666163).epsilon(1e-9));
    CHECK(kappa(0.25) == Catch::Approx(4220.712537925579462).epsilon(1e-9));
    CHECK(kappa(0.3) == Catch::Approx(5257.735708944640068).epsilon(1e-9));
    CHECK(kappa(0.4) == Catch::Approx(10325.246405356397206).epsilon(1e-9));
    CHECK_THROWS_AS(kappa(0.5), std::invalid_argument);
    CHECK_THROWS_AS(kappa(-0.1), std::invalid_argument);
}
