#include "cubicwave/freewave.hpp"

#include "cubicwave/constants.hpp"
#include "cubicwave/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cubicwave {

double radiation_g(const DuffingSolution& sol, double eta) {
    const double s = kHalfPi - std::atan(eta);
    const OdeState st = sol.state_at(s);
    return -st.U / std::sqrt(1.0 + eta * eta);
}

double radiation_g_prime(const DuffingSolution& sol, double eta) {
    const double s = kHalfPi - std::atan(eta);
    const OdeState st = sol.state_at(s);
    const double q = 1.0 + eta * eta;
    return (eta * st.U + st.Udot) / (q * std::sqrt(q));
}

namespace {
// F(η) = g(−η) − g(0); constants cancel in v_L but keeping them makes F a
// genuine antiderivative-normalized profile with F(0) = 0.
double radiation_F(const DuffingSolution& sol, double eta) {
    return radiation_g(sol, -eta) - radiation_g(sol, 0.0);
}
double radiation_Fp(const DuffingSolution& sol, double eta) {
    return -radiation_g_prime(sol, -eta);
}
} // namespace

double radiation_free_wave(const DuffingSolution& sol, double t, double r) {
    if (!(r > 0))
        throw std::invalid_argument("radiation_free_wave: r must be positive");
    return (radiation_F(sol, t + r) - radiation_F(sol, t - r)) / r;
}

double radiation_free_wave_dt(const DuffingSolution& sol, double t, double r) {
    if (!(r > 0))
        throw std::invalid_argument("radiation_free_wave: r must be positive");
    return (radiation_Fp(sol, t + r) - radiation_Fp(sol, t - r)) / r;
}

double radiation_free_wave_dr(const DuffingSolution& sol, double t, double r) {
    if (!(r > 0))
        throw std::invalid_argument("radiation_free_wave: r must be positive");
    const double vL = radiation_free_wave(sol, t, r);
    return (radiation_Fp(sol, t + r) + radiation_Fp(sol, t - r)) / r - vL / r;
}

LinearProfileData linear_profile_data(const DuffingSolution& sol,
                                      const std::vector<double>& rs) {
    LinearProfileData out;
    out.rs = rs;
    out.v0.resize(rs.size());
    out.v1.resize(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double r = rs[i];
        if (r <= 0.0) {
            // Continuous limits: v₀(0) = −2g′(0), v₁(0) = 2g″(0) with
            // g″(0) = 2U − U³ evaluated at s = π/2.
            out.v0[i] = -2.0 * radiation_g_prime(sol, 0.0);
            const double U = sol.state_at(kHalfPi).U;
            out.v1[i] = 2.0 * (2.0 * U - U * U * U);
        } else {
            out.v0[i] = (radiation_g(sol, -r) - radiation_g(sol, r)) / r;
            out.v1[i] =
                (radiation_g_prime(sol, r) - radiation_g_prime(sol, -r)) / r;
        }
    }
    return out;
}

FreeWave::FreeWave(const LinearProfileData& data) {
    if (data.rs.size() < 4)
        throw std::invalid_argument("FreeWave: need at least 4 samples");
    v0_ = CubicSpline(data.rs, data.v0);
    v1_ = CubicSpline(data.rs, data.v1);
    // w(x) = ½ ∫₀^x ρ v₁(ρ) dρ accumulated on the sample knots.
    std::vector<double> w(data.rs.size(), 0.0);
    const double r0 = data.rs.front();
    const Integrand rho_v1 = [&](double rho) { return rho * v1_(rho); };
    double acc = r0 > 0.0 ? 0.5 * integrate(rho_v1, 0.0, r0, 1e-12) : 0.0;
    w[0] = acc;
    for (std::size_t i = 1; i < data.rs.size(); ++i) {
        acc += 0.5 * integrate(rho_v1, data.rs[i - 1], data.rs[i], 1e-12);
        w[i] = acc;
    }
    w_ = CubicSpline(data.rs, w);
}

double FreeWave::F(double eta) const {
    const double a = std::abs(eta);
    return 0.5 * eta * v0_(a) + w_(a);
}

double FreeWave::Fp(double eta) const {
    const double a = std::abs(eta);
    return 0.5 * v0_(a) + 0.5 * a * v0_.derivative(a) + 0.5 * eta * v1_(a);
}

double FreeWave::value(double t, double r) const {
    if (!(r > 0)) throw std::invalid_argument("FreeWave: r must be positive");
    return (F(t + r) - F(t - r)) / r;
}

double FreeWave::deriv_t(double t, double r) const {
    if (!(r > 0)) throw std::invalid_argument("FreeWave: r must be positive");
    return (Fp(t + r) - Fp(t - r)) / r;
}

double FreeWave::deriv_r(double t, double r) const {
    if (!(r > 0)) throw std::invalid_argument("FreeWave: r must be positive");
    return (Fp(t + r) + Fp(t - r)) / r - value(t, r) / r;
}

} // namespace cubicwave
