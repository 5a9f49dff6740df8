#pragma once
// ============================================================================
// freewave.hpp : radiation profile of global solutions and the linear wave
// they scatter to
//
// The radiation function of a solution with profile U is
//   g(η) = −(1+η²)^{−1/2} · U(π/2 − arctan η),
// its η-derivative
//   g′(η) = (1+η²)^{−3/2} · (η·U + U̇)(π/2 − arctan η).
// The scattered linear wave is the radial d'Alembert field
//   v_L(t,r) = (F(t+r) − F(t−r))/r with F(η) = g(−η) − g(0),
// which reproduces the data v_L(0,r) = (g(−r)−g(r))/r,
// ∂ₜv_L(0,r) = (g′(r)−g′(−r))/r.
// ============================================================================

#include "cubicwave/duffing.hpp"
#include "cubicwave/interp.hpp"

#include <vector>

namespace cubicwave {

[[nodiscard]] double radiation_g(const DuffingSolution& sol, double eta);
[[nodiscard]] double radiation_g_prime(const DuffingSolution& sol, double eta);

/// Exact evolution of the radiation field (uses g directly).
[[nodiscard]] double radiation_free_wave(const DuffingSolution& sol, double t,
                                         double r);
[[nodiscard]] double radiation_free_wave_dt(const DuffingSolution& sol,
                                            double t, double r);
[[nodiscard]] double radiation_free_wave_dr(const DuffingSolution& sol,
                                            double t, double r);

/// Sampled linear scattering data (v₀, v₁) on a radius grid.
struct LinearProfileData {
    std::vector<double> rs;
    std::vector<double> v0;
    std::vector<double> v1;
};

[[nodiscard]] LinearProfileData linear_profile_data(const DuffingSolution& sol,
                                                    const std::vector<double>& rs);

/// d'Alembert evolution of sampled radial data (v₀, v₁): the generic free
/// wave with v(0,·) = v₀, ∂ₜv(0,·) = v₁, evaluated from splined profiles.
class FreeWave {
public:
    explicit FreeWave(const LinearProfileData& data);

    [[nodiscard]] double value(double t, double r) const;
    [[nodiscard]] double deriv_t(double t, double r) const;
    [[nodiscard]] double deriv_r(double t, double r) const;

private:
    [[nodiscard]] double F(double eta) const;
    [[nodiscard]] double Fp(double eta) const;

    CubicSpline v0_;
    CubicSpline v1_;
    CubicSpline w_; ///< w(x) = ½∫₀^x ρ v₁(ρ) dρ on the sample grid
};

} // namespace cubicwave
