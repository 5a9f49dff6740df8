#pragma once
// ============================================================================
// norms.hpp : radial Fourier transforms, Lebesgue and homogeneous Sobolev
// norms on radial functions over ℝ³, and the spectral growth constant κ(ν)
//
// Conventions (f̂ is the 3-D Fourier transform of the radial function f):
//   f̂(ρ)          = (4π/ρ) ∫₀^∞ sin(ρr) f(r) r dr
//   ‖f‖_p^p       = 4π ∫₀^∞ |f(r)|^p r² dr
//   ‖f‖²_{Ḣ^ν}    = (1/2π²) ∫₀^∞ |f̂(ρ)|² ρ^{2+2ν} dρ      (standard norm)
//   F_ν[f]        = 4π ∫₀^∞ |f̂(ρ)|² ρ^{2+2ν} dρ = 8π³ ‖f‖²_{Ḣ^ν}
// The plain spectral functional F_ν is the quantity whose growth constants
// are κ(ν) = 128π³ ∫₀^∞ j₁-kernel; both normalizations are exposed.
// ============================================================================

#include "cubicwave/config.hpp"
#include "cubicwave/dst.hpp"
#include "cubicwave/penrose.hpp"

#include <functional>
#include <limits>

namespace cubicwave {

/// Result of a (possibly improper) norm computation.  `tail_estimate` bounds
/// the uncertainty from the extrapolated tail; `divergent` is set when the
/// doubling-window increments refuse to decay (integrand exponent ≥ −1).
struct NormResult {
    double value = 0.0;
    double tail_estimate = 0.0;
    bool divergent = false;
};

using RadialFn = std::function<double(double)>;

/// Closed-form initial data pair u₀ = 2X/(1+r²), u₁ = 4Y/(1+r²)² and their
/// radial Fourier transforms.
struct CauchyData {
    double X = 0.0;
    double Y = 0.0;
    [[nodiscard]] double u0(double r) const { return 2.0 * X / (1.0 + r * r); }
    [[nodiscard]] double u1(double r) const {
        const double q = 1.0 + r * r;
        return 4.0 * Y / (q * q);
    }
    [[nodiscard]] double u0_hat(double rho) const;
    [[nodiscard]] double u1_hat(double rho) const;
};

/// Radial Fourier transform at one frequency by oscillatory panel quadrature.
[[nodiscard]] double radial_fourier(const RadialFn& f, double rho,
                                    const Tolerances& tol = default_tolerances());

/// Lᵖ norm over ℝ³ of a radial function.  `r_scale` stretches the window
/// layout so fields supported out to r ~ r_scale are fully covered before
/// the tail diagnosis starts.
[[nodiscard]] NormResult lp_norm(const RadialFn& f, double p,
                                 const Tolerances& tol = default_tolerances(),
                                 double r_scale = 1.0);

/// Lᵖ norm of a sampled snapshot on [r_lo, r_hi] ∩ [samples]; portions of
/// [r_lo, r_hi] beyond the sample range are extrapolated by a power-law fit
/// to the outermost sampled decade.
[[nodiscard]] NormResult lp_norm(const RadialField& field, double p,
                                 double r_lo = 0.0,
                                 double r_hi = std::numeric_limits<double>::infinity());

/// Squared homogeneous Sobolev norm ‖f‖²_{Ḣ^ν} from spectral data, with
/// divergence diagnosis of the ρ → 0 endpoint.
[[nodiscard]] NormResult sobolev_norm_sq(const RadialFn& fhat, double nu,
                                         const Tolerances& tol = default_tolerances());

/// Plain spectral functional F_ν = 4π∫|f̂|²ρ^{2+2ν}dρ = 8π³‖f‖²_{Ḣ^ν}.
[[nodiscard]] NormResult spectral_functional(const RadialFn& fhat, double nu,
                                             const Tolerances& tol = default_tolerances());

/// Discrete form of the spectral functional from DST samples; tail_estimate
/// reports the top-decade (aliasing-sensitive) share of the sum.
[[nodiscard]] NormResult spectral_functional(const SpectralSamples& spec,
                                             double nu);

/// Spectral growth constant κ(ν) = 128π³ ∫₀^∞ (sin σ − σ cos σ)² σ^{2ν−4} dσ
/// for ν ∈ [0, 1/2); the oscillatory tail is summed by an asymptotic series.
[[nodiscard]] double kappa(double nu,
                           const Tolerances& tol = default_tolerances());

} // namespace cubicwave
