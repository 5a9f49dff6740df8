#pragma once
// ============================================================================
// dst.hpp : discrete sine transform (DST-I) front end for the radial Fourier
// transform on uniform grids
//
// With samples ψ_j = r_j f(r_j) at r_j = j·h (j = 1..n) and R = (n+1)h, the
// radial transform f̂(ρ) = (4π/ρ)∫₀^∞ sin(ρr) f(r) r dr is approximated at
// ρ_k = πk/R by f̂(ρ_k) ≈ (4π/ρ_k)(h/2)·DST-I(ψ)_k.
// ============================================================================

#include <cstddef>
#include <vector>

namespace cubicwave {

/// Unnormalized DST-I: out_k = 2 Σ_{j=1}^n in_j sin(π j k/(n+1)), k = 1..n.
[[nodiscard]] std::vector<double> dst_i(const std::vector<double>& in);

/// Spectrum samples on the conjugate uniform grid ρ_k = πk/R.
struct SpectralSamples {
    std::vector<double> rhos;
    std::vector<double> fhat;
    double drho = 0.0; ///< grid spacing π/R
};

/// Radial Fourier transform of uniformly sampled ψ_j = r_j f(r_j); keeps the
/// first m_keep modes (all when m_keep == 0).
[[nodiscard]] SpectralSamples dst_radial_fourier(const std::vector<double>& psi,
                                                 double h,
                                                 std::size_t m_keep = 0);

/// Smallest 5-smooth integer (2^a·3^b·5^c) that is >= n; keeps DST-I sizes
/// fast in the FFT backend.
[[nodiscard]] std::size_t next_smooth_size(std::size_t n);

} // namespace cubicwave
