#pragma once
// ============================================================================
// config.hpp : tunable numerical tolerances shared across the library
// ============================================================================

namespace cubicwave {

/// Central knob block for every numeric routine in the library.  All solvers
/// accept either an explicit Tolerances or fall back to `default_tolerances()`.
struct Tolerances {
    /// Relative/absolute error target for the adaptive Runge-Kutta integrator.
    double ode_tol = 1e-10;
    /// Target relative error for one-dimensional quadratures.
    double quad_tol = 1e-12;
    /// Width of the bracket at which scalar root solves terminate.
    double root_tol = 1e-12;
    /// Half-width of the band around the critical curve inside which a datum
    /// is classified as "threshold" rather than blowup/scattering.
    double threshold_band = 1e-9;
    /// |U| value at which a trajectory is declared blown up and the remaining
    /// time to the singularity is obtained from the closed tail integral.
    double blowup_cutoff = 1e8;
    /// Radius beyond which slowly decaying radial profiles are integrated via
    /// fitted power-law tails instead of direct quadrature.
    double tail_cut = 10.0;
};

[[nodiscard]] inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

} // namespace cubicwave
