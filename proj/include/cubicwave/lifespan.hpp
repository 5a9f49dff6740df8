#pragma once
// ============================================================================
// lifespan.hpp : lifespan integrals of the ODE core
//
// The maximal existence interval (T₋, T₊) of a Duffing trajectory is
// computed from improper integrals of 1/√P with P(v) = 2E − v² + v⁴/2:
//   quad_R — monotone escape from the initial point straight to infinity;
//   quad_S — escape after one reflection at the outer turning point.
// Landmark constants (E_∞, X_C) are defined implicitly by these integrals.
// ============================================================================

#include "cubicwave/config.hpp"
#include "cubicwave/duffing.hpp"

namespace cubicwave {

/// Maximal existence interval of the trajectory through a phase point.
struct Lifespan {
    double t_minus = 0.0;  ///< ≤ 0; −∞ when backward-global
    double t_plus = 0.0;   ///< ≥ 0; +∞ when forward-global
    bool finite_minus = false;
    bool finite_plus = false;
};

/// Integral ∫_L^∞ dv/√P with lower limit L = X·sign(Y) (|X| when Y = 0).
/// Converges iff E > 1/4, or E ≤ 1/4 with L at/above the outer root of P.
/// Returns +∞ outside the convergence domain; never a partial value.
[[nodiscard]] double quad_R(const PhasePoint& p,
                            const Tolerances& tol = default_tolerances());

/// Two-branch integral for escape after reflection, in the variable
/// w = v − √(1+λ), λ = √(1−4E): converges iff E < 1/4 and |X| > 1.
/// Even in X; independent of the sign of Y.  Returns +∞ outside the domain.
[[nodiscard]] double quad_S(const PhasePoint& p,
                            const Tolerances& tol = default_tolerances());

/// Forward lifespan T₊(X, Y): dispatches between quad_R, quad_S, the exact
/// energy-1/4 closed forms, and ∞ for trapped orbits.
[[nodiscard]] double t_plus(const PhasePoint& p,
                            const Tolerances& tol = default_tolerances());

/// Backward lifespan T₋(X, Y) = −T₊(X, −Y).
[[nodiscard]] double t_minus(const PhasePoint& p,
                             const Tolerances& tol = default_tolerances());

/// Total lifespan T₊ + |T₋| as a function of the energy alone:
/// 2∫₀^∞ dv/√P for E > 1/4; ∞ at E = 1/4; 2∫_{v₂}^∞ dv/√P for E < 1/4
/// (v₂ the outer root).  Defined for every E in the reachable range.
[[nodiscard]] double total_lifespan_by_energy(double E,
                                              const Tolerances& tol = default_tolerances());

/// T₊ along the zero-velocity boundary E = Φ(X), |X| > 1, as the manifestly
/// even integral √2∫₀^∞ dw/√(X²(cosh²w+1)−2); +∞ for |X| ≤ 1.
[[nodiscard]] double boundary_tplus(double X,
                                    const Tolerances& tol = default_tolerances());

/// The unique energy E_∞ > 1/4 with total_lifespan_by_energy(E_∞) = π.
[[nodiscard]] double e_infinity(const Tolerances& tol = default_tolerances());

/// The unique X_C ∈ (1, √2) with boundary_tplus(X_C) = π.
[[nodiscard]] double x_critical(const Tolerances& tol = default_tolerances());

/// Both lifespan endpoints with finiteness flags.
[[nodiscard]] Lifespan compute_lifespan(const PhasePoint& p,
                                        const Tolerances& tol = default_tolerances());

} // namespace cubicwave
