#pragma once
// ============================================================================
// threshold.hpp : the critical curve β(X) and phase-plane classification
//
// β(X) is the unique initial velocity for which the forward lifespan equals
// π; it separates forward blow-up (T₊ < π) from forward scattering (T₊ > π).
// Backward behavior is the forward behavior of the velocity-reflected point.
// ============================================================================

#include "cubicwave/config.hpp"
#include "cubicwave/duffing.hpp"

#include <array>
#include <vector>

namespace cubicwave {

enum class Behavior { Blowup, Scattering, Threshold };

/// Forward/backward behavior pair (nine combinations in total).
struct Classification {
    Behavior forward = Behavior::Scattering;
    Behavior backward = Behavior::Scattering;
};

[[nodiscard]] const char* to_string(Behavior b);

/// The critical initial velocity: for X ≤ X_C the unique Y ≥ 0 solving
/// quad_R(X, Y) = π; for X > X_C the unique Y < 0 solving quad_S(X, Y) = π.
/// Strictly decreasing in X with β(X_C) = 0.
[[nodiscard]] double beta(double X, const Tolerances& tol = default_tolerances());

/// Forward-in-time behavior: Blowup when Y > β(X) or Y < −β(−X), Scattering
/// strictly between the curves, Threshold within tol.threshold_band of either.
[[nodiscard]] Behavior classify_forward(const PhasePoint& p,
                                        const Tolerances& tol = default_tolerances());

/// Forward and backward behavior; backward = forward of (X, −Y).
[[nodiscard]] Classification classify_bidirectional(const PhasePoint& p,
                                                    const Tolerances& tol = default_tolerances());

/// The four phase points whose trajectories are threshold in both time
/// directions: (±X_C, 0) and (0, ±β(0)).
[[nodiscard]] std::array<PhasePoint, 4> special_points(const Tolerances& tol = default_tolerances());

/// Sampled threshold curve on a uniform grid.
struct ThresholdCurve {
    std::vector<double> xs;
    std::vector<double> betas;
    double x_c = 0.0;
};

/// Sample β on n uniformly spaced points of [x_min, x_max] (n ≥ 2); validates
/// strict monotone decrease of the sampled values.
[[nodiscard]] ThresholdCurve beta_curve(double x_min, double x_max, int n,
                                        const Tolerances& tol = default_tolerances());

/// Rectangular classification sweep.  Cells are stored row-major with the
/// Y index fastest: cell(ix, iy) = cells[ix*ny + iy].
struct PhaseDiagram {
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<Classification> cells;
};

[[nodiscard]] PhaseDiagram phase_diagram(double x_min, double x_max, int nx,
                                         double y_min, double y_max, int ny,
                                         const Tolerances& tol = default_tolerances());

} // namespace cubicwave
