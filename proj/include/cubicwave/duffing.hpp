#pragma once
// ============================================================================
// duffing.hpp : the ODE core  Ü + U = U³
//
// Conserved energy, adaptive dense-output integration with blow-up detection,
// closed-form reference families, and the leading blow-up asymptote.
// ============================================================================

#include "cubicwave/config.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace cubicwave {

/// Initial datum (U(0), U̇(0)) of a trajectory.
struct PhasePoint {
    double X = 0.0;
    double Y = 0.0;
};

/// A single dense sample of a trajectory.
struct OdeState {
    double s = 0.0;
    double U = 0.0;
    double Udot = 0.0;
};

/// Conserved energy E = Y²/2 + X²/2 − X⁴/4.
[[nodiscard]] inline double energy(double X, double Y) {
    return 0.5 * Y * Y + 0.5 * X * X - 0.25 * X * X * X * X;
}
[[nodiscard]] inline double energy(const PhasePoint& p) { return energy(p.X, p.Y); }

/// Potential term Φ(X) = X²/2 − X⁴/4; every energy satisfies E ≥ Φ(X).
[[nodiscard]] inline double phi_potential(double X) {
    return 0.5 * X * X - 0.25 * X * X * X * X;
}

// ---------------------------------------------------------------------------
// Step-record trajectory (integrate) and dense-output cache (DuffingSolution)
// ---------------------------------------------------------------------------

/// Accepted-step trajectory record produced by `integrate`.
struct OdeTrajectory {
    PhasePoint origin;
    std::vector<OdeState> states;      ///< accepted steps, s strictly monotone
    bool truncated_at_blowup = false;  ///< |U| reached the blow-up cutoff
    int blowup_side = 0;               ///< sign of U at the cutoff crossing
};

/// Integrate from s=0 toward s_end (either sign).  Stops early, with
/// truncated_at_blowup set, when |U| exceeds tol.blowup_cutoff.
[[nodiscard]] OdeTrajectory integrate(const PhasePoint& p, double s_end,
                                      const Tolerances& tol = default_tolerances());

/// Lazily grown dense-output solution through a phase point.  Queries in
/// either time direction extend the underlying integration on demand; the
/// object is cheaply copyable (shared dense cache) and safe for concurrent
/// queries (readers take a shared lock; growth takes an exclusive lock).
class DuffingSolution {
public:
    explicit DuffingSolution(PhasePoint p,
                             const Tolerances& tol = default_tolerances());

    [[nodiscard]] const PhasePoint& origin() const { return origin_; }
    [[nodiscard]] double energy() const { return energy_; }

    /// Dense-output state at s.  Throws std::domain_error when s lies beyond
    /// a detected blow-up; the message carries the numeric lifespan bound.
    [[nodiscard]] OdeState state_at(double s) const;

    /// Pre-extend the dense cache to cover [s_lo, s_hi] (clipped at blow-up),
    /// so that subsequent concurrent state_at calls never need to grow it.
    void prepare(double s_lo, double s_hi) const;

    /// First s (searching away from 0, |s| ≤ s_limit) at which |U| reaches
    /// tol.blowup_cutoff in the given direction (+1 forward, −1 backward).
    /// Returns the signed crossing time, or nullopt if no escape was found.
    [[nodiscard]] std::optional<double> escape_time(int direction,
                                                    double s_limit) const;

    /// Sign of U at the detected escape in the given direction (+1/−1);
    /// 0 when no escape has been detected yet.
    [[nodiscard]] int escape_sign(int direction) const;

private:
    struct Side;
    PhasePoint origin_;
    double energy_ = 0.0;
    Tolerances tol_;
    std::shared_ptr<Side> fwd_;  ///< covers s ≥ 0
    std::shared_ptr<Side> bwd_;  ///< covers s ≤ 0 via the reflected system
};

// ---------------------------------------------------------------------------
// Closed-form reference families
// ---------------------------------------------------------------------------

enum class ExplicitKind {
    EQuarter,    ///< energy-1/4 hyperbolic family (tanh / coth orbits)
    EZero,       ///< energy-0 secant family √2/sin(arcsin(√2/X) ∓ s)
    EllipticSn,  ///< bounded-well family 2A·sn(ωs+θ, m)
    Constant,    ///< fixed points U ≡ 0, ±1
};

/// Parameters for the closed families.  `branch` selects the sign of the
/// initial velocity branch (Y = branch·|…|), used by EQuarter and EZero.
struct ExplicitParams {
    double X = 0.0;      ///< anchor value U(0) for EQuarter / EZero / Constant
    int branch = +1;     ///< ±1 velocity-branch selector
    double A = 0.0;      ///< EllipticSn amplitude parameter, |A| < 1/2
    double theta = 0.0;  ///< EllipticSn phase
};

/// Closed-form U(s) for the requested family.  Throws std::domain_error on
/// parameters outside the family's validity range.
[[nodiscard]] double explicit_solution(ExplicitKind kind, const ExplicitParams& prm,
                                       double s);

/// The phase point (U(0), U̇(0)) realized by the closed form.
[[nodiscard]] PhasePoint explicit_initial_point(ExplicitKind kind,
                                                const ExplicitParams& prm);

/// Forward blow-up time of the EZero plus-branch family: arcsin(√2/|X|).
[[nodiscard]] double ezero_blowup_time(double X);

/// Leading blow-up asymptote (±√2/(T₊−s), ±√2/(T₊−s)²).
[[nodiscard]] std::pair<double, double> blowup_asymptote(double T_plus, double s,
                                                         int sign);

/// Largest energy drift |E(U,U̇) − E(X,Y)| over the states of a trajectory,
/// restricted to samples with |U| ≤ u_cap (the drift test is numerically
/// meaningful only where the quartic terms do not dominate the roundoff).
[[nodiscard]] double max_energy_drift(const OdeTrajectory& traj, double u_cap = 30.0);

} // namespace cubicwave
