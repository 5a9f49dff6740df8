#pragma once
// ============================================================================
// penrose.hpp : from ODE profile to physical field
//
// The physical field is u(t,r) = Ω(t,r)·U(s(t,r)) with
//   s = arctan(t+r) + arctan(t−r),   Ω = 2 (1+(t+r)²)^{−1/2} (1+(t−r)²)^{−1/2}.
// This header provides the conformal factors and their exact derivatives,
// the maximal influence domain bounds M±, and cached field evaluation.
// ============================================================================

#include "cubicwave/config.hpp"
#include "cubicwave/duffing.hpp"

#include <vector>

namespace cubicwave {

/// Conformal coordinates and exact first derivatives at a spacetime point.
struct ConformalFactors {
    double s = 0.0;         ///< compactified time, in (−π, π)
    double omega = 0.0;     ///< conformal factor Ω > 0
    double ds_dt = 0.0;
    double ds_dr = 0.0;
    double domega_dt = 0.0;
    double domega_dr = 0.0;
};

/// Evaluate s, Ω and their derivatives; stable for large |t±r| (the arctan
/// pair is folded so the approach of s to ±π survives rounding).
[[nodiscard]] ConformalFactors conformal_factors(double t, double r);

/// Domain bound M±(T, r) = −cot T ± √(1+r²+cot²T); ±∞ when |T| ≥ π.
[[nodiscard]] double influence_bound(double T, double r, int side);

/// Physical forward blow-up time tan(T₊/2) = M₊(T₊, 0); +∞ when T₊ ≥ π.
[[nodiscard]] double physical_blowup_time_from(double T_plus);

/// Sampled radial snapshot of the field at one time.
struct RadialField {
    double t = 0.0;
    std::vector<double> rs;
    std::vector<double> u;
    std::vector<double> ut;
    std::vector<char> in_domain;
};

/// Field evaluator with a shared dense ODE solve and cached lifespan.
/// All queries are safe to run concurrently after a prepare_time call (or
/// after single-threaded first touches have grown the dense cache).
class FieldEvaluator {
public:
    explicit FieldEvaluator(PhasePoint p,
                            const Tolerances& tol = default_tolerances());

    [[nodiscard]] const PhasePoint& origin() const { return p_; }
    [[nodiscard]] double T_plus() const { return T_plus_; }
    [[nodiscard]] double T_minus() const { return T_minus_; }
    [[nodiscard]] double physical_blowup_time() const;
    [[nodiscard]] const DuffingSolution& solution() const { return sol_; }

    /// True when s(t,r) lies inside (T₋+guard, T₊−guard); the guard (1e−9)
    /// keeps dense-output queries away from the singular endpoints.
    [[nodiscard]] bool in_domain(double t, double r) const;

    /// u(t,r); throws std::domain_error (message carries M±) outside the
    /// influence domain.
    [[nodiscard]] double value(double t, double r) const;

    /// ∂ₜu = ∂ₜΩ·U + Ω·∂ₜs·U̇.
    [[nodiscard]] double deriv_t(double t, double r) const;

    /// ∂ᵣu = ∂ᵣΩ·U + Ω·∂ᵣs·U̇.
    [[nodiscard]] double deriv_r(double t, double r) const;

    /// Pre-extend the dense ODE cache to cover every r ≥ 0 at time t.
    void prepare_time(double t) const;

private:
    [[nodiscard]] OdeState profile_at(double t, double r) const;

    PhasePoint p_;
    Tolerances tol_;
    DuffingSolution sol_;
    double T_plus_ = 0.0;
    double T_minus_ = 0.0;
};

/// Vectorized snapshot: one shared dense solve, per-sample domain flags;
/// out-of-domain samples carry NaN values and a false flag.
[[nodiscard]] RadialField sample_field(const FieldEvaluator& ev, double t,
                                       const std::vector<double>& rs);
[[nodiscard]] RadialField sample_field(const PhasePoint& p, double t,
                                       const std::vector<double>& rs,
                                       const Tolerances& tol = default_tolerances());

} // namespace cubicwave
