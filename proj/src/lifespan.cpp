// ============================================================================
// lifespan.cpp : singular quadrature of the lifespan integrals
// ============================================================================

#include "cubicwave/lifespan.hpp"
#include "cubicwave/constants.hpp"
#include "cubicwave/quadrature.hpp"
#include "cubicwave/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cubicwave {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Half-width of the energy band around 1/4 treated via the exact closed
/// forms; quadrature accuracy degrades logarithmically as E → 1/4.
constexpr double kQuarterBand = 1e-13;

inline double poly_P(double E, double v) {
    return 2.0 * E - v * v + 0.5 * v * v * v * v;
}

/// ∫_L^∞ dv/√P for configurations where P > 0 on (L, ∞).  A vanishing P(L)
/// (simple root at the lower limit) is absorbed by the substitution
/// v = L + w²; the v → ∞ tail uses v = 1/w, which is regular at w = 0.
double improper_time_integral(double E, double L, const Tolerances& tol) {
    const double T = std::max({tol.tail_cut, L + 1.0, 1.5});
    const double qt = tol.quad_tol;

    // Interior knots keep adaptive panels away from the near-separatrix peak
    // at v ≈ ±1 (sharp when E ≈ 1/4) and from sign-change regions.
    std::vector<double> knots;
    knots.push_back(L);
    for (double k : {-1.0, 0.0, 1.0, 2.0}) {
        if (k > L && k < T) knots.push_back(k);
    }
    knots.push_back(T);

    double total = 0.0;
    // First panel via the singularity-absorbing substitution.
    {
        const double hi = std::sqrt(knots[1] - L);
        total += integrate(
            [E, L](double w) {
                const double v = L + w * w;
                return 2.0 * w / std::sqrt(poly_P(E, v));
            },
            0.0, hi, qt);
    }
    for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
        total += integrate(
            [E](double v) { return 1.0 / std::sqrt(poly_P(E, v)); },
            knots[i], knots[i + 1], qt);
    }
    // Tail: v = 1/w maps [T, ∞) to (0, 1/T] with a regular integrand.
    total += integrate(
        [E](double w) {
            const double w2 = w * w;
            return kSqrt2 / std::sqrt(4.0 * E * w2 * w2 - 2.0 * w2 + 1.0);
        },
        0.0, 1.0 / T, qt);
    return total;
}

inline double lower_limit_R(const PhasePoint& p) {
    if (p.Y > 0.0) return p.X;
    if (p.Y < 0.0) return -p.X;
    return std::abs(p.X);
}

bool tolerances_are_default(const Tolerances& t) {
    const Tolerances& d = default_tolerances();
    return t.ode_tol == d.ode_tol && t.quad_tol == d.quad_tol &&
           t.root_tol == d.root_tol && t.threshold_band == d.threshold_band &&
           t.blowup_cutoff == d.blowup_cutoff && t.tail_cut == d.tail_cut;
}

} // namespace

double quad_R(const PhasePoint& p, const Tolerances& tol) {
    const double E = energy(p);
    const double L = lower_limit_R(p);
    if (E <= kQuarter + kQuarterBand) {
        if (E >= kQuarter - kQuarterBand) {
            // Degenerate double root of P at v = 1: logarithmic divergence
            // unless the path starts strictly outside it.
            if (L <= 1.0 + 1e-9) return kInf;
        } else {
            const double lambda = std::sqrt(1.0 - 4.0 * E);
            const double v2 = std::sqrt(1.0 + lambda);
            // Below the outer turning point the monotone-escape integral
            // does not exist (the trajectory turns or P < 0 on the path).
            if (L < v2 - 1e-12 * (1.0 + std::abs(v2))) return kInf;
        }
    }
    return improper_time_integral(E, L, tol);
}

double quad_S(const PhasePoint& p, const Tolerances& tol) {
    const double E = energy(p);
    const double aX = std::abs(p.X);
    if (!(E < kQuarter - kQuarterBand) || !(aX > 1.0)) return kInf;
    const double lambda = std::sqrt(1.0 - 4.0 * E);
    const double mu = std::sqrt(1.0 + lambda);  // outer root v₂
    // E ≥ V(X) by construction, so μ ≤ |X| mathematically; when Y ≈ 0 the
    // cancellation in 1 − 4E can push the computed μ a few ulp past |X|.
    // Only a genuinely inconsistent point (inside the turning radius) is
    // rejected; the ulp overshoot just zeroes the inward leg below.
    if (mu - aX > 1e-12 * mu) return kInf;
    const double qt = tol.quad_tol;

    // Branch kernel in z = √w:  g(z) = 2√2/√((z²+2μ)(z⁴+2μz²+2λ)).
    auto g = [mu, lambda](double z) {
        const double z2 = z * z;
        return 2.0 * kSqrt2 /
               std::sqrt((z2 + 2.0 * mu) *
                         (z2 * z2 + 2.0 * mu * z2 + 2.0 * lambda));
    };

    // Inward branch: w from 0 to |X| − μ (clamped against ulp overshoot).
    const double inward =
        integrate(g, 0.0, std::sqrt(std::max(0.0, aX - mu)), qt);

    // Outward branch to infinity: z on [0, z_T], then tail via y = 1/z.
    const double zT = std::sqrt(std::max(tol.tail_cut, 4.0 * mu));
    const double outward_head = integrate(g, 0.0, zT, qt);
    const double outward_tail = integrate(
        [mu, lambda](double y) {
            const double y2 = y * y;
            const double a = 1.0 + 2.0 * mu * y2;
            return 2.0 * kSqrt2 * y / std::sqrt(a * (a + 2.0 * lambda * y2 * y2));
        },
        0.0, 1.0 / zT, qt);
    return inward + outward_head + outward_tail;
}

double t_plus(const PhasePoint& p, const Tolerances& tol) {
    const double E = energy(p);
    const double aX = std::abs(p.X);
    if (std::abs(E - kQuarter) <= kQuarterBand) {
        if (aX <= 1.0) return kInf;
        if (p.X * p.Y > 0.0) return kSqrt2 * std::atanh(1.0 / aX);
        return kInf;
    }
    if (E > kQuarter) return quad_R(p, tol);
    if (aX <= 1.0) return kInf;
    if (p.X * p.Y >= 0.0) return quad_R(p, tol);
    return quad_S(p, tol);
}

double t_minus(const PhasePoint& p, const Tolerances& tol) {
    return -t_plus({p.X, -p.Y}, tol);
}

double total_lifespan_by_energy(double E, const Tolerances& tol) {
    if (std::abs(E - kQuarter) <= kQuarterBand) return kInf;
    if (E > kQuarter) return 2.0 * improper_time_integral(E, 0.0, tol);
    const double lambda = std::sqrt(1.0 - 4.0 * E);
    const double v2 = std::sqrt(1.0 + lambda);
    return 2.0 * improper_time_integral(E, v2, tol);
}

double boundary_tplus(double X, const Tolerances& tol) {
    const double aX = std::abs(X);
    if (aX <= 1.0) return kInf;
    const double X2 = aX * aX;
    return kSqrt2 * integrate_to_inf(
                        [X2](double w) {
                            const double c = std::cosh(w);
                            return 1.0 / std::sqrt(X2 * (c * c + 1.0) - 2.0);
                        },
                        0.0, tol.quad_tol);
}

double e_infinity(const Tolerances& tol) {
    auto compute = [&tol]() {
        auto f = [&tol](double E) {
            return total_lifespan_by_energy(E, tol) - kPi;
        };
        return solve_expanding(f, 0.26, 4.0, tol.root_tol);
    };
    if (tolerances_are_default(tol)) {
        static const double cached = compute();
        return cached;
    }
    return compute();
}

double x_critical(const Tolerances& tol) {
    auto compute = [&tol]() {
        auto f = [&tol](double X) { return boundary_tplus(X, tol) - kPi; };
        return solve_bracketed(f, 1.0 + 1e-8, kSqrt2 - 1e-12, tol.root_tol);
    };
    if (tolerances_are_default(tol)) {
        static const double cached = compute();
        return cached;
    }
    return compute();
}

Lifespan compute_lifespan(const PhasePoint& p, const Tolerances& tol) {
    Lifespan l;
    l.t_plus = t_plus(p, tol);
    l.t_minus = t_minus(p, tol);
    l.finite_plus = std::isfinite(l.t_plus);
    l.finite_minus = std::isfinite(l.t_minus);
    return l;
}

} // namespace cubicwave
