// ============================================================================
// threshold.cpp : critical-curve root solving and phase-plane classification
// ============================================================================

#include "cubicwave/threshold.hpp"
#include "cubicwave/constants.hpp"
#include "cubicwave/lifespan.hpp"
#include "cubicwave/roots.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cubicwave {
namespace {

/// Velocity at which the energy reaches the separatrix level 1/4 for a
/// given X; quad_R changes character (and quad_S diverges) across it.
inline double separatrix_speed(double X) {
    return std::abs(X * X - 1.0) / kSqrt2;
}

} // namespace

const char* to_string(Behavior b) {
    switch (b) {
    case Behavior::Blowup: return "blowup";
    case Behavior::Scattering: return "scattering";
    case Behavior::Threshold: return "threshold";
    }
    return "?";
}

double beta(double X, const Tolerances& tol) {
    const double xc = x_critical(tol);
    if (X <= xc) {
        // Nonnegative branch: R(X, ·) is strictly decreasing in Y, diverging
        // at the lower bracket edge (the separatrix energy level for
        // |X| ≤ 1 / X ≤ −1, the zero-velocity boundary for X ∈ (1, X_C]).
        const double ymin = (X > 1.0) ? 0.0 : separatrix_speed(X);
        auto f = [X, &tol](double Y) { return quad_R({X, Y}, tol) - kPi; };
        // Directly at the divergent edge the energy may round onto the
        // separatrix level (E == 1/4 exactly), where the integral is +inf;
        // walk the edge up until the integrand is finite so the root solver
        // only ever sees finite bracket values.  The walk stays far below
        // the root: the curve clears the edge by ~0.07 or more everywhere.
        double lo = ymin + (X > 1.0 ? 0.0 : 1e-12);
        if (X <= 1.0) {
            for (double delta = 1e-12; !std::isfinite(f(lo)); delta *= 10.0) {
                if (delta > 1e-3) {
                    throw std::runtime_error(
                        "beta: no finite bracket edge above the separatrix");
                }
                lo = ymin + delta;
            }
        }
        const double hi = std::max({4.0, X * X, ymin + 2.0});
        return solve_expanding(f, lo, hi, tol.root_tol);
    }
    // Negative branch: S(X, ·) increases from boundary_tplus(X) < π at
    // Y → 0⁻ to +∞ at the separatrix speed, so the root is interior.
    const double ycrit = separatrix_speed(X);
    auto f = [X, &tol](double Y) { return quad_S({X, Y}, tol) - kPi; };
    return solve_bracketed(f, -ycrit * (1.0 - 1e-9), -1e-9, tol.root_tol);
}

Behavior classify_forward(const PhasePoint& p, const Tolerances& tol) {
    const double upper = beta(p.X, tol);
    const double lower = -beta(-p.X, tol);
    if (std::abs(p.Y - upper) <= tol.threshold_band ||
        std::abs(p.Y - lower) <= tol.threshold_band) {
        return Behavior::Threshold;
    }
    if (p.Y > upper || p.Y < lower) return Behavior::Blowup;
    return Behavior::Scattering;
}

Classification classify_bidirectional(const PhasePoint& p, const Tolerances& tol) {
    return {classify_forward(p, tol), classify_forward({p.X, -p.Y}, tol)};
}

std::array<PhasePoint, 4> special_points(const Tolerances& tol) {
    const double xc = x_critical(tol);
    const double b0 = beta(0.0, tol);
    return {PhasePoint{xc, 0.0}, PhasePoint{-xc, 0.0},
            PhasePoint{0.0, b0}, PhasePoint{0.0, -b0}};
}

ThresholdCurve beta_curve(double x_min, double x_max, int n, const Tolerances& tol) {
    if (n < 2 || !(x_min < x_max)) {
        throw std::invalid_argument("beta_curve: need n ≥ 2 and x_min < x_max");
    }
    ThresholdCurve curve;
    curve.x_c = x_critical(tol);
    curve.xs.reserve(n);
    curve.betas.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double x = x_min + (x_max - x_min) * i / (n - 1);
        curve.xs.push_back(x);
        curve.betas.push_back(beta(x, tol));
    }
    for (int i = 1; i < n; ++i) {
        if (!(curve.betas[i] < curve.betas[i - 1])) {
            std::ostringstream os;
            os << "beta_curve: sampled values not strictly decreasing near x="
               << curve.xs[i];
            throw std::runtime_error(os.str());
        }
    }
    return curve;
}

PhaseDiagram phase_diagram(double x_min, double x_max, int nx, double y_min,
                           double y_max, int ny, const Tolerances& tol) {
    if (nx < 1 || ny < 1) {
        throw std::invalid_argument("phase_diagram: need nx, ny ≥ 1");
    }
    PhaseDiagram d;
    d.xs.resize(nx);
    d.ys.resize(ny);
    for (int i = 0; i < nx; ++i) {
        d.xs[i] = nx == 1 ? x_min : x_min + (x_max - x_min) * i / (nx - 1);
    }
    for (int j = 0; j < ny; ++j) {
        d.ys[j] = ny == 1 ? y_min : y_min + (y_max - y_min) * j / (ny - 1);
    }
    d.cells.resize(static_cast<std::size_t>(nx) * ny);
    for (int i = 0; i < nx; ++i) {
        // One β solve per distinct X value; classification at (X, Y) only
        // ever compares against β(X) and β(−X).
        const double up = beta(d.xs[i], tol);
        const double low = -beta(-d.xs[i], tol);
        auto label = [&](double y) {
            if (std::abs(y - up) <= tol.threshold_band ||
                std::abs(y - low) <= tol.threshold_band) {
                return Behavior::Threshold;
            }
            if (y > up || y < low) return Behavior::Blowup;
            return Behavior::Scattering;
        };
        for (int j = 0; j < ny; ++j) {
            d.cells[static_cast<std::size_t>(i) * ny + j] = {
                label(d.ys[j]), label(-d.ys[j])};
        }
    }
    return d;
}

} // namespace cubicwave
