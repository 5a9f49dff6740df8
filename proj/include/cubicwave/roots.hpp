#pragma once
// ============================================================================
// roots.hpp : bracketed scalar root solving (thin wrapper over TOMS 748)
// ============================================================================

#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace cubicwave {

/// Solve f(x) = 0 on [a, b] given f(a) and f(b) of opposite sign.
/// Terminates once the bracket width falls below `xtol` (absolute) scaled
/// against the magnitude of the iterate.  Throws std::invalid_argument when
/// the initial bracket does not straddle a sign change.
template <class F>
[[nodiscard]] double solve_bracketed(F&& f, double a, double b, double xtol = 1e-12) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        throw std::invalid_argument("solve_bracketed: endpoints do not bracket a root");
    }
    auto stop = [xtol](double lo, double hi) {
        return std::abs(hi - lo) <= xtol * (1.0 + std::min(std::abs(lo), std::abs(hi)));
    };
    std::uintmax_t max_iter = 200;
    auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, max_iter);
    return 0.5 * (r.first + r.second);
}

/// Expand a trial bracket [a, b] geometrically to the right until f changes
/// sign, then hand off to solve_bracketed.  Used for landmarks whose location
/// is known only roughly (e.g. energy landmarks on an unbounded axis).
template <class F>
[[nodiscard]] double solve_expanding(F&& f, double a, double b, double xtol = 1e-12,
                                     int max_doublings = 60) {
    double fa = f(a);
    if (fa == 0.0) return a;
    double fb = f(b);
    int k = 0;
    while ((fa > 0.0) == (fb > 0.0)) {
        if (++k > max_doublings) {
            throw std::runtime_error("solve_expanding: no sign change found");
        }
        const double w = b - a;
        a = b;
        fa = fb;
        b += 2.0 * w;
        fb = f(b);
    }
    if (fb == 0.0) return b;
    auto stop = [xtol](double lo, double hi) {
        return std::abs(hi - lo) <= xtol * (1.0 + std::min(std::abs(lo), std::abs(hi)));
    };
    std::uintmax_t max_iter = 200;
    auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, stop, max_iter);
    return 0.5 * (r.first + r.second);
}

} // namespace cubicwave
