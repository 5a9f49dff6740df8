#pragma once
// ============================================================================
// elliptic.hpp : Jacobi elliptic functions and complete elliptic integral
//
// Computed by the arithmetic-geometric mean (descending Landen) iteration:
// quadratically convergent, drift-free, valid for parameter m in [0, 1).
// ============================================================================

#include <array>
#include <cmath>
#include <stdexcept>

namespace cubicwave {

/// Triple (sn, cn, dn) at argument u, parameter m = k².
struct JacobiTriple {
    double sn;
    double cn;
    double dn;
};

/// Complete elliptic integral of the first kind K(m), parameter convention
/// K(m) = ∫₀^{π/2} dθ/√(1 − m sin²θ).  Requires m ∈ [0, 1).
[[nodiscard]] inline double elliptic_K(double m) {
    if (!(m >= 0.0 && m < 1.0)) {
        throw std::domain_error("elliptic_K: parameter m must lie in [0,1)");
    }
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    // AGM converges quadratically; the iteration cap guards against the
    // final ulp-sized gap never closing exactly.
    for (int i = 0; i < 64 && std::abs(a - b) > 4e-16 * a; ++i) {
        const double an = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = an;
    }
    return 1.5707963267948966192313216916397514 / a;
}

/// Jacobi elliptic functions via the AGM phase recursion.  Requires m ∈ [0,1).
[[nodiscard]] inline JacobiTriple jacobi_elliptic(double u, double m) {
    if (!(m >= 0.0 && m < 1.0)) {
        throw std::domain_error("jacobi_elliptic: parameter m must lie in [0,1)");
    }
    if (m < 1e-14) {
        return {std::sin(u), std::cos(u), 1.0};
    }
    // Descending AGM ladder.
    constexpr int kMax = 32;
    std::array<double, kMax> a_seq{}, c_seq{};
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    int n = 0;
    a_seq[0] = a;
    c_seq[0] = std::sqrt(m);
    while (c_seq[n] > 1e-17 * a && n + 1 < kMax) {
        ++n;
        const double an = 0.5 * (a + b);
        const double cn_ = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        a_seq[n] = a;
        c_seq[n] = cn_;
    }
    // Backward phase recursion.
    double phi = std::ldexp(1.0, n) * a_seq[n] * u;
    for (int i = n; i >= 1; --i) {
        phi = 0.5 * (phi + std::asin(std::clamp(
                               c_seq[i] * std::sin(phi) / a_seq[i], -1.0, 1.0)));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    const double dn = std::sqrt(std::max(0.0, 1.0 - m * sn * sn));
    return {sn, cn, dn};
}

/// Jacobi elliptic sine sn(u, m); |result| ≤ 1.
[[nodiscard]] inline double jacobi_sn(double u, double m) {
    return jacobi_elliptic(u, m).sn;
}

} // namespace cubicwave
