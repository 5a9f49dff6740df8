#pragma once
// ============================================================================
// quadrature.hpp : one-dimensional integration kernels
//
// Thin front-end over adaptive Gauss-Kronrod (smooth finite intervals),
// tanh-sinh (integrable endpoint singularities) and exp-sinh (semi-infinite
// ranges), plus a half-period panel scheme with series acceleration for
// sin-weighted oscillatory integrals on [a, inf).
// ============================================================================

#include <functional>

namespace cubicwave {

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod 7/15 on the finite interval [a, b].
[[nodiscard]] double integrate(const Integrand& f, double a, double b,
                               double tol = 1e-12);

/// tanh-sinh quadrature on [a, b]; tolerates integrable singularities at
/// either endpoint (the integrand is never evaluated exactly at a or b).
[[nodiscard]] double integrate_singular(const Integrand& f, double a, double b,
                                        double tol = 1e-12);

/// exp-sinh quadrature on [a, inf) for integrands decaying at infinity.
[[nodiscard]] double integrate_to_inf(const Integrand& f, double a,
                                      double tol = 1e-12);

/// Integral of f(r) * sin(rho * r) over [a, inf) for slowly decaying smooth f.
/// Sums half-period panels [a + k*pi/rho, a + (k+1)*pi/rho] and accelerates
/// the alternating partial sums by iterated averaging.
[[nodiscard]] double integrate_sin_weighted(const Integrand& f, double rho,
                                            double a, double tol = 1e-10,
                                            int max_panels = 4000);

} // namespace cubicwave
