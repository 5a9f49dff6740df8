// ============================================================================
// quadrature.cpp : implementation of the integration kernels
// ============================================================================

#include "cubicwave/quadrature.hpp"
#include "cubicwave/constants.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace cubicwave {

double integrate(const Integrand& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 15, tol);
}

double integrate_singular(const Integrand& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, a, b, tol);
}

double integrate_to_inf(const Integrand& f, double a, double tol) {
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate(f, a, std::numeric_limits<double>::infinity(),
                                tol);
}

double integrate_sin_weighted(const Integrand& f, double rho, double a,
                              double tol, int max_panels) {
    const double period = kPi / rho;
    auto g = [&](double r) { return f(r) * std::sin(rho * r); };

    // Partial sums of the panel series; `table` holds the iterated-averaging
    // diagonal used to accelerate the (asymptotically alternating) series.
    std::vector<double> table;
    table.reserve(64);
    double partial = 0.0;
    double best = 0.0;
    double prev_best = std::numeric_limits<double>::quiet_NaN();

    for (int k = 0; k < max_panels; ++k) {
        const double lo = a + k * period;
        const double hi = lo + period;
        partial += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            g, lo, hi, 5, tol);
        table.push_back(partial);
        // Collapse the averaging table in place: T[j] <- (T[j] + T[j+1]) / 2.
        for (int j = static_cast<int>(table.size()) - 2; j >= 0; --j) {
            table[j] = 0.5 * (table[j] + table[j + 1]);
        }
        if (table.size() > 24) table.pop_back();
        best = table.front();
        if (k > 4 && std::abs(best - prev_best) <= tol * (1.0 + std::abs(best))) {
            break;
        }
        prev_best = best;
    }
    return best;
}

} // namespace cubicwave
