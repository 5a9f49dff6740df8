#pragma once
// ============================================================================
// interp.hpp : natural cubic spline on a strictly increasing knot set
// ============================================================================

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubicwave {

/// Natural cubic spline interpolant; linear extrapolation outside the knots.
class CubicSpline {
public:
    CubicSpline() = default;

    CubicSpline(std::vector<double> xs, std::vector<double> ys)
        : x_(std::move(xs)), y_(std::move(ys)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n)
            throw std::invalid_argument("CubicSpline: need >= 2 matching knots");
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!(x_[i] < x_[i + 1]))
                throw std::invalid_argument("CubicSpline: knots must increase");
        // Second derivatives m_i from the natural-spline tridiagonal system
        // (Thomas algorithm).
        m_.assign(n, 0.0);
        if (n > 2) {
            std::vector<double> diag(n - 2), rhs(n - 2), upper(n - 2);
            for (std::size_t i = 1; i + 1 < n; ++i) {
                const double h0 = x_[i] - x_[i - 1];
                const double h1 = x_[i + 1] - x_[i];
                diag[i - 1] = 2.0 * (h0 + h1);
                upper[i - 1] = h1;
                rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h1 -
                                    (y_[i] - y_[i - 1]) / h0);
            }
            for (std::size_t i = 1; i < n - 2; ++i) {
                const double lower = x_[i + 1] - x_[i]; // == upper[i-1]
                const double w = lower / diag[i - 1];
                diag[i] -= w * upper[i - 1];
                rhs[i] -= w * rhs[i - 1];
            }
            for (std::size_t i = n - 2; i-- > 0;) {
                const double num =
                    rhs[i] - (i + 1 < n - 2 ? upper[i] * m_[i + 2] : 0.0);
                m_[i + 1] = num / diag[i];
            }
        }
    }

    [[nodiscard]] double operator()(double x) const {
        if (x < x_.front() || x > x_.back()) {
            // Linear extrapolation with the boundary slope.
            const double xb = x < x_.front() ? x_.front() : x_.back();
            return value_clamped(xb) + derivative_clamped(xb) * (x - xb);
        }
        return value_clamped(x);
    }

    [[nodiscard]] double derivative(double x) const {
        if (x < x_.front()) return derivative_clamped(x_.front());
        if (x > x_.back()) return derivative_clamped(x_.back());
        return derivative_clamped(x);
    }

    /// Exact integral of the piecewise cubic over [a, b] ⊆ knot range
    /// (arguments are clamped to the knot range).
    [[nodiscard]] double integral(double a, double b) const {
        double sign = 1.0;
        if (a > b) {
            std::swap(a, b);
            sign = -1.0;
        }
        a = std::clamp(a, x_.front(), x_.back());
        b = std::clamp(b, x_.front(), x_.back());
        if (a >= b) return 0.0;
        double total = 0.0;
        for (std::size_t i = segment(a); i < x_.size() - 1 && x_[i] < b; ++i) {
            const double lo = std::max(a, x_[i]);
            const double hi = std::min(b, x_[i + 1]);
            if (lo < hi) total += segment_integral(i, lo, hi);
        }
        return sign * total;
    }

    [[nodiscard]] const std::vector<double>& knots() const { return x_; }
    [[nodiscard]] const std::vector<double>& values() const { return y_; }

private:
    [[nodiscard]] std::size_t segment(double x) const {
        if (x <= x_.front()) return 0;
        if (x >= x_.back()) return x_.size() - 2;
        const auto it = std::upper_bound(x_.begin(), x_.end(), x);
        return static_cast<std::size_t>(it - x_.begin()) - 1;
    }

    [[nodiscard]] double value_clamped(double x) const {
        const std::size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - x) / h;
        const double b = (x - x_[i]) / h;
        return a * y_[i] + b * y_[i + 1] +
               ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) *
                   (h * h) / 6.0;
    }

    [[nodiscard]] double derivative_clamped(double x) const {
        const std::size_t i = segment(x);
        const double h = x_[i + 1] - x_[i];
        const double a = (x_[i + 1] - x) / h;
        const double b = (x - x_[i]) / h;
        return (y_[i + 1] - y_[i]) / h +
               ((3.0 * b * b - 1.0) * m_[i + 1] - (3.0 * a * a - 1.0) * m_[i]) *
                   h / 6.0;
    }

    [[nodiscard]] double segment_integral(std::size_t i, double lo,
                                          double hi) const {
        const double h = x_[i + 1] - x_[i];
        auto anti = [&](double x) {
            const double a = (x_[i + 1] - x) / h;
            const double b = (x - x_[i]) / h;
            // ∫ a y0 + b y1 + ((a³−a) m0 + (b³−b) m1) h²/6 dx, with
            // da/dx = −1/h, db/dx = 1/h.
            const double base = -0.5 * h * a * a * y_[i] + 0.5 * h * b * b * y_[i + 1];
            const double cub = (-(a * a * a * a / 4.0 - a * a / 2.0) * m_[i] +
                                (b * b * b * b / 4.0 - b * b / 2.0) * m_[i + 1]) *
                               (h * h * h) / 6.0;
            return base + cub;
        };
        return anti(hi) - anti(lo);
    }

    std::vector<double> x_, y_, m_;
};

} // namespace cubicwave
