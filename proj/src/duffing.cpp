// ============================================================================
// duffing.cpp : dense-output adaptive integration of Ü + U = U³ and the
// closed-form reference families
// ============================================================================

#include "cubicwave/duffing.hpp"
#include "cubicwave/constants.hpp"
#include "cubicwave/elliptic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace cubicwave {
namespace {

using Vec2 = std::array<double, 2>;

inline Vec2 rhs(const Vec2& y) {
    return {y[1], y[0] * y[0] * y[0] - y[0]};
}

/// One dense-output step record.  The interpolant is valid on
/// [s0, valid_to] ⊆ [s0, s0+h]; truncation below s0+h happens only on the
/// final step of a side that crossed the blow-up cutoff.
struct Step {
    double s0 = 0.0;
    double h = 0.0;
    double valid_to = 0.0;
    std::array<Vec2, 5> cont{};
};

inline Vec2 eval_step(const Step& st, double s) {
    const double th = (s - st.s0) / st.h;
    const double th1 = 1.0 - th;
    Vec2 out{};
    for (int i = 0; i < 2; ++i) {
        out[i] = st.cont[0][i] +
                 th * (st.cont[1][i] +
                       th1 * (st.cont[2][i] +
                              th * (st.cont[3][i] + th1 * st.cont[4][i])));
    }
    return out;
}

// Dormand–Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

/// Attempt one step of size h from (s, y) with k1 = f(y) already known.
/// On success fills the dense record and returns the new state and k7 (FSAL).
struct StepResult {
    bool accepted = false;
    double err = 0.0;
    Vec2 y_new{};
    Vec2 k7{};
    Step record{};
};

StepResult try_step(double s, const Vec2& y, const Vec2& k1, double h,
                    double rtol, double atol) {
    Vec2 k2{}, k3{}, k4{}, k5{}, k6{}, k7{}, yt{};
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * a21 * k1[i];
    k2 = rhs(yt);
    for (int i = 0; i < 2; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = rhs(yt);
    for (int i = 0; i < 2; ++i)
        yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = rhs(yt);
    for (int i = 0; i < 2; ++i)
        yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = rhs(yt);
    for (int i = 0; i < 2; ++i)
        yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                            a64 * k4[i] + a65 * k5[i]);
    k6 = rhs(yt);
    Vec2 y_new{};
    for (int i = 0; i < 2; ++i)
        y_new[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                               b5 * k5[i] + b6 * k6[i]);
    k7 = rhs(y_new);

    double err_sq = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                               e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sk = atol + rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
        err_sq += (ei / sk) * (ei / sk);
    }
    StepResult res;
    res.err = std::sqrt(0.5 * err_sq);
    res.y_new = y_new;
    res.k7 = k7;
    if (res.err <= 1.0) {
        res.accepted = true;
        Step& st = res.record;
        st.s0 = s;
        st.h = h;
        st.valid_to = s + h;
        for (int i = 0; i < 2; ++i) {
            const double ydiff = y_new[i] - y[i];
            const double bspl = h * k1[i] - ydiff;
            st.cont[0][i] = y[i];
            st.cont[1][i] = ydiff;
            st.cont[2][i] = bspl;
            st.cont[3][i] = ydiff - h * k7[i] - bspl;
            st.cont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                                 d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
        }
    }
    return res;
}

[[noreturn]] void throw_underflow(double s) {
    std::ostringstream os;
    os << "duffing integration: step size underflow at s=" << s
       << " (stiffness beyond the blow-up cutoff)";
    throw std::runtime_error(os.str());
}

} // namespace

// ---------------------------------------------------------------------------
// One-sided dense cache
// ---------------------------------------------------------------------------

struct DuffingSolution::Side {
    // Internal forward system from (x0, y0); maps to external s = dir * sigma.
    double x0 = 0.0, y0 = 0.0;
    Tolerances tol;
    std::vector<Step> steps;
    double covered = 0.0;
    Vec2 y_end{};
    Vec2 k_end{};
    bool escaped = false;
    double sigma_escape = 0.0;
    int esc_sign = 0;
    double h_next = 1e-3;
    mutable std::shared_mutex mtx;

    Side(double x, double y, const Tolerances& t) : x0(x), y0(y), tol(t) {
        y_end = {x0, y0};
        k_end = rhs(y_end);
    }

    // Requires exclusive lock held.
    void grow_locked(double sigma_target) {
        const double rtol = tol.ode_tol;
        const double atol = tol.ode_tol;
        const double cutoff = tol.blowup_cutoff;
        while (covered < sigma_target && !escaped) {
            double h = h_next;
            StepResult res;
            for (;;) {
                if (h < 1e-14 * std::max(1.0, covered)) throw_underflow(covered);
                res = try_step(covered, y_end, k_end, h, rtol, atol);
                if (res.accepted) break;
                h *= std::max(0.2, 0.9 * std::pow(res.err, -0.2));
            }
            double fac = 0.9 * std::pow(std::max(res.err, 1e-10), -0.2);
            h_next = h * std::min(5.0, std::max(0.2, fac));

            Step st = res.record;
            if (std::abs(res.y_new[0]) >= cutoff) {
                // Bisect the dense interpolant for the first cutoff crossing.
                double lo = 0.0, hi = 1.0;
                for (int it = 0; it < 80 && (hi - lo) > 1e-15; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const Vec2 ym = eval_step(st, st.s0 + mid * st.h);
                    (std::abs(ym[0]) >= cutoff ? hi : lo) = mid;
                }
                st.valid_to = st.s0 + hi * st.h;
                escaped = true;
                sigma_escape = st.valid_to;
                esc_sign = res.y_new[0] > 0 ? +1 : -1;
                steps.push_back(st);
                covered = st.valid_to;
                break;
            }
            steps.push_back(st);
            covered = st.s0 + st.h;
            y_end = res.y_new;
            k_end = res.k7;
        }
    }

    void ensure(double sigma) {
        {
            std::shared_lock lk(mtx);
            if (sigma <= covered || escaped) return;
        }
        std::unique_lock lk(mtx);
        grow_locked(sigma);
    }

    // Dense evaluation; caller must have called ensure(sigma) first.
    Vec2 eval(double sigma) const {
        std::shared_lock lk(mtx);
        if (sigma <= 0.0 || steps.empty()) return {x0, y0};
        if (escaped && sigma > sigma_escape) {
            // Between the cutoff crossing and the refined blow-up time the
            // solution is pure asymptote U ≈ ±√2/(T−σ) to machine accuracy
            // (relative corrections are O((T−σ)²)); continue with it so the
            // solution is defined on the whole open lifespan interval.
            const double T_refined = sigma_escape + kSqrt2 / tol.blowup_cutoff;
            const double tau = T_refined - sigma;
            if (tau > 0.0) {
                const double u = esc_sign * kSqrt2 / tau;
                return {u, esc_sign * kSqrt2 / (tau * tau)};
            }
            std::ostringstream os;
            os << "duffing state query at s-magnitude " << sigma
               << " beyond blow-up at " << T_refined;
            throw std::domain_error(os.str());
        }
        // Last step with s0 <= sigma.
        auto it = std::upper_bound(
            steps.begin(), steps.end(), sigma,
            [](double v, const Step& st) { return v < st.s0; });
        if (it != steps.begin()) --it;
        const double s_clamped = std::min(sigma, it->valid_to);
        return eval_step(*it, s_clamped);
    }
};

DuffingSolution::DuffingSolution(PhasePoint p, const Tolerances& tol)
    : origin_(p), energy_(cubicwave::energy(p)), tol_(tol),
      fwd_(std::make_shared<Side>(p.X, p.Y, tol)),
      bwd_(std::make_shared<Side>(p.X, -p.Y, tol)) {}

OdeState DuffingSolution::state_at(double s) const {
    if (s >= 0.0) {
        fwd_->ensure(s);
        const Vec2 y = fwd_->eval(s);
        return {s, y[0], y[1]};
    }
    bwd_->ensure(-s);
    const Vec2 y = bwd_->eval(-s);
    return {s, y[0], -y[1]};
}

void DuffingSolution::prepare(double s_lo, double s_hi) const {
    if (s_hi > 0.0) fwd_->ensure(s_hi);
    if (s_lo < 0.0) bwd_->ensure(-s_lo);
}

std::optional<double> DuffingSolution::escape_time(int direction,
                                                   double s_limit) const {
    Side& side = direction >= 0 ? *fwd_ : *bwd_;
    side.ensure(std::abs(s_limit));
    std::shared_lock lk(side.mtx);
    if (side.escaped && side.sigma_escape <= std::abs(s_limit)) {
        return (direction >= 0 ? 1.0 : -1.0) * side.sigma_escape;
    }
    return std::nullopt;
}

int DuffingSolution::escape_sign(int direction) const {
    Side& side = direction >= 0 ? *fwd_ : *bwd_;
    std::shared_lock lk(side.mtx);
    return side.escaped ? side.esc_sign : 0;
}

// ---------------------------------------------------------------------------
// Free-standing accepted-step integration
// ---------------------------------------------------------------------------

OdeTrajectory integrate(const PhasePoint& p, double s_end, const Tolerances& tol) {
    OdeTrajectory traj;
    traj.origin = p;
    const double dir = s_end >= 0.0 ? 1.0 : -1.0;
    const double span = std::abs(s_end);
    // Integrate the (possibly reflected) forward system; record as external s.
    Vec2 y{p.X, dir * p.Y};
    Vec2 k1 = rhs(y);
    double sigma = 0.0;
    double h = std::min(1e-3, span > 0 ? span : 1e-3);
    traj.states.push_back({0.0, p.X, p.Y});
    const double rtol = tol.ode_tol, atol = tol.ode_tol;
    while (sigma < span) {
        h = std::min(h, span - sigma);
        StepResult res;
        for (;;) {
            if (h < 1e-14 * std::max(1.0, sigma)) throw_underflow(sigma);
            res = try_step(sigma, y, k1, h, rtol, atol);
            if (res.accepted) break;
            h *= std::max(0.2, 0.9 * std::pow(res.err, -0.2));
        }
        const Step& st = res.record;
        if (std::abs(res.y_new[0]) >= tol.blowup_cutoff) {
            double lo = 0.0, hi = 1.0;
            for (int it = 0; it < 80 && (hi - lo) > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                const Vec2 ym = eval_step(st, st.s0 + mid * st.h);
                (std::abs(ym[0]) >= tol.blowup_cutoff ? hi : lo) = mid;
            }
            const double sc = st.s0 + hi * st.h;
            const Vec2 yc = eval_step(st, sc);
            traj.states.push_back({dir * sc, yc[0], dir * yc[1]});
            traj.truncated_at_blowup = true;
            traj.blowup_side = yc[0] > 0 ? +1 : -1;
            return traj;
        }
        sigma += h;
        y = res.y_new;
        k1 = res.k7;
        traj.states.push_back({dir * sigma, y[0], dir * y[1]});
        h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(res.err, 1e-10), -0.2)));
    }
    return traj;
}

// ---------------------------------------------------------------------------
// Closed-form families
// ---------------------------------------------------------------------------

namespace {

double equarter_value(double X, int branch, double s) {
    if (X < 0.0) return -equarter_value(-X, -branch, s);
    if (X == 1.0) return 1.0;
    const double c = s / kSqrt2;
    if (X < 1.0) return std::tanh(branch > 0 ? c + std::atanh(X)
                                             : -c + std::atanh(X));
    const double a = std::atanh(1.0 / X);
    return branch > 0 ? 1.0 / std::tanh(a - c) : 1.0 / std::tanh(a + c);
}

double ezero_value(double X, int branch, double s) {
    if (X < 0.0) return -ezero_value(-X, -branch, s);
    const double phi = std::asin(kSqrt2 / X);
    return branch > 0 ? kSqrt2 / std::sin(phi - s) : kSqrt2 / std::sin(phi + s);
}

void check_elliptic_params(double A) {
    if (!(std::abs(A) < 0.5)) {
        throw std::domain_error(
            "explicit_solution: EllipticSn requires |A| < 1/2 (elliptic "
            "parameter m = 2A²/(1−2A²) must stay below 1)");
    }
}

} // namespace

double explicit_solution(ExplicitKind kind, const ExplicitParams& prm, double s) {
    switch (kind) {
    case ExplicitKind::EQuarter:
        if (std::abs(std::abs(prm.X) - 1.0) < 1e-300) return prm.X;
        return equarter_value(prm.X, prm.branch, s);
    case ExplicitKind::EZero:
        if (!(std::abs(prm.X) >= kSqrt2)) {
            throw std::domain_error(
                "explicit_solution: EZero requires |X| ≥ √2");
        }
        return ezero_value(prm.X, prm.branch, s);
    case ExplicitKind::EllipticSn: {
        check_elliptic_params(prm.A);
        const double A2 = prm.A * prm.A;
        const double omega = std::sqrt(1.0 - 2.0 * A2);
        const double m = 2.0 * A2 / (1.0 - 2.0 * A2);
        return 2.0 * prm.A * jacobi_sn(omega * s + prm.theta, m);
    }
    case ExplicitKind::Constant:
        if (std::abs(prm.X) > 1e-12 && std::abs(std::abs(prm.X) - 1.0) > 1e-12) {
            throw std::domain_error(
                "explicit_solution: Constant requires X ∈ {0, ±1}");
        }
        return prm.X;
    }
    throw std::logic_error("explicit_solution: unknown kind");
}

PhasePoint explicit_initial_point(ExplicitKind kind, const ExplicitParams& prm) {
    switch (kind) {
    case ExplicitKind::EQuarter:
        return {prm.X,
                prm.branch * std::abs(prm.X * prm.X - 1.0) / kSqrt2};
    case ExplicitKind::EZero: {
        if (!(std::abs(prm.X) >= kSqrt2)) {
            throw std::domain_error(
                "explicit_initial_point: EZero requires |X| ≥ √2");
        }
        const double X2 = prm.X * prm.X;
        return {prm.X, prm.branch * std::sqrt(std::max(0.0, 0.5 * X2 * X2 - X2))};
    }
    case ExplicitKind::EllipticSn: {
        check_elliptic_params(prm.A);
        const double A2 = prm.A * prm.A;
        const double omega = std::sqrt(1.0 - 2.0 * A2);
        const double m = 2.0 * A2 / (1.0 - 2.0 * A2);
        const JacobiTriple j = jacobi_elliptic(prm.theta, m);
        return {2.0 * prm.A * j.sn, 2.0 * prm.A * omega * j.cn * j.dn};
    }
    case ExplicitKind::Constant:
        return {prm.X, 0.0};
    }
    throw std::logic_error("explicit_initial_point: unknown kind");
}

double ezero_blowup_time(double X) {
    if (!(std::abs(X) >= kSqrt2)) {
        throw std::domain_error("ezero_blowup_time: requires |X| ≥ √2");
    }
    return std::asin(kSqrt2 / std::abs(X));
}

std::pair<double, double> blowup_asymptote(double T_plus, double s, int sign) {
    const double tau = T_plus - s;
    const double sg = sign >= 0 ? 1.0 : -1.0;
    return {sg * kSqrt2 / tau, sg * kSqrt2 / (tau * tau)};
}

double max_energy_drift(const OdeTrajectory& traj, double u_cap) {
    const double e0 = energy(traj.origin);
    double worst = 0.0;
    for (const OdeState& st : traj.states) {
        if (std::abs(st.U) > u_cap) continue;
        worst = std::max(worst, std::abs(energy(st.U, st.Udot) - e0));
    }
    return worst;
}

} // namespace cubicwave
