#include "cubicwave/penrose.hpp"

#include "cubicwave/constants.hpp"
#include "cubicwave/lifespan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cubicwave {

namespace {

constexpr double kDomainGuard = 1e-9; // stay this far inside (T₋, T₊) in s

// Stable arctan(a) + arctan(b).  When a and b are both large of one sign the
// direct sum evaluates π − small as a difference of two numbers near π/2 and
// loses the small part; fold each arctan through π/2 − arctan(1/·) instead so
// the distance of s to ±π is computed from small quantities.
double arctan_pair(double a, double b) {
    if (a > 1.0 && b > 1.0) return kPi - (std::atan(1.0 / a) + std::atan(1.0 / b));
    if (a < -1.0 && b < -1.0) return -kPi - (std::atan(1.0 / a) + std::atan(1.0 / b));
    return std::atan(a) + std::atan(b);
}

} // namespace

ConformalFactors conformal_factors(double t, double r) {
    const double a = t + r;
    const double b = t - r;
    const double qa = 1.0 + a * a;
    const double qb = 1.0 + b * b;

    ConformalFactors cf;
    cf.s = arctan_pair(a, b);
    cf.omega = 2.0 / std::sqrt(qa * qb);
    cf.ds_dt = 1.0 / qa + 1.0 / qb;
    cf.ds_dr = 1.0 / qa - 1.0 / qb;
    // dΩ/dt = −Ω (a/(1+a²) + b/(1+b²)), dΩ/dr = −Ω (a/(1+a²) − b/(1+b²)).
    cf.domega_dt = -cf.omega * (a / qa + b / qb);
    cf.domega_dr = -cf.omega * (a / qa - b / qb);
    return cf;
}

double influence_bound(double T, double r, int side) {
    if (side != 1 && side != -1)
        throw std::invalid_argument("influence_bound: side must be +1 or -1");
    const double inf = std::numeric_limits<double>::infinity();
    if (T >= kPi) return side == 1 ? inf : -inf;   // bound degenerates
    if (T <= -kPi) return side == 1 ? inf : -inf;  // (domain covers all t of that sign)
    if (T == 0.0)
        throw std::invalid_argument("influence_bound: T must be nonzero");
    const double c = std::cos(T) / std::sin(T);
    const double root = std::sqrt(1.0 + r * r + c * c);
    return -c + (side == 1 ? root : -root);
}

double physical_blowup_time_from(double T_plus) {
    if (!(T_plus < kPi)) return std::numeric_limits<double>::infinity();
    return std::tan(0.5 * T_plus);
}

FieldEvaluator::FieldEvaluator(PhasePoint p, const Tolerances& tol)
    : p_(p), tol_(tol), sol_(p, tol) {
    const Lifespan life = compute_lifespan(p, tol);
    T_plus_ = life.t_plus;
    T_minus_ = life.t_minus;
}

double FieldEvaluator::physical_blowup_time() const {
    return physical_blowup_time_from(T_plus_);
}

bool FieldEvaluator::in_domain(double t, double r) const {
    const double s = arctan_pair(t + r, t - r);
    return s > T_minus_ + kDomainGuard && s < T_plus_ - kDomainGuard;
}

OdeState FieldEvaluator::profile_at(double t, double r) const {
    const double s = arctan_pair(t + r, t - r);
    if (!(s > T_minus_ + kDomainGuard && s < T_plus_ - kDomainGuard)) {
        std::ostringstream msg;
        msg << "field query (t=" << t << ", r=" << r
            << ") outside influence domain: s=" << s << " not in ("
            << T_minus_ << ", " << T_plus_ << "); domain bounds at this r: ["
            << influence_bound(T_minus_, r, -1) << ", "
            << influence_bound(T_plus_, r, +1) << "]";
        throw std::domain_error(msg.str());
    }
    return sol_.state_at(s);
}

double FieldEvaluator::value(double t, double r) const {
    const ConformalFactors cf = conformal_factors(t, r);
    const OdeState st = profile_at(t, r);
    return cf.omega * st.U;
}

double FieldEvaluator::deriv_t(double t, double r) const {
    const ConformalFactors cf = conformal_factors(t, r);
    const OdeState st = profile_at(t, r);
    return cf.domega_dt * st.U + cf.omega * cf.ds_dt * st.Udot;
}

double FieldEvaluator::deriv_r(double t, double r) const {
    const ConformalFactors cf = conformal_factors(t, r);
    const OdeState st = profile_at(t, r);
    return cf.domega_dr * st.U + cf.omega * cf.ds_dr * st.Udot;
}

void FieldEvaluator::prepare_time(double t) const {
    // s(t, ·) is monotone in r with limits s(t,0) = 2 arctan t and 0 as
    // r → ∞, so the needed s-range at fixed t is bracketed by those two.
    double lo = std::min(0.0, 2.0 * std::atan(t));
    double hi = std::max(0.0, 2.0 * std::atan(t));
    lo = std::max(lo, T_minus_ + kDomainGuard);
    hi = std::min(hi, T_plus_ - kDomainGuard);
    if (lo < hi) sol_.prepare(lo, hi);
}

RadialField sample_field(const FieldEvaluator& ev, double t,
                         const std::vector<double>& rs) {
    ev.prepare_time(t);
    RadialField out;
    out.t = t;
    out.rs = rs;
    out.u.resize(rs.size());
    out.ut.resize(rs.size());
    out.in_domain.resize(rs.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (ev.in_domain(t, rs[i])) {
            out.in_domain[i] = 1;
            out.u[i] = ev.value(t, rs[i]);
            out.ut[i] = ev.deriv_t(t, rs[i]);
        } else {
            out.in_domain[i] = 0;
            out.u[i] = nan;
            out.ut[i] = nan;
        }
    }
    return out;
}

RadialField sample_field(const PhasePoint& p, double t,
                         const std::vector<double>& rs, const Tolerances& tol) {
    FieldEvaluator ev(p, tol);
    return sample_field(ev, t, rs);
}

} // namespace cubicwave
