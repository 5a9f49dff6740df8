#include "cubicwave/verify.hpp"

#include "cubicwave/asymptotics.hpp"
#include "cubicwave/constants.hpp"
#include "cubicwave/duffing.hpp"
#include "cubicwave/freewave.hpp"
#include "cubicwave/lifespan.hpp"
#include "cubicwave/norms.hpp"
#include "cubicwave/penrose.hpp"
#include "cubicwave/threshold.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cubicwave::verify {

namespace {

constexpr std::uint32_t kSeed = 20260823u;

double uniform(std::mt19937& rng, double lo, double hi) {
    // Explicit mapping (not uniform_real_distribution) so draws are
    // bit-identical across standard libraries.
    return lo + (hi - lo) * (static_cast<double>(rng()) / 4294967296.0);
}

CheckResult abs_check(std::string name, double measured, double target,
                      double tol_abs, std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.target = target;
    c.tolerance = tol_abs;
    c.pass = std::isfinite(measured) && std::abs(measured - target) <= tol_abs;
    c.detail = std::move(detail);
    return c;
}

CheckResult rel_check(std::string name, double measured, double target,
                      double tol_rel, std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.target = target;
    c.tolerance = tol_rel;
    c.pass = std::isfinite(measured) &&
             std::abs(measured - target) <=
                 tol_rel * std::max(std::abs(target), 1e-300);
    c.detail = std::move(detail);
    return c;
}

CheckResult bound_check(std::string name, double measured, double bound,
                        std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured;
    c.target = bound;
    c.tolerance = 0.0;
    c.pass = std::isfinite(measured) && measured <= bound;
    c.detail = std::move(detail);
    return c;
}

CheckResult flag_check(std::string name, bool measured, bool expected,
                       std::string detail = {}) {
    CheckResult c;
    c.name = std::move(name);
    c.measured = measured ? 1.0 : 0.0;
    c.target = expected ? 1.0 : 0.0;
    c.tolerance = 0.0;
    c.pass = measured == expected;
    c.detail = std::move(detail);
    return c;
}

// --- criterion bodies -------------------------------------------------------

void criterion_1(CriterionResult& out, const Tolerances& tol) {
    out.title = "lifespan closed form at (2,2) and its physical blow-up time";
    const double tp = t_plus({2.0, 2.0}, tol);
    out.checks.push_back(abs_check("t_plus(2,2) = pi/4", tp, kPi / 4.0, 1e-8));
    out.checks.push_back(abs_check("physical blow-up = tan(pi/8)",
                                   physical_blowup_time_from(tp),
                                   std::tan(kPi / 8.0), 1e-8));
}

void criterion_2(CriterionResult& out, const Tolerances& tol) {
    out.title = "degenerate-energy closed form: t_plus(2, 3/sqrt(2)) = sqrt(2)*atanh(1/2)";
    // On the E = 1/4 family the outgoing branch through X = 2 has
    // Y = (X²−1)/√2 = 3/√2 and lifespan √2·atanh(1/X).
    const double y_family = 3.0 / kSqrt2;
    const double tp = t_plus({2.0, y_family}, tol);
    out.checks.push_back(abs_check("t_plus on E=1/4 family at X=2", tp,
                                   kSqrt2 * std::atanh(0.5), 1e-8,
                                   "family point Y = 3/sqrt(2)"));
}

void criterion_3(CriterionResult& out, const Tolerances& tol) {
    out.title = "total lifespan at zero energy equals pi";
    out.checks.push_back(abs_check("total_lifespan_by_energy(0) = pi",
                                   total_lifespan_by_energy(0.0, tol), kPi,
                                   1e-8));
}

void criterion_4(CriterionResult& out, const Tolerances& tol) {
    out.title = "defining equations of the landmark constants";
    const double xc = x_critical(tol);
    const double einf = e_infinity(tol);
    out.checks.push_back(abs_check("boundary_tplus(x_critical) = pi",
                                   boundary_tplus(xc, tol), kPi, 1e-8,
                                   "x_critical = " + std::to_string(xc)));
    out.checks.push_back(abs_check("total_lifespan(e_infinity) = pi",
                                   total_lifespan_by_energy(einf, tol), kPi,
                                   1e-8,
                                   "e_infinity = " + std::to_string(einf)));
}

void criterion_5(CriterionResult& out, const Tolerances& tol) {
    out.title = "threshold curve defining property t_plus(X, beta(X)) = pi";
    std::mt19937 rng(kSeed);
    double worst = 0.0, worst_x = 0.0;
    for (int i = 0; i < 30; ++i) {
        const double X = uniform(rng, -3.0, 3.0);
        const double b = beta(X, tol);
        const double err = std::abs(t_plus({X, b}, tol) - kPi);
        if (err > worst) {
            worst = err;
            worst_x = X;
        }
    }
    std::ostringstream det;
    det << "worst at X = " << worst_x;
    out.checks.push_back(
        abs_check("max |t_plus(X, beta(X)) - pi| over 30 draws", worst, 0.0,
                  1e-6, det.str()));
}

void criterion_6(CriterionResult& out, const Tolerances& tol) {
    out.title = "energy-space identity: Sobolev norms of the data = 2*pi^2*(X^2+Y^2)";
    std::mt19937 rng(kSeed + 1);
    double worst = 0.0;
    std::string where;
    for (int i = 0; i < 5; ++i) {
        CauchyData data;
        data.X = uniform(rng, -2.0, 2.0);
        data.Y = uniform(rng, -2.0, 2.0);
        const NormResult h_half = sobolev_norm_sq(
            [&](double rho) { return data.u0_hat(rho); }, 0.5, tol);
        const NormResult h_mhalf = sobolev_norm_sq(
            [&](double rho) { return data.u1_hat(rho); }, -0.5, tol);
        const double lhs = h_half.value + h_mhalf.value;
        const double rhs =
            2.0 * kPi * kPi * (data.X * data.X + data.Y * data.Y);
        const double rel = std::abs(lhs - rhs) / std::max(rhs, 1e-300);
        if (rel > worst) {
            worst = rel;
            std::ostringstream os;
            os << "worst at (X,Y) = (" << data.X << ", " << data.Y << ")";
            where = os.str();
        }
    }
    out.checks.push_back(
        abs_check("max relative identity error over 5 draws", worst, 0.0, 1e-5,
                  where));
}

void criterion_7(CriterionResult& out, const Tolerances& tol) {
    out.title = "blow-up rates: L3 of u and L3/2 of du/dt vs the C0 constant";
    const PhasePoint p{2.0, 2.0};
    const double tp_phys = physical_blowup_time_from(t_plus(p, tol));
    const double C0 = c_zero(tp_phys, tol);
    const FitResult l3 = blowup_rate_l3(p, 1e-3, 1e-1, tol);
    const FitResult l32 = blowup_rate_l32_dt(p, 1e-3, 1e-1, tol);
    out.checks.push_back(rel_check("L3 rate coefficient = C0^{1/3}",
                                   l3.coefficient, std::cbrt(C0), 0.01));
    out.checks.push_back(
        rel_check("L3/2 du/dt rate coefficient = 2^{-1/2} C0^{2/3}",
                  l32.coefficient, std::pow(C0, 2.0 / 3.0) / kSqrt2, 0.01));
}

void criterion_8(CriterionResult& out, const Tolerances& tol) {
    out.title = "blow-up profile convergence at rate e^{-sigma} (ratio test)";
    const PhasePoint p{2.0, 2.0};
    const std::vector<double> sigmas{2.0, 3.0, 4.0, 5.0, 6.0};
    std::vector<double> ys;
    for (int i = 0; i <= 24; ++i) ys.push_back(-0.9 + 1.8 * i / 24.0);
    const double lo = std::exp(-1.0) / 2.0, hi = 2.0 * std::exp(-1.0);
    for (double r_star : {0.0, 1.0}) {
        const BlowupProfile prof = blowup_profile(p, r_star, sigmas, ys, tol);
        double worst = std::exp(-1.0);
        double K = 0.0;
        for (std::size_t i = 0; i < prof.samples.size(); ++i) {
            K = std::max(K, prof.samples[i].sup_err *
                                std::exp(prof.samples[i].sigma));
            if (i + 1 < prof.samples.size()) {
                const double ratio = prof.samples[i + 1].sup_err /
                                     prof.samples[i].sup_err;
                if (std::abs(std::log(ratio) + 1.0) >
                    std::abs(std::log(worst) + 1.0))
                    worst = ratio;
            }
        }
        std::ostringstream name, det;
        name << "error ratio e(s+1)/e(s) within [e^{-1}/2, 2e^{-1}], r* = "
             << r_star;
        det << "fitted K = " << K << ", d = " << prof.d
            << ", t* = " << prof.t_star;
        CheckResult c;
        c.name = name.str();
        c.measured = worst;
        c.target = std::exp(-1.0);
        c.tolerance = std::exp(-1.0); // half-width of the allowed band
        c.pass = std::isfinite(worst) && worst >= lo && worst <= hi;
        c.detail = det.str();
        out.checks.push_back(c);
    }
}

void criterion_9(CriterionResult& out, const Tolerances& tol) {
    out.title = "attractor family: scaled deviation bounded; exactly met on the zero-energy branch";
    // Generic blow-up point: sup |u-attractor|/(t+-t) must not grow as the
    // window shrinks toward the blow-up time.
    const PhasePoint generic{2.0, 3.0};
    const AttractorDeviation near =
        attractor_deviation(generic, 1e-3, 1e-2, tol);
    const AttractorDeviation far =
        attractor_deviation(generic, 1e-2, 1e-1, tol);
    const double growth = near.sup_scaled / std::max(far.sup_scaled, 1e-300);
    std::ostringstream det;
    det << "sup|u-a|/(t+-t) = " << near.sup_scaled << " (tau in [1e-3,1e-2]) vs "
        << far.sup_scaled << " (tau in [1e-2,1e-1])";
    out.checks.push_back(bound_check(
        "scaled deviation growth factor across decades <= 3", growth, 3.0,
        det.str()));
    // Zero-energy branch: the solution is itself a family member.  Both the
    // explicit secant-family field and the attractor member are closed
    // forms, so the gap must vanish to rounding; routing this through the
    // ODE cache would only re-measure solver noise amplified by the 1/tau
    // field size (the solver-level agreement is covered by the scaled
    // deviation check above and by criterion 1's lifespan anchor).
    const double gap = zero_energy_attractor_gap({2.0, 2.0}, 1e-3, 1e-1);
    out.checks.push_back(
        bound_check("raw deviation on E=0 branch <= 1e-8", gap, 1e-8));
}

void criterion_10(CriterionResult& out, const Tolerances& tol) {
    out.title = "threshold growth: spectral slope, L2 coefficient, H^{0.75} band";
    const PhasePoint p{0.0, beta(0.0, tol)};
    const FitResult half = threshold_sobolev_asymptotic(p, 0.5, 100.0, 1e4, tol);
    out.checks.push_back(rel_check("H^{1/2} functional slope vs log t = 64*pi^3",
                                   half.coefficient, 64.0 * kPi * kPi * kPi,
                                   0.05));
    const FitResult l2 = threshold_lp_asymptotic(p, 2.0, 100.0, 1e4, tol);
    out.checks.push_back(rel_check(
        "L2 growth coefficient = (4*pi)^{1/2}*sqrt(2)/sqrt(3)", l2.coefficient,
        std::sqrt(4.0 * kPi) * kSqrt2 / std::sqrt(3.0), 0.02));
    const FitResult b =
        threshold_sobolev_asymptotic(p, 0.75, 100.0, 1e4, tol);
    out.checks.push_back(bound_check("H^{0.75} functional max/min <= 10",
                                     b.coefficient, 10.0));
}

void criterion_11(CriterionResult& out, const Tolerances& tol) {
    out.title = "radiation: exterior energy decay and lightcone transition";
    const PhasePoint p{0.0, beta(0.0, tol)};
    const FitResult ext = exterior_scattering_check(p, 0.0, 10.0, 1000.0, tol);
    std::ostringstream det;
    det << "log-log decay slope " << ext.slope;
    out.checks.push_back(bound_check(
        "exterior energy at t=10^3 <= 1% of t=10 value", ext.coefficient, 0.01,
        det.str()));
    for (double eta : {-3.0, 0.0, 3.0}) {
        const FitResult tr = transition_check(p, eta, 10.0, 1000.0, tol);
        std::ostringstream name;
        name << "(t+eta)(u-v_L) -> sqrt(2) within 1% at eta = " << eta;
        out.checks.push_back(
            rel_check(name.str(), tr.coefficient, kSqrt2, 0.01));
    }
}

void criterion_12(CriterionResult& out, const Tolerances& tol) {
    out.title = "integrability flags at critical exponents +/- 0.05";
    CauchyData data;
    data.X = 1.1;
    data.Y = 0.7;
    const RadialFn u0 = [&](double r) { return data.u0(r); };
    const RadialFn u1 = [&](double r) { return data.u1(r); };
    const RadialFn u0h = [&](double rho) { return data.u0_hat(rho); };
    const RadialFn u1h = [&](double rho) { return data.u1_hat(rho); };
    // u0 ~ r^{-2}: Lp iff p > 3/2;    u1 ~ r^{-4}: Lp iff p > 3/4.
    out.checks.push_back(flag_check("u0 not in L^{1.45}",
                                    lp_norm(u0, 1.45, tol).divergent, true));
    out.checks.push_back(flag_check("u0 in L^{1.55}",
                                    lp_norm(u0, 1.55, tol).divergent, false));
    out.checks.push_back(flag_check("u1 not in L^{0.70}",
                                    lp_norm(u1, 0.70, tol).divergent, true));
    out.checks.push_back(flag_check("u1 in L^{0.80}",
                                    lp_norm(u1, 0.80, tol).divergent, false));
    // u0_hat ~ 1/rho at 0: H^s iff s > -1/2;  u1_hat ~ const: s > -3/2.
    out.checks.push_back(flag_check(
        "u0 not in H^{-0.55}", sobolev_norm_sq(u0h, -0.55, tol).divergent, true));
    out.checks.push_back(flag_check(
        "u0 in H^{-0.45}", sobolev_norm_sq(u0h, -0.45, tol).divergent, false));
    out.checks.push_back(flag_check(
        "u1 not in H^{-1.55}", sobolev_norm_sq(u1h, -1.55, tol).divergent, true));
    out.checks.push_back(flag_check(
        "u1 in H^{-1.45}", sobolev_norm_sq(u1h, -1.45, tol).divergent, false));
}

} // namespace

CriterionResult run_criterion(int index, const Tolerances& tol) {
    CriterionResult out;
    out.index = index;
    const auto start = std::chrono::steady_clock::now();
    switch (index) {
    case 1: criterion_1(out, tol); break;
    case 2: criterion_2(out, tol); break;
    case 3: criterion_3(out, tol); break;
    case 4: criterion_4(out, tol); break;
    case 5: criterion_5(out, tol); break;
    case 6: criterion_6(out, tol); break;
    case 7: criterion_7(out, tol); break;
    case 8: criterion_8(out, tol); break;
    case 9: criterion_9(out, tol); break;
    case 10: criterion_10(out, tol); break;
    case 11: criterion_11(out, tol); break;
    case 12: criterion_12(out, tol); break;
    default:
        throw std::invalid_argument("run_criterion: index must be 1..12");
    }
    out.pass = true;
    for (const CheckResult& c : out.checks) out.pass = out.pass && c.pass;
    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "lifespan-closed-forms", "landmarks",       "threshold-curve",
        "norm-identity",         "blowup-rates",    "blowup-profile",
        "attractor",             "threshold-growth", "radiation",
        "integrability",         "all"};
    return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
    if (suite == "lifespan-closed-forms") return {1, 2, 3};
    if (suite == "landmarks") return {4};
    if (suite == "threshold-curve") return {5};
    if (suite == "norm-identity") return {6};
    if (suite == "blowup-rates") return {7};
    if (suite == "blowup-profile") return {8};
    if (suite == "attractor") return {9};
    if (suite == "threshold-growth") return {10};
    if (suite == "radiation") return {11};
    if (suite == "integrability") return {12};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    throw std::invalid_argument("unknown verification suite: " + suite);
}

std::vector<CriterionResult> run_suite(const std::string& suite,
                                       const Tolerances& tol) {
    std::vector<CriterionResult> out;
    for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, tol));
    return out;
}

} // namespace cubicwave::verify
