// ============================================================================
// module.cpp : pybind11 bindings for the main library operations
// ============================================================================

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubicwave/asymptotics.hpp"
#include "cubicwave/duffing.hpp"
#include "cubicwave/elliptic.hpp"
#include "cubicwave/io.hpp"
#include "cubicwave/lifespan.hpp"
#include "cubicwave/norms.hpp"
#include "cubicwave/penrose.hpp"
#include "cubicwave/threshold.hpp"
#include "cubicwave/verify.hpp"

#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace cubicwave;

namespace {

Tolerances scaled(double factor) {
    Tolerances t = default_tolerances();
    t.ode_tol *= factor;
    t.quad_tol *= factor;
    t.root_tol *= factor;
    return t;
}

py::dict norm_result_dict(const NormResult& n) {
    py::dict d;
    d["value"] = n.value;
    d["tail_estimate"] = n.tail_estimate;
    d["divergent"] = n.divergent;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-parameter solutions of the cubic wave equation: ODE core, "
              "lifespans, threshold curve, field evaluation and norms";
    m.attr("__version__") = io::kVersion;

    // ---- ODE core -------------------------------------------------------
    m.def("energy", [](double X, double Y) { return energy(X, Y); },
          py::arg("X"), py::arg("Y"),
          "Conserved energy E = Y^2/2 + X^2/2 - X^4/4");
    m.def(
        "duffing_state",
        [](double X, double Y, double s, double tol_factor) {
            DuffingSolution sol({X, Y}, scaled(tol_factor));
            const OdeState st = sol.state_at(s);
            return std::make_tuple(st.U, st.Udot);
        },
        py::arg("X"), py::arg("Y"), py::arg("s"), py::arg("tol_factor") = 1.0,
        "Trajectory state (U(s), U'(s)) of U'' + U = U^3 with U(0)=X, U'(0)=Y");
    m.def("jacobi_sn", &jacobi_sn, py::arg("u"), py::arg("m"),
          "Jacobi elliptic sine sn(u, m)");
    m.def("elliptic_K", &elliptic_K, py::arg("m"),
          "Complete elliptic integral of the first kind K(m)");

    // ---- lifespans and landmarks ---------------------------------------
    m.def(
        "t_plus",
        [](double X, double Y, double tf) { return t_plus({X, Y}, scaled(tf)); },
        py::arg("X"), py::arg("Y"), py::arg("tol_factor") = 1.0,
        "Forward lifespan T+(X, Y) (inf when forward-global)");
    m.def(
        "t_minus",
        [](double X, double Y, double tf) { return t_minus({X, Y}, scaled(tf)); },
        py::arg("X"), py::arg("Y"), py::arg("tol_factor") = 1.0,
        "Backward lifespan T-(X, Y) (-inf when backward-global)");
    m.def(
        "quad_R",
        [](double X, double Y, double tf) { return quad_R({X, Y}, scaled(tf)); },
        py::arg("X"), py::arg("Y"), py::arg("tol_factor") = 1.0,
        "Direct-escape lifespan integral");
    m.def(
        "quad_S",
        [](double X, double Y, double tf) { return quad_S({X, Y}, scaled(tf)); },
        py::arg("X"), py::arg("Y"), py::arg("tol_factor") = 1.0,
        "Reflected-escape lifespan integral");
    m.def(
        "total_lifespan_by_energy",
        [](double E, double tf) { return total_lifespan_by_energy(E, scaled(tf)); },
        py::arg("E"), py::arg("tol_factor") = 1.0,
        "Total lifespan T+ - T- as a function of the energy");
    m.def(
        "boundary_tplus",
        [](double X, double tf) { return boundary_tplus(X, scaled(tf)); },
        py::arg("X"), py::arg("tol_factor") = 1.0,
        "Forward lifespan along the zero-velocity boundary");
    m.def("e_infinity", [](double tf) { return e_infinity(scaled(tf)); },
          py::arg("tol_factor") = 1.0,
          "Energy at which the total lifespan equals pi");
    m.def("x_critical", [](double tf) { return x_critical(scaled(tf)); },
          py::arg("tol_factor") = 1.0,
          "Zero-velocity point with forward lifespan pi");

    // ---- threshold curve and classification ----------------------------
    m.def("beta", [](double X, double tf) { return beta(X, scaled(tf)); },
          py::arg("X"), py::arg("tol_factor") = 1.0,
          "Critical initial velocity beta(X) with T+(X, beta(X)) = pi");
    m.def(
        "classify",
        [](double X, double Y, double tf) {
            const Classification c = classify_bidirectional({X, Y}, scaled(tf));
            return std::make_tuple(std::string(to_string(c.forward)),
                                   std::string(to_string(c.backward)));
        },
        py::arg("X"), py::arg("Y"), py::arg("tol_factor") = 1.0,
        "(forward, backward) behavior tags: blowup / scattering / threshold");
    m.def(
        "beta_curve",
        [](double x_min, double x_max, int n, double tf) {
            const ThresholdCurve c = beta_curve(x_min, x_max, n, scaled(tf));
            py::dict d;
            d["xs"] = c.xs;
            d["betas"] = c.betas;
            d["x_critical"] = c.x_c;
            return d;
        },
        py::arg("x_min"), py::arg("x_max"), py::arg("n"),
        py::arg("tol_factor") = 1.0, "Sampled threshold curve on a uniform grid");
    m.def(
        "special_points",
        [](double tf) {
            std::vector<std::pair<double, double>> out;
            for (const PhasePoint& p : special_points(scaled(tf)))
                out.emplace_back(p.X, p.Y);
            return out;
        },
        py::arg("tol_factor") = 1.0,
        "The four bidirectionally-threshold phase points");

    // ---- conformal map and field evaluation ----------------------------
    m.def(
        "conformal_factors",
        [](double t, double r) {
            const ConformalFactors f = conformal_factors(t, r);
            py::dict d;
            d["s"] = f.s;
            d["omega"] = f.omega;
            d["ds_dt"] = f.ds_dt;
            d["ds_dr"] = f.ds_dr;
            d["domega_dt"] = f.domega_dt;
            d["domega_dr"] = f.domega_dr;
            return d;
        },
        py::arg("t"), py::arg("r"),
        "Compactification phase s(t, r), factor Omega(t, r) and derivatives");
    m.def("influence_bound", &influence_bound, py::arg("T"), py::arg("r"),
          py::arg("side"),
          "Physical time bound M_side(T, r) of the conformal strip |s| < |T|");
    m.def("physical_blowup_time_from", &physical_blowup_time_from,
          py::arg("T_plus"),
          "First physical blow-up time tan(T+/2) (inf when T+ >= pi)");

    py::class_<FieldEvaluator>(m, "FieldEvaluator",
                               "Solution u(t, r) with data (X/(1+r^2)^... ) "
                               "built from the phase point (X, Y)")
        .def(py::init([](double X, double Y, double tf) {
                 return FieldEvaluator({X, Y}, scaled(tf));
             }),
             py::arg("X"), py::arg("Y"), py::arg("tol_factor") = 1.0)
        .def("T_plus", &FieldEvaluator::T_plus)
        .def("T_minus", &FieldEvaluator::T_minus)
        .def("physical_blowup_time", &FieldEvaluator::physical_blowup_time)
        .def("in_domain", &FieldEvaluator::in_domain, py::arg("t"), py::arg("r"))
        .def("value", &FieldEvaluator::value, py::arg("t"), py::arg("r"))
        .def("deriv_t", &FieldEvaluator::deriv_t, py::arg("t"), py::arg("r"))
        .def("deriv_r", &FieldEvaluator::deriv_r, py::arg("t"), py::arg("r"))
        .def(
            "sample",
            [](const FieldEvaluator& ev, double t, const std::vector<double>& rs) {
                const RadialField f = sample_field(ev, t, rs);
                std::vector<bool> mask(f.in_domain.begin(), f.in_domain.end());
                return std::make_tuple(f.u, f.ut, mask);
            },
            py::arg("t"), py::arg("rs"),
            "Arrays (u, u_t, in_domain) over a radius grid at fixed time");

    // ---- norms and constants -------------------------------------------
    m.def(
        "lp_norm",
        [](const std::function<double(double)>& f, double p, double r_scale,
           double tf) {
            return norm_result_dict(lp_norm(f, p, scaled(tf), r_scale));
        },
        py::arg("f"), py::arg("p"), py::arg("r_scale") = 1.0,
        py::arg("tol_factor") = 1.0,
        "L^p norm (4*pi*int |f|^p r^2 dr)^(1/p) of a radial function");
    m.def(
        "sobolev_norm_sq",
        [](const std::function<double(double)>& fhat, double nu, double tf) {
            return norm_result_dict(sobolev_norm_sq(fhat, nu, scaled(tf)));
        },
        py::arg("fhat"), py::arg("nu"), py::arg("tol_factor") = 1.0,
        "Squared homogeneous Sobolev norm from the radial Fourier transform");
    m.def(
        "radial_fourier",
        [](const std::function<double(double)>& f, double rho, double tf) {
            return radial_fourier(f, rho, scaled(tf));
        },
        py::arg("f"), py::arg("rho"), py::arg("tol_factor") = 1.0,
        "Radial Fourier transform (4*pi/rho) int_0^inf sin(rho r) f(r) r dr");
    m.def(
        "cauchy_data",
        [](double X, double Y, double r, double rho) {
            const CauchyData d{X, Y};
            py::dict out;
            out["u0"] = d.u0(r);
            out["u1"] = d.u1(r);
            out["u0_hat"] = rho > 0.0 ? d.u0_hat(rho)
                                      : std::numeric_limits<double>::quiet_NaN();
            out["u1_hat"] = rho > 0.0 ? d.u1_hat(rho)
                                      : std::numeric_limits<double>::quiet_NaN();
            return out;
        },
        py::arg("X"), py::arg("Y"), py::arg("r"), py::arg("rho") = 0.0,
        "Initial data profiles and their radial Fourier transforms");
    m.def("kappa", [](double nu, double tf) { return kappa(nu, scaled(tf)); },
          py::arg("nu"), py::arg("tol_factor") = 1.0,
          "Slope constant of the critical-norm growth functional");
    m.def("c_zero",
          [](double t_star, double tf) { return c_zero(t_star, scaled(tf)); },
          py::arg("t_star"), py::arg("tol_factor") = 1.0,
          "Blow-up rate constant C0(t*)");

    // ---- verification ---------------------------------------------------
    m.def("verify_suite_names", [] {
        std::vector<std::string> names;
        for (const auto& n : verify::suite_names()) names.emplace_back(n);
        return names;
    });
    m.def(
        "run_criterion",
        [](int index, double tf) {
            const verify::CriterionResult r = verify::run_criterion(index, scaled(tf));
            py::list checks;
            for (const auto& c : r.checks) {
                py::dict cd;
                cd["name"] = c.name;
                cd["measured"] = c.measured;
                cd["target"] = c.target;
                cd["tolerance"] = c.tolerance;
                cd["pass"] = c.pass;
                cd["detail"] = c.detail;
                checks.append(cd);
            }
            py::dict d;
            d["criterion"] = r.index;
            d["title"] = r.title;
            d["pass"] = r.pass;
            d["checks"] = checks;
            return d;
        },
        py::arg("index"), py::arg("tol_factor") = 1.0,
        "Run one numbered verification criterion and return its checks");
}
