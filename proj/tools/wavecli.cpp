// ============================================================================
// wavecli : command-line front end
//
// Subcommands: classify, constants, beta-curve, phase-diagram, evolve, verify.
// Global flags: --tol FACTOR (scales ode/quad/root tolerances), --format
// csv|json, --out PATH.  Exit codes: 0 success, 1 failed verification check,
// 2 malformed numeric input, 3 unwritable output path.
// ============================================================================

#include "CLI11.hpp"

#include "cubicwave/asymptotics.hpp"
#include "cubicwave/constants.hpp"
#include "cubicwave/duffing.hpp"
#include "cubicwave/io.hpp"
#include "cubicwave/lifespan.hpp"
#include "cubicwave/norms.hpp"
#include "cubicwave/penrose.hpp"
#include "cubicwave/threshold.hpp"
#include "cubicwave/verify.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using cubicwave::Tolerances;
namespace io = cubicwave::io;

struct GlobalOpts {
    double tol_factor = 1.0;
    std::string format = "csv";
    std::string out;
};

Tolerances scaled_tolerances(double factor) {
    Tolerances t = cubicwave::default_tolerances();
    t.ode_tol *= factor;
    t.quad_tol *= factor;
    t.root_tol *= factor;
    return t;
}

struct GridSpec {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    [[nodiscard]] std::vector<double> points() const {
        std::vector<double> out(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] =
                n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
        }
        return out;
    }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> g.lo >> c1 >> g.hi >> c2 >> g.n) || c1 != ':' || c2 != ':' ||
        !(is >> std::ws).eof() || g.n < 1 || !std::isfinite(g.lo) ||
        !std::isfinite(g.hi) || (g.n > 1 && !(g.hi > g.lo))) {
        throw CLI::ValidationError("--grid", "expected X0:X1:N with X0 < X1, N >= 1: '" + text + "'");
    }
    return g;
}

void require_finite(double v, const std::string& what) {
    if (!std::isfinite(v))
        throw CLI::ValidationError(what, "value must be finite");
}

int emit(const GlobalOpts& g, const std::string& command,
         const Tolerances& tol, const nlohmann::json& extra_meta,
         const std::vector<std::string>& header,
         const std::vector<io::Row>& rows, const nlohmann::json& records) {
    std::string payload;
    if (g.format == "json") {
        payload = io::make_report(command, tol, extra_meta, records).dump(2);
        payload += '\n';
    } else {
        std::ostringstream os;
        io::write_csv(os, header, rows);
        payload = os.str();
    }
    io::write_output(g.out, std::cout, payload);
    return 0;
}

int cmd_classify(const GlobalOpts& g, double X, double Y) {
    require_finite(X, "X");
    require_finite(Y, "Y");
    const Tolerances tol = scaled_tolerances(g.tol_factor);
    const cubicwave::PhasePoint p{X, Y};
    const cubicwave::Lifespan life = cubicwave::compute_lifespan(p, tol);
    const cubicwave::Classification cls = cubicwave::classify_bidirectional(p, tol);
    const double E = cubicwave::energy(p);
    const double t_phys = cubicwave::physical_blowup_time_from(life.t_plus);

    const std::vector<std::string> header{
        "X", "Y", "E", "T_minus", "T_plus", "forward", "backward",
        "physical_blowup_time"};
    const std::vector<io::Row> rows{{io::format_double(X),
                                     io::format_double(Y),
                                     io::format_double(E),
                                     io::format_double(life.t_minus),
                                     io::format_double(life.t_plus),
                                     std::string(to_string(cls.forward)),
                                     std::string(to_string(cls.backward)),
                                     io::format_double(t_phys)}};
    nlohmann::json records = nlohmann::json::array();
    records.push_back({{"X", X},
                       {"Y", Y},
                       {"E", E},
                       {"T_minus", io::json_number(life.t_minus)},
                       {"T_plus", io::json_number(life.t_plus)},
                       {"forward", to_string(cls.forward)},
                       {"backward", to_string(cls.backward)},
                       {"physical_blowup_time", io::json_number(t_phys)}});
    return emit(g, "classify", tol, nlohmann::json::object(), header, rows,
                records);
}

int cmd_constants(const GlobalOpts& g) {
    const Tolerances tol = scaled_tolerances(g.tol_factor);
    std::vector<std::pair<std::string, std::pair<double, double>>> table;
    table.emplace_back("E_infinity",
                       std::make_pair(cubicwave::e_infinity(tol), tol.root_tol));
    table.emplace_back("X_C",
                       std::make_pair(cubicwave::x_critical(tol), tol.root_tol));
    table.emplace_back("beta_0",
                       std::make_pair(cubicwave::beta(0.0, tol), tol.root_tol));
    for (double nu : {0.0, 0.1, 0.2, 0.3, 0.4}) {
        std::ostringstream name;
        name << "kappa_" << nu;
        table.emplace_back(name.str(), std::make_pair(cubicwave::kappa(nu, tol),
                                                      tol.quad_tol));
    }
    const std::vector<std::string> header{"name", "value", "tolerance"};
    std::vector<io::Row> rows;
    nlohmann::json records = nlohmann::json::array();
    for (const auto& [name, vt] : table) {
        rows.push_back({name, io::format_double(vt.first),
                        io::format_double(vt.second)});
        records.push_back(
            {{"name", name}, {"value", vt.first}, {"tolerance", vt.second}});
    }
    return emit(g, "constants", tol, nlohmann::json::object(), header, rows,
                records);
}

int cmd_beta_curve(const GlobalOpts& g, const std::string& grid_text) {
    const Tolerances tol = scaled_tolerances(g.tol_factor);
    const GridSpec grid = parse_grid(grid_text);
    if (grid.n < 2)
        throw CLI::ValidationError("--grid", "beta-curve needs N >= 2");
    const cubicwave::ThresholdCurve curve =
        cubicwave::beta_curve(grid.lo, grid.hi, grid.n, tol);
    const std::vector<std::string> header{"X", "beta"};
    std::vector<io::Row> rows;
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t i = 0; i < curve.xs.size(); ++i) {
        rows.push_back({io::format_double(curve.xs[i]),
                        io::format_double(curve.betas[i])});
        records.push_back({{"X", curve.xs[i]}, {"beta", curve.betas[i]}});
    }
    nlohmann::json meta{{"grid", grid_text}, {"x_critical", curve.x_c}};
    return emit(g, "beta-curve", tol, meta, header, rows, records);
}

int cmd_phase_diagram(const GlobalOpts& g, const std::string& grid_text,
                      const std::string& ygrid_text) {
    const Tolerances tol = scaled_tolerances(g.tol_factor);
    const GridSpec gx = parse_grid(grid_text);
    const GridSpec gy = parse_grid(ygrid_text.empty() ? grid_text : ygrid_text);
    const cubicwave::PhaseDiagram pd = cubicwave::phase_diagram(
        gx.lo, gx.hi, gx.n, gy.lo, gy.hi, gy.n, tol);
    const std::vector<std::string> header{"X", "Y", "forward", "backward",
                                          "cell"};
    std::vector<io::Row> rows;
    nlohmann::json records = nlohmann::json::array();
    for (std::size_t ix = 0; ix < pd.xs.size(); ++ix) {
        for (std::size_t iy = 0; iy < pd.ys.size(); ++iy) {
            const cubicwave::Classification& c =
                pd.cells[ix * pd.ys.size() + iy];
            const std::string fwd{to_string(c.forward)};
            const std::string bwd{to_string(c.backward)};
            rows.push_back({io::format_double(pd.xs[ix]),
                            io::format_double(pd.ys[iy]), fwd, bwd,
                            fwd + "/" + bwd});
            records.push_back({{"X", pd.xs[ix]},
                               {"Y", pd.ys[iy]},
                               {"forward", fwd},
                               {"backward", bwd},
                               {"cell", fwd + "/" + bwd}});
        }
    }
    nlohmann::json meta{{"grid", grid_text},
                        {"ygrid", ygrid_text.empty() ? grid_text : ygrid_text}};
    return emit(g, "phase-diagram", tol, meta, header, rows, records);
}

int cmd_evolve(const GlobalOpts& g, double X, double Y,
               const std::vector<double>& times, const std::string& grid_text) {
    require_finite(X, "X");
    require_finite(Y, "Y");
    if (times.empty())
        throw CLI::ValidationError("--times", "need at least one time");
    for (double t : times) require_finite(t, "--times");
    const Tolerances tol = scaled_tolerances(g.tol_factor);
    const GridSpec grid = parse_grid(grid_text);
    if (grid.lo < 0.0)
        throw CLI::ValidationError("--grid", "radius grid must start at r >= 0");

    const cubicwave::FieldEvaluator ev({X, Y}, tol);
    const double t_phys = ev.physical_blowup_time();
    for (double t : times) {
        if (t >= t_phys) {
            std::cerr << "evolve: refusing t = " << t
                      << ": at/beyond the forward blow-up time t+ = " << t_phys
                      << " of data (X, Y) = (" << X << ", " << Y << ")\n";
            return 2;
        }
    }

    const std::vector<double> rs = grid.points();
    const std::vector<std::string> header{"t", "r", "u", "u_t", "in_domain"};
    std::vector<io::Row> rows;
    nlohmann::json records = nlohmann::json::array();
    for (double t : times) {
        const cubicwave::RadialField f = cubicwave::sample_field(ev, t, rs);
        for (std::size_t i = 0; i < f.rs.size(); ++i) {
            rows.push_back({io::format_double(t), io::format_double(f.rs[i]),
                            io::format_double(f.u[i]),
                            io::format_double(f.ut[i]),
                            f.in_domain[i] ? "1" : "0"});
            records.push_back({{"t", t},
                               {"r", f.rs[i]},
                               {"u", io::json_number(f.u[i])},
                               {"u_t", io::json_number(f.ut[i])},
                               {"in_domain", f.in_domain[i] != 0}});
        }
    }
    nlohmann::json meta{{"X", X}, {"Y", Y}, {"grid", grid_text}};
    return emit(g, "evolve", tol, meta, header, rows, records);
}

int cmd_verify(const GlobalOpts& g, const std::string& suite) {
    const Tolerances tol = scaled_tolerances(g.tol_factor);
    std::vector<cubicwave::verify::CriterionResult> results;
    try {
        results = cubicwave::verify::run_suite(suite, tol);
    } catch (const std::invalid_argument& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 2;
    }
    bool all_pass = true;
    nlohmann::json records = nlohmann::json::array();
    for (const auto& cr : results) {
        all_pass = all_pass && cr.pass;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : cr.checks) {
            checks.push_back({{"name", c.name},
                              {"measured", io::json_number(c.measured)},
                              {"target", io::json_number(c.target)},
                              {"tolerance", c.tolerance},
                              {"pass", c.pass},
                              {"detail", c.detail}});
        }
        records.push_back({{"criterion", cr.index},
                           {"title", cr.title},
                           {"pass", cr.pass},
                           {"checks", std::move(checks)}});
        std::cerr << (cr.pass ? "PASS" : "FAIL") << " criterion " << cr.index
                  << ": " << cr.title << " (" << cr.elapsed_seconds << " s)\n";
    }
    // The verification report is always JSON (it is structured and nested).
    nlohmann::json meta{{"suite", suite}, {"all_pass", all_pass}};
    const std::string payload =
        io::make_report("verify", tol, meta, records).dump(2) + "\n";
    io::write_output(g.out, std::cout, payload);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic wave equation solutions: classification, thresholds, "
                 "field evolution and asymptotic verification"};
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--tol", global.tol_factor,
                   "multiplicative factor applied to the default ode/quad/root "
                   "tolerances")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", global.out, "output path (default: stdout)");

    double X = 0.0, Y = 0.0;
    std::vector<double> times;
    std::string grid_text = "-3:3:121";
    std::string ygrid_text;
    std::string suite = "all";

    CLI::App* classify = app.add_subcommand(
        "classify", "classify the solution with data (X, Y)");
    classify->add_option("X", X, "first data parameter")->required();
    classify->add_option("Y", Y, "second data parameter")->required();

    app.add_subcommand("constants",
                       "print the landmark constants and kappa table");

    CLI::App* betacurve =
        app.add_subcommand("beta-curve", "export the threshold curve beta(X)");
    betacurve->add_option("--grid", grid_text, "X grid as X0:X1:N");

    CLI::App* diagram = app.add_subcommand(
        "phase-diagram", "export the nine-cell behavior diagram");
    diagram->add_option("--grid", grid_text, "X grid as X0:X1:N");
    diagram->add_option("--ygrid", ygrid_text,
                        "Y grid as Y0:Y1:M (default: same as --grid)");

    CLI::App* evolve = app.add_subcommand(
        "evolve", "sample field snapshots u(t, r) for data (X, Y)");
    evolve->add_option("X", X, "first data parameter")->required();
    evolve->add_option("Y", Y, "second data parameter")->required();
    evolve->add_option("--times", times, "snapshot times (comma separated)")
        ->required()
        ->delimiter(',');
    evolve->add_option("--grid", grid_text, "radius grid as R0:R1:N");

    CLI::App* verify =
        app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("suite", suite,
                       "suite name (see --help-suites); default 'all'");

    // Let the shared --tol/--format/--out options appear after the
    // subcommand name as well as before it.
    for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion") {
            return app.exit(e);
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(global, X, Y);
        if (app.get_subcommand("constants")->parsed())
            return cmd_constants(global);
        if (betacurve->parsed()) return cmd_beta_curve(global, grid_text);
        if (diagram->parsed())
            return cmd_phase_diagram(global, grid_text, ygrid_text);
        if (evolve->parsed())
            return cmd_evolve(global, X, Y, times, grid_text);
        if (verify->parsed()) return cmd_verify(global, suite);
    } catch (const io::FileWriteError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
