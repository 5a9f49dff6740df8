// End-to-end tests of the wavecli binary (invoked through popen).

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + WAVECLI_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        res.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream is(line);
    std::string field;
    while (std::getline(is, field, ',')) fields.push_back(field);
    return fields;
}

} // namespace

TEST_CASE("classify emits one CSV record", "[cli]") {
    const CliResult res = run_cli("classify 2 2");
    REQUIRE(res.exit_code == 0);
    const auto lines = split_lines(res.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "X,Y,E,T_minus,T_plus,forward,backward,physical_blowup_time");
    const auto f = split_csv(lines[1]);
    REQUIRE(f.size() == 8);
    CHECK(std::stod(f[0]) == 2.0);
    CHECK(std::stod(f[2]) == Catch::Approx(0.0).margin(1e-12));
    CHECK(std::stod(f[4]) == Catch::Approx(std::numbers::pi / 4).margin(1e-8));
    CHECK(f[5] == "blowup");
    CHECK(f[6] == "blowup");
    CHECK(std::stod(f[7]) ==
          Catch::Approx(std::tan(std::numbers::pi / 8)).margin(1e-8));
}

TEST_CASE("classify JSON report carries meta and records", "[cli]") {
    const CliResult res = run_cli("classify 0 0.5 --format json");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc["meta"]["command"] == "classify");
    CHECK(doc["meta"]["tolerances"].contains("ode_tol"));
    REQUIRE(doc["records"].size() == 1);
    const auto& rec = doc["records"][0];
    CHECK(rec["forward"] == "scattering");
    // Global solution: lifespans serialize as null.
    CHECK(rec["T_plus"].is_null());
    CHECK(rec["physical_blowup_time"].is_null());
}

TEST_CASE("constants table contains the landmarks", "[cli]") {
    const CliResult res = run_cli("constants");
    REQUIRE(res.exit_code == 0);
    const auto lines = split_lines(res.out);
    REQUIRE(lines.size() >= 9); // header + 3 landmarks + 5 kappa rows
    CHECK(lines[0] == "name,value,tolerance");
    bool saw_einf = false, saw_kappa0 = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split_csv(lines[i]);
        REQUIRE(f.size() == 3);
        if (f[0] == "E_infinity") {
            saw_einf = true;
            CHECK(std::stod(f[1]) ==
                  Catch::Approx(2.685354344761871874).margin(1e-8));
        }
        if (f[0] == "kappa_0") {
            saw_kappa0 = true;
            CHECK(std::stod(f[1]) ==
                  Catch::Approx(2078.060608725385328).epsilon(1e-8));
        }
    }
    CHECK(saw_einf);
    CHECK(saw_kappa0);
}

TEST_CASE("beta-curve writes a monotone table to --out", "[cli]") {
    const auto tmp = std::filesystem::temp_directory_path() / "betacurve.csv";
    const CliResult res =
        run_cli("beta-curve --grid -1:1:5 --out \"" + tmp.string() + "\"");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.empty());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto lines = split_lines(ss.str());
    REQUIRE(lines.size() == 6);
    CHECK(lines[0] == "X,beta");
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const double b = std::stod(split_csv(lines[i])[1]);
        CHECK(b < prev);
        prev = b;
    }
    std::filesystem::remove(tmp);
}

TEST_CASE("phase-diagram covers the grid with cell tags", "[cli]") {
    const CliResult res =
        run_cli("phase-diagram --grid -2:2:3 --ygrid -2.5:2.5:3");
    REQUIRE(res.exit_code == 0);
    const auto lines = split_lines(res.out);
    REQUIRE(lines.size() == 10); // header + 9 cells
    CHECK(lines[0] == "X,Y,forward,backward,cell");
    // Center cell (0, 0) scatters both ways.
    bool found = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto f = split_csv(lines[i]);
        if (std::stod(f[0]) == 0.0 && std::stod(f[1]) == 0.0) {
            found = true;
            CHECK(f[4] == "scattering/scattering");
        }
    }
    CHECK(found);
}

TEST_CASE("evolve snapshots match the initial data", "[cli]") {
    const CliResult res =
        run_cli("evolve 0.4 0.3 --times 0,0.5 --grid 0:2:5");
    REQUIRE(res.exit_code == 0);
    const auto lines = split_lines(res.out);
    REQUIRE(lines.size() == 11); // header + 2 times x 5 radii
    CHECK(lines[0] == "t,r,u,u_t,in_domain");
    const auto first = split_csv(lines[1]);
    CHECK(std::stod(first[0]) == 0.0);
    CHECK(std::stod(first[1]) == 0.0);
    CHECK(std::stod(first[2]) == Catch::Approx(0.8).margin(1e-9));
    CHECK(std::stod(first[3]) == Catch::Approx(1.2).margin(1e-9));
    CHECK(first[4] == "1");
}

TEST_CASE("evolve refuses times at or beyond blow-up", "[cli]") {
    const CliResult res = run_cli("evolve 2 2 --times 1 --grid 0:1:2");
    CHECK(res.exit_code == 2);
}

TEST_CASE("malformed numeric input exits with code 2", "[cli]") {
    CHECK(run_cli("classify abc 2").exit_code == 2);
    CHECK(run_cli("classify nan 2").exit_code == 2);
    CHECK(run_cli("beta-curve --grid 2:1:5").exit_code == 2);
    CHECK(run_cli("beta-curve --grid 0:1:0").exit_code == 2);
    CHECK(run_cli("evolve 1 1 --times 0 --grid -1:4:3").exit_code == 2);
    CHECK(run_cli("verify no-such-suite").exit_code == 2);
}

TEST_CASE("unwritable output path exits with code 3", "[cli]") {
    CHECK(run_cli("classify 1 1 --out /nonexistent-dir-zzz/out.csv").exit_code ==
          3);
}

TEST_CASE("verify emits a JSON report and passes a quick suite", "[cli]") {
    const CliResult res = run_cli("verify lifespan-closed-forms");
    REQUIRE(res.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(res.out);
    CHECK(doc["meta"]["command"] == "verify");
    CHECK(doc["meta"]["all_pass"] == true);
    REQUIRE(doc["records"].size() >= 1);
    for (const auto& rec : doc["records"]) {
        CHECK(rec["pass"] == true);
        CHECK(rec["checks"].is_array());
        for (const auto& chk : rec["checks"]) {
            CHECK(chk.contains("measured"));
            CHECK(chk.contains("target"));
            CHECK(chk.contains("tolerance"));
        }
    }
}

TEST_CASE("output is deterministic for fixed flags", "[cli]") {
    const CliResult a = run_cli("beta-curve --grid -2:2:9");
    const CliResult b = run_cli("beta-curve --grid -2:2:9");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);
    const CliResult ja = run_cli("classify 1.1 0.7 --format json");
    const CliResult jb = run_cli("classify 1.1 0.7 --format json");
    CHECK(ja.out == jb.out);
}

TEST_CASE("tighter tolerances leave the qualitative labels unchanged", "[cli]") {
    for (const std::string pt : {"0 0", "2 2.3", "2 -2.3", "0.5 1.2"}) {
        const CliResult loose = run_cli("classify " + pt);
        const CliResult tight = run_cli("classify " + pt + " --tol 0.01");
        REQUIRE(loose.exit_code == 0);
        REQUIRE(tight.exit_code == 0);
        const auto lf = split_csv(split_lines(loose.out)[1]);
        const auto tf = split_csv(split_lines(tight.out)[1]);
        CHECK(lf[5] == tf[5]);
        CHECK(lf[6] == tf[6]);
    }
}

TEST_CASE("help exits cleanly", "[cli]") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("classify --help").exit_code == 0);
}
