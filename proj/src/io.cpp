#include "cubicwave/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace cubicwave::io {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[48];
    // %g with 17 significant digits round-trips doubles; snprintf in the "C"
    // numeric locale keeps '.' as the decimal point.
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<Row>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) os << ',';
        os << header[i];
    }
    os << '\n';
    for (const Row& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
}

nlohmann::json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

nlohmann::json tolerances_json(const Tolerances& tol) {
    return {{"ode_tol", tol.ode_tol},
            {"quad_tol", tol.quad_tol},
            {"root_tol", tol.root_tol},
            {"threshold_band", tol.threshold_band},
            {"blowup_cutoff", tol.blowup_cutoff},
            {"tail_cut", tol.tail_cut}};
}

nlohmann::json make_report(const std::string& command, const Tolerances& tol,
                           nlohmann::json extra_meta, nlohmann::json records) {
    nlohmann::json meta{{"command", command},
                        {"version", kVersion},
                        {"tolerances", tolerances_json(tol)}};
    if (extra_meta.is_object()) {
        for (auto& [key, value] : extra_meta.items()) meta[key] = value;
    }
    return {{"meta", std::move(meta)}, {"records", std::move(records)}};
}

void write_output(const std::string& path, std::ostream& fallback,
                  const std::string& payload) {
    if (path.empty()) {
        fallback << payload;
        fallback.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw FileWriteError("cannot open output path: " + path);
    file << payload;
    file.flush();
    if (!file) throw FileWriteError("write failed for output path: " + path);
}

} // namespace cubicwave::io
