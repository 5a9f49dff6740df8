#pragma once
// ============================================================================
// io.hpp : CSV/JSON emission shared by the command-line tool and tests
//
// CSV: comma-separated, '.' decimal point, header row, LF line endings.
// JSON: UTF-8, one top-level object {"meta": {...}, "records": [...]};
// non-finite numbers are emitted as null (documented in the shipped schema).
// ============================================================================

#include "cubicwave/config.hpp"

#include "json.hpp"

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicwave::io {

inline constexpr const char* kVersion = "1.0.0";

/// Locale-independent formatting with full round-trip precision; non-finite
/// values render as "inf", "-inf", "nan".
[[nodiscard]] std::string format_double(double v);

using Row = std::vector<std::string>;

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<Row>& rows);

/// Finite doubles map to JSON numbers, non-finite to null.
[[nodiscard]] nlohmann::json json_number(double v);

[[nodiscard]] nlohmann::json tolerances_json(const Tolerances& tol);

/// Standard report envelope: {"meta": {...}, "records": [...]}.
[[nodiscard]] nlohmann::json make_report(const std::string& command,
                                         const Tolerances& tol,
                                         nlohmann::json extra_meta,
                                         nlohmann::json records);

struct FileWriteError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Write payload to `path`, or to `fallback` when path is empty; throws
/// FileWriteError when the file cannot be opened/written.
void write_output(const std::string& path, std::ostream& fallback,
                  const std::string& payload);

} // namespace cubicwave::io
