#pragma once
// ============================================================================
// verify.hpp : quantitative verification suites
//
// Each numbered criterion condenses one family of predicted behavior into a
// pass/fail comparison at a stated tolerance.  Suites are named groupings of
// criteria used by the command-line `verify` subcommand and the acceptance
// gate.
// ============================================================================

#include "cubicwave/config.hpp"

#include <string>
#include <vector>

namespace cubicwave::verify {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double target = 0.0;
    double tolerance = 0.0; ///< allowed |measured − target| (abs or rel; see name)
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int index = 0;
    std::string title;
    std::vector<CheckResult> checks;
    bool pass = false;
    double elapsed_seconds = 0.0;
};

/// Run one criterion (1..12).  Throws std::invalid_argument for unknown ids.
[[nodiscard]] CriterionResult run_criterion(int index,
                                            const Tolerances& tol = default_tolerances());

[[nodiscard]] const std::vector<std::string>& suite_names();

/// Criterion ids belonging to a named suite ("all" covers every criterion).
[[nodiscard]] std::vector<int> suite_criteria(const std::string& suite);

[[nodiscard]] std::vector<CriterionResult> run_suite(const std::string& suite,
                                                     const Tolerances& tol = default_tolerances());

} // namespace cubicwave::verify
