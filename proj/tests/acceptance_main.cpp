// Acceptance gate: runs every numbered verification criterion and prints one
// PASS/FAIL line per criterion (with per-check measured-vs-target details).
// Exits nonzero when any criterion fails.

#include "cubicwave/verify.hpp"

#include <cstdio>
#include <exception>
#include <string>

int main() {
    using cubicwave::verify::CriterionResult;
    using cubicwave::verify::run_criterion;

    int failures = 0;
    double total_elapsed = 0.0;
    for (int index = 1; index <= 12; ++index) {
        CriterionResult res;
        try {
            res = run_criterion(index);
        } catch (const std::exception& e) {
            std::printf("[%2d/12] FAIL  criterion aborted: %s\n", index,
                        e.what());
            std::fflush(stdout);
            ++failures;
            continue;
        }
        total_elapsed += res.elapsed_seconds;
        std::printf("[%2d/12] %s  %s (%.1f s)\n", index,
                    res.pass ? "PASS" : "FAIL", res.title.c_str(),
                    res.elapsed_seconds);
        for (const auto& c : res.checks) {
            std::printf("         %s %-34s measured=%- .12g target=%- .12g "
                        "tol=%.3g%s%s\n",
                        c.pass ? "ok  " : "FAIL", c.name.c_str(), c.measured,
                        c.target, c.tolerance, c.detail.empty() ? "" : "  # ",
                        c.detail.c_str());
        }
        std::fflush(stdout);
        if (!res.pass) ++failures;
    }
    std::printf("%d/12 criteria passed (%.1f s total)\n", 12 - failures,
                total_elapsed);
    return failures == 0 ? 0 : 1;
}
