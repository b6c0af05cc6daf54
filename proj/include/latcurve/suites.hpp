#pragma once

// Invariant suites shared by `latcurve verify` and the acceptance harness.
// Each suite recomputes its expected values independently of the code under
// test (brute force, series solving, gcd enumeration, closed formulas).

#include <string>
#include <vector>

namespace latcurve {

struct SuiteResult {
    std::string name;
    std::string title;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    /// One line of measured facts, e.g. timings or counts.
    std::string summary;
    double seconds = 0;

    bool passed() const { return checks > 0 && failures.empty(); }
};

/// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();

/// Runs one suite. Throws InputError for an unknown name.
SuiteResult run_suite(const std::string& name);

} // namespace latcurve
