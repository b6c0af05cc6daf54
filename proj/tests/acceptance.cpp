// Runs every acceptance criterion and prints one pass/fail line for each.

#include "latcurve/suites.hpp"

#include <cstdio>

int main()
{
    const auto& names = latcurve::suite_names();
    int failed = 0;
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto r = latcurve::run_suite(names[i]);
        std::printf("%s  %zu. %s: %zu checks, %s (%.2f s)\n", r.passed() ? "PASS" : "FAIL", i + 1, r.title.c_str(),
                    r.checks, r.summary.c_str(), r.seconds);
        for (std::size_t k = 0; k < r.failures.size() && k < 10; ++k) std::printf("      %s\n", r.failures[k].c_str());
        if (!r.passed()) ++failed;
    }
    std::printf("%d of %zu criteria failed\n", failed, names.size());
    return failed == 0 ? 0 : 1;
}
