// Reproduction suite runner: one pass/fail line per criterion.

#include "salemforge/verify.hpp"

#include <cstdio>

int main() {
    auto results = salemforge::verify::run_paper_checks({});
    for (const auto& r : results)
        std::printf("criterion %2d [%s] %-26s (%.2fs) %s\n", r.criterion,
                    r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.details.c_str());
    return salemforge::verify::all_passed(results) ? 0 : 1;
}
