#pragma once
// Full reproduction suite: one named check per acceptance criterion, with
// per-check timing and a JSON report.

#include "salemforge/exactpoly.hpp"

#include <string>
#include <vector>

namespace salemforge::verify {

struct CheckResult {
    std::string name;
    int criterion;
    bool passed;
    double seconds;
    std::string details;
};

struct VerifyOptions {
    long profile_n_max = 30;          // root-profile sweep bound
    long glue_n_max = 4;              // iterated-gluing cross-check bound
    int random_specializations = 200; // random symbolic/numeric agreements
    std::vector<long> irreducibility_ns = {1, 4, 7, 10, 13};
    int workers = 0;
    // Test hook: replaces the stored closed-form denominator reference.
    const ParamPoly* family_reference_override = nullptr;
};

std::vector<CheckResult> run_paper_checks(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace salemforge::verify
