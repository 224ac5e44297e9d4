#include "salemforge/census.hpp"

#include "salemforge/refdata.hpp"
#include "salemforge/verify.hpp"

#include <doctest.h>

using namespace salemforge;
using namespace salemforge::census;

TEST_CASE("fixed-point formatting") {
    CHECK(format_fixed(Rat(1), 3, false) == "1.000");
    CHECK(format_fixed(Rat(1, 3), 3, false) == "0.333");
    CHECK(format_fixed(Rat(1, 3), 3, true) == "0.334");
    CHECK(format_fixed(Rat(117628, 100000), 12, false) == "1.176280000000");
}

TEST_CASE("census rows for n_max = 1") {
    auto rows = run_census(1, {true, 0});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 0);
    CHECK(rows[1].n == 1);
    CHECK(rows[1].l == 0);
    CHECK(rows[1].m == 0);
    CHECK(rows[2].m == 1);
    CHECK(rows[3].l == 1);

    // First row carries the single-domino denominator.
    CHECK(rows[0].q_coeffs == refdata::domino_denominator().coeffs());
    for (const auto& r : rows) {
        CHECK(r.circle_pairs == 7);
        CHECK(r.real_pairs == 2);
        CHECK(r.salem_class == "skipped");
        CHECK(Rat(r.tau_lo) < Rat(r.tau_hi));
    }
}

TEST_CASE("census output is deterministic across worker counts") {
    CensusOptions one;
    one.workers = 1;
    CensusOptions four;
    four.workers = 4;
    auto a = to_csv(run_census(2, one));
    auto b = to_csv(run_census(2, four));
    CHECK(a == b);

    // CSV and JSON carry identical data.
    auto rows = run_census(1, one);
    auto csv = to_csv(rows);
    auto json = to_json(rows);
    CHECK(csv.find("1.176") == std::string::npos);  // tau ~ 5.4 for row 0
    CHECK(json.find("\"circle_pairs\": 7") != std::string::npos);
    CHECK(csv.rfind("l,m,n,tau_lo,tau_hi,beta_lo,beta_hi,circle_pairs,real_pairs,"
                    "irreducible,salem_class,q_coeffs\n",
                    0) == 0);
}

TEST_CASE("census classifies the small dominoes") {
    auto rows = run_census(1, {false, 0});
    for (const auto& r : rows) {
        CHECK(r.irreducible == 1);
        CHECK(r.salem_class == "TwoSalem");
        // tau strictly inside (4n+5, 4n+m+l+6).
        CHECK(Rat(r.tau_lo) > Rat(4 * r.n + 5));
        CHECK(Rat(r.tau_hi) < Rat(4 * r.n + r.m + r.l + 6));
    }
}

TEST_CASE("one tampered reference fails exactly one check") {
    // Perturb a single coefficient of the stored closed-form denominator.
    std::vector<AffineForm> coeffs = refdata::domino_denominator_family().coeffs();
    coeffs[16] = coeffs[16] + AffineForm(Int(1));
    ParamPoly tampered(coeffs);

    verify::VerifyOptions options;
    options.profile_n_max = 1;
    options.glue_n_max = 1;
    options.random_specializations = 5;
    options.irreducibility_ns = {1};
    options.family_reference_override = &tampered;

    auto results = verify::run_paper_checks(options);
    int failed = 0;
    std::string failed_name;
    for (const auto& r : results)
        if (!r.passed) {
            ++failed;
            failed_name = r.name;
        }
    CHECK(failed == 1);
    CHECK(failed_name == "symbolic-family");
}
