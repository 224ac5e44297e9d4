#pragma once
// Parameter sweep over the valid gluing counts with deterministic CSV/JSON
// reporting.

#include "salemforge/exactpoly.hpp"
#include "salemforge/gluing.hpp"

#include <functional>
#include <string>
#include <vector>

namespace salemforge::census {

struct CensusRow {
    long l, m, n;
    std::vector<Int> q_coeffs;  // 19 denominator coefficients, ascending
    std::string tau_lo, tau_hi;
    std::string beta_lo, beta_hi;
    long circle_pairs, real_pairs;
    int irreducible;  // 1, 0, or -1 for skipped
    std::string salem_class;
};

struct CensusOptions {
    bool skip_irreducibility = false;
    int workers = 0;  // 0: use the environment / hardware default
};

// Rows for every valid triple with n <= n_max, in lexicographic (n, l, m)
// order regardless of internal parallelism. Throws on any invariant
// violation, naming the offending triple.
std::vector<CensusRow> run_census(long n_max, const CensusOptions& options = {});

std::string to_csv(const std::vector<CensusRow>& rows);
std::string to_json(const std::vector<CensusRow>& rows);

// Worker count: explicit option, else SALEMFORGE_WORKERS, else hardware.
int resolve_workers(int requested);

// Deterministic indexed parallel map.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

// Fixed-point decimal with the given fractional digits; floor toward zero
// or ceil away from zero so printed intervals still enclose the value.
std::string format_fixed(const Rat& v, int digits, bool round_away);

}  // namespace salemforge::census
