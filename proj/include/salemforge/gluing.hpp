#pragma once
// The gluing formula, the domino family W_{l,m,n}, its symbolic closed form,
// and the orthogonal-facet growth functions.

#include "salemforge/coxeter.hpp"
#include "salemforge/exactpoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace salemforge::gluing {

struct GluingCounts {
    long l = 0, m = 0, n = 0;
};

struct ValidationResult {
    bool ok;
    std::string reason;
};

// l + m <= n, and n - l - m bounded by (n+1)/2 for odd n, n/2 for even n.
ValidationResult validate_counts(long l, long m, long n);

// All valid triples with n <= n_max, in lexicographic (n, l, m) order.
std::vector<GluingCounts> enumerate_valid_counts(long n_max);

// 1/result = 1/w1 + 1/w2 + ((t-1)/(t+1)) / f.
RatFunc glue(const RatFunc& w1, const RatFunc& w2, const RatFunc& f);

// Growth function of the single totally truncated simplex (engine-computed).
const RatFunc& domino_base_growth();

struct FacetGrowths {
    RatFunc a, b, c;
    // Letter assigned to each vertex-deleted subgraph of the base graph.
    std::array<char, 5> letter_of_deleted_node;
};

// Growth functions of the five vertex-deleted subgraphs grouped into three
// isomorphism classes with multiplicities (2,2,1) and matched against the
// published A(t), B(t), C(t). Throws if any class fails to match.
const FacetGrowths& facet_growths();

RatFunc domino_growth(const GluingCounts& counts);

struct ParamRatFunc {
    ParamPoly num, den;
};

// Symbolic W_{l,m,n} = P/Q with the parameter-independent common factor
// cancelled; num is parameter-free, den has affine coefficients.
const ParamRatFunc& domino_symbolic();

}  // namespace salemforge::gluing
