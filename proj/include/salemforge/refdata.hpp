#pragma once
// Reference values for the engine's reproduction checks: the published
// growth functions, the closed-form domino family, transform expansions,
// elimination residuals, residue tables, and sign tables.

#include "salemforge/exactpoly.hpp"

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace salemforge::refdata {

// Lehmer's polynomial, the denominator of the (2,3,7) triangle growth
// function.
const IntPoly& lehmer();

// Degree-16 two-Salem denominator used by the classification and Cohn
// examples.
const IntPoly& two_salem_denominator();

// Growth function of the (2,3,7) triangle group.
const RatFunc& triangle_237_growth();

// Growth function numerator/denominator of the totally truncated simplex.
const IntPoly& domino_numerator();    // [2,4,6,10]
const IntPoly& domino_denominator();  // palindromic, degree 18

// Growth functions of the three orthogonal facet types.
const RatFunc& facet_a_growth();
const RatFunc& facet_b_growth();
const RatFunc& facet_c_growth();

// Closed-form family denominator Q_{l,m,n}, 19 affine coefficients.
const ParamPoly& domino_denominator_family();

// Moebius-substitution transform of Q_{l,m,n} as a degree-9 polynomial in
// u = t^2, including the overall factor 4.
const ParamPoly& kempner_family();

// Residual of the quadratic-factor elimination, degree 9 in the unknown a.
const std::vector<AffineForm>& quadratic_residual();

// Residuals of the quartic-factor elimination as (a-exponent, b-exponent,
// coefficient) term lists.
using BivariateTerms = std::vector<std::tuple<int, int, AffineForm>>;
const BivariateTerms& quartic_residual_f();
const BivariateTerms& quartic_residual_g();

// Finite-subset census of the truncated-simplex graph, keyed by bracket
// signature.
const std::map<std::vector<int>, long>& census_reference();

// Exact decimal value of the two-Salem denominator at 186 (a probable
// prime).
const std::string& cohn_value_reference();

struct ResidueRowRef {
    int a, b;
    long f0, f1;  // residual value f at the representatives: f0 + f1*n
    bool has_g;   // the published table leaves g blank when f decides alone
    long g0, g1;
    int verdict;  // kImpossible, or the required residue of n mod 3 (-1, 0, 1)
};
inline constexpr int kImpossible = -2;

const std::vector<ResidueRowRef>& residue_table_0nn();  // gluing counts (0,n,n)
const std::vector<ResidueRowRef>& residue_table_n0n();  // gluing counts (n,0,n)

// Sign tables driving the root-location argument: evaluation points with
// expected strict signs over the whole constraint region.
const std::vector<std::pair<Rat, int>>& kempner_sign_table();
const std::vector<std::pair<Rat, int>>& quadratic_residual_sign_table();
// Signs at the two n-dependent points a = -(4n+6) and a = -(4n+5).
std::pair<int, int> quadratic_residual_symbolic_signs();

// Printed decimal anchors for the growth-rate checks (value, tolerance).
std::pair<Rat, Rat> lehmer_root_anchor();          // ~1.17628
std::pair<Rat, Rat> two_salem_alpha_anchor();      // ~3.70422
std::pair<Rat, Rat> two_salem_beta_anchor();       // ~1.24202

}  // namespace salemforge::refdata
