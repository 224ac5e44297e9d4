#pragma once
// Certified root location for the palindromic denominators: Sturm
// sequences over exact rationals, isolating intervals, the trace and
// Moebius-substitution transforms, complete factorization of reciprocal
// polynomials, Salem / 2-Salem classification, growth-rate intervals,
// and Cohn's irreducibility criterion.

#include "salemforge/exactpoly.hpp"

#include <optional>
#include <vector>

namespace salemforge::rootloc {

// Open interval with rational endpoints containing exactly one root of the
// polynomial it was isolated for.
struct IsolatingInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo < x && x < hi; }
};

struct RootProfile {
    long degree = 0;
    long circle_pairs = 0;  // conjugate pairs on the unit circle
    long real_pairs = 0;    // reciprocal real pairs off the circle
    long unresolved = 0;    // 0 on success
};

// The unique h with f(t) = t^d h(t + 1/t) for palindromic f of degree 2d;
// verified by exact re-expansion.
IntPoly trace_transform(const IntPoly& f);

// Inverse of the trace transform: t^deg(h) * h(t + 1/t).
IntPoly trace_lift(const IntPoly& h);

// (t-i)^n f((t+i)/(t-i)) written in u = t^2. Requires f palindromic of even
// degree n with f(1) != 0 and f(-1) != 0. The expansion is over Gaussian
// integers; vanishing of every imaginary part and every odd coefficient is
// asserted.
IntPoly kempner_transform(const IntPoly& f);
ParamPoly kempner_transform(const ParamPoly& f);

// Sturm chain of a squarefree polynomial; rows are primitive integer
// polynomials equal to positive multiples of the signed remainders.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& squarefree);
    // Distinct real roots in (lo, hi]; endpoints must not be roots of the
    // first chain element when used for open-interval counts.
    long count(const Rat& lo, const Rat& hi) const;
    long count_all() const;  // all real roots
    int variations_at(const Rat& x) const;
    int variations_at_infinity(int direction) const;  // +1 or -1
    const IntPoly& polynomial() const { return rows_.front(); }

private:
    std::vector<IntPoly> rows_;
};

// Number of distinct real roots of squarefree p in the open interval.
// Throws if an endpoint is a root or if p is not squarefree.
long sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi);

// 1 + max |a_i| / |lead|; every real root lies strictly inside (-B, B).
Rat cauchy_root_bound(const IntPoly& p);

// Disjoint rational intervals, one per distinct real root, each of width
// less than `width`.
std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p,
                                                  const Rat& width = Rat(1, Int("1000000000000")));

// Halves an isolating interval (sign-change bisection) until it is narrower
// than `width`.
IsolatingInterval refine_interval(const IntPoly& p, IsolatingInterval iv, const Rat& width);

// Counts unit-circle and off-circle root pairs two ways (Moebius route and
// trace route) and requires agreement. Input must be palindromic of even
// degree, squarefree, nonzero at +-1.
RootProfile root_profile(const IntPoly& f);

// Complete irreducible factorization over Z of a monic palindromic
// polynomial whose roots all lie on the unit circle or the real line
// (after removing roots at +-1). Factors are repeated per multiplicity and
// sorted; their product is verified to equal the input.
std::vector<IntPoly> factor_reciprocal(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

// Squarefree decomposition f = prod p_i^i for monic f (Yun).
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

enum class SalemKind { Salem, TwoSalem, Neither };

struct SalemClass {
    SalemKind kind = SalemKind::Neither;
    // Isolating intervals for the real roots greater than 1, ascending
    // (beta before alpha for a 2-Salem polynomial).
    std::vector<IsolatingInterval> outside_roots;
};

SalemClass classify_salem(const IntPoly& f);

// Isolates the smallest positive root of q and returns the interval of its
// reciprocal, narrower than 10^-12.
IsolatingInterval growth_rate(const IntPoly& q);

struct CohnResult {
    Int height;  // max |a_i| over non-leading coefficients
    struct Witness {
        long n;
        Int value;
    };
    std::optional<Witness> witness;
};

// Scans n = H+2, H+3, ... for a (strong probable) prime value of monic f.
CohnResult cohn_check(const IntPoly& f, long scan_limit = 1000, int mr_rounds = 64);

// Strong probable-prime test (Miller-Rabin), fixed small bases followed by
// deterministic pseudorandom bases.
bool probable_prime(const Int& n, int rounds = 64);

}  // namespace salemforge::rootloc
