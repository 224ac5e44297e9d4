#include "salemforge/rootloc.hpp"

#include "salemforge/gluing.hpp"
#include "salemforge/refdata.hpp"

#include <doctest.h>

using namespace salemforge;
using namespace salemforge::rootloc;

TEST_CASE("trace transform") {
    CHECK(trace_transform(IntPoly{1, 0, 1}) == IntPoly{0, 1});
    CHECK(trace_transform(IntPoly{1, 3, 1}) == IntPoly{3, 1});
    CHECK_THROWS_AS(trace_transform(IntPoly{2, 3, 1}), std::invalid_argument);

    IntPoly h = trace_transform(refdata::lehmer());
    CHECK(h.degree() == 5);
    CHECK(sturm_count(h, Rat(-2), Rat(2)) == 4);
    SturmChain chain(h);
    CHECK(chain.count_all() == 5);  // one root outside [-2, 2]
    CHECK(trace_lift(h) == refdata::lehmer());
}

TEST_CASE("kempner transform") {
    CHECK(kempner_transform(IntPoly{1, 0, 1}) == IntPoly{-2, 2});
    CHECK_THROWS_AS(kempner_transform(IntPoly{1, 2, 1}), std::domain_error);  // root at -1

    // Symbolic transform of the family denominator; constant term is
    // -4(21 + 2l - 13m + 17n).
    ParamPoly k = kempner_transform(gluing::domino_symbolic().den);
    CHECK(k == refdata::kempner_family());
    CHECK(k.coeff(0) == AffineForm(Int(-84), Int(-8), Int(52), Int(-68)));
    CHECK(k.coeff(9) == AffineForm(Int(32), Int(0), Int(0), Int(32)));
}

TEST_CASE("sturm counting") {
    CHECK(sturm_count(IntPoly{-2, 0, 1}, Rat(0), Rat(2)) == 1);
    CHECK(sturm_count(IntPoly{1, 0, 1}, Rat(-10), Rat(10)) == 0);
    CHECK_THROWS_AS(sturm_count(IntPoly{-2, 0, 1}, Rat(2), Rat(0)), std::invalid_argument);

    // Endpoint roots are rejected.
    CHECK_THROWS_AS(sturm_count(IntPoly{0, 1}, Rat(0), Rat(1)), std::domain_error);

    // Seven positive roots of the transformed denominator at (3,2,7).
    IntPoly k327 = refdata::kempner_family().specialize(3, 2, 7);
    Rat bound = cauchy_root_bound(k327);
    CHECK(sturm_count(k327, Rat(0), bound) == 7);
    CHECK(sturm_count(k327, -bound, Rat(0)) == 2);
}

TEST_CASE("real root isolation") {
    auto roots = isolate_real_roots(IntPoly{-2, 0, 1});
    REQUIRE(roots.size() == 2);
    const Rat width_bound(1, Int("1000000000000"));
    for (const auto& iv : roots) CHECK(iv.width() < width_bound);
    CHECK(roots[0].hi < 0);
    CHECK(roots[1].lo > 0);
    Rat two(2);
    CHECK(roots[1].lo * roots[1].lo < two);
    CHECK(roots[1].hi * roots[1].hi > two);

    // Exact rational roots are handled.
    auto linear = isolate_real_roots(IntPoly{-1, 1} * IntPoly{-3, 1});
    REQUIRE(linear.size() == 2);
    CHECK(linear[0].contains(Rat(1)));
    CHECK(linear[1].contains(Rat(3)));

    auto lehmer_roots = isolate_real_roots(refdata::lehmer(), Rat(1, 100000));
    REQUIRE(lehmer_roots.size() == 2);
    CHECK(lehmer_roots[1].lo > 1);
    auto [anchor, tol] = refdata::lehmer_root_anchor();
    CHECK(lehmer_roots[1].lo > anchor - tol);
    CHECK(lehmer_roots[1].hi < anchor + tol);
}

TEST_CASE("root profiles") {
    RootProfile q327 = root_profile(gluing::domino_symbolic().den.specialize(3, 2, 7));
    CHECK(q327.circle_pairs == 7);
    CHECK(q327.real_pairs == 2);
    CHECK(q327.unresolved == 0);

    RootProfile d = root_profile(refdata::two_salem_denominator());
    CHECK(d.circle_pairs == 6);
    CHECK(d.real_pairs == 2);

    RootProfile l = root_profile(refdata::lehmer());
    CHECK(l.circle_pairs == 4);
    CHECK(l.real_pairs == 1);

    CHECK_THROWS_AS(root_profile(IntPoly{1, 2, 1}), std::domain_error);     // root at -1
    CHECK_THROWS_AS(root_profile(IntPoly{1, 0, 2, 0, 1}), std::domain_error);  // squares
    CHECK_THROWS_AS(root_profile(IntPoly{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("profile conservation on family members") {
    const auto& sym = gluing::domino_symbolic();
    for (const auto& c : gluing::enumerate_valid_counts(6)) {
        RootProfile p = root_profile(sym.den.specialize(c.l, c.m, c.n));
        CHECK(2 * p.circle_pairs + 2 * p.real_pairs == p.degree);
        CHECK(p.circle_pairs == 7);
        CHECK(p.real_pairs == 2);
    }
}

TEST_CASE("squarefree decomposition") {
    IntPoly f = IntPoly{1, 3, 1}.pow(2) * IntPoly{1, 1, 1};
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair<IntPoly, int>(IntPoly{1, 1, 1}, 1));
    CHECK(parts[1] == std::pair<IntPoly, int>(IntPoly{1, 3, 1}, 2));
}

TEST_CASE("factor reciprocal") {
    // The domino numerator: nine cyclotomic factors counted with
    // multiplicity.
    auto factors = factor_reciprocal(refdata::domino_numerator());
    REQUIRE(factors.size() == 9);
    long ones = 0;
    for (const auto& f : factors) ones += f == IntPoly{1, 1};
    CHECK(ones == 4);
    for (int idx : {3, 4, 5, 6, 10}) {
        bool found = false;
        for (const auto& f : factors) found = found || f == cyclotomic(idx);
        CHECK(found);
    }

    CHECK(factor_reciprocal(refdata::lehmer()).size() == 1);

    auto quads = factor_reciprocal(IntPoly{1, 3, 1} * IntPoly{1, 1, 1});
    REQUIRE(quads.size() == 2);
    CHECK(quads[0] == IntPoly{1, 1, 1});
    CHECK(quads[1] == IntPoly{1, 3, 1});

    // A palindromic product of two non-palindromic reciprocal partners is
    // split correctly.
    auto split = factor_reciprocal(IntPoly{1, 0, -3, 0, 1});
    REQUIRE(split.size() == 2);
    CHECK(split[0] == IntPoly{-1, -1, 1});
    CHECK(split[1] == IntPoly{-1, 1, 1});
}

TEST_CASE("irreducibility") {
    CHECK(is_irreducible(gluing::domino_symbolic().den.specialize(0, 1, 1)));
    CHECK(is_irreducible(refdata::two_salem_denominator()));
    CHECK_FALSE(is_irreducible(IntPoly{1, 3, 1}.pow(2)));
}

TEST_CASE("salem classification") {
    auto lehmer = classify_salem(refdata::lehmer());
    CHECK(lehmer.kind == SalemKind::Salem);
    REQUIRE(lehmer.outside_roots.size() == 1);

    auto d = classify_salem(refdata::two_salem_denominator());
    CHECK(d.kind == SalemKind::TwoSalem);
    REQUIRE(d.outside_roots.size() == 2);
    auto [ba, bt] = refdata::two_salem_beta_anchor();
    auto [aa, at] = refdata::two_salem_alpha_anchor();
    CHECK(d.outside_roots[0].lo > ba - bt);
    CHECK(d.outside_roots[0].hi < ba + bt);
    CHECK(d.outside_roots[1].lo > aa - at);
    CHECK(d.outside_roots[1].hi < aa + at);

    CHECK(classify_salem(cyclotomic(5)).kind == SalemKind::Neither);
}

TEST_CASE("growth rate intervals") {
    auto tau = growth_rate(refdata::lehmer());
    auto [anchor, tol] = refdata::lehmer_root_anchor();
    CHECK(tau.lo > anchor - tol);
    CHECK(tau.hi < anchor + tol);
    CHECK(tau.width() < Rat(1, Int("1000000000000")));

    auto unit = growth_rate(IntPoly{1, -1});
    CHECK(unit.contains(Rat(1)));

    CHECK_THROWS_AS(growth_rate(IntPoly{1, 0, 1}), std::domain_error);

    // tau lies inside (4n+5, 4n+m+l+6) for a family member.
    IntPoly q = gluing::domino_symbolic().den.specialize(3, 2, 7);
    auto t = growth_rate(q);
    CHECK(t.lo > 4 * 7 + 5);
    CHECK(t.hi < 4 * 7 + 2 + 3 + 6);
}

TEST_CASE("cohn scan") {
    auto d = cohn_check(refdata::two_salem_denominator(), 200);
    CHECK(d.height == 4);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->n <= 186);

    Int value186 = refdata::two_salem_denominator().eval(Int(186));
    CHECK(value186.get_str() == refdata::cohn_value_reference());
    CHECK(probable_prime(value186));

    auto small = cohn_check(IntPoly{4, 1, 1}, 50);
    CHECK(small.height == 4);
    REQUIRE(small.witness.has_value());
    CHECK(small.witness->n >= 6);  // scan starts at H + 2
}

TEST_CASE("probable prime") {
    CHECK(probable_prime(Int(2)));
    CHECK(probable_prime(Int(97)));
    CHECK_FALSE(probable_prime(Int(1)));
    CHECK_FALSE(probable_prime(Int(561)));   // Carmichael
    CHECK_FALSE(probable_prime(Int(25326001)));
    CHECK(probable_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
    CHECK_FALSE(probable_prime(Int("170141183460469231731687303715884105725")));
}
