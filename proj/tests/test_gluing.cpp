#include "salemforge/gluing.hpp"

#include "salemforge/refdata.hpp"
#include "salemforge/rootloc.hpp"

#include <doctest.h>

#include <random>

using namespace salemforge;
using namespace salemforge::gluing;

TEST_CASE("count validation") {
    CHECK(validate_counts(3, 2, 7).ok);
    CHECK_FALSE(validate_counts(0, 0, 3).ok);  // 3 > (3+1)/2
    CHECK(validate_counts(0, 5, 5).ok);
    CHECK(validate_counts(0, 0, 1).ok);  // 1 <= (1+1)/2
    CHECK_FALSE(validate_counts(-1, 0, 0).ok);
    CHECK_FALSE(validate_counts(2, 2, 3).ok);  // l+m > n
    CHECK_FALSE(validate_counts(0, 0, 2).ok);  // 2 > 2/2

    auto counts = enumerate_valid_counts(1);
    REQUIRE(counts.size() == 4);
    CHECK(counts[0].n == 0);
    CHECK(counts[1].l == 0);
    CHECK(counts[1].m == 0);
    CHECK(counts[2].m == 1);
    CHECK(counts[3].l == 1);
}

TEST_CASE("facet growth functions match the published ones") {
    const auto& fg = facet_growths();
    CHECK(fg.a == refdata::facet_a_growth());
    CHECK(fg.b == refdata::facet_b_growth());
    CHECK(fg.c == refdata::facet_c_growth());
    // Multiplicities (A:2, B:2, C:1); the cycle with labels (5,3,5,3) is C.
    int a = 0, b = 0, c = 0;
    for (char letter : fg.letter_of_deleted_node) {
        a += letter == 'A';
        b += letter == 'B';
        c += letter == 'C';
    }
    CHECK(a == 2);
    CHECK(b == 2);
    CHECK(c == 1);
    CHECK(fg.letter_of_deleted_node[4] == 'C');
    // A and B share their numerator.
    CHECK(fg.a.num() == fg.b.num());
    // C's denominator carries the printed degree-6 factor.
    CHECK(fg.c.den().try_divide(IntPoly{1, -2, -1, 3, -1, -2, 1}).has_value());
}

TEST_CASE("base growth function") {
    const RatFunc& w = domino_base_growth();
    CHECK(w.num() == refdata::domino_numerator());
    CHECK(w.den() == refdata::domino_denominator());
}

TEST_CASE("glue is symmetric and matches the closed form") {
    const RatFunc& w = domino_base_growth();
    const auto& fg = facet_growths();
    const auto& sym = domino_symbolic();

    RatFunc wb = glue(w, w, fg.b);
    CHECK(wb == glue(w, w, fg.b));
    CHECK(glue(w, w, fg.a) == glue(w, w, fg.a));

    CHECK(wb == RatFunc(sym.num.specialize(0, 1, 1), sym.den.specialize(0, 1, 1)));
    CHECK(glue(w, w, fg.a) == RatFunc(sym.num.specialize(1, 0, 1), sym.den.specialize(1, 0, 1)));
}

TEST_CASE("domino growth specializations") {
    RatFunc w000 = domino_growth({0, 0, 0});
    CHECK(w000.num() == refdata::domino_numerator());
    CHECK(w000.den() == refdata::domino_denominator());

    RatFunc w327 = domino_growth({3, 2, 7});
    CHECK(w327.den().coeff(17) == -34);
    CHECK(w327.den().coeff(16) == 15);

    CHECK_THROWS_AS(domino_growth({0, 0, 3}), std::invalid_argument);
}

TEST_CASE("symbolic closed form") {
    const auto& sym = domino_symbolic();
    CHECK(sym.num == ParamPoly(refdata::domino_numerator()));
    CHECK(sym.den == refdata::domino_denominator_family());
    CHECK(sym.den.coeff(11) == AffineForm(Int(0), Int(-1), Int(5), Int(0)));
    // Value at t = 1 is 32 + 32n.
    CHECK(sym.den.eval_scaled(Int(1), Int(1)) == AffineForm(Int(32), Int(0), Int(0), Int(32)));
    CHECK(sym.den.is_palindromic());
}

TEST_CASE("random specializations agree with the gluing formula") {
    const auto& sym = domino_symbolic();
    auto triples = enumerate_valid_counts(60);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& c = triples[rng() % triples.size()];
        RatFunc direct = domino_growth(c);
        IntPoly qs = sym.den.specialize(c.l, c.m, c.n);
        CHECK(direct == RatFunc(sym.num.specialize(c.l, c.m, c.n), qs));
        CHECK(qs.is_palindromic());
        CHECK(qs.degree() == 18);
        // Coprime to the numerator, hence to every cyclotomic factor of it.
        CHECK(gcd(qs, refdata::domino_numerator()).degree() == 0);
    }
}

TEST_CASE("iterated gluing is order-independent") {
    const RatFunc& w = domino_base_growth();
    const auto& fg = facet_growths();
    for (const auto& c : enumerate_valid_counts(4)) {
        std::string letters;
        letters.append(static_cast<std::size_t>(c.l), 'A');
        letters.append(static_cast<std::size_t>(c.m), 'B');
        letters.append(static_cast<std::size_t>(c.n - c.l - c.m), 'C');
        RatFunc expect = domino_growth(c);
        std::vector<std::string> orders{letters, {letters.rbegin(), letters.rend()}};
        for (const auto& order : orders) {
            RatFunc chain = w;
            for (char f : order)
                chain = glue(chain, w, f == 'A' ? fg.a : f == 'B' ? fg.b : fg.c);
            CHECK(chain == expect);
        }
    }
}
