#include "salemforge/exactpoly.hpp"

#include <doctest.h>

#include <random>

using namespace salemforge;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::vector<Int> c(static_cast<std::size_t>(rng() % (max_deg + 1)) + 1);
    for (auto& x : c) x = Int(static_cast<long>(rng() % 11) - 5);
    return IntPoly(std::move(c));
}

AffineForm random_affine(std::mt19937_64& rng) {
    auto small = [&rng] { return Int(static_cast<long>(rng() % 7) - 3); };
    return AffineForm(small(), small(), small(), small());
}

}  // namespace

TEST_CASE("bracket basics") {
    CHECK(bracket({2}) == IntPoly{1, 1});
    CHECK(bracket({}) == IntPoly(Int(1)));
    // [2,3] = (1+t)(1+t+t^2); value at 1 is the order of the symmetric group
    // on three letters.
    CHECK(bracket({2, 3}) == IntPoly{1, 1} * IntPoly{1, 1, 1});
    CHECK(bracket({2, 3}).eval(Int(1)) == 6);
    CHECK_THROWS_AS(bracket({0}), std::invalid_argument);
}

TEST_CASE("bracket [2,4,6,10] equals its cyclotomic factorization") {
    IntPoly lhs = bracket({2, 4, 6, 10});
    IntPoly rhs = cyclotomic(2).pow(4) * cyclotomic(3) * cyclotomic(4) * cyclotomic(5) *
                  cyclotomic(6) * cyclotomic(10);
    CHECK(lhs == rhs);
    CHECK(lhs.degree() == 18);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(10) == IntPoly{1, -1, 1, -1, 1});
    for (int i = 1; i <= 30; ++i) {
        IntPoly product(Int(1));
        for (int d = 1; d <= i; ++d)
            if (i % d == 0) product = product * cyclotomic(d);
        std::vector<Int> expect(static_cast<std::size_t>(i) + 1, Int(0));
        expect.front() = -1;
        expect.back() = 1;
        CHECK(product == IntPoly(std::move(expect)));
    }
}

TEST_CASE("ratfunc combination") {
    RatFunc half(IntPoly(Int(1)), IntPoly{1, 1});
    CHECK(ratfunc_combine({{Int(1), half}, {Int(1), half}}) ==
          RatFunc(IntPoly(Int(2)), IntPoly{1, 1}));

    // 1 - 2/[2] = (t-1)/(t+1), the reciprocal growth of the infinite
    // dihedral group.
    RatFunc one(IntPoly(Int(1)));
    CHECK(ratfunc_combine({{Int(1), one}, {Int(-2), half}}) ==
          RatFunc(IntPoly{-1, 1}, IntPoly{1, 1}));
}

TEST_CASE("ratfunc reduction keeps the pair coprime and normalized") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly num = random_poly(rng, 6);
        IntPoly den = random_poly(rng, 6);
        if (den.is_zero()) continue;
        RatFunc f(num, den);
        if (f.is_zero()) {
            CHECK(f.den() == IntPoly(Int(1)));
            continue;
        }
        IntPoly g = gcd(f.num(), f.den());
        CHECK(g.degree() == 0);
        CHECK(g.coeff(0) == 1);
        Int d0 = f.den().coeff(0);
        if (d0 != 0)
            CHECK(d0 > 0);
        else
            CHECK(f.den().leading() > 0);
    }
}

TEST_CASE("reciprocal transform") {
    CHECK(reciprocal_transform(IntPoly{2, 1}, 1) == IntPoly{1, 2});
    CHECK(reciprocal_transform(IntPoly{0, 3, 1}, 2) == IntPoly{1, 3});
    IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    CHECK(reciprocal_transform(lehmer, 10) == lehmer);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        IntPoly f = random_poly(rng, 5), g = random_poly(rng, 5);
        if (f.is_zero() || g.is_zero()) continue;
        auto df = static_cast<std::size_t>(f.degree());
        auto dg = static_cast<std::size_t>(g.degree());
        CHECK(reciprocal_transform(f * g, df + dg) ==
              reciprocal_transform(f, df) * reciprocal_transform(g, dg));
    }
}

TEST_CASE("palindromic predicate") {
    CHECK(is_palindromic(IntPoly{1, 3, 1}));
    CHECK_FALSE(is_palindromic(IntPoly{2, 3, 1}));
}

TEST_CASE("affine forms") {
    AffineForm a(Int(1), Int(2), Int(0), Int(-1));
    CHECK(a.specialize(Int(3), Int(5), Int(7)) == 1 + 6 - 7);
    CHECK((a * Int(3)).c0() == 3);
    CHECK_THROWS_AS(a * a, std::domain_error);
    CHECK((a * AffineForm(Int(4))).cl() == 8);
    CHECK(AffineForm(Int(0), Int(-1), Int(5), Int(0)).to_string() == "-l+5m");
    CHECK(AffineForm(Int(32), Int(0), Int(0), Int(32)).to_string() == "32+32n");
}

TEST_CASE("param poly specialization is a ring morphism") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<AffineForm> ac(1 + rng() % 4), bc(1 + rng() % 4);
        for (auto& c : ac) c = random_affine(rng);
        for (auto& c : bc) c = random_affine(rng);
        // Keep one side parameter-free so the product stays affine.
        for (auto& c : bc) c = AffineForm(c.c0());
        ParamPoly a(ac), b(bc);
        Int l(static_cast<long>(rng() % 9)), m(static_cast<long>(rng() % 9)),
            n(static_cast<long>(rng() % 9));
        CHECK((a * b).specialize(l, m, n) == a.specialize(l, m, n) * b.specialize(l, m, n));
        CHECK((a + b).specialize(l, m, n) == a.specialize(l, m, n) + b.specialize(l, m, n));
    }
}

TEST_CASE("param poly slices and exact division") {
    ParamPoly p(std::vector<AffineForm>{AffineForm(Int(2), Int(4), Int(0), Int(0)),
                                        AffineForm(Int(0), Int(0), Int(2), Int(6))});
    IntPoly two(Int(2));
    ParamPoly half = p.divide_exact(two);
    CHECK(half.coeff(0) == AffineForm(Int(1), Int(2), Int(0), Int(0)));
    CHECK(half.coeff(1) == AffineForm(Int(0), Int(0), Int(1), Int(3)));
    CHECK(p.slice_m() == IntPoly{0, 1} * Int(2));
    CHECK_THROWS_AS(p.divide_exact(IntPoly{0, 1}), std::domain_error);
}

TEST_CASE("zero param poly specializes to zero") {
    ParamPoly zero;
    CHECK(zero.specialize(Int(3), Int(4), Int(5)).is_zero());
}

TEST_CASE("polynomial text round trip") {
    IntPoly q{1, -6, 3};
    CHECK(q.to_string() == "1 -6 3");
    CHECK(IntPoly::parse("1 -6 3") == q);
    CHECK_THROWS_AS(IntPoly::parse("1 x 3"), std::invalid_argument);
}

TEST_CASE("division and gcd") {
    IntPoly a{1, 3, 1};
    IntPoly b{1, 1, 1};
    IntPoly prod = a * b;
    CHECK(prod.divide_exact(a) == b);
    CHECK_FALSE(prod.try_divide(IntPoly{1, 1}).has_value());
    CHECK(gcd(prod, a * IntPoly{5, 5}) == a);
}
