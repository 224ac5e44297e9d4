#include "salemforge/certify.hpp"

#include "salemforge/gluing.hpp"
#include "salemforge/refdata.hpp"

#include <doctest.h>

#include <random>

using namespace salemforge;
using namespace salemforge::certify;

namespace {

MultiPoly from_terms(const refdata::BivariateTerms& terms) {
    MultiPoly p;
    for (const auto& [ea, eb, c] : terms) {
        MultiPoly mono = MultiPoly::constant(c);
        for (int i = 0; i < ea; ++i) mono = mono * MultiPoly::variable(0);
        for (int i = 0; i < eb; ++i) mono = mono * MultiPoly::variable(1);
        p = p + mono;
    }
    return p;
}

// Random integer point of the constraint region with the given parity.
std::array<long, 3> random_region_point(std::mt19937_64& rng, bool odd) {
    while (true) {
        long n = static_cast<long>(rng() % 80);
        if ((n % 2 == 1) != odd) continue;
        long l = static_cast<long>(rng() % (n + 1));
        long m = static_cast<long>(rng() % (n - l + 1));
        if (gluing::validate_counts(l, m, n).ok) return {l, m, n};
    }
}

}  // namespace

TEST_CASE("multipoly arithmetic stays affine") {
    MultiPoly a = MultiPoly::variable(0);
    MultiPoly c = MultiPoly::constant(AffineForm(Int(2), Int(1), Int(0), Int(0)));
    MultiPoly p = (a * a) * c + a;
    CHECK(p.coefficient({2, 0, 0, 0}) == AffineForm(Int(2), Int(1), Int(0), Int(0)));
    CHECK(p.evaluate({Int(3)}) ==
          AffineForm(Int(2), Int(1), Int(0), Int(0)) * Int(9) + AffineForm(Int(3)));
    CHECK_THROWS_AS(c * c, std::domain_error);
}

TEST_CASE("quadratic-factor residual matches the printed polynomial") {
    auto sys = residual_system(1);
    CHECK(sys.factor_degree == 2);
    CHECK(sys.cofactor.size() == 8);
    REQUIRE(sys.residuals.size() == 1);
    CHECK(sys.residuals[0].univariate() == refdata::quadratic_residual());
}

TEST_CASE("quartic-factor residuals match the printed pair") {
    auto sys = residual_system(2);
    CHECK(sys.cofactor.size() == 7);
    REQUIRE(sys.residuals.size() == 2);
    // First substitution line: c_1 = -a + (-6 - 4n).
    MultiPoly expect_c1 = MultiPoly::constant(AffineForm(Int(-6), Int(0), Int(0), Int(-4))) -
                          MultiPoly::variable(0);
    CHECK(sys.cofactor[0] == expect_c1);
    CHECK(sys.residuals[0] == from_terms(refdata::quartic_residual_f()));
    CHECK(sys.residuals[1] == from_terms(refdata::quartic_residual_g()));
}

TEST_CASE("elimination is consistent with direct coefficient comparison") {
    // For random integer unknowns, building the candidate product with the
    // forward-substituted cofactor must match the family denominator in
    // every compared coefficient, leaving exactly the residuals.
    const ParamPoly& q = gluing::domino_symbolic().den;
    auto sys = residual_system(2);
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 25; ++trial) {
        Int a(static_cast<long>(rng() % 7) - 3), b(static_cast<long>(rng() % 7) - 3);
        Int l(static_cast<long>(rng() % 5)), m(static_cast<long>(rng() % 5)),
            n(static_cast<long>(rng() % 20));
        std::vector<Int> cof;
        for (const auto& c : sys.cofactor) cof.push_back(c.evaluate({a, b}).specialize(l, m, n));
        // Palindromic factor and cofactor as integer polynomials.
        std::vector<Int> fac{Int(1), a, b, a, Int(1)};
        std::vector<Int> cofv{Int(1)};
        cofv.insert(cofv.end(), cof.begin(), cof.end());
        for (std::size_t k = cof.size() - 1; k-- > 0;) cofv.push_back(cof[k]);
        cofv.push_back(Int(1));
        IntPoly product = IntPoly(fac) * IntPoly(cofv);
        IntPoly qs = q.specialize(l, m, n);
        for (std::size_t j = 1; j <= 7; ++j) CHECK(product.coeff(j) == qs.coeff(j));
        CHECK(product.coeff(8) - qs.coeff(8) ==
              sys.residuals[0].evaluate({a, b}).specialize(l, m, n));
        CHECK(product.coeff(9) - qs.coeff(9) ==
              sys.residuals[1].evaluate({a, b}).specialize(l, m, n));
    }
}

TEST_CASE("sign certificates") {
    // (1/4) K(0) = -21 - 2l + 13m - 17n is strictly negative.
    AffineForm k0(Int(-21), Int(-2), Int(13), Int(-17));
    auto neg = sign_certificate(k0, Parity::Both);
    REQUIRE(neg.has_value());
    CHECK(neg->verdict == -1);

    auto pos = sign_certificate(AffineForm(Int(32), Int(0), Int(0), Int(32)), Parity::Both);
    REQUIRE(pos.has_value());
    CHECK(pos->verdict == 1);

    auto neg2 = sign_certificate(AffineForm(Int(-32), Int(0), Int(0), Int(-32)), Parity::Both);
    REQUIRE(neg2.has_value());
    CHECK(neg2->verdict == -1);

    // 5m - l changes sign over the region: no certificate.
    CHECK_FALSE(sign_certificate(AffineForm(Int(0), Int(-1), Int(5), Int(0)), Parity::Both)
                    .has_value());
}

TEST_CASE("certified signs never contradict sampled region points") {
    std::vector<AffineForm> expressions{
        AffineForm(Int(-21), Int(-2), Int(13), Int(-17)),
        AffineForm(Int(32), Int(0), Int(0), Int(32)),
        AffineForm(Int(5784), Int(308), Int(748), Int(7368)),
    };
    std::mt19937_64 rng(787);
    for (const auto& expr : expressions) {
        auto cert = sign_certificate(expr, Parity::Both);
        REQUIRE(cert.has_value());
        for (int trial = 0; trial < 1000; ++trial) {
            auto [l, m, n] = random_region_point(rng, trial % 2 == 0);
            Int value = expr.specialize(l, m, n);
            CHECK(sgn(value) == cert->verdict);
        }
    }
}

TEST_CASE("root-location tables certify") {
    auto report = verify_root_location_tables();
    CHECK(report.all_certified);
    CHECK(report.residual_has_no_integer_root);
    CHECK(report.points.size() == 10 + 9 + 2);
    for (const auto& p : report.points) CHECK(p.certified);
}

TEST_CASE("residual values at printed checkpoints") {
    auto residual = residual_system(1).residuals[0].univariate();
    // f(-3) = 5784 + 308l + 748m + 7368n, f(-2) = -32 - 32n.
    AffineForm at_m3;
    AffineForm at_m2;
    Int p3(1), p2(1);
    for (std::size_t k = 0; k < residual.size(); ++k) {
        at_m3 = at_m3 + residual[k] * p3;
        at_m2 = at_m2 + residual[k] * p2;
        p3 *= -3;
        p2 *= -2;
    }
    CHECK(at_m3 == AffineForm(Int(5784), Int(308), Int(748), Int(7368)));
    CHECK(at_m2 == AffineForm(Int(-32), Int(0), Int(0), Int(-32)));
}

TEST_CASE("quadratic residual has no integer root at small scale") {
    auto residual = residual_system(1).residuals[0].univariate();
    for (const auto& c : gluing::enumerate_valid_counts(12)) {
        for (long a = -(4 * c.n + 7); a <= 3; ++a) {
            AffineForm value;
            Int apow(1);
            for (std::size_t k = 0; k < residual.size(); ++k) {
                value = value + residual[k] * apow;
                apow *= a;
            }
            CHECK(value.specialize(c.l, c.m, c.n) != 0);
        }
    }
}

TEST_CASE("residue tables match the printed tables") {
    auto check_table = [](Specialization s, const std::vector<refdata::ResidueRowRef>& refs) {
        auto rows = residue_tables(s);
        REQUIRE(rows.size() == refs.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CAPTURE(i);
            CHECK(rows[i].a == refs[i].a);
            CHECK(rows[i].b == refs[i].b);
            CHECK(rows[i].f0 == refs[i].f0);
            CHECK(rows[i].f1 == refs[i].f1);
            CHECK(rows[i].has_g == refs[i].has_g);
            if (rows[i].has_g) {
                CHECK(rows[i].g0 == refs[i].g0);
                CHECK(rows[i].g1 == refs[i].g1);
            }
            int want = refs[i].verdict == refdata::kImpossible ? kRowImpossible : refs[i].verdict;
            CHECK(rows[i].verdict == want);
        }
    };
    check_table(Specialization::ZeroNN, refdata::residue_table_0nn());
    check_table(Specialization::NZeroN, refdata::residue_table_n0n());
}

TEST_CASE("residue tables are self-consistent") {
    // Evaluating the residuals at concrete small (a, b, n) agrees with the
    // tabulated affine values.
    auto sys = residual_system(2);
    for (auto s : {Specialization::ZeroNN, Specialization::NZeroN}) {
        auto rows = residue_tables(s);
        for (const auto& row : rows)
            for (long n = 0; n <= 6; ++n) {
                Int l = s == Specialization::ZeroNN ? 0 : n;
                Int m = s == Specialization::ZeroNN ? n : 0;
                Int direct =
                    sys.residuals[0].evaluate({Int(row.a), Int(row.b)}).specialize(l, m, n);
                CHECK(direct == row.f0 + row.f1 * n);
            }
    }
}

TEST_CASE("mod-3 sweeps exclude small palindromic factors at n = 1 mod 3") {
    for (auto s : {Specialization::ZeroNN, Specialization::NZeroN}) {
        auto verdict = no_small_palindromic_factor(s);
        CHECK(verdict.sweeps[0].d == 2);
        CHECK(verdict.sweeps[0].conclusive());
        CHECK(verdict.sweeps[1].d == 3);
        CHECK(verdict.sweeps[2].d == 4);
    }
}
