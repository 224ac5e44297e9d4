#include "salemforge/refdata.hpp"

namespace salemforge::refdata {

namespace {

AffineForm af(long c0, long cl, long cm, long cn) {
    return AffineForm(Int(c0), Int(cl), Int(cm), Int(cn));
}

}  // namespace

const IntPoly& lehmer() {
    static const IntPoly p{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    return p;
}

const IntPoly& two_salem_denominator() {
    static const IntPoly p{1, -4, 1, 0, 1, 1, 0, 2, 0, 2, 0, 1, 1, 0, 1, -4, 1};
    return p;
}

const RatFunc& triangle_237_growth() {
    static const RatFunc f(bracket({2, 2, 3, 7}), lehmer());
    return f;
}

const IntPoly& domino_numerator() {
    static const IntPoly p = bracket({2, 4, 6, 10});
    return p;
}

const IntPoly& domino_denominator() {
    static const IntPoly p{1, -6, 3, -5, 5, -1, 9, 0, 11, -2, 11, 0, 9, -1, 5, -5, 3, -6, 1};
    return p;
}

namespace {

RatFunc make_facet(bool with_t2p1_in_num, const IntPoly& deep_den_factor, bool t2p1_in_den) {
    IntPoly num = -(bracket_poly(2).pow(3) * IntPoly{1, -1, 1} * IntPoly{1, -1, 1, -1, 1});
    if (with_t2p1_in_num) num = num * IntPoly{1, 0, 1};
    IntPoly den = IntPoly{-1, 1} * deep_den_factor;
    if (t2p1_in_den) den = den * IntPoly{1, 0, 1};
    return RatFunc(num, den);
}

}  // namespace

const RatFunc& facet_a_growth() {
    static const RatFunc f = make_facet(true, IntPoly{1, -2, 1, 0, -2, 2, -2, 0, 1, -2, 1}, false);
    return f;
}

const RatFunc& facet_b_growth() {
    static const RatFunc f = make_facet(true, IntPoly{1, -2, 2, -2, 1, -1, 1, -2, 2, -2, 1}, false);
    return f;
}

const RatFunc& facet_c_growth() {
    static const RatFunc f = make_facet(false, IntPoly{1, -2, -1, 3, -1, -2, 1}, true);
    return f;
}

const ParamPoly& domino_denominator_family() {
    static const ParamPoly p(std::vector<AffineForm>{
        af(1, 0, 0, 0),
        af(-6, 0, 0, -4),
        af(3, 0, -1, 2),
        af(-5, -1, 1, -3),
        af(5, 0, -3, 5),
        af(-1, 0, 4, -1),
        af(9, 1, -4, 8),
        af(0, -1, 5, 0),
        af(11, 1, -5, 10),
        af(-2, 0, 6, -2),
        af(11, 1, -5, 10),
        af(0, -1, 5, 0),
        af(9, 1, -4, 8),
        af(-1, 0, 4, -1),
        af(5, 0, -3, 5),
        af(-5, -1, 1, -3),
        af(3, 0, -1, 2),
        af(-6, 0, 0, -4),
        af(1, 0, 0, 0),
    });
    return p;
}

const ParamPoly& kempner_family() {
    static const ParamPoly p(std::vector<AffineForm>{
        af(-84, -8, 52, -68),
        af(3344, 128, -672, 2128),
        af(-34112, -480, 1712, -18432),
        af(111856, -384, 160, 49072),
        af(-128072, 2128, -2888, -28648),
        af(26896, 1920, 2464, -40496),
        af(28832, -736, 1456, 45024),
        af(-12592, -640, -1440, -12272),
        af(828, 120, 180, 588),
        af(32, 0, 0, 32),
    });
    return p;
}

const std::vector<AffineForm>& quadratic_residual() {
    static const std::vector<AffineForm> r{
        af(6, -4, -2, 6),
        af(-3, -2, -1, -3),
        af(-55, 10, 2, -41),
        af(-4, 1, -3, 11),
        af(91, -6, 2, 63),
        af(11, 0, 4, -9),
        af(-43, 1, -1, -29),
        af(-6, 0, -1, 2),
        af(6, 0, 0, 4),
        af(1, 0, 0, 0),
    };
    return r;
}

const BivariateTerms& quartic_residual_f() {
    static const BivariateTerms t{
        {0, 0, af(-1, 0, -1, 1)},
        {0, 1, af(0, 1, 1, -1)},
        {0, 2, af(1, 0, 2, -3)},
        {0, 3, af(2, 0, -1, 2)},
        {0, 4, af(-1, 0, 0, 0)},
        {1, 0, af(15, 2, 2, 9)},
        {1, 1, af(-46, 0, -8, -30)},
        {1, 2, af(-15, -3, 3, -9)},
        {1, 3, af(24, 0, 0, 16)},
        {2, 0, af(2, -1, 3, -5)},
        {2, 1, af(9, 0, -12, 21)},
        {2, 2, af(-24, 0, 6, -12)},
        {2, 3, af(10, 0, 0, 0)},
        {3, 0, af(13, -2, 6, 9)},
        {3, 1, af(68, 4, -4, 44)},
        {3, 2, af(-60, 0, 0, -40)},
        {4, 0, af(-11, 0, 6, -11)},
        {4, 1, af(30, 0, -5, 10)},
        {4, 2, af(-15, 0, 0, 0)},
        {5, 0, af(-29, -1, 1, -19)},
        {5, 1, af(36, 0, 0, 24)},
        {6, 0, af(-8, 0, 1, -2)},
        {6, 1, af(7, 0, 0, 0)},
        {7, 0, af(-6, 0, 0, -4)},
        {8, 0, af(-1, 0, 0, 0)},
    };
    return t;
}

const BivariateTerms& quartic_residual_g() {
    static const BivariateTerms t{
        {0, 0, af(12, 0, 2, 8)},
        {0, 1, af(15, 2, 2, 9)},
        {0, 2, af(-23, 0, -4, -15)},
        {0, 3, af(-5, -1, 1, -3)},
        {0, 4, af(6, 0, 0, 4)},
        {1, 0, af(0, 2, 2, -2)},
        {1, 1, af(4, -1, 7, -11)},
        {1, 2, af(10, 0, -10, 18)},
        {1, 3, af(-14, 0, 3, -6)},
        {1, 4, af(4, 0, 0, 0)},
        {2, 0, af(-46, 0, -8, -30)},
        {2, 1, af(-7, -6, 10, -3)},
        {2, 2, af(87, 3, -3, 57)},
        {2, 3, af(-36, 0, 0, -24)},
        {3, 0, af(6, 0, -8, 14)},
        {3, 1, af(-35, 0, 12, -23)},
        {3, 2, af(36, 0, -4, 8)},
        {3, 3, af(-10, 0, 0, 0)},
        {4, 0, af(34, 2, -2, 22)},
        {4, 1, af(-77, -1, 1, -51)},
        {4, 2, af(30, 0, 0, 20)},
        {5, 0, af(12, 0, -2, 4)},
        {5, 1, af(-18, 0, 1, -2)},
        {5, 2, af(6, 0, 0, 0)},
        {6, 0, af(12, 0, 0, 8)},
        {6, 1, af(-6, 0, 0, -4)},
        {7, 0, af(2, 0, 0, 0)},
        {7, 1, af(-1, 0, 0, 0)},
    };
    return t;
}

const std::map<std::vector<int>, long>& census_reference() {
    static const std::map<std::vector<int>, long> c{
        {{2}, 10},
        {{2, 3}, 4},
        {{2, 5}, 2},
        {{2, 2}, 24},
        {{2, 6, 10}, 6},
        {{2, 3, 4}, 3},
        {{2, 2, 5}, 6},
        {{2, 2, 3}, 12},
        {{2, 2, 2}, 13},
        {{2, 2, 6, 10}, 12},
        {{2, 2, 3, 4}, 6},
        {{2, 2, 2, 2}, 2},
    };
    return c;
}

const std::string& cohn_value_reference() {
    static const std::string v = "2008067839285267472384758820173242349";
    return v;
}

const std::vector<ResidueRowRef>& residue_table_0nn() {
    static const std::vector<ResidueRowRef> t{
        {0, 0, -1, 0, false, 0, 0, kImpossible},
        {1, 0, -26, -4, true, 32, 8, kImpossible},
        {-1, 0, -12, -12, true, -8, -8, -1},
        {0, 1, 1, 0, false, 0, 0, kImpossible},
        {0, -1, -3, -2, true, -15, -14, 0},
        {1, 1, 0, 0, true, -2, -2, -1},
        {-1, 1, 0, 0, true, -6, -4, 0},
        {1, -1, -280, -114, false, 0, 0, kImpossible},
        {-1, -1, 48, 54, true, 78, 82, 0},
    };
    return t;
}

const std::vector<ResidueRowRef>& residue_table_n0n() {
    static const std::vector<ResidueRowRef> t{
        {0, 0, -1, 1, true, 12, 8, kImpossible},
        {1, 0, -26, -24, false, 0, 0, kImpossible},
        {-1, 0, -12, -12, true, -8, -8, -1},
        {0, 1, 1, 0, false, 0, 0, kImpossible},
        {0, -1, -3, -4, true, -15, -10, 0},
        {1, 1, 0, 0, true, -2, -2, -1},
        {-1, 1, 0, 0, true, -6, -4, 0},
        {1, -1, -280, -182, true, 378, 248, kImpossible},
        {-1, -1, 48, 50, true, 78, 74, 0},
    };
    return t;
}

const std::vector<std::pair<Rat, int>>& kempner_sign_table() {
    static const std::vector<std::pair<Rat, int>> t{
        {Rat(-41), -1}, {Rat(-31), 1}, {Rat(0), -1},    {Rat(1, 10), 1}, {Rat(1, 3), -1},
        {Rat(1, 2), 1}, {Rat(1), -1},  {Rat(2), 1},     {Rat(3), -1},    {Rat(9), 1},
    };
    return t;
}

const std::vector<std::pair<Rat, int>>& quadratic_residual_sign_table() {
    static const std::vector<std::pair<Rat, int>> t{
        {Rat(-3), 1}, {Rat(-2), -1},   {Rat(-1), 1}, {Rat(-1, 2), -1}, {Rat(0), 1},
        {Rat(1, 2), -1}, {Rat(1), 1},  {Rat(8, 5), -1}, {Rat(2), 1},
    };
    return t;
}

std::pair<int, int> quadratic_residual_symbolic_signs() { return {-1, 1}; }

std::pair<Rat, Rat> lehmer_root_anchor() { return {Rat(117628, 100000), Rat(1, 100000)}; }
std::pair<Rat, Rat> two_salem_alpha_anchor() { return {Rat(370422, 100000), Rat(1, 100000)}; }
std::pair<Rat, Rat> two_salem_beta_anchor() { return {Rat(124202, 100000), Rat(1, 100000)}; }

}  // namespace salemforge::refdata
