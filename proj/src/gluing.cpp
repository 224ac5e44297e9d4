#include "salemforge/gluing.hpp"

#include "salemforge/refdata.hpp"

#include <numeric>
#include <stdexcept>

namespace salemforge::gluing {

ValidationResult validate_counts(long l, long m, long n) {
    if (l < 0 || m < 0 || n < 0) return {false, "counts must be nonnegative"};
    if (l + m > n) return {false, "l + m exceeds n"};
    long k = n - l - m;
    if (n % 2 == 1) {
        if (2 * k > n + 1) return {false, "n-l-m exceeds (n+1)/2 for odd n"};
    } else {
        if (2 * k > n) return {false, "n-l-m exceeds n/2 for even n"};
    }
    return {true, ""};
}

std::vector<GluingCounts> enumerate_valid_counts(long n_max) {
    std::vector<GluingCounts> out;
    for (long n = 0; n <= n_max; ++n)
        for (long l = 0; l <= n; ++l)
            for (long m = 0; l + m <= n; ++m)
                if (validate_counts(l, m, n).ok) out.push_back({l, m, n});
    return out;
}

namespace {

RatFunc z_factor() { return RatFunc(IntPoly{-1, 1}, IntPoly{1, 1}); }

}  // namespace

RatFunc glue(const RatFunc& w1, const RatFunc& w2, const RatFunc& f) {
    RatFunc inv = w1.reciprocal() + w2.reciprocal() + z_factor() * f.reciprocal();
    if (inv.is_zero()) throw std::domain_error("glue: degenerate combination");
    return inv.reciprocal();
}

const RatFunc& domino_base_growth() {
    static const RatFunc w = coxeter::steinberg_growth(*coxeter::builtin_graph("gamma-star"));
    return w;
}

const FacetGrowths& facet_growths() {
    static const FacetGrowths fg = [] {
        auto gamma = *coxeter::builtin_graph("gamma");
        std::array<RatFunc, 5> growth;
        std::array<coxeter::CoxeterGraph, 5> sub;
        for (int v = 0; v < 5; ++v) {
            sub[v] = gamma.vertex_deleted(v);
            growth[v] = coxeter::steinberg_growth(sub[v]);
        }

        // Group the five subgraphs into isomorphism classes.
        std::vector<std::vector<int>> classes;
        for (int v = 0; v < 5; ++v) {
            bool placed = false;
            for (auto& cls : classes)
                if (coxeter::is_isomorphic(sub[v], sub[cls.front()])) {
                    cls.push_back(v);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({v});
        }
        if (classes.size() != 3)
            throw std::logic_error("facet_growths: expected three isomorphism classes");
        std::vector<std::size_t> sizes;
        for (const auto& cls : classes) sizes.push_back(cls.size());
        std::sort(sizes.begin(), sizes.end());
        if (sizes != std::vector<std::size_t>{1, 2, 2})
            throw std::logic_error("facet_growths: multiplicities are not (2,2,1)");

        // Members of one class share a growth function.
        for (const auto& cls : classes)
            for (int v : cls)
                if (!(growth[v] == growth[cls.front()]))
                    throw std::logic_error("facet_growths: growth differs within a class");

        FacetGrowths fg;
        fg.letter_of_deleted_node.fill('?');
        for (const auto& cls : classes) {
            const RatFunc& w = growth[cls.front()];
            char letter;
            if (w == refdata::facet_a_growth())
                letter = 'A';
            else if (w == refdata::facet_b_growth())
                letter = 'B';
            else if (w == refdata::facet_c_growth())
                letter = 'C';
            else
                throw std::logic_error("facet_growths: computed growth matches no published one");
            if (letter == 'C' && cls.size() != 1)
                throw std::logic_error("facet_growths: type C must have multiplicity 1");
            for (int v : cls) fg.letter_of_deleted_node[v] = letter;
        }
        fg.a = refdata::facet_a_growth();
        fg.b = refdata::facet_b_growth();
        fg.c = refdata::facet_c_growth();
        return fg;
    }();
    return fg;
}

RatFunc domino_growth(const GluingCounts& counts) {
    auto v = validate_counts(counts.l, counts.m, counts.n);
    if (!v.ok) throw std::invalid_argument("domino_growth: " + v.reason);
    const auto& fg = facet_growths();
    RatFunc z = z_factor();
    std::vector<std::pair<Int, RatFunc>> terms{
        {Int(counts.n + 1), domino_base_growth().reciprocal()},
        {Int(counts.l), z * fg.a.reciprocal()},
        {Int(counts.m), z * fg.b.reciprocal()},
        {Int(counts.n - counts.l - counts.m), z * fg.c.reciprocal()},
    };
    RatFunc inv = ratfunc_combine(terms);
    if (inv.is_zero()) throw std::domain_error("domino_growth: degenerate combination");
    return inv.reciprocal();
}

const ParamRatFunc& domino_symbolic() {
    static const ParamRatFunc result = [] {
        const auto& fg = facet_growths();
        RatFunc z = z_factor();
        std::vector<std::pair<AffineForm, RatFunc>> terms{
            {AffineForm(Int(1), Int(0), Int(0), Int(1)), domino_base_growth().reciprocal()},
            {AffineForm(Int(0), Int(1), Int(0), Int(0)), z * fg.a.reciprocal()},
            {AffineForm(Int(0), Int(0), Int(1), Int(0)), z * fg.b.reciprocal()},
            {AffineForm(Int(0), Int(-1), Int(-1), Int(1)), z * fg.c.reciprocal()},
        };

        IntPoly common(Int(1));
        for (const auto& [scale, f] : terms) {
            IntPoly g = gcd(common, f.den());
            common = common * f.den().divide_exact(g);
        }
        ParamPoly num;
        for (const auto& [scale, f] : terms) {
            IntPoly lifted = f.num() * common.divide_exact(f.den());
            num = num + ParamPoly(lifted) * scale;
        }

        // Cancel the parameter-independent common factor across all slices.
        IntPoly g = common;
        for (const IntPoly& s : {num.slice0(), num.slice_l(), num.slice_m(), num.slice_n()})
            if (!s.is_zero()) g = gcd(g, s);
        if (g.is_zero()) throw std::logic_error("domino_symbolic: zero combination");
        if (g.degree() > 0 || g.coeff(0) != 1) {
            num = num.divide_exact(g);
            common = common.divide_exact(g);
        }
        if (sgn(common.coeff(0) != 0 ? common.coeff(0) : common.leading()) < 0) {
            common = -common;
            num = -num;
        }
        // The remaining denominator pair must be fully reduced.
        IntPoly check = common;
        for (const IntPoly& s : {num.slice0(), num.slice_l(), num.slice_m(), num.slice_n()})
            if (!s.is_zero()) check = gcd(check, s);
        if (check.degree() != 0)
            throw std::logic_error("domino_symbolic: common factor failed to cancel");

        // The combination equals 1/W_{l,m,n}; the growth function swaps the pair.
        return ParamRatFunc{ParamPoly(common), num};
    }();
    return result;
}

}  // namespace salemforge::gluing
