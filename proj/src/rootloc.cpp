#include "salemforge/rootloc.hpp"

#include <algorithm>
#include <stdexcept>

namespace salemforge::rootloc {

// ---------------------------------------------------------------------------
// Transforms

IntPoly trace_transform(const IntPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("trace_transform: zero polynomial");
    if (!f.is_palindromic() || f.degree() % 2 != 0)
        throw std::invalid_argument("trace_transform: palindromic even degree required");
    const long d = f.degree() / 2;
    // t^k + t^{-k} in x = t + 1/t: V_0 = 2, V_1 = x, V_k = x V_{k-1} - V_{k-2}.
    IntPoly h(f.coeff(static_cast<std::size_t>(d)));
    IntPoly vprev(Int(2));
    IntPoly v = IntPoly::x();
    for (long k = 1; k <= d; ++k) {
        h = h + v * f.coeff(static_cast<std::size_t>(d + k));
        IntPoly vnext = IntPoly::x() * v - vprev;
        vprev = v;
        v = vnext;
    }
    if (!(trace_lift(h) == f)) throw std::logic_error("trace_transform: re-expansion mismatch");
    return h;
}

IntPoly trace_lift(const IntPoly& h) {
    if (h.is_zero()) return {};
    const long d = h.degree();
    IntPoly f;
    const IntPoly t2p1{1, 0, 1};
    for (long j = 0; j <= d; ++j) {
        IntPoly term = t2p1.pow(static_cast<unsigned>(j)) * h.coeff(static_cast<std::size_t>(j));
        f = f + IntPoly::monomial(Int(1), static_cast<std::size_t>(d - j)) * term;
    }
    return f;
}

namespace {

// Polynomials over Gaussian integers, coefficients (re, im) ascending.
using GaussPoly = std::vector<std::pair<Int, Int>>;

GaussPoly gauss_mul(const GaussPoly& a, const GaussPoly& b) {
    GaussPoly c(a.size() + b.size() - 1, {Int(0), Int(0)});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j].first += a[i].first * b[j].first - a[i].second * b[j].second;
            c[i + j].second += a[i].first * b[j].second + a[i].second * b[j].first;
        }
    return c;
}

// (t+i)^k and (t-i)^k for k = 0..n.
std::vector<GaussPoly> gauss_powers(long n, bool plus_i) {
    std::vector<GaussPoly> p;
    p.push_back({{Int(1), Int(0)}});
    GaussPoly base{{Int(0), plus_i ? Int(1) : Int(-1)}, {Int(1), Int(0)}};
    for (long k = 1; k <= n; ++k) p.push_back(gauss_mul(p.back(), base));
    return p;
}

}  // namespace

IntPoly kempner_transform(const IntPoly& f) {
    if (!f.is_palindromic() || f.degree() < 2 || f.degree() % 2 != 0)
        throw std::invalid_argument("kempner_transform: palindromic even degree required");
    if (f.eval(Int(1)) == 0 || f.eval(Int(-1)) == 0)
        throw std::domain_error("kempner_transform: polynomial vanishes at +-1");
    const long n = f.degree();
    auto plus = gauss_powers(n, true);
    auto minus = gauss_powers(n, false);
    GaussPoly g(static_cast<std::size_t>(n) + 1, {Int(0), Int(0)});
    for (long k = 0; k <= n; ++k) {
        Int a = f.coeff(static_cast<std::size_t>(k));
        if (a == 0) continue;
        GaussPoly term = gauss_mul(plus[static_cast<std::size_t>(k)],
                                   minus[static_cast<std::size_t>(n - k)]);
        for (std::size_t j = 0; j < term.size(); ++j) {
            g[j].first += a * term[j].first;
            g[j].second += a * term[j].second;
        }
    }
    std::vector<Int> u(static_cast<std::size_t>(n / 2) + 1);
    for (long j = 0; j <= n; ++j) {
        if (g[static_cast<std::size_t>(j)].second != 0)
            throw std::logic_error("kempner_transform: nonzero imaginary residue");
        if (j % 2 == 1) {
            if (g[static_cast<std::size_t>(j)].first != 0)
                throw std::logic_error("kempner_transform: odd coefficient survived");
        } else {
            u[static_cast<std::size_t>(j / 2)] = g[static_cast<std::size_t>(j)].first;
        }
    }
    return IntPoly(std::move(u));
}

ParamPoly kempner_transform(const ParamPoly& f) {
    if (!f.is_palindromic() || f.degree() < 2 || f.degree() % 2 != 0)
        throw std::invalid_argument("kempner_transform: palindromic even degree required");
    const long n = f.degree();
    auto plus = gauss_powers(n, true);
    auto minus = gauss_powers(n, false);
    std::vector<std::pair<AffineForm, AffineForm>> g(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        AffineForm a = f.coeff(static_cast<std::size_t>(k));
        if (a.is_zero()) continue;
        GaussPoly term = gauss_mul(plus[static_cast<std::size_t>(k)],
                                   minus[static_cast<std::size_t>(n - k)]);
        for (std::size_t j = 0; j < term.size(); ++j) {
            g[j].first = g[j].first + a * term[j].first;
            g[j].second = g[j].second + a * term[j].second;
        }
    }
    std::vector<AffineForm> u(static_cast<std::size_t>(n / 2) + 1);
    for (long j = 0; j <= n; ++j) {
        if (!g[static_cast<std::size_t>(j)].second.is_zero())
            throw std::logic_error("kempner_transform: nonzero imaginary residue");
        if (j % 2 == 1) {
            if (!g[static_cast<std::size_t>(j)].first.is_zero())
                throw std::logic_error("kempner_transform: odd coefficient survived");
        } else {
            u[static_cast<std::size_t>(j / 2)] = g[static_cast<std::size_t>(j)].first;
        }
    }
    return ParamPoly(std::move(u));
}

// ---------------------------------------------------------------------------
// Sturm machinery

namespace {

// Positive multiple of the polynomial remainder of a by b.
IntPoly chain_rem(IntPoly a, const IntPoly& b) {
    const long db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        const Int& lb = b.leading();
        IntPoly mono = IntPoly::monomial(a.leading(), static_cast<std::size_t>(a.degree() - db));
        if (lb > 0)
            a = a * lb - mono * b;
        else
            a = a * (-lb) + mono * b;
        if (!a.is_zero()) a = a.primitive_part();
    }
    return a;
}

}  // namespace

SturmChain::SturmChain(const IntPoly& squarefree) {
    if (squarefree.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    rows_.push_back(squarefree);
    if (squarefree.degree() == 0) return;
    rows_.push_back(squarefree.derivative());
    while (rows_.back().degree() > 0) {
        IntPoly r = chain_rem(rows_[rows_.size() - 2], rows_.back());
        if (r.is_zero()) break;
        rows_.push_back(-r);
    }
    if (rows_.back().is_zero() || rows_.back().degree() > 0)
        throw std::domain_error("SturmChain: polynomial is not squarefree");
}

int SturmChain::variations_at(const Rat& x) const {
    int changes = 0, last = 0;
    for (const auto& row : rows_) {
        int s = row.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::variations_at_infinity(int direction) const {
    int changes = 0, last = 0;
    for (const auto& row : rows_) {
        int s = sgn(row.leading());
        if (direction < 0 && row.degree() % 2 == 1) s = -s;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

long SturmChain::count(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("SturmChain::count: empty interval");
    return variations_at(lo) - variations_at(hi);
}

long SturmChain::count_all() const {
    return variations_at_infinity(-1) - variations_at_infinity(+1);
}

long sturm_count(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0)
        throw std::domain_error("sturm_count: endpoint is a root");
    return SturmChain(p).count(lo, hi);
}

Rat cauchy_root_bound(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    Int lead = abs(p.leading());
    Int biggest(0);
    for (long k = 0; k < p.degree(); ++k) {
        Int a = abs(p.coeff(static_cast<std::size_t>(k)));
        if (a > biggest) biggest = a;
    }
    Rat b(biggest, lead);
    b.canonicalize();
    return Rat(1) + b;
}

namespace {

// Tight interval around an exact rational root; endpoints non-roots, no
// other root of p inside.
IsolatingInterval exact_root_interval(const IntPoly& p, const SturmChain& chain, const Rat& root,
                                      Rat delta, const Rat& width) {
    while (2 * delta >= width) delta /= 2;
    while (true) {
        Rat lo = root - delta, hi = root + delta;
        if (p.sign_at(lo) != 0 && p.sign_at(hi) != 0 && chain.count(lo, hi) == 1)
            return {lo, hi};
        delta /= 2;
    }
}

void isolate_rec(const IntPoly& p, const SturmChain& chain, const Rat& lo, const Rat& hi,
                 long count, const Rat& width, std::vector<IsolatingInterval>& out) {
    if (count == 0) return;
    if (count == 1) {
        out.push_back(refine_interval(p, {lo, hi}, width));
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (p.sign_at(mid) == 0) {
        Rat delta = (hi - lo) / 4;
        IsolatingInterval iv = exact_root_interval(p, chain, mid, delta, width);
        long left = chain.count(lo, iv.lo);
        isolate_rec(p, chain, lo, iv.lo, left, width, out);
        out.push_back(iv);
        isolate_rec(p, chain, iv.hi, hi, count - left - 1, width, out);
        return;
    }
    long left = chain.count(lo, mid);
    isolate_rec(p, chain, lo, mid, left, width, out);
    isolate_rec(p, chain, mid, hi, count - left, width, out);
}

}  // namespace

IsolatingInterval refine_interval(const IntPoly& p, IsolatingInterval iv, const Rat& width) {
    int slo = p.sign_at(iv.lo);
    int shi = p.sign_at(iv.hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::logic_error("refine_interval: endpoints must straddle a simple root");
    while (iv.width() >= width) {
        Rat mid = (iv.lo + iv.hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) {
            // Exact rational root; shrink a symmetric window around it.
            Rat delta = iv.width() / 4;
            while (2 * delta >= width || p.sign_at(mid - delta) == 0 || p.sign_at(mid + delta) == 0)
                delta /= 2;
            return {mid - delta, mid + delta};
        }
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

std::vector<IsolatingInterval> isolate_real_roots(const IntPoly& p, const Rat& width) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    IntPoly g = gcd(p, p.derivative());
    IntPoly sf = g.degree() > 0 ? p.divide_exact(g) : p;
    if (sf.degree() <= 0) return {};
    SturmChain chain(sf);
    Rat bound = cauchy_root_bound(sf);
    std::vector<IsolatingInterval> out;
    isolate_rec(sf, chain, -bound, bound, chain.count(-bound, bound), width, out);
    return out;
}

// ---------------------------------------------------------------------------
// Root profile

RootProfile root_profile(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 2 || f.degree() % 2 != 0 || !f.is_palindromic())
        throw std::invalid_argument("root_profile: palindromic even degree required");
    if (f.eval(Int(1)) == 0 || f.eval(Int(-1)) == 0)
        throw std::domain_error("root_profile: polynomial vanishes at +-1");
    if (gcd(f, f.derivative()).degree() > 0)
        throw std::domain_error("root_profile: multiple roots detected");

    // Moebius route: circle pairs <-> positive roots, real pairs <-> negative.
    IntPoly k = kempner_transform(f);
    SturmChain ck(k);
    Rat bk = cauchy_root_bound(k);
    long circle = ck.count(Rat(0), bk);
    long real = ck.count(-bk, Rat(0));

    // Trace route: circle pairs <-> roots of h in (-2,2), real pairs outside.
    IntPoly h = trace_transform(f);
    SturmChain chn(h);
    long inside = chn.count(Rat(-2), Rat(2));
    long outside = chn.count_all() - inside;

    if (circle != inside || real != outside)
        throw std::logic_error("root_profile: transform routes disagree");

    RootProfile profile;
    profile.degree = f.degree();
    profile.circle_pairs = circle;
    profile.real_pairs = real;
    profile.unresolved = profile.degree - 2 * (circle + real);
    return profile;
}

// ---------------------------------------------------------------------------
// Factorization

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero() || f.leading() != 1)
        throw std::invalid_argument("squarefree_decomposition: monic polynomial required");
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() == 0) return out;
    IntPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    IntPoly c = f.divide_exact(g);
    IntPoly d = f.derivative().divide_exact(g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        IntPoly p = gcd(c, d);
        if (p.degree() > 0) out.emplace_back(p, i);
        c = c.divide_exact(p);
        d = d.divide_exact(p) - c.derivative();
        ++i;
    }
    IntPoly check(Int(1));
    for (const auto& [p, e] : out) check = check * p.pow(static_cast<unsigned>(e));
    if (!(check == f)) throw std::logic_error("squarefree_decomposition: product mismatch");
    return out;
}

namespace {

Int rat_floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int rat_ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

using Interval = std::pair<Rat, Rat>;

Interval interval_mul(const Interval& a, const Interval& b) {
    Rat p1 = a.first * b.first, p2 = a.first * b.second;
    Rat p3 = a.second * b.first, p4 = a.second * b.second;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

// Monic product of (x - root_i) with interval coefficients.
std::vector<Interval> interval_product(const std::vector<IsolatingInterval>& roots,
                                       const std::vector<std::size_t>& picks) {
    std::vector<Interval> poly{{Rat(1), Rat(1)}};
    for (std::size_t idx : picks) {
        Interval neg{-roots[idx].hi, -roots[idx].lo};
        std::vector<Interval> next(poly.size() + 1, Interval{Rat(0), Rat(0)});
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1].first += poly[k].first;
            next[k + 1].second += poly[k].second;
            Interval prod = interval_mul(poly[k], neg);
            next[k].first += prod.first;
            next[k].second += prod.second;
        }
        poly = std::move(next);
    }
    return poly;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Complete factorization of a monic squarefree polynomial with all roots
// real: detect integer factors from interval coefficients of root subsets,
// confirm by exact division.
std::vector<IntPoly> factor_all_real(const IntPoly& q) {
    if (q.degree() == 0) return {};
    std::vector<IsolatingInterval> roots = isolate_real_roots(q, Rat(1, 1 << 20));
    if (static_cast<long>(roots.size()) != q.degree())
        throw std::logic_error("factor_all_real: polynomial has non-real roots");

    Rat width(1, 1 << 20);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (auto& r : roots) r = refine_interval(q, r, width);

        std::vector<std::size_t> unused(roots.size());
        for (std::size_t i = 0; i < unused.size(); ++i) unused[i] = i;
        std::vector<IntPoly> out;
        IntPoly remainder = q;
        bool too_wide = false;

        bool progress = true;
        while (progress && !too_wide && unused.size() > 1) {
            progress = false;
            for (std::size_t s = 1; !progress && !too_wide && s <= unused.size() / 2; ++s) {
                std::vector<std::size_t> comb(s);
                for (std::size_t i = 0; i < s; ++i) comb[i] = i;
                do {
                    std::vector<std::size_t> picks(s);
                    for (std::size_t i = 0; i < s; ++i) picks[i] = unused[comb[i]];
                    auto coeffs = interval_product(roots, picks);
                    std::vector<Int> cand(coeffs.size());
                    bool trapped = true;
                    for (std::size_t k = 0; k < coeffs.size() && trapped; ++k) {
                        if (coeffs[k].second - coeffs[k].first >= Rat(1, 2)) {
                            too_wide = true;
                            break;
                        }
                        Int c = rat_ceil(coeffs[k].first);
                        if (c > rat_floor(coeffs[k].second))
                            trapped = false;
                        else
                            cand[k] = c;
                    }
                    if (too_wide) break;
                    if (!trapped) continue;
                    IntPoly candidate{std::vector<Int>(cand)};
                    if (auto quot = remainder.try_divide(candidate)) {
                        remainder = *quot;
                        out.push_back(std::move(candidate));
                        std::vector<std::size_t> rest;
                        for (std::size_t i = 0; i < unused.size(); ++i)
                            if (std::find(comb.begin(), comb.end(), i) == comb.end())
                                rest.push_back(unused[i]);
                        unused = std::move(rest);
                        progress = true;
                        break;
                    }
                } while (next_combination(comb, unused.size()));
            }
        }
        if (too_wide) {
            width /= 256;
            continue;
        }
        if (!unused.empty()) out.push_back(remainder);
        IntPoly check(Int(1));
        for (const auto& p : out) check = check * p;
        if (!(check == q)) throw std::logic_error("factor_all_real: factor product mismatch");
        return out;
    }
    throw std::runtime_error("factor_all_real: interval precision exhausted");
}

std::vector<IntPoly> factor_squarefree_palindromic(const IntPoly& p) {
    if (p.degree() == 0) return {};
    IntPoly h = trace_transform(p);
    std::vector<IsolatingInterval> hroots = isolate_real_roots(h);
    if (static_cast<long>(hroots.size()) != h.degree())
        throw std::domain_error(
            "factor_reciprocal: roots off both the unit circle and the real line; refusing");
    std::vector<IntPoly> out;
    for (const IntPoly& hf : factor_all_real(h)) {
        IntPoly lifted = trace_lift(hf);
        long inside = sturm_count(hf, Rat(-2), Rat(2));
        if (inside >= 1) {
            // A factor with a unit-circle root is palindromic and inherits
            // irreducibility from its trace factor.
            out.push_back(lifted);
        } else {
            // All roots real: the lift may still split into a reciprocal
            // pair of non-palindromic factors; search its roots directly.
            for (auto& sub : factor_all_real(lifted)) out.push_back(std::move(sub));
        }
    }
    IntPoly check(Int(1));
    for (const auto& f : out) check = check * f;
    if (!(check == p)) throw std::logic_error("factor_reciprocal: factor product mismatch");
    return out;
}

}  // namespace

std::vector<IntPoly> factor_reciprocal(const IntPoly& f) {
    if (f.is_zero() || f.leading() != 1)
        throw std::invalid_argument("factor_reciprocal: monic polynomial required");
    IntPoly work = f;
    std::vector<IntPoly> out;
    const IntPoly tm1{-1, 1}, tp1{1, 1};
    while (!work.is_zero() && work.eval(Int(1)) == 0) {
        work = work.divide_exact(tm1);
        out.push_back(tm1);
    }
    while (!work.is_zero() && work.eval(Int(-1)) == 0) {
        work = work.divide_exact(tp1);
        out.push_back(tp1);
    }
    if (work.degree() > 0) {
        if (!work.is_palindromic() || work.degree() % 2 != 0)
            throw std::invalid_argument(
                "factor_reciprocal: not palindromic of even degree after removing roots at +-1");
        for (const auto& [part, mult] : squarefree_decomposition(work)) {
            auto factors = factor_squarefree_palindromic(part);
            for (int e = 0; e < mult; ++e)
                for (const auto& p : factors) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IntPoly& a, const IntPoly& b) { return IntPoly::compare(a, b) < 0; });
    IntPoly check(Int(1));
    for (const auto& p : out) check = check * p;
    if (!(check == f)) throw std::logic_error("factor_reciprocal: factor product mismatch");
    return out;
}

bool is_irreducible(const IntPoly& f) { return factor_reciprocal(f).size() == 1; }

// ---------------------------------------------------------------------------
// Classification and growth rate

SalemClass classify_salem(const IntPoly& f) {
    SalemClass result;
    if (f.is_zero() || f.degree() < 2 || f.leading() != 1) return result;
    if (!f.is_palindromic() || f.degree() % 2 != 0) return result;
    if (f.eval(Int(1)) == 0 || f.eval(Int(-1)) == 0) return result;
    if (gcd(f, f.derivative()).degree() > 0) return result;

    RootProfile profile = root_profile(f);
    if (profile.unresolved != 0 || profile.circle_pairs < 1) return result;
    if (profile.real_pairs != 1 && profile.real_pairs != 2) return result;
    if (!is_irreducible(f)) return result;

    result.kind = profile.real_pairs == 1 ? SalemKind::Salem : SalemKind::TwoSalem;
    for (auto& iv : isolate_real_roots(f)) {
        while (iv.contains(Rat(1)) || iv.contains(Rat(-1)))
            iv = refine_interval(f, iv, iv.width() / 2);
        if (iv.lo >= 1 || iv.hi <= -1) result.outside_roots.push_back(iv);
    }
    return result;
}

IsolatingInterval growth_rate(const IntPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("growth_rate: zero polynomial");
    IntPoly g = gcd(q, q.derivative());
    IntPoly sf = g.degree() > 0 ? q.divide_exact(g) : q;
    auto roots = isolate_real_roots(sf);
    const Rat target(1, Int("1000000000000"));
    for (auto& iv : roots) {
        while (iv.contains(Rat(0))) iv = refine_interval(sf, iv, iv.width() / 2);
        if (iv.hi <= 0) continue;  // negative root
        // Smallest positive root: intervals come back in ascending order.
        while (!(iv.lo > 0) || Rat(1) / iv.lo - Rat(1) / iv.hi >= target)
            iv = refine_interval(sf, iv, iv.width() / 2);
        return {Rat(1) / iv.hi, Rat(1) / iv.lo};
    }
    throw std::domain_error("growth_rate: no positive real root");
}

// ---------------------------------------------------------------------------
// Cohn scan

bool probable_prime(const Int& n, int rounds) {
    if (n < 2) return false;
    static const long small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                        41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (long p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20140515ul);
    auto strong_test = [&](const Int& base) {
        Int a = base % n;
        if (a <= 1 || a == n - 1) return true;
        Int x;
        mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) return true;
        for (unsigned long r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) return true;
        }
        return false;
    };
    for (int round = 0; round < rounds; ++round) {
        Int base = round < static_cast<int>(std::size(small_primes))
                       ? Int(small_primes[round])
                       : Int(rng.get_z_range(n - 3) + 2);
        if (!strong_test(base)) return false;
    }
    return true;
}

CohnResult cohn_check(const IntPoly& f, long scan_limit, int mr_rounds) {
    if (f.is_zero() || f.leading() != 1)
        throw std::invalid_argument("cohn_check: monic polynomial required");
    CohnResult result;
    result.height = 0;
    for (long k = 0; k < f.degree(); ++k) {
        Int a = abs(f.coeff(static_cast<std::size_t>(k)));
        if (a > result.height) result.height = a;
    }
    Int start = result.height + 2;
    if (start > scan_limit) return result;
    for (long n = start.get_si(); n <= scan_limit; ++n) {
        Int value = f.eval(Int(n));
        if (value > 1 && probable_prime(value, mr_rounds)) {
            result.witness = CohnResult::Witness{n, value};
            break;
        }
    }
    return result;
}

}  // namespace salemforge::rootloc
