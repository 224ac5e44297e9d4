#include "salemforge/verify.hpp"

#include "salemforge/census.hpp"
#include "salemforge/certify.hpp"
#include "salemforge/coxeter.hpp"
#include "salemforge/geometry.hpp"
#include "salemforge/gluing.hpp"
#include "salemforge/refdata.hpp"
#include "salemforge/rootloc.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

namespace salemforge::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    std::vector<CheckResult> results;

    void run(const std::string& name, int criterion, double budget_seconds,
             const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        r.criterion = criterion;
        auto start = Clock::now();
        try {
            r.details = body();
            r.passed = true;
        } catch (const std::exception& e) {
            r.details = e.what();
            r.passed = false;
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (r.passed && r.seconds >= budget_seconds) {
            r.passed = false;
            r.details += " [exceeded " + std::to_string(budget_seconds) + " s budget]";
        }
        results.push_back(std::move(r));
    }
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

std::string check_triangle_growth() {
    auto g = *coxeter::builtin_graph("triangle-2-3-7");
    RatFunc f = coxeter::steinberg_growth(g);
    require(f == refdata::triangle_237_growth(), "triangle growth differs from reference");
    require(f.den() == refdata::lehmer(), "triangle denominator is not the Lehmer polynomial");
    return "growth function and Lehmer denominator reproduced";
}

std::string check_domino_census() {
    auto star = *coxeter::builtin_graph("gamma-star");
    auto census = coxeter::spherical_census(star);
    require(census == refdata::census_reference(), "finite-subset census differs from reference");
    RatFunc w = coxeter::steinberg_growth(star);
    require(w.num() == refdata::domino_numerator(), "numerator differs from [2,4,6,10]");
    require(w.den() == refdata::domino_denominator(), "denominator differs from reference");
    IntPoly phi_product = cyclotomic(2).pow(4) * cyclotomic(3) * cyclotomic(4) * cyclotomic(5) *
                          cyclotomic(6) * cyclotomic(10);
    require(w.num() == phi_product, "numerator differs from its cyclotomic factorization");
    return "census, numerator and palindromic degree-18 denominator reproduced";
}

std::string check_facets() {
    const auto& fg = gluing::facet_growths();
    int a = 0, b = 0, c = 0;
    for (char letter : fg.letter_of_deleted_node) {
        a += letter == 'A';
        b += letter == 'B';
        c += letter == 'C';
    }
    require(a == 2 && b == 2 && c == 1, "facet multiplicities are not (A:2, B:2, C:1)");
    for (const char* name : {"facet-A", "facet-B", "facet-C"}) {
        auto g = *coxeter::builtin_graph(name);
        RatFunc w = coxeter::steinberg_growth(g);
        const RatFunc& expect = name[6] == 'A' ? fg.a : name[6] == 'B' ? fg.b : fg.c;
        require(w == expect, std::string(name) + " builtin growth mismatch");
    }
    return "A(t), B(t), C(t) matched with multiplicities (2,2,1)";
}

std::string check_symbolic_family(const VerifyOptions& options) {
    const auto& sym = gluing::domino_symbolic();
    const ParamPoly& reference = options.family_reference_override
                                     ? *options.family_reference_override
                                     : refdata::domino_denominator_family();
    require(sym.den == reference, "closed-form denominator differs from reference");
    require(sym.num == ParamPoly(refdata::domino_numerator()),
            "closed-form numerator is not [2,4,6,10]");

    // Iterated gluing in several orders must agree with the closed form.
    const auto& fg = gluing::facet_growths();
    const RatFunc& w = gluing::domino_base_growth();
    long glue_checks = 0;
    for (const auto& counts : gluing::enumerate_valid_counts(options.glue_n_max)) {
        std::string letters;
        letters.append(static_cast<std::size_t>(counts.l), 'A');
        letters.append(static_cast<std::size_t>(counts.m), 'B');
        letters.append(static_cast<std::size_t>(counts.n - counts.l - counts.m), 'C');
        RatFunc direct = gluing::domino_growth(counts);
        RatFunc from_family = RatFunc(sym.num.specialize(counts.l, counts.m, counts.n),
                                      sym.den.specialize(counts.l, counts.m, counts.n));
        require(direct == from_family, "closed-form specialization differs from gluing formula");
        std::vector<std::string> orders{letters};
        orders.push_back({letters.rbegin(), letters.rend()});
        std::string shuffled = letters;
        std::mt19937 rng(12345u + static_cast<unsigned>(counts.n * 64 + counts.l * 8 + counts.m));
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        orders.push_back(shuffled);
        for (const auto& order : orders) {
            RatFunc chain = w;
            for (char f : order)
                chain = gluing::glue(chain, w, f == 'A' ? fg.a : f == 'B' ? fg.b : fg.c);
            require(chain == direct, "iterated gluing disagrees with the closed form");
            ++glue_checks;
        }
    }

    auto triples = gluing::enumerate_valid_counts(60);
    std::mt19937_64 rng(0x5a1e3f02u);
    for (int i = 0; i < options.random_specializations; ++i) {
        const auto& counts = triples[rng() % triples.size()];
        RatFunc direct = gluing::domino_growth(counts);
        RatFunc from_family = RatFunc(sym.num.specialize(counts.l, counts.m, counts.n),
                                      sym.den.specialize(counts.l, counts.m, counts.n));
        require(direct == from_family, "random specialization differs from gluing formula");
        require(from_family.den().is_palindromic(), "specialized denominator not palindromic");
    }
    std::ostringstream out;
    out << "closed form matches reference; " << glue_checks << " gluing orders and "
        << options.random_specializations << " random specializations agree";
    return out.str();
}

std::string check_kempner() {
    ParamPoly k = rootloc::kempner_transform(gluing::domino_symbolic().den);
    require(k == refdata::kempner_family(), "transform differs from the printed expansion");
    require(k.coeff(9) == AffineForm(Int(32), Int(0), Int(0), Int(32)),
            "leading coefficient is not 4(8n+8)");
    return "all 10 coefficients of the u-expansion reproduced";
}

struct SweepOutcome {
    long triples = 0;
    std::string profile_error, sandwich_error;
};

SweepOutcome run_profile_sweep(const VerifyOptions& options) {
    const auto& sym = gluing::domino_symbolic();
    auto triples = gluing::enumerate_valid_counts(options.profile_n_max);
    std::vector<std::string> profile_errors(triples.size());
    std::vector<std::string> sandwich_errors(triples.size());

    census::parallel_for(triples.size(), census::resolve_workers(options.workers),
                         [&](std::size_t i) {
        const auto& c = triples[i];
        auto tag = [&c](const std::string& msg) {
            return "(" + std::to_string(c.l) + "," + std::to_string(c.m) + "," +
                   std::to_string(c.n) + "): " + msg;
        };
        IntPoly q = sym.den.specialize(c.l, c.m, c.n);
        try {
            auto profile = rootloc::root_profile(q);
            if (profile.circle_pairs != 7 || profile.real_pairs != 2)
                profile_errors[i] = tag("profile is not (7,2)");
        } catch (const std::exception& e) {
            profile_errors[i] = tag(e.what());
            return;
        }
        try {
            // Signs at 0, 1/2, 1 and the growth-rate sandwich.
            if (q.coeff(0) != 1) throw std::runtime_error("q(0) != 1");
            if (q.sign_at(Rat(1, 2)) >= 0) throw std::runtime_error("q(1/2) not negative");
            if (q.eval(Int(1)) != 32 + 32 * Int(c.n)) throw std::runtime_error("q(1) != 32+32n");
            auto tau = rootloc::growth_rate(q);
            if (!(Rat(4 * c.n + 5) < tau.lo && tau.hi < Rat(4 * c.n + c.m + c.l + 6)))
                throw std::runtime_error("tau outside (4n+5, 4n+m+l+6)");
            auto roots = rootloc::isolate_real_roots(q);
            if (roots.size() != 4) throw std::runtime_error("expected 4 real roots");
            for (auto& iv : roots)
                while (iv.contains(Rat(0)) || iv.contains(Rat(1, 2)) || iv.contains(Rat(1)))
                    iv = rootloc::refine_interval(q, iv, iv.width() / 2);
            bool ordered = roots[0].lo >= 0 && roots[0].hi <= Rat(1, 2) &&
                           roots[1].lo >= Rat(1, 2) && roots[1].hi <= 1 && roots[2].lo >= 1 &&
                           roots[3].lo >= 1;
            if (!ordered) throw std::runtime_error("roots violate 0 < 1/a < 1/2 < 1/b < 1 < b < a");
            // The largest root and the reciprocal of the smallest agree.
            if (!(tau.lo < roots[3].hi && roots[3].lo < tau.hi))
                throw std::runtime_error("growth rate does not match the largest real root");
        } catch (const std::exception& e) {
            sandwich_errors[i] = tag(e.what());
        }
    });

    SweepOutcome outcome;
    outcome.triples = static_cast<long>(triples.size());
    for (const auto& e : profile_errors)
        if (!e.empty() && outcome.profile_error.empty()) outcome.profile_error = e;
    for (const auto& e : sandwich_errors)
        if (!e.empty() && outcome.sandwich_error.empty()) outcome.sandwich_error = e;
    return outcome;
}

std::string check_classification() {
    auto lehmer_class = rootloc::classify_salem(refdata::lehmer());
    require(lehmer_class.kind == rootloc::SalemKind::Salem, "Lehmer polynomial not Salem");
    require(lehmer_class.outside_roots.size() == 1, "expected one root above 1");
    auto [anchor_l, tol_l] = refdata::lehmer_root_anchor();
    const auto& alpha_l = lehmer_class.outside_roots[0];
    require(anchor_l - tol_l < alpha_l.lo && alpha_l.hi < anchor_l + tol_l,
            "Lehmer root outside the printed window");

    const IntPoly& d = refdata::two_salem_denominator();
    auto d_class = rootloc::classify_salem(d);
    require(d_class.kind == rootloc::SalemKind::TwoSalem, "degree-16 example not 2-Salem");
    require(d_class.outside_roots.size() == 2, "expected two roots above 1");
    auto [anchor_b, tol_b] = refdata::two_salem_beta_anchor();
    auto [anchor_a, tol_a] = refdata::two_salem_alpha_anchor();
    const auto& beta = d_class.outside_roots[0];
    const auto& alpha = d_class.outside_roots[1];
    require(anchor_b - tol_b < beta.lo && beta.hi < anchor_b + tol_b,
            "beta outside the printed window");
    require(anchor_a - tol_a < alpha.lo && alpha.hi < anchor_a + tol_a,
            "alpha outside the printed window");
    return "Salem and 2-Salem classifications with certified root windows";
}

std::string check_cohn() {
    const IntPoly& d = refdata::two_salem_denominator();
    auto result = rootloc::cohn_check(d, 200);
    require(result.height == 4, "height is not 4");
    require(result.witness.has_value(), "no witness found by 200");
    require(result.witness->n <= 186, "first witness comes after 186");
    Int value186 = d.eval(Int(186));
    require(value186.get_str() == refdata::cohn_value_reference(),
            "value at 186 differs from the printed digits");
    require(value186.get_str().size() == 37, "digit count is not 37");
    require(value186.get_str().substr(0, 10) == "2008067839", "wrong leading digits");
    require(rootloc::probable_prime(value186, 64), "value at 186 not a probable prime");
    std::ostringstream out;
    out << "height 4; first witness n=" << result.witness->n
        << "; value at 186 is a 37-digit probable prime";
    return out.str();
}

certify::MultiPoly from_terms(const refdata::BivariateTerms& terms) {
    certify::MultiPoly p;
    certify::MultiPoly a = certify::MultiPoly::variable(0);
    certify::MultiPoly b = certify::MultiPoly::variable(1);
    for (const auto& [ea, eb, c] : terms) {
        certify::MultiPoly mono = certify::MultiPoly::constant(c);
        for (int i = 0; i < ea; ++i) mono = mono * a;
        for (int i = 0; i < eb; ++i) mono = mono * b;
        p = p + mono;
    }
    return p;
}

bool rows_match(const std::vector<certify::ResidueRow>& rows,
                const std::vector<refdata::ResidueRowRef>& refs) {
    if (rows.size() != refs.size()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        const auto& ref = refs[i];
        if (row.a != ref.a || row.b != ref.b) return false;
        if (row.f0 != ref.f0 || row.f1 != ref.f1) return false;
        if (row.has_g != ref.has_g) return false;
        if (row.has_g && (row.g0 != ref.g0 || row.g1 != ref.g1)) return false;
        int want = ref.verdict == refdata::kImpossible ? certify::kRowImpossible : ref.verdict;
        if (row.verdict != want) return false;
    }
    return true;
}

std::string check_certificates() {
    auto sys1 = certify::residual_system(1);
    require(sys1.residuals.size() == 1 && sys1.cofactor.size() == 8,
            "quadratic elimination has wrong shape");
    require(sys1.residuals[0].univariate() == refdata::quadratic_residual(),
            "quadratic residual differs from the printed polynomial");

    auto sys2 = certify::residual_system(2);
    require(sys2.residuals.size() == 2 && sys2.cofactor.size() == 7,
            "quartic elimination has wrong shape");
    require(sys2.residuals[0] == from_terms(refdata::quartic_residual_f()),
            "first quartic residual differs from the printed polynomial");
    require(sys2.residuals[1] == from_terms(refdata::quartic_residual_g()),
            "second quartic residual differs from the printed polynomial");

    require(rows_match(certify::residue_tables(certify::Specialization::ZeroNN),
                       refdata::residue_table_0nn()),
            "residue table for (0,n,n) differs");
    require(rows_match(certify::residue_tables(certify::Specialization::NZeroN),
                       refdata::residue_table_n0n()),
            "residue table for (n,0,n) differs");

    auto report = certify::verify_root_location_tables();
    require(report.all_certified, "a sign-table entry failed to certify");
    require(report.residual_has_no_integer_root, "integer-root exclusion not established");
    std::ostringstream out;
    out << "residual systems, residue tables and " << report.points.size()
        << " sign certificates reproduced";
    return out.str();
}

std::string check_irreducibility(const VerifyOptions& options) {
    const auto& sym = gluing::domino_symbolic();
    for (long n : options.irreducibility_ns) {
        require(rootloc::is_irreducible(sym.den.specialize(0, n, n)),
                "Q_{0," + std::to_string(n) + "," + std::to_string(n) + "} not irreducible");
        require(rootloc::is_irreducible(sym.den.specialize(n, 0, n)),
                "Q_{" + std::to_string(n) + ",0," + std::to_string(n) + "} not irreducible");
    }
    std::ostringstream out;
    for (auto spec : {certify::Specialization::ZeroNN, certify::Specialization::NZeroN}) {
        auto verdict = certify::no_small_palindromic_factor(spec);
        require(verdict.sweeps[0].conclusive(),
                "a quartic-factor residue class survives mod 3 at n = 1");
        out << (spec == certify::Specialization::ZeroNN ? "(0,n,n)" : "(n,0,n)") << ": d=2 "
            << "no surviving class";
        for (int i = 1; i < 3; ++i)
            out << ", d=" << verdict.sweeps[i].d << " "
                << (verdict.sweeps[i].conclusive() ? "no surviving class" : "inconclusive");
        out << "; ";
    }
    out << options.irreducibility_ns.size() << " instances per family factored irreducible";
    return out.str();
}

std::string check_geometry() {
    auto gamma = *coxeter::builtin_graph("gamma");
    auto gram = geometry::gram_from_graph(gamma);
    require(geometry::signature(gram) == std::pair<int, int>(4, 1), "signature is not (4,1)");
    auto [star, report] = geometry::truncation_extend(gram);
    require(report.all_ok, "a truncation inequality failed");
    int pair_checks = 0;
    for (const auto& [i, j, ok] : report.pairwise_disjoint) pair_checks += ok;
    require(pair_checks == 10, "expected ten pairwise disjointness checks");
    require(geometry::compactness_check(gram, star), "compactness check failed");
    require(coxeter::is_isomorphic(star, *coxeter::builtin_graph("gamma-star")),
            "emitted truncated graph is not isomorphic to the builtin");
    geometry::facet_subgraphs(gamma);  // throws unless every signature is (3,1)
    return "signature (4,1); 5+10 truncation inequalities; compactness; graph isomorphism";
}

std::string check_property_suites() {
    // BFS oracle against the exponent tables for every finite type of rank
    // <= 4 with labels in {2,3,5}.
    struct Piece {
        int nodes;
        std::vector<std::tuple<int, int, int>> edges;
    };
    const Piece a1{1, {}}, a2{2, {{0, 1, 3}}}, a3{3, {{0, 1, 3}, {1, 2, 3}}};
    const Piece a4{4, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}}};
    const Piece d4{4, {{0, 1, 3}, {0, 2, 3}, {0, 3, 3}}};
    const Piece i25{2, {{0, 1, 5}}};
    const Piece h3{3, {{0, 1, 5}, {1, 2, 3}}};
    const Piece h4{4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}}};
    std::vector<std::vector<Piece>> cases{
        {a1},      {a1, a1},  {a1, a1, a1}, {a1, a1, a1, a1},
        {a2},      {a2, a1},  {a2, a1, a1}, {a2, a2},
        {a3},      {a3, a1},  {a4},         {d4},
        {i25},     {i25, a1}, {i25, a1, a1}, {i25, i25},
        {i25, a2}, {h3},      {h3, a1},     {h4},
    };
    for (const auto& pieces : cases) {
        int total = 0;
        for (const auto& p : pieces) total += p.nodes;
        coxeter::CoxeterGraph g(total);
        int base = 0;
        for (const auto& p : pieces) {
            for (const auto& [i, j, m] : p.edges) g.set_label(base + i, base + j, m);
            base += p.nodes;
        }
        std::vector<int> all(static_cast<std::size_t>(total));
        std::iota(all.begin(), all.end(), 0);
        auto ft = coxeter::finite_type(g, all);
        require(ft.has_value(), "finite type not recognized");
        require(coxeter::bfs_growth_finite(g) == coxeter::solomon_polynomial(*ft),
                "BFS oracle differs from the exponent formula");
    }

    // Nonnegative series with the right start for the computed growth
    // functions.
    auto check_series = [](const RatFunc& f, long generators) {
        auto prefix = coxeter::series_prefix(f, 100);
        require(prefix[0] == 1, "series does not start at 1");
        if (generators >= 0) require(prefix[1] == generators, "a_1 is not the generator count");
        for (const auto& a : prefix) require(a >= 0, "negative series coefficient");
    };
    check_series(refdata::triangle_237_growth(), 3);
    check_series(gluing::domino_base_growth(), 10);
    const auto& fg = gluing::facet_growths();
    check_series(fg.a, 4);
    check_series(fg.b, 4);
    check_series(fg.c, 4);
    for (const auto& counts : gluing::enumerate_valid_counts(2))
        check_series(gluing::domino_growth(counts), -1);

    // Reassembly of random products of small palindromic irreducibles.
    std::vector<IntPoly> pool{bracket_poly(2), cyclotomic(3),       cyclotomic(4),
                              cyclotomic(5),   cyclotomic(6),       cyclotomic(10),
                              cyclotomic(12),  IntPoly{1, -3, 1},   IntPoly{1, 3, 1},
                              IntPoly{1, -1, -1, -1, 1},            refdata::lehmer()};
    std::mt19937_64 rng(0xfacade11u);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntPoly> chosen;
        IntPoly product(Int(1));
        int parts = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < parts; ++i) {
            const IntPoly& p = pool[rng() % pool.size()];
            chosen.push_back(p);
            product = product * p;
        }
        std::sort(chosen.begin(), chosen.end(),
                  [](const IntPoly& x, const IntPoly& y) { return IntPoly::compare(x, y) < 0; });
        auto factors = rootloc::factor_reciprocal(product);
        require(factors.size() == chosen.size(), "wrong factor count on a random product");
        for (std::size_t i = 0; i < factors.size(); ++i)
            require(factors[i] == chosen[i], "factor mismatch on a random product");
    }
    return "BFS oracle (20 types), 100-term series positivity, 100 random reassemblies";
}

}  // namespace

std::vector<CheckResult> run_paper_checks(const VerifyOptions& options) {
    Checker checker;
    checker.run("growth-triangle-237", 1, 1.0, check_triangle_growth);
    checker.run("domino-census-and-growth", 2, 5.0, check_domino_census);
    checker.run("facet-growths", 3, 60.0, check_facets);
    checker.run("symbolic-family", 4, 120.0,
                [&options] { return check_symbolic_family(options); });
    checker.run("kempner-expansion", 5, 30.0, check_kempner);
    {
        // One sweep feeds the two sweep criteria.
        auto start = Clock::now();
        SweepOutcome outcome;
        std::string sweep_error;
        try {
            outcome = run_profile_sweep(options);
        } catch (const std::exception& e) {
            sweep_error = e.what();
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        std::string scope = std::to_string(outcome.triples) + " triples with n <= " +
                            std::to_string(options.profile_n_max);
        CheckResult profiles;
        profiles.name = "root-profiles";
        profiles.criterion = 6;
        profiles.seconds = seconds;
        profiles.passed = sweep_error.empty() && outcome.profile_error.empty() && seconds < 600.0;
        profiles.details = profiles.passed ? "(7,2) with both transform routes agreeing on " + scope
                                           : sweep_error + outcome.profile_error;
        checker.results.push_back(profiles);

        CheckResult sandwich;
        sandwich.name = "growth-rate-sandwich";
        sandwich.criterion = 7;
        sandwich.seconds = seconds;
        sandwich.passed = sweep_error.empty() && outcome.sandwich_error.empty();
        sandwich.details = sandwich.passed
                               ? "tau inside (4n+5, 4n+m+l+6) and root ordering on " + scope
                               : sweep_error + outcome.sandwich_error;
        checker.results.push_back(sandwich);
    }
    checker.run("salem-classification", 8, 60.0, check_classification);
    checker.run("cohn-criterion", 9, 60.0, check_cohn);
    checker.run("certificates-and-tables", 10, 120.0, check_certificates);
    checker.run("family-irreducibility", 11, 120.0,
                [&options] { return check_irreducibility(options); });
    checker.run("geometry", 12, 5.0, check_geometry);
    checker.run("property-suites", 13, 300.0, check_property_suites);
    return checker.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

std::string report_json(const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json j;
        j["name"] = r.name;
        j["criterion"] = r.criterion;
        j["passed"] = r.passed;
        j["seconds"] = r.seconds;
        j["details"] = r.details;
        checks.push_back(std::move(j));
    }
    nlohmann::json root;
    root["checks"] = checks;
    root["all_passed"] = all_passed(results);
    return root.dump(2) + "\n";
}

}  // namespace salemforge::verify
