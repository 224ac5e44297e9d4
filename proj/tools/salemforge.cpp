// Command-line surface: single-shot growth computations, the gluing-count
// census, polynomial classification, and the full reproduction suite.

#include "salemforge/census.hpp"
#include "salemforge/certify.hpp"
#include "salemforge/coxeter.hpp"
#include "salemforge/geometry.hpp"
#include "salemforge/gluing.hpp"
#include "salemforge/rootloc.hpp"
#include "salemforge/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace salemforge;

coxeter::CoxeterGraph load_graph(const std::string& spec) {
    if (auto g = coxeter::builtin_graph(spec)) return *g;
    std::ifstream in(spec);
    if (!in) throw CLI::ValidationError("graph", "no builtin or readable file named '" + spec + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return coxeter::parse_graph(buffer.str());
}

IntPoly load_poly(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("poly", "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return IntPoly::parse(buffer.str());
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

void print_growth(const RatFunc& f) {
    std::cout << "numerator:   " << f.num().to_string() << "\n";
    std::cout << "denominator: " << f.den().to_string() << "\n";
}

std::string interval_text(const rootloc::IsolatingInterval& iv) {
    return "(" + census::format_fixed(iv.lo, 12, false) + ", " +
           census::format_fixed(iv.hi, 12, true) + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact growth functions of hyperbolic Coxeter groups and their Salem / "
                 "2-Salem growth rates"};
    app.require_subcommand(1);
    int mr_rounds = 64;
    app.add_option("--mr-rounds", mr_rounds, "probable-prime rounds")->capture_default_str();

    std::string growth_arg;
    auto* growth_cmd = app.add_subcommand("growth", "growth function of a Coxeter graph");
    growth_cmd->add_option("graph", growth_arg, "builtin name or graph file")->required();

    long dom_l = 0, dom_m = 0, dom_n = 0;
    auto* domino_cmd = app.add_subcommand("domino", "growth function of a glued domino");
    domino_cmd->add_option("--l", dom_l)->required();
    domino_cmd->add_option("--m", dom_m)->required();
    domino_cmd->add_option("--n", dom_n)->required();

    long n_max = 0;
    bool skip_irr = false;
    std::string census_format = "csv", census_out;
    auto* census_cmd = app.add_subcommand("census", "sweep all valid gluing counts");
    census_cmd->add_option("--n-max", n_max, "largest n")->required();
    census_cmd->add_flag("--skip-irreducibility", skip_irr);
    census_cmd->add_option("--format", census_format)->check(CLI::IsMember({"csv", "json"}));
    census_cmd->add_option("--out", census_out, "output file (default stdout)");

    std::string classify_path, factor_path, cohn_path;
    app.add_subcommand("classify", "Salem / 2-Salem classification of a polynomial")
        ->add_option("poly-file", classify_path)
        ->required();
    app.add_subcommand("factor", "complete factorization of a reciprocal polynomial")
        ->add_option("poly-file", factor_path)
        ->required();
    auto* cohn_cmd = app.add_subcommand("cohn", "Cohn irreducibility scan");
    cohn_cmd->add_option("poly-file", cohn_path)->required();
    long cohn_limit = 1000;
    cohn_cmd->add_option("--max-n", cohn_limit, "largest value scanned")->capture_default_str();

    app.add_subcommand("geometry-verify", "verify the truncated-simplex construction");

    std::string report_path;
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the full reproduction suite");
    verify_cmd->add_option("--report", report_path, "write a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (growth_cmd->parsed()) {
            print_growth(coxeter::steinberg_growth(load_graph(growth_arg)));
        } else if (domino_cmd->parsed()) {
            auto validity = gluing::validate_counts(dom_l, dom_m, dom_n);
            if (!validity.ok) {
                std::cerr << "invalid counts: " << validity.reason << "\n";
                return 2;
            }
            print_growth(gluing::domino_growth({dom_l, dom_m, dom_n}));
        } else if (census_cmd->parsed()) {
            auto rows = census::run_census(n_max, {skip_irr, 0});
            emit(census_format == "json" ? census::to_json(rows) : census::to_csv(rows),
                 census_out);
        } else if (!classify_path.empty()) {
            IntPoly p = load_poly(classify_path);
            auto cls = rootloc::classify_salem(p);
            switch (cls.kind) {
                case rootloc::SalemKind::Salem: std::cout << "Salem\n"; break;
                case rootloc::SalemKind::TwoSalem: std::cout << "TwoSalem\n"; break;
                default: std::cout << "Neither\n"; break;
            }
            for (const auto& iv : cls.outside_roots)
                std::cout << "root " << interval_text(iv) << "\n";
        } else if (!factor_path.empty()) {
            for (const auto& f : rootloc::factor_reciprocal(load_poly(factor_path)))
                std::cout << f.to_string() << "\n";
        } else if (!cohn_path.empty()) {
            auto result = rootloc::cohn_check(load_poly(cohn_path), cohn_limit, mr_rounds);
            std::cout << "height: " << result.height.get_str() << "\n";
            if (result.witness) {
                std::cout << "witness n: " << result.witness->n << "\n";
                std::cout << "value: " << result.witness->value.get_str() << " ("
                          << result.witness->value.get_str().size() << " digits, probable prime)\n";
            } else {
                std::cout << "no witness up to " << cohn_limit << "\n";
            }
        } else if (app.get_subcommand("geometry-verify")->parsed()) {
            auto gram = geometry::gram_from_graph(*coxeter::builtin_graph("gamma"));
            auto sig = geometry::signature(gram);
            std::cout << "signature: (" << sig.first << "," << sig.second << ")\n";
            auto [star, report] = geometry::truncation_extend(gram);
            std::cout << "truncation inequalities: " << (report.all_ok ? "ok" : "FAILED") << "\n";
            bool compact = geometry::compactness_check(gram, star);
            std::cout << "compactness: " << (compact ? "ok" : "FAILED") << "\n";
            bool iso = coxeter::is_isomorphic(star, *coxeter::builtin_graph("gamma-star"));
            std::cout << "graph matches builtin: " << (iso ? "ok" : "FAILED") << "\n";
            if (!(sig == std::pair<int, int>(4, 1) && report.all_ok && compact && iso)) return 1;
        } else if (verify_cmd->parsed()) {
            auto results = verify::run_paper_checks({});
            for (const auto& r : results) {
                std::printf("criterion %2d [%s] %-26s (%.2fs) %s\n", r.criterion,
                            r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                            r.details.c_str());
            }
            if (!report_path.empty()) emit(verify::report_json(results), report_path);
            if (!verify::all_passed(results)) return 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
