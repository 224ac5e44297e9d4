#include "salemforge/census.hpp"

#include "salemforge/rootloc.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace salemforge::census {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SALEMFORGE_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers < 1) workers = 1;
    if (static_cast<std::size_t>(workers) > count) workers = count ? static_cast<int>(count) : 1;
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

std::string format_fixed(const Rat& v, int digits, bool round_away) {
    if (v < 0) throw std::invalid_argument("format_fixed: negative value");
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int num = v.get_num() * scale;
    Int q;
    if (round_away)
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    else
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    Int whole = q / scale, frac = q % scale;
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), static_cast<std::size_t>(digits) - fs.size(), '0');
    return whole.get_str() + "." + fs;
}

namespace {

const char* salem_name(rootloc::SalemKind kind) {
    switch (kind) {
        case rootloc::SalemKind::Salem: return "Salem";
        case rootloc::SalemKind::TwoSalem: return "TwoSalem";
        default: return "Neither";
    }
}

CensusRow compute_row(const gluing::GluingCounts& counts, bool skip_irreducibility) {
    CensusRow row;
    row.l = counts.l;
    row.m = counts.m;
    row.n = counts.n;

    RatFunc w = gluing::domino_growth(counts);
    const IntPoly& q = w.den();
    row.q_coeffs = q.coeffs();

    auto fail = [&](const std::string& what) {
        throw std::runtime_error("census invariant violated at (" + std::to_string(counts.l) +
                                 "," + std::to_string(counts.m) + "," + std::to_string(counts.n) +
                                 "): " + what);
    };
    if (q.degree() != 18) fail("denominator degree");

    rootloc::RootProfile profile = rootloc::root_profile(q);
    row.circle_pairs = profile.circle_pairs;
    row.real_pairs = profile.real_pairs;
    if (profile.circle_pairs != 7 || profile.real_pairs != 2) fail("root profile");

    rootloc::IsolatingInterval tau = rootloc::growth_rate(q);
    if (!(Rat(4 * counts.n + 5) < tau.lo && tau.hi < Rat(4 * counts.n + counts.m + counts.l + 6)))
        fail("growth rate outside (4n+5, 4n+m+l+6)");
    row.tau_lo = format_fixed(tau.lo, 12, false);
    row.tau_hi = format_fixed(tau.hi, 12, true);

    // Second-largest real root; the four real roots sit at 1/a < 1/b < b < a.
    auto real_roots = rootloc::isolate_real_roots(q);
    if (real_roots.size() != 4) fail("expected four real roots");
    rootloc::IsolatingInterval beta = real_roots[2];
    while (beta.contains(Rat(1)) || !(beta.lo > 0))
        beta = rootloc::refine_interval(q, beta, beta.width() / 2);
    const Rat target(1, Int("1000000000000"));
    while (beta.width() >= target) beta = rootloc::refine_interval(q, beta, beta.width() / 2);
    if (!(beta.lo > 1)) fail("beta below 1");
    row.beta_lo = format_fixed(beta.lo, 12, false);
    row.beta_hi = format_fixed(beta.hi, 12, true);

    if (skip_irreducibility) {
        row.irreducible = -1;
        row.salem_class = "skipped";
    } else {
        // Profile is already pinned to (7,2); classification reduces to the
        // irreducibility question, so factor once.
        bool irr = rootloc::is_irreducible(q);
        row.irreducible = irr ? 1 : 0;
        row.salem_class = salem_name(irr ? rootloc::SalemKind::TwoSalem
                                         : rootloc::SalemKind::Neither);
    }
    return row;
}

}  // namespace

std::vector<CensusRow> run_census(long n_max, const CensusOptions& options) {
    if (n_max < 0) throw std::invalid_argument("run_census: n_max must be >= 0");
    auto triples = gluing::enumerate_valid_counts(n_max);
    std::vector<CensusRow> rows(triples.size());
    parallel_for(triples.size(), resolve_workers(options.workers), [&](std::size_t i) {
        rows[i] = compute_row(triples[i], options.skip_irreducibility);
    });
    return rows;
}

std::string to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "l,m,n,tau_lo,tau_hi,beta_lo,beta_hi,circle_pairs,real_pairs,irreducible,"
           "salem_class,q_coeffs\n";
    for (const auto& r : rows) {
        out << r.l << ',' << r.m << ',' << r.n << ',' << r.tau_lo << ',' << r.tau_hi << ','
            << r.beta_lo << ',' << r.beta_hi << ',' << r.circle_pairs << ',' << r.real_pairs
            << ',';
        out << (r.irreducible < 0 ? "skipped" : r.irreducible ? "true" : "false");
        out << ',' << r.salem_class << ',';
        for (std::size_t k = 0; k < r.q_coeffs.size(); ++k) {
            if (k) out << ' ';
            out << r.q_coeffs[k].get_str();
        }
        out << '\n';
    }
    return out.str();
}

std::string to_json(const std::vector<CensusRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["l"] = r.l;
        j["m"] = r.m;
        j["n"] = r.n;
        j["tau_lo"] = r.tau_lo;
        j["tau_hi"] = r.tau_hi;
        j["beta_lo"] = r.beta_lo;
        j["beta_hi"] = r.beta_hi;
        j["circle_pairs"] = r.circle_pairs;
        j["real_pairs"] = r.real_pairs;
        if (r.irreducible < 0)
            j["irreducible"] = "skipped";
        else
            j["irreducible"] = r.irreducible != 0;
        j["salem_class"] = r.salem_class;
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : r.q_coeffs) coeffs.push_back(c.get_str());
        j["q_coeffs"] = coeffs;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

}  // namespace salemforge::census
