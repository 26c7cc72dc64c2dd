// Acceptance suite: one criterion per numbered block, one PASS/FAIL line
// each, nonzero exit on any failure. Criterion 4 (the n = 16 nonexistence
// run) is hours-long and only runs when ENDOCABLE_EXTENDED=1; otherwise it
// is reported NOT-RUN and does not fail the suite.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "endocable/brace.hpp"
#include "endocable/endo.hpp"
#include "endocable/holomorph.hpp"
#include "endocable/search.hpp"

using namespace endocable;

namespace {

struct Context {
    std::vector<CycleSet> corpus;       // sizes 1..4 up to isomorphism
    std::vector<CycleSet> n4_solutions; // criterion 2 output
    std::vector<CycleSet> n8_solutions; // criterion 3 output
    std::vector<CycleSet> all_members() const {
        std::vector<CycleSet> all = corpus;
        all.insert(all.end(), n4_solutions.begin(), n4_solutions.end());
        all.insert(all.end(), n8_solutions.begin(), n8_solutions.end());
        return all;
    }
};

bool criterion1(Context&, std::string& detail) {
    CycleSet X = CycleSet::load(std::string(ENDOCABLE_FIXTURES) + "/x4_19.cs");
    bool ok = true;
    ok &= X.size() == 4;
    ok &= X.diagonal().cycle_structure().is_full_cycle;
    ok &= X.diagonal().order() == 4;
    ok &= !is_retractable(X);
    MplResult m = mpl(X);
    ok &= !m.finite && m.stationary.has_value() && *m.stationary == X;
    Brace B = Brace::permutation_brace(X);
    ok &= B.socle().members == std::vector<int>{0};
    PiTypeResult pt = pi_type(X);
    ok &= pt.is_p_type && pt.primes_of_size == std::vector<long long>{2};
    detail = "fixture invariants";
    return ok;
}

bool criterion2(Context& ctx, std::string& detail) {
    ModelSpec spec;
    spec.n = 4;
    spec.diagonal = DiagonalKind::FullCycle;
    spec.require_irretractable = true;
    SearchOutcome out = solve(SearchModel::build(spec), SolveMode::All);
    ctx.n4_solutions = out.solutions;
    if (out.status != SolveStatus::Sat || out.solutions.empty()) {
        detail = "no solution found";
        return false;
    }
    CycleSet fixture = x4_19();
    for (const CycleSet& X : out.solutions)
        if (!are_isomorphic(X, fixture)) {
            detail = "a solution is not isomorphic to the fixture";
            return false;
        }
    detail = std::to_string(out.solutions.size()) +
             " labeled solutions, one isomorphism class";
    return true;
}

bool criterion3(Context& ctx, std::string& detail) {
    Report r = verify_theorem(TheoremName::FullCycleTwo, 8);
    bool exhaustive = false;
    for (const std::string& line : r.lines())
        if (line == "RESULT exhaustive true") exhaustive = true;
    if (!r.all_passed() || !exhaustive) {
        detail = "n=8 enumeration failed or was not exhaustive";
        return false;
    }

    ModelSpec spec;
    spec.n = 8;
    spec.diagonal = DiagonalKind::FullCycle;
    spec.require_all_solutions = true;
    ctx.n8_solutions = solve(SearchModel::build(spec), SolveMode::All).solutions;

    spec.require_all_solutions = false;
    spec.require_irretractable = true;
    SearchOutcome unsat = solve(SearchModel::build(spec), SolveMode::Decide);
    if (unsat.status != SolveStatus::Unsat) {
        detail = "irretractable model at n=8 was not UNSAT";
        return false;
    }
    SearchOutcome apx = solve(SearchModel::appendix(3), SolveMode::Decide);
    if (apx.status != SolveStatus::Unsat) {
        detail = "appendix model v=3 was not UNSAT";
        return false;
    }
    detail = std::to_string(ctx.n8_solutions.size()) +
             " full-cycle solutions, all retractable; irretractable models UNSAT";
    return true;
}

int criterion4(std::string& detail) {  // 1 pass, 0 not-run, -1 fail
    if (const char* env = std::getenv("ENDOCABLE_EXTENDED");
        !env || std::string(env) != "1") {
        detail = "set ENDOCABLE_EXTENDED=1 to run the n=16 decision";
        return 0;
    }
    Budget budget;
    budget.max_seconds = 4 * 3600.0;
    if (const char* env = std::getenv("ENDOCABLE_EXTENDED_BUDGET"))
        budget.max_seconds = std::atof(env);
    SearchOutcome out =
        solve(SearchModel::appendix(4), SolveMode::Decide, budget, 2);
    if (out.status == SolveStatus::Timeout) {
        detail = "TIMEOUT after " + std::to_string(out.stats.nodes) + " nodes";
        return 0;
    }
    detail = "status " +
             std::string(out.status == SolveStatus::Unsat ? "UNSAT" : "SAT") +
             ", " + std::to_string(out.stats.nodes) + " nodes";
    return out.status == SolveStatus::Unsat ? 1 : -1;
}

bool criterion5(Context&, std::string& detail) {
    std::ostringstream os;
    for (int n : {3, 5, 9}) {
        Budget budget;
        if (n == 9) budget.max_nodes = 100000000;
        Report r = verify_theorem(TheoremName::FullCycleOdd, n, budget);
        if (!r.all_passed()) {
            detail = "failure at n=" + std::to_string(n);
            return false;
        }
        std::string verified, enumerated, exhaustive;
        for (const std::string& line : r.lines()) {
            if (line.rfind("RESULT verified ", 0) == 0) verified = line.substr(16);
            if (line.rfind("RESULT enumerated ", 0) == 0)
                enumerated = line.substr(18);
            if (line.rfind("RESULT exhaustive ", 0) == 0)
                exhaustive = line.substr(18);
        }
        os << "n=" << n << ": " << verified << "/" << enumerated << " verified"
           << (exhaustive == "true" ? " (exhaustive); " : " (budgeted); ");
    }
    detail = os.str();
    return true;
}

bool criterion6(Context& ctx, std::string& detail) {
    int members = 0;
    for (const CycleSet& X : ctx.all_members()) {
        Report r = identity_suite(X);
        if (!r.all_passed()) {
            detail = "identity failure on corpus member of size " +
                     std::to_string(X.size());
            for (const std::string& line : r.lines())
                if (line.find(" FAIL") != std::string::npos) detail += "; " + line;
            return false;
        }
        ++members;
    }

    // center replacement: wherever the premises hold on a 2-group member,
    // a second central involution must exist
    int replacements_met = 0;
    for (const CycleSet& X : ctx.all_members()) {
        auto primes = prime_divisors(X.size());
        if (primes != std::vector<long long>{2}) continue;
        Brace B = Brace::permutation_brace(X);
        for (int z : B.center().members) {
            if (z == 0 || B.multiplicative_order(z) != 2) continue;
            for (long long k = 1; k <= 4; ++k) {
                Report r = replacement_check(X, z, k);
                bool skipped = false;
                for (const std::string& line : r.lines())
                    if (line.find(" SKIP ") != std::string::npos) skipped = true;
                if (!skipped) ++replacements_met;
                if (!r.all_passed()) {
                    detail = "center replacement failed on a size-" +
                             std::to_string(X.size()) + " member";
                    return false;
                }
            }
        }
    }

    detail = "all cabling identities hold on " + std::to_string(members) +
             " corpus members; center replacement verified on " +
             std::to_string(replacements_met) + " premise-satisfying cablings";
    return true;
}

bool criterion7(Context& ctx, std::string& detail) {
    int braces = 0;
    for (const CycleSet& X : ctx.all_members()) {
        // construction runs the exhaustive axiom checks for |B| <= 512
        Brace B = Brace::permutation_brace(X);
        for (int x = 0; x < X.size(); ++x)
            for (int y = 0; y < X.size(); ++y)
                if (B.add(B.generator_id(x), B.generator_id(y)) !=
                    B.mul(B.generator_id(x), B.generator_id(X.op(x, y)))) {
                    detail = "defining identity fails";
                    return false;
                }
        auto soc = B.socle();
        auto fix = B.fix().members;
        for (int z : B.center().members)
            if (std::binary_search(fix.begin(), fix.end(), z) && !soc.contains(z)) {
                detail = "center/fix intersection escapes the socle";
                return false;
            }
        auto primes = prime_divisors(B.size());
        if (primes.size() == 1 && fix.size() < 2) {
            detail = "p-brace with trivial fix";
            return false;
        }
        if (B.additive_exponent() % X.diagonal().order() != 0) {
            detail = "diagonal order does not divide the class";
            return false;
        }
        ++braces;
    }
    detail = "axioms and structure facts on " + std::to_string(braces) + " braces";
    return true;
}

bool criterion8(Context& ctx, std::string& detail) {
    for (int k = 0; k <= 10; ++k) {
        Brace b = Brace::bk(k);  // axioms asserted in construction
        if (k < 2) continue;
        const int m = b.size();
        std::vector<int> involutions;
        for (int a = 0; a < m; ++a)
            if (b.multiplicative_order(a) <= 2) involutions.push_back(a);
        if (involutions != std::vector<int>{0, 1, m / 2, m / 2 + 1}) {
            detail = "wrong involution set in bk(" + std::to_string(k) + ")";
            return false;
        }
        std::vector<int> one = b.multiplicative_span({1});
        std::vector<int> evens = b.additive_span({2});
        if (one != std::vector<int>{0, 1} || !b.is_multiplicative_subgroup(evens)) {
            detail = "bk(" + std::to_string(k) + ") does not split";
            return false;
        }
        std::set<int> products;
        for (int u : one)
            for (int w : evens) products.insert(b.mul(u, w));
        if (static_cast<int>(products.size()) != m) {
            detail = "bk(" + std::to_string(k) + ") is not the direct product";
            return false;
        }
        bool cyclic = false;
        for (int w : evens)
            if (b.multiplicative_span({w}) == evens) cyclic = true;
        if (!cyclic) {
            detail = "<2>+ not multiplicatively cyclic in bk(" +
                     std::to_string(k) + ")";
            return false;
        }
    }

    int involutions_checked = 0;
    for (const CycleSet& X : ctx.all_members()) {
        Brace B = Brace::permutation_brace(X);
        for (int z : B.center().members) {
            if (B.mul(z, z) != 0) continue;
            auto sub = central_involution_subbrace(B, z);  // asserts the bk match
            if ((1ll << sub.k) != B.additive_order(z)) {
                detail = "central involution with non-2-power additive order";
                return false;
            }
            ++involutions_checked;
        }
    }
    detail = "bk(0..10) verified; " + std::to_string(involutions_checked) +
             " central involutions generate bk subbraces";
    return true;
}

bool criterion9(Context&, std::string& detail) {
    int classified = 0;
    for (int m = 2; m <= 64; ++m) {
        PrimePower pp;
        try {
            pp = factor_prime_power(m);
        } catch (const NotPrimePowerError&) {
            continue;
        }
        if (pp.p == 2) {
            auto found = classify_fixed_point_free(m, 2);
            std::sort(found.begin(), found.end());
            if (found != predicted_fixed_point_free_two(pp.v)) {
                detail = "2-power lemma mismatch at m=" + std::to_string(m);
                return false;
            }
        } else {
            auto found = classify_fixed_point_free(m, static_cast<int>(pp.p));
            std::sort(found.begin(), found.end());
            if (found != predicted_fixed_point_free_odd(pp.p, pp.v)) {
                detail = "odd lemma mismatch at m=" + std::to_string(m);
                return false;
            }
        }
        ++classified;
    }
    for (int v = 2; v <= 6; ++v) {
        if (!classify_double_shift_centralizer(v).match()) {
            detail = "double-shift centralizer mismatch at v=" + std::to_string(v);
            return false;
        }
    }
    detail = std::to_string(classified) +
             " prime powers classified; double-shift involutions match for v=2..6";
    return true;
}

bool criterion10(Context& ctx, std::string& detail) {
    int irreducible = 0;
    for (const CycleSet& X : ctx.all_members()) {
        if (X.diagonal().cycle_structure().is_full_cycle && !is_irreducible(X)) {
            detail = "full-cycle diagonal member is reducible";
            return false;
        }
        if (!is_irreducible(X)) continue;
        PiTypeResult pt = pi_type(X);
        if (!pt.is_pi_type) {
            detail = "irreducible member is not of pi-type";
            return false;
        }
        ++irreducible;
    }
    detail = std::to_string(irreducible) + " irreducible members, all pi-type";
    return true;
}

}  // namespace

int main() {
    Context ctx;
    for (int n = 1; n <= 4; ++n) {
        auto sets = enumerate_cyclesets(n, true);
        ctx.corpus.insert(ctx.corpus.end(), sets.begin(), sets.end());
    }
    std::cout << "corpus: " << ctx.corpus.size()
              << " cycle sets of size <= 4 up to isomorphism\n";

    struct Entry {
        int id;
        const char* name;
        std::function<bool(Context&, std::string&)> run;
    };
    std::vector<Entry> criteria = {
        {1, "x4_19 fixture invariants", criterion1},
        {2, "uniqueness of the irretractable full-cycle size-4 set", criterion2},
        {3, "n=8 full-cycle sets are all retractable", criterion3},
        {5, "odd prime-power retractability at n=3,5,9", criterion5},
        {6, "cabling identity suite over the corpus", criterion6},
        {7, "brace axioms and structure facts", criterion7},
        {8, "bk braces and central involutions", criterion8},
        {9, "holomorph classification oracles", criterion9},
        {10, "irreducibility and pi-type", criterion10},
    };

    int failures = 0;
    auto report = [&](int id, const char* name, int status,
                      const std::string& detail, double secs) {
        const char* verdict = status > 0 ? "PASS" : status == 0 ? "NOT-RUN" : "FAIL";
        std::cout << "CRITERION " << id << " " << verdict << " [" << name << "] "
                  << detail << " (" << secs << "s)" << std::endl;
        if (status < 0) ++failures;
    };

    for (auto& c : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        int status;
        try {
            status = c.run(ctx, detail) ? 1 : -1;
        } catch (const std::exception& e) {
            status = -1;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        report(c.id, c.name, status, detail, secs);
        if (c.id == 3) {
            std::string d4;
            auto s4 = std::chrono::steady_clock::now();
            int st;
            try {
                st = criterion4(d4);
            } catch (const std::exception& e) {
                st = -1;
                d4 = std::string("exception: ") + e.what();
            }
            double secs4 = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - s4)
                               .count();
            report(4, "n=16 appendix model nonexistence (extended)", st, d4, secs4);
        }
    }

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
