#include "endocable/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "endocable/brace.hpp"
#include "endocable/endo.hpp"
#include "endocable/holomorph.hpp"

namespace endocable::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string join(const std::vector<int>& v, char sep = ',') {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

void echo(Report& r, const std::string& command, const std::string& input) {
    r.result("command", command);
    if (!input.empty()) r.result("input_digest", fnv1a_digest(input));
}

void write_cycleset(const CycleSet& X, const Options& opts) {
    if (opts.output_path.empty()) {
        *opts.out << X.serialize();
    } else {
        std::ofstream out(opts.output_path);
        if (!out) throw std::runtime_error("cannot write " + opts.output_path);
        out << X.serialize();
    }
}

int exit_code_of(const Report& r) { return r.all_passed() ? 0 : 1; }

}  // namespace

Options::Options() : cap(closure_cap_from_env()) {}

std::size_t closure_cap_from_env() {
    if (const char* env = std::getenv("ENDOCABLE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return PermGroup::kDefaultCap;
}

CommandResult cmd_analyze(const std::string& path, const Options& opts) {
    CommandResult res;
    Report& r = res.report;
    std::string text = read_file(path);
    echo(r, "analyze", text);

    CycleSet X = CycleSet::parse(text);
    r.result("n", std::to_string(X.size()));

    Perm T = X.diagonal();
    auto ts = T.cycle_structure();
    r.result("diagonal_cycle_type", join(ts.cycle_type));
    r.result("diagonal_order", std::to_string(ts.order));
    r.result("diagonal_full_cycle", ts.is_full_cycle ? "true" : "false");

    BraceCheckOptions check;
    check.seed = opts.seed;
    Brace B = Brace::permutation_brace(X, opts.cap, check);
    r.result("group_order", std::to_string(B.size()));
    long long d = B.additive_exponent();
    r.result("dehornoy_class", std::to_string(d));
    r.check("diagonal_order_divides_class", d % ts.order == 0);
    r.result("socle_size", std::to_string(B.socle().size()));
    r.result("fix_size", std::to_string(B.fix().size()));
    r.result("center_size", std::to_string(B.center().size()));
    r.result("center_members", join(B.center().members));

    Decomposition dec = decomposition(X);
    r.result("indecomposable", dec.indecomposable ? "true" : "false");
    r.result("orbit_count", std::to_string(dec.orbits.size()));
    r.result("irreducible", is_irreducible(X) ? "true" : "false");
    if (dec.indecomposable) {
        PiTypeResult pt = pi_type(X, opts.cap);
        r.result("pi_type", pt.is_pi_type ? "true" : "false");
        r.result("p_type", pt.is_p_type ? std::to_string(pt.primes_of_size[0])
                                        : std::string("none"));
    } else {
        r.result("pi_type", "undefined(decomposable)");
    }

    MplResult m = mpl(X);
    r.result("retraction_tower", join(m.tower_sizes));
    r.result("mpl", m.finite ? std::to_string(m.level) : std::string("INFINITE"));
    r.result("irretractable",
             X.size() == retract(X).quotient.size() ? "true" : "false");

    r.print(*opts.out);
    res.exit_code = exit_code_of(r);
    return res;
}

CommandResult cmd_retract(const std::string& path, const Options& opts) {
    CommandResult res;
    Report& r = res.report;
    std::string text = read_file(path);
    echo(r, "retract", text);

    CycleSet X = CycleSet::parse(text);
    MplResult m = mpl(X);
    r.result("retraction_tower", join(m.tower_sizes));
    r.result("mpl", m.finite ? std::to_string(m.level) : std::string("INFINITE"));

    r.print(*opts.out);
    CycleSet cur = X;
    *opts.out << "---\n" << cur.serialize();
    while (cur.size() > 1) {
        CycleSet next = retract(cur).quotient;
        if (next.size() == cur.size()) break;
        *opts.out << "---\n" << next.serialize();
        cur = std::move(next);
    }
    res.exit_code = exit_code_of(r);
    return res;
}

CommandResult cmd_cable(const std::string& path, const CableSelector& sel,
                        const Options& opts) {
    CommandResult res;
    Report& r = res.report;
    std::string text = read_file(path);
    echo(r, "cable", text);

    CycleSet X = CycleSet::parse(text);
    for (int round = 0; round < sel.iterate; ++round) {
        BraceCheckOptions check;
        check.seed = opts.seed;
        Brace B = Brace::permutation_brace(X, opts.cap, check);
        const Perm T = X.diagonal();
        LambdaEndo phi = [&] {
            switch (sel.kind) {
                case CableSelector::Kind::Scalar:
                    return LambdaEndo::scalar(B, sel.scalar);
                case CableSelector::Kind::Central:
                    return LambdaEndo::central(B, sel.z);
                case CableSelector::Kind::PhiZ: {
                    LambdaEndo lz = LambdaEndo::central(B, sel.z);
                    std::vector<int> image(B.size());
                    for (int g = 0; g < B.size(); ++g) image[g] = B.sub(g, lz(g));
                    return LambdaEndo::classify(B, std::move(image));
                }
            }
            throw std::logic_error("unreachable");
        }();

        CycleSet Xf = cable(X, phi);
        const Perm Tf = Xf.diagonal();
        Perm predicted = Perm::identity(X.size());
        switch (sel.kind) {
            case CableSelector::Kind::Scalar:
                predicted = T.power(sel.scalar);
                break;
            case CableSelector::Kind::Central: {
                const Perm lz = B.perm(sel.z);
                predicted = lz.inverse() * T * lz;
                break;
            }
            case CableSelector::Kind::PhiZ: {
                const Perm lz = B.perm(sel.z);
                predicted = T * (lz.inverse() * T * lz).inverse();
                break;
            }
        }
        r.result("round" + std::to_string(round) + "_diagonal_cycle_type",
                 join(Tf.cycle_structure().cycle_type));
        r.check("round" + std::to_string(round) + "_diagonal_matches_prediction",
                Tf == predicted,
                "[" + Tf.to_string() + "] vs [" + predicted.to_string() + "]");
        X = std::move(Xf);
    }

    if (!opts.output_path.empty()) r.result("output", opts.output_path);
    r.print(*opts.out);
    if (opts.output_path.empty()) *opts.out << "---\n";
    write_cycleset(X, opts);
    res.exit_code = exit_code_of(r);
    return res;
}

CommandResult cmd_verify_identities(const std::string& path, const Options& opts) {
    CommandResult res;
    std::string text = read_file(path);
    echo(res.report, "verify_identities", text);
    CycleSet X = CycleSet::parse(text);
    res.report.merge(identity_suite(X, opts.cap, opts.seed));
    res.report.print(*opts.out);
    res.exit_code = exit_code_of(res.report);
    return res;
}

CommandResult cmd_verify_theorem(const std::string& name, int n,
                                 const Options& opts) {
    CommandResult res;
    echo(res.report, "verify_theorem", "");
    TheoremName theorem;
    if (name == "FULLCYCLE_ODD") {
        theorem = TheoremName::FullCycleOdd;
    } else if (name == "FULLCYCLE_TWO") {
        theorem = TheoremName::FullCycleTwo;
    } else {
        throw std::invalid_argument(
            "unknown theorem '" + name +
            "'; expected FULLCYCLE_ODD or FULLCYCLE_TWO");
    }
    res.report.merge(verify_theorem(theorem, n, opts.budget(), opts.extended));
    res.report.print(*opts.out);
    res.exit_code = exit_code_of(res.report);
    return res;
}

CommandResult cmd_search(const std::string& model_path, const std::string& mode,
                         const Options& opts) {
    CommandResult res;
    Report& r = res.report;
    std::string text = read_file(model_path);
    echo(r, "search", text);

    SearchModel model = SearchModel::build(ModelSpec::parse(text));
    SolveMode m;
    if (mode == "first") {
        m = SolveMode::First;
    } else if (mode == "all") {
        m = SolveMode::All;
    } else if (mode == "decide") {
        m = SolveMode::Decide;
    } else {
        throw std::invalid_argument("unknown mode '" + mode +
                                    "'; expected first|all|decide");
    }

    SearchOutcome outcome = solve(model, m, opts.budget(), opts.threads);
    r.result("status", outcome.status == SolveStatus::Sat      ? "SAT"
                       : outcome.status == SolveStatus::Unsat ? "UNSAT"
                                                              : "TIMEOUT");
    r.result("solutions", std::to_string(outcome.solutions.size()));
    r.result("nodes", std::to_string(outcome.stats.nodes));
    r.result("propagations", std::to_string(outcome.stats.propagations));
    std::cerr << "wall_seconds " << outcome.stats.wall_seconds << '\n';

    r.print(*opts.out);
    if (m != SolveMode::Decide)
        for (const CycleSet& X : outcome.solutions)
            *opts.out << "---\n" << X.serialize();
    res.exit_code = 0;
    return res;
}

CommandResult cmd_enumerate(int n, bool up_to_iso, const std::string& diagonal,
                            const Options& opts) {
    CommandResult res;
    Report& r = res.report;
    echo(r, "enumerate", "");
    DiagonalKind kind;
    if (diagonal == "none") {
        kind = DiagonalKind::None;
    } else if (diagonal == "fullcycle") {
        kind = DiagonalKind::FullCycle;
    } else {
        throw std::invalid_argument("unknown diagonal '" + diagonal + "'");
    }
    std::vector<CycleSet> sets =
        enumerate_cyclesets(n, up_to_iso, kind, opts.budget());
    r.result("count", std::to_string(sets.size()));
    r.print(*opts.out);
    for (const CycleSet& X : sets) *opts.out << "---\n" << X.serialize();
    res.exit_code = 0;
    return res;
}

CommandResult cmd_oracle_hol(long long p, int v, const Options& opts) {
    CommandResult res;
    Report& r = res.report;
    echo(r, "oracle_hol", "");
    long long m = 1;
    for (int i = 0; i < v; ++i) m *= p;
    if (m > 4096) throw std::invalid_argument("oracle hol: p^v too large");
    r.result("modulus", std::to_string(m));

    const int r_exp = p == 2 ? 2 : static_cast<int>(p);
    std::vector<AffineMap> found =
        classify_fixed_point_free(static_cast<int>(m), r_exp);
    std::vector<AffineMap> predicted =
        p == 2 ? predicted_fixed_point_free_two(v)
               : predicted_fixed_point_free_odd(p, v);
    std::sort(found.begin(), found.end());

    auto fmt = [](const std::vector<AffineMap>& maps) {
        std::ostringstream os;
        for (std::size_t i = 0; i < maps.size(); ++i) {
            if (i) os << ' ';
            os << maps[i].alpha << "x+" << maps[i].beta;
        }
        return os.str();
    };
    r.result("found", fmt(found));
    r.result("predicted", fmt(predicted));
    r.check("classification_matches_lemma", found == predicted);
    r.print(*opts.out);
    res.exit_code = exit_code_of(r);
    return res;
}

CommandResult cmd_oracle_t2(int v, const Options& opts) {
    CommandResult res;
    Report& r = res.report;
    echo(r, "oracle_t2", "");
    if (v < 2 || v > 6)
        throw std::invalid_argument("oracle t2: v must be in 2..6");
    ShiftCentralizerInvolutions cls = classify_double_shift_centralizer(v);
    r.result("modulus", std::to_string(1 << v));
    r.result("found_count", std::to_string(cls.found.size()));
    r.result("predicted_count", std::to_string(cls.predicted.size()));
    for (const Perm& p : cls.found) r.result("involution", p.to_string());
    r.check("classification_matches_lemma", cls.match());
    r.print(*opts.out);
    res.exit_code = exit_code_of(r);
    return res;
}

}  // namespace endocable::cli
