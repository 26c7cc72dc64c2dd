#include "endocable/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace endocable {

namespace {

int mod(int x, int n) {
    int r = x % n;
    return r < 0 ? r + n : r;
}

// Value transform v |-> eps*v + off (mod n), eps in {+1, -1}.
struct Transform {
    int eps = 1;
    int off = 0;
    int apply(int v, int n) const { return mod(eps * v + off, n); }
    Transform inverse(int n) const {
        return eps == 1 ? Transform{1, mod(-off, n)} : Transform{-1, off};
    }
    Transform then(const Transform& inner, int n) const {
        // apply inner first: v |-> this(inner(v))
        return Transform{eps * inner.eps, mod(eps * inner.off + off, n)};
    }
    bool operator==(const Transform&) const = default;
};

}  // namespace

// ---------------------------------------------------------------------------
// model spec text format

std::string ModelSpec::serialize() const {
    std::ostringstream os;
    os << "n=" << n << '\n';
    switch (diagonal) {
        case DiagonalKind::None: os << "diagonal=none\n"; break;
        case DiagonalKind::FullCycle: os << "diagonal=fullcycle\n"; break;
        case DiagonalKind::Explicit:
            os << "diagonal=explicit:" << explicit_diagonal->to_string() << '\n';
            break;
    }
    if (central_symmetry) os << "central_symmetry=" << *central_symmetry << '\n';
    if (shift_automorphism) os << "shift=" << *shift_automorphism << '\n';
    os << "irretractable=" << (require_irretractable ? "true" : "false") << '\n';
    if (require_all_solutions) os << "all_solutions=true\n";
    for (const auto& f : fixed_cells)
        os << "fix=" << f[0] << ',' << f[1] << ',' << f[2] << '\n';
    return os.str();
}

ModelSpec ModelSpec::parse(const std::string& text) {
    ModelSpec spec;
    std::istringstream is(text);
    std::string line;
    auto bad = [](const std::string& what) {
        throw InconsistentSpecError("model spec: " + what);
    };
    while (std::getline(is, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) bad("expected key=value: " + line);
        std::string key = line.substr(first, eq - first);
        std::string value = line.substr(eq + 1);
        try {
            if (key == "n") {
                spec.n = std::stoi(value);
            } else if (key == "diagonal") {
                if (value == "none") {
                    spec.diagonal = DiagonalKind::None;
                } else if (value == "fullcycle") {
                    spec.diagonal = DiagonalKind::FullCycle;
                } else if (value.rfind("explicit:", 0) == 0) {
                    spec.diagonal = DiagonalKind::Explicit;
                    spec.explicit_diagonal = Perm::parse(value.substr(9));
                } else {
                    bad("unknown diagonal '" + value + "'");
                }
            } else if (key == "central_symmetry") {
                spec.central_symmetry = std::stoi(value);
            } else if (key == "shift") {
                spec.shift_automorphism = std::stoi(value);
            } else if (key == "irretractable") {
                spec.require_irretractable = value == "true";
            } else if (key == "all_solutions") {
                spec.require_all_solutions = value == "true";
            } else if (key == "fix") {
                std::array<int, 3> f{};
                char c1, c2;
                std::istringstream fs(value);
                if (!(fs >> f[0] >> c1 >> f[1] >> c2 >> f[2]) || c1 != ',' || c2 != ',')
                    bad("bad fix entry '" + value + "'");
                spec.fixed_cells.push_back(f);
            } else {
                bad("unknown key '" + key + "'");
            }
        } catch (const InconsistentSpecError&) {
            throw;
        } catch (const std::exception&) {
            bad("bad value for " + key + ": '" + value + "'");
        }
    }
    return spec;
}

ModelSpec ModelSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InconsistentSpecError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

// ---------------------------------------------------------------------------
// model compilation

SearchModel SearchModel::build(const ModelSpec& spec) {
    const int n = spec.n;
    if (n < 1) throw InconsistentSpecError("n must be >= 1");
    if (n > 64) throw InconsistentSpecError("n > 64 is not supported");
    if (spec.central_symmetry) {
        int beta = *spec.central_symmetry;
        if (beta < 0 || beta >= n || beta % 2 != 1)
            throw InconsistentSpecError("central symmetry parameter must be odd and in range");
    }
    if (spec.shift_automorphism) {
        int s = *spec.shift_automorphism;
        if (s <= 0 || s >= n)
            throw InconsistentSpecError("shift must satisfy 0 < s < n");
    }
    if (spec.diagonal == DiagonalKind::Explicit &&
        (!spec.explicit_diagonal || spec.explicit_diagonal->degree() != n))
        throw InconsistentSpecError("explicit diagonal of wrong degree");
    for (const auto& f : spec.fixed_cells)
        if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n || f[2] < 0 || f[2] >= n)
            throw InconsistentSpecError("fixed cell out of range");

    const int cells = n * n;
    std::vector<int> parent(cells);
    std::vector<Transform> up(cells);  // value(cell) = up(value(parent))
    for (int c = 0; c < cells; ++c) parent[c] = c;

    // find with path compression, composing transforms along the way;
    // value(c) = returned_transform(value(root))
    std::function<std::pair<int, Transform>(int)> find =
        [&](int c) -> std::pair<int, Transform> {
        if (parent[c] == c) return {c, Transform{}};
        auto [root, t] = find(parent[c]);
        up[c] = up[c].then(t, n);
        parent[c] = root;
        return {root, up[c]};
    };

    // Extra constraints on root values discovered by conflicting merges:
    // t_a(u) = t_b(u).
    std::vector<std::vector<std::pair<Transform, Transform>>> root_constraints(cells);

    auto unite = [&](int c1, int c2, Transform t) {
        // value(c1) = t(value(c2))
        auto [r1, t1] = find(c1);
        auto [r2, t2] = find(c2);
        Transform rhs = t.then(t2, n);  // value(c1) = rhs(value(r2))
        if (r1 == r2) {
            if (!(t1 == rhs)) root_constraints[r1].push_back({t1, rhs});
            return;
        }
        // value(r1) = t1^-1(value(c1)) = (t1^-1 o rhs)(value(r2))
        parent[r1] = r2;
        up[r1] = t1.inverse(n).then(rhs, n);
        // re-express pending constraints on r1 values in r2 coordinates
        for (auto& [ta, tb] : root_constraints[r1])
            root_constraints[r2].push_back(
                {ta.then(up[r1], n), tb.then(up[r1], n)});
        root_constraints[r1].clear();
    };

    auto cell_id = [n](int r, int c) { return r * n + c; };

    if (spec.shift_automorphism) {
        int s = *spec.shift_automorphism;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                unite(cell_id(mod(i + s, n), mod(j + s, n)), cell_id(i, j),
                      Transform{1, s});
    }
    if (spec.central_symmetry) {
        int beta = *spec.central_symmetry;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                unite(cell_id(i, mod(beta - j, n)), cell_id(i, j),
                      Transform{-1, beta});
    }

    // Collect classes, ordered by smallest (row, col) member; re-root each
    // cell's transform at that representative.
    SearchModel model;
    model.spec_ = spec;
    model.cells_.resize(cells);
    std::vector<int> class_of_root(cells, -1);
    std::vector<Transform> rep_from_root(cells);
    for (int c = 0; c < cells; ++c) {
        auto [root, t] = find(c);
        if (class_of_root[root] == -1) {
            class_of_root[root] = static_cast<int>(model.reps_.size());
            model.reps_.emplace_back(c / n, c % n);
            rep_from_root[root] = t;  // value(rep) = t(value(root))
        }
    }
    const std::uint64_t full =
        n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    model.class_domains_.assign(model.reps_.size(), full);

    for (int c = 0; c < cells; ++c) {
        auto [root, t] = find(c);
        int cls = class_of_root[root];
        // value(cell) = t(value(root)) = (t o rep_from_root^-1)(value(rep))
        Transform rel = t.then(rep_from_root[root].inverse(n), n);
        model.cells_[c] = CellRef{cls, rel.eps, rel.off};
    }

    auto restrict_class = [&](int cls, std::uint64_t keep) {
        model.class_domains_[cls] &= keep;
    };

    // Same-root merge constraints, translated to the representative value.
    for (int root = 0; root < cells; ++root) {
        if (class_of_root[root] == -1) continue;
        int cls = class_of_root[root];
        for (const auto& [ta, tb] : root_constraints[root]) {
            std::uint64_t keep = 0;
            Transform rf = rep_from_root[root];
            for (int u = 0; u < n; ++u) {
                // u is the representative value; root value is rf^-1(u)
                int rootval = rf.inverse(n).apply(u, n);
                if (ta.apply(rootval, n) == tb.apply(rootval, n))
                    keep |= std::uint64_t{1} << u;
            }
            restrict_class(cls, keep);
        }
    }

    // Pinned cells: the diagonal and explicit fixes.
    auto pin = [&](int r, int c, int v) {
        const CellRef& ref = model.cell(r, c);
        Transform t{ref.eps, ref.off};
        int u = t.inverse(n).apply(v, n);
        restrict_class(ref.class_id, std::uint64_t{1} << u);
    };
    if (spec.diagonal == DiagonalKind::FullCycle)
        for (int i = 0; i < n; ++i) pin(i, i, mod(i + 1, n));
    if (spec.diagonal == DiagonalKind::Explicit)
        for (int i = 0; i < n; ++i) pin(i, i, (*spec.explicit_diagonal)(i));
    for (const auto& f : spec.fixed_cells) pin(f[0], f[1], f[2]);

    // Static intra-row collisions between cells of one class.
    for (int r = 0; r < n; ++r) {
        for (int c1 = 0; c1 < n; ++c1) {
            for (int c2 = c1 + 1; c2 < n; ++c2) {
                const CellRef& a = model.cell(r, c1);
                const CellRef& b = model.cell(r, c2);
                if (a.class_id != b.class_id) continue;
                std::uint64_t keep = 0;
                for (int u = 0; u < n; ++u)
                    if (Transform{a.eps, a.off}.apply(u, n) !=
                        Transform{b.eps, b.off}.apply(u, n))
                        keep |= std::uint64_t{1} << u;
                restrict_class(a.class_id, keep);
            }
        }
    }
    return model;
}

SearchModel SearchModel::appendix(int v) {
    if (v != 3 && v != 4)
        throw UnsupportedVError("appendix model is defined for v in {3, 4}");
    ModelSpec spec;
    spec.n = 1 << v;
    spec.diagonal = DiagonalKind::FullCycle;
    spec.central_symmetry = 1;
    spec.shift_automorphism = spec.n / 2;
    spec.require_irretractable = true;
    return build(spec);
}

bool SearchModel::satisfied_by(const CycleSet& X) const {
    const int n = spec_.n;
    if (X.size() != n) return false;
    if (spec_.diagonal == DiagonalKind::FullCycle)
        for (int i = 0; i < n; ++i)
            if (X.op(i, i) != mod(i + 1, n)) return false;
    if (spec_.diagonal == DiagonalKind::Explicit)
        for (int i = 0; i < n; ++i)
            if (X.op(i, i) != (*spec_.explicit_diagonal)(i)) return false;
    if (spec_.central_symmetry) {
        int beta = *spec_.central_symmetry;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (X.op(i, mod(beta - j, n)) != mod(beta - X.op(i, j), n))
                    return false;
    }
    if (spec_.shift_automorphism) {
        int s = *spec_.shift_automorphism;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (X.op(mod(i + s, n), mod(j + s, n)) != mod(X.op(i, j) + s, n))
                    return false;
    }
    if (spec_.require_irretractable)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (X.table()[i] == X.table()[j]) return false;
    for (const auto& f : spec_.fixed_cells)
        if (X.op(f[0], f[1]) != f[2]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// solver

namespace {

struct SharedSearch {
    const SearchModel& model;
    SolveMode mode;
    Budget budget;
    std::chrono::steady_clock::time_point start;
    std::atomic<bool> done{false};
    std::atomic<bool> timed_out{false};
    std::mutex sink_mutex;
    std::vector<CycleSet> solutions;

    explicit SharedSearch(const SearchModel& m, SolveMode mode, Budget budget)
        : model(m), mode(mode), budget(budget),
          start(std::chrono::steady_clock::now()) {}

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

class Worker {
public:
    Worker(SharedSearch& shared) : sh_(shared), model_(shared.model) {
        n_ = model_.n();
        num_classes_ = model_.num_classes();
    }

    struct State {
        std::vector<std::uint64_t> dom;
        std::vector<int> val;
        int unassigned = 0;
    };

    State root_state() const {
        State st;
        st.dom = model_.class_domains();
        st.val.assign(num_classes_, -1);
        st.unassigned = num_classes_;
        return st;
    }

    long long nodes = 0;
    long long propagations = 0;

    bool assign(State& st, int cls, int u) {
        if (st.val[cls] != -1) return st.val[cls] == u;
        if (!(st.dom[cls] >> u & 1)) return false;
        st.dom[cls] = std::uint64_t{1} << u;
        st.val[cls] = u;
        --st.unassigned;
        ++propagations;
        return true;
    }

    int cell_value(const State& st, int r, int c) const {
        const auto& ref = model_.cell(r, c);
        int u = st.val[ref.class_id];
        if (u < 0) return -1;
        return mod(ref.eps * u + ref.off, n_);
    }

    // Remove cell value w from cell (r, c); translates through the cell
    // transform onto the class domain.
    bool forbid_cell_value(State& st, int r, int c, int w) {
        const auto& ref = model_.cell(r, c);
        int u = ref.eps == 1 ? mod(w - ref.off, n_) : mod(ref.off - w, n_);
        std::uint64_t bit = std::uint64_t{1} << u;
        if (!(st.dom[ref.class_id] & bit)) return true;
        if (st.val[ref.class_id] != -1) return false;  // assigned to w
        st.dom[ref.class_id] &= ~bit;
        ++propagations;
        if (st.dom[ref.class_id] == 0) return false;
        return true;
    }

    bool force_cell_value(State& st, int r, int c, int w) {
        const auto& ref = model_.cell(r, c);
        int u = ref.eps == 1 ? mod(w - ref.off, n_) : mod(ref.off - w, n_);
        return assign(st, ref.class_id, u);
    }

    bool propagate(State& st) {
        bool changed = true;
        while (changed) {
            changed = false;
            int before = st.unassigned;

            // Row allDifferent: duplicates among ground cells fail, ground
            // values are pruned from the other cells of the row.
            for (int r = 0; r < n_; ++r) {
                std::uint64_t ground = 0;
                for (int c = 0; c < n_; ++c) {
                    int w = cell_value(st, r, c);
                    if (w < 0) continue;
                    std::uint64_t bit = std::uint64_t{1} << w;
                    if (ground & bit) return false;
                    ground |= bit;
                }
                for (int c = 0; c < n_ && ground; ++c) {
                    if (cell_value(st, r, c) != -1) continue;
                    std::uint64_t vals = ground;
                    while (vals) {
                        int w = std::countr_zero(vals);
                        vals &= vals - 1;
                        if (!forbid_cell_value(st, r, c, w)) return false;
                    }
                }
            }

            // Singleton domains become assignments.
            for (int cls = 0; cls < num_classes_; ++cls) {
                if (st.val[cls] == -1 && std::popcount(st.dom[cls]) == 1) {
                    if (!assign(st, cls, std::countr_zero(st.dom[cls])))
                        return false;
                }
            }

            // Forward checking of the cycloid law on ground triples: when
            // C(i,j), C(i,k), C(j,i), C(j,k) are all ground, the cells
            // (C(i,j), C(i,k)) and (C(j,i), C(j,k)) must agree; with one
            // side ground the other is forced.
            for (int i = 0; i < n_; ++i) {
                for (int j = 0; j < n_; ++j) {
                    if (i == j) continue;
                    int cij = cell_value(st, i, j);
                    int cji = cell_value(st, j, i);
                    if (cij < 0 || cji < 0) continue;
                    for (int k = 0; k < n_; ++k) {
                        int cik = cell_value(st, i, k);
                        if (cik < 0) continue;
                        int cjk = cell_value(st, j, k);
                        if (cjk < 0) continue;
                        int lhs = cell_value(st, cij, cik);
                        int rhs = cell_value(st, cji, cjk);
                        if (lhs >= 0 && rhs >= 0) {
                            if (lhs != rhs) return false;
                        } else if (lhs >= 0) {
                            if (!force_cell_value(st, cji, cjk, lhs)) return false;
                        } else if (rhs >= 0) {
                            if (!force_cell_value(st, cij, cik, rhs)) return false;
                        }
                    }
                }
            }

            // Completed equal rows cut the branch when irretractability is
            // demanded.
            if (model_.spec().require_irretractable) {
                for (int r1 = 0; r1 < n_; ++r1) {
                    for (int r2 = r1 + 1; r2 < n_; ++r2) {
                        bool equal = true;
                        for (int c = 0; c < n_ && equal; ++c) {
                            int a = cell_value(st, r1, c);
                            int b = cell_value(st, r2, c);
                            equal = a >= 0 && a == b;
                        }
                        if (equal) return false;
                    }
                }
            }

            if (st.unassigned != before) changed = true;
        }
        return true;
    }

    bool out_of_budget() {
        if (sh_.budget.max_nodes >= 0 && nodes > sh_.budget.max_nodes) return true;
        if (sh_.budget.max_seconds >= 0 && (nodes & 255) == 0 &&
            sh_.elapsed() > sh_.budget.max_seconds)
            return true;
        return false;
    }

    void emit(const State& st) {
        std::vector<std::vector<int>> table(n_, std::vector<int>(n_));
        for (int r = 0; r < n_; ++r)
            for (int c = 0; c < n_; ++c) table[r][c] = cell_value(st, r, c);
        CycleSet X = CycleSet::validate(std::move(table));
        if (!model_.satisfied_by(X))
            throw std::logic_error("solver produced a table violating the model");
        std::lock_guard<std::mutex> lock(sh_.sink_mutex);
        sh_.solutions.push_back(std::move(X));
        if (sh_.mode != SolveMode::All) sh_.done.store(true);
    }

    void search(State& st) {
        if (sh_.done.load(std::memory_order_relaxed)) return;
        ++nodes;
        if (out_of_budget()) {
            sh_.timed_out.store(true);
            return;
        }
        if (!propagate(st)) return;
        if (st.unassigned == 0) {
            emit(st);
            return;
        }
        int cls = pick_class(st);
        std::uint64_t dom = st.dom[cls];
        while (dom) {
            int u = std::countr_zero(dom);
            dom &= dom - 1;
            State child = st;
            if (assign(child, cls, u)) search(child);
            if (sh_.done.load(std::memory_order_relaxed) ||
                sh_.timed_out.load(std::memory_order_relaxed))
                return;
        }
    }

    int pick_class(const State& st) const {
        int best = -1, best_size = n_ + 1;
        for (int cls = 0; cls < num_classes_; ++cls) {
            if (st.val[cls] != -1) continue;
            int size = std::popcount(st.dom[cls]);
            if (size < best_size) {
                best_size = size;
                best = cls;
            }
        }
        return best;
    }

private:
    SharedSearch& sh_;
    const SearchModel& model_;
    int n_ = 0;
    int num_classes_ = 0;
};

}  // namespace

SearchOutcome solve(const SearchModel& model, SolveMode mode, Budget budget,
                    int threads) {
    SharedSearch shared(model, mode, budget);
    SearchOutcome out;

    Worker root_worker(shared);
    Worker::State root = root_worker.root_state();
    ++root_worker.nodes;
    bool root_alive = root_worker.propagate(root);
    long long total_nodes = root_worker.nodes;
    long long total_props = root_worker.propagations;

    if (root_alive && root.unassigned == 0) {
        root_worker.emit(root);
    } else if (root_alive) {
        if (threads <= 1) {
            int cls = root_worker.pick_class(root);
            std::uint64_t dom = root.dom[cls];
            while (dom) {
                int u = std::countr_zero(dom);
                dom &= dom - 1;
                Worker::State child = root;
                if (root_worker.assign(child, cls, u)) root_worker.search(child);
                if (shared.done.load() || shared.timed_out.load()) break;
            }
            total_nodes = root_worker.nodes;
            total_props = root_worker.propagations;
        } else {
            int cls = root_worker.pick_class(root);
            std::vector<int> values;
            std::uint64_t dom = root.dom[cls];
            while (dom) {
                values.push_back(std::countr_zero(dom));
                dom &= dom - 1;
            }
            std::vector<std::thread> pool;
            std::vector<Worker> workers;
            workers.reserve(threads);
            for (int t = 0; t < threads; ++t) workers.emplace_back(shared);
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    for (std::size_t i = t; i < values.size();
                         i += static_cast<std::size_t>(threads)) {
                        Worker::State child = root;
                        if (workers[t].assign(child, cls, values[i]))
                            workers[t].search(child);
                        if (shared.done.load() || shared.timed_out.load()) break;
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (const Worker& w : workers) {
                total_nodes += w.nodes;
                total_props += w.propagations;
            }
        }
    }

    out.solutions = std::move(shared.solutions);
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const CycleSet& a, const CycleSet& b) {
                  return a.table() < b.table();
              });
    out.stats.nodes = total_nodes;
    out.stats.propagations = total_props;
    out.stats.wall_seconds = shared.elapsed();

    if (shared.timed_out.load() &&
        !(mode != SolveMode::All && !out.solutions.empty())) {
        out.status = SolveStatus::Timeout;
    } else {
        out.status = out.solutions.empty() ? SolveStatus::Unsat : SolveStatus::Sat;
    }
    return out;
}

// ---------------------------------------------------------------------------
// enumeration and theorem verification

std::vector<CycleSet> enumerate_cyclesets(int n, bool up_to_iso,
                                          DiagonalKind diagonal, Budget budget) {
    if (n < 1 || n > 8)
        throw SizeCapExceededError("enumerate_cyclesets: n must be in 1..8");
    if (n > 5 && diagonal == DiagonalKind::None)
        throw SizeCapExceededError(
            "enumerate_cyclesets: n in 6..8 requires a diagonal constraint");
    ModelSpec spec;
    spec.n = n;
    spec.diagonal = diagonal;
    spec.require_all_solutions = true;
    SearchOutcome outcome = solve(SearchModel::build(spec), SolveMode::All, budget);
    if (outcome.status == SolveStatus::Timeout)
        throw SizeCapExceededError("enumerate_cyclesets: budget exceeded");
    if (!up_to_iso) return std::move(outcome.solutions);

    std::vector<CycleSet> reps;
    for (const CycleSet& X : outcome.solutions) {
        bool fresh = true;
        for (const CycleSet& Y : reps) {
            if (are_isomorphic(X, Y)) {
                fresh = false;
                break;
            }
        }
        if (fresh) reps.push_back(X);
    }
    return reps;
}

CycleSet x4_19() {
    return CycleSet::validate({{1, 0, 2, 3}, {3, 2, 0, 1}, {0, 1, 3, 2}, {2, 3, 1, 0}});
}

Report verify_theorem(TheoremName name, int n, Budget budget, bool allow_extended) {
    Report r;
    if (name == TheoremName::FullCycleOdd) {
        if (n != 3 && n != 5 && n != 9 && n != 25 && n != 27)
            throw std::invalid_argument(
                "verify_theorem: FULLCYCLE_ODD supports n in {3,5,9,25,27}");
        r.result("theorem", "FULLCYCLE_ODD");
    } else {
        if (n != 2 && n != 4 && n != 8 && n != 16)
            throw std::invalid_argument(
                "verify_theorem: FULLCYCLE_TWO supports n in {2,4,8,16}");
        if (n == 16 && !allow_extended)
            throw std::invalid_argument(
                "verify_theorem: n = 16 is an extended run; pass --extended");
        r.result("theorem", "FULLCYCLE_TWO");
    }
    r.result("n", std::to_string(n));

    ModelSpec spec;
    spec.n = n;
    spec.diagonal = DiagonalKind::FullCycle;
    spec.require_all_solutions = true;
    SearchOutcome outcome = solve(SearchModel::build(spec), SolveMode::All, budget);
    const bool exhaustive = outcome.status != SolveStatus::Timeout;
    r.result("enumerated", std::to_string(outcome.solutions.size()));
    r.result("exhaustive", exhaustive ? "true" : "false");
    r.result("nodes", std::to_string(outcome.stats.nodes));

    long long verified = 0;
    bool all_retractable = true;
    bool towers_ok = true;
    long long to_singleton = 0, to_exceptional = 0;
    const CycleSet exceptional = x4_19();
    for (const CycleSet& X : outcome.solutions) {
        MplResult m = mpl(X);
        bool retr = X.size() == 1 || m.tower_sizes[1] < m.tower_sizes[0];
        if (!retr && n > 1) all_retractable = false;
        if (m.finite) {
            ++to_singleton;
        } else if (m.stationary->size() == 4 &&
                   are_isomorphic(*m.stationary, exceptional)) {
            ++to_exceptional;
        } else {
            towers_ok = false;
        }
        ++verified;
    }
    r.result("verified", std::to_string(verified));

    if (name == TheoremName::FullCycleOdd) {
        r.check("all_retractable", all_retractable);
        r.check("all_finite_level", towers_ok && to_exceptional == 0);
    } else {
        if (n > 4)
            r.check("all_retractable", all_retractable);
        else
            r.skip("all_retractable", "only asserted for n > 4");
        r.check("tower_singleton_or_exceptional", towers_ok);
        r.result("towers_to_singleton", std::to_string(to_singleton));
        r.result("towers_to_exceptional", std::to_string(to_exceptional));
    }
    return r;
}

}  // namespace endocable
