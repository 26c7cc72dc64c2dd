#include "endocable/brace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace endocable {

bool BraceSubset::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

struct Brace::LazyData {
    std::vector<int> parent;     // BFS tree; -1 at the identity
    std::vector<int> gen_point;  // x with element = parent + lambda_x
    std::vector<std::vector<int>> add_gen;  // add_gen[a][x] = a + lambda_x
    std::unordered_map<Perm, int, PermHash> index;

    mutable std::recursive_mutex mutex;
    mutable std::vector<std::vector<int>> add_rows;
    mutable std::vector<std::vector<int>> mul_rows;
};

namespace {

// No-op when the brace is dense (tables are immutable after construction);
// serializes memo updates otherwise.
struct LazyLock {
    std::recursive_mutex* m = nullptr;
    explicit LazyLock(std::recursive_mutex* m) : m(m) {
        if (m) m->lock();
    }
    ~LazyLock() {
        if (m) m->unlock();
    }
    LazyLock(const LazyLock&) = delete;
    LazyLock& operator=(const LazyLock&) = delete;
};

}  // namespace

// ---------------------------------------------------------------------------
// construction

Brace Brace::from_tables(std::vector<std::vector<int>> add,
                         std::vector<std::vector<int>> mul,
                         const BraceCheckOptions& opts) {
    const int n = static_cast<int>(add.size());
    if (static_cast<int>(mul.size()) != n)
        throw std::invalid_argument("Brace: table sizes differ");
    auto check_square = [n](const std::vector<std::vector<int>>& t,
                            const char* name) {
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument(std::string("Brace: ") + name +
                                            " table is not square");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw std::invalid_argument(std::string("Brace: ") + name +
                                                " entry out of range");
        }
    };
    check_square(add, "add");
    check_square(mul, "mul");

    Brace b;
    b.size_ = n;
    b.dense_ = true;
    b.add_ = std::move(add);
    b.mul_ = std::move(mul);
    b.init_from_dense(opts);
    return b;
}

Brace Brace::bk(int k, const BraceCheckOptions& opts) {
    if (k < 0) throw std::invalid_argument("bk: negative k");
    if (k > 12)
        throw CapExceededError("bk: 2^" + std::to_string(k) +
                               " exceeds the dense table cap");
    const long long m = 1ll << k;
    std::vector<std::vector<int>> add(m, std::vector<int>(m));
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (long long a = 0; a < m; ++a) {
        for (long long c = 0; c < m; ++c) {
            add[a][c] = static_cast<int>((a + c) % m);
            long long prod = (a + c - 2 * a * c) % m;
            mul[a][c] = static_cast<int>((prod % m + m) % m);
        }
    }
    return from_tables(std::move(add), std::move(mul), opts);
}

Brace Brace::permutation_brace(const CycleSet& X, std::size_t cap,
                               const BraceCheckOptions& opts,
                               int dense_threshold) {
    const int n = X.size();
    Brace b;
    b.degree_ = n;
    b.lazy_ = std::make_shared<LazyData>();
    LazyData& lz = *b.lazy_;

    std::vector<Perm> lambda_perm;
    lambda_perm.reserve(n);
    for (int x = 0; x < n; ++x) lambda_perm.push_back(X.lambda(x));

    // Breadth-first closure of {lambda_x} under addition by generators,
    // using a + lambda_x = a o lambda_{a^-1(x)}.
    auto visit = [&](Perm p, int parent, int gx) -> int {
        auto [it, fresh] = lz.index.emplace(std::move(p),
                                            static_cast<int>(b.perms_.size()));
        if (!fresh) return it->second;
        if (b.perms_.size() >= cap)
            throw CapExceededError("permutation_brace: closure exceeds cap of " +
                                   std::to_string(cap));
        b.perms_.push_back(it->first);
        lz.parent.push_back(parent);
        lz.gen_point.push_back(gx);
        return it->second;
    };

    visit(Perm::identity(n), -1, -1);
    for (std::size_t id = 0; id < b.perms_.size(); ++id) {
        lz.add_gen.emplace_back(n);
        const Perm inv = b.perms_[id].inverse();
        for (int x = 0; x < n; ++x) {
            Perm q = b.perms_[id] * lambda_perm[inv(x)];
            lz.add_gen[id][x] = visit(std::move(q), static_cast<int>(id), x);
        }
    }

    b.size_ = static_cast<int>(b.perms_.size());
    b.generator_ids_.resize(n);
    for (int x = 0; x < n; ++x) b.generator_ids_[x] = lz.index.at(lambda_perm[x]);

    b.dense_ = b.size_ <= dense_threshold;
    if (b.dense_) {
        b.add_.resize(b.size_);
        for (int a = 0; a < b.size_; ++a) {
            auto& row = b.add_[a];
            row.resize(b.size_);
            row[0] = a;
            for (int c = 1; c < b.size_; ++c)
                row[c] = lz.add_gen[row[lz.parent[c]]][lz.gen_point[c]];
        }
        b.mul_.resize(b.size_);
        for (int a = 0; a < b.size_; ++a) {
            auto& row = b.mul_[a];
            row.resize(b.size_);
            for (int c = 0; c < b.size_; ++c) {
                auto it = lz.index.find(b.perms_[a] * b.perms_[c]);
                if (it == lz.index.end())
                    throw BraceAxiomError(
                        "permutation_brace: product left the additive closure");
                row[c] = it->second;
            }
        }
        b.init_from_dense(opts);
    } else {
        lz.add_rows.resize(b.size_);
        lz.mul_rows.resize(b.size_);
        b.neg_.assign(b.size_, -1);
        b.inv_.assign(b.size_, -1);
        b.add_order_.assign(b.size_, 0);
        b.verify_axioms(opts);
    }
    b.verify_permutation_identities(X, opts);
    return b;
}

void Brace::init_from_dense(const BraceCheckOptions& opts) {
    neg_.assign(size_, -1);
    inv_.assign(size_, -1);
    add_order_.assign(size_, 0);
    for (int a = 0; a < size_; ++a) ensure_order_and_neg(a);
    for (int a = 0; a < size_; ++a) {
        for (int c = 0; c < size_; ++c) {
            if (mul_[a][c] == 0) {
                inv_[a] = c;
                break;
            }
        }
        if (inv_[a] < 0)
            throw BraceAxiomError("brace: element without multiplicative inverse");
    }
    lam_.resize(size_);
    for (int g = 0; g < size_; ++g) {
        lam_[g].resize(size_);
        for (int h = 0; h < size_; ++h) lam_[g][h] = add_[neg_[g]][mul_[g][h]];
    }
    verify_axioms(opts);
}

// ---------------------------------------------------------------------------
// table access

const std::vector<int>& Brace::add_row(int a) const {
    if (dense_) return add_[a];
    LazyLock lock(&lazy_->mutex);
    auto& row = lazy_->add_rows[a];
    if (row.empty()) {
        row.resize(size_);
        row[0] = a;
        for (int c = 1; c < size_; ++c)
            row[c] = lazy_->add_gen[row[lazy_->parent[c]]][lazy_->gen_point[c]];
    }
    return row;
}

const std::vector<int>& Brace::mul_row(int a) const {
    if (dense_) return mul_[a];
    LazyLock lock(&lazy_->mutex);
    auto& row = lazy_->mul_rows[a];
    if (row.empty()) {
        row.resize(size_);
        for (int c = 0; c < size_; ++c) {
            auto it = lazy_->index.find(perms_[a] * perms_[c]);
            if (it == lazy_->index.end())
                throw BraceAxiomError(
                    "permutation_brace: product left the additive closure");
            row[c] = it->second;
        }
    }
    return row;
}

int Brace::add(int a, int b) const { return add_row(a)[b]; }
int Brace::mul(int a, int b) const { return mul_row(a)[b]; }

void Brace::ensure_order_and_neg(int a) const {
    LazyLock lock(dense_ ? nullptr : &lazy_->mutex);
    if (add_order_[a] != 0) return;
    long long ord = 1;
    int cur = a, prev = 0;
    while (cur != 0) {
        prev = cur;
        cur = add(cur, a);
        ++ord;
        if (ord > size_ + 1)
            throw BraceAxiomError("brace: additive order exceeds group size");
    }
    add_order_[a] = ord;
    neg_[a] = prev;
}

int Brace::neg(int a) const {
    ensure_order_and_neg(a);
    return neg_[a];
}

long long Brace::additive_order(int a) const {
    ensure_order_and_neg(a);
    return add_order_[a];
}

int Brace::inv(int a) const {
    LazyLock lock(dense_ ? nullptr : &lazy_->mutex);
    if (inv_[a] >= 0) return inv_[a];
    if (has_perm_realization()) {
        auto it = lazy_->index.find(perms_[a].inverse());
        if (it == lazy_->index.end())
            throw BraceAxiomError("brace: inverse left the closure");
        inv_[a] = it->second;
    } else {
        const auto& row = mul_row(a);
        for (int c = 0; c < size_; ++c)
            if (row[c] == 0) {
                inv_[a] = c;
                break;
            }
        if (inv_[a] < 0)
            throw BraceAxiomError("brace: element without multiplicative inverse");
    }
    return inv_[a];
}

int Brace::lam(int g, int h) const {
    if (dense_) return lam_[g][h];
    return add(neg(g), mul(g, h));
}

int Brace::scalar(long long k, int a) const {
    long long ord = additive_order(a);
    k %= ord;
    if (k < 0) k += ord;
    int acc = 0, base = a;
    while (k > 0) {
        if (k & 1) acc = add(acc, base);
        base = add(base, base);
        k >>= 1;
    }
    return acc;
}

int Brace::power(long long k, int a) const {
    if (k < 0) return power(-k, inv(a));
    int acc = 0, base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

long long Brace::multiplicative_order(int a) const {
    long long ord = 1;
    int cur = a;
    while (cur != 0) {
        cur = mul(cur, a);
        ++ord;
        if (ord > size_ + 1)
            throw BraceAxiomError("brace: multiplicative order exceeds group size");
    }
    return ord;
}

long long Brace::additive_exponent() const {
    long long e = 1;
    for (int a = 0; a < size_; ++a) e = std::lcm(e, additive_order(a));
    return e;
}

long long Brace::multiplicative_exponent() const {
    long long e = 1;
    for (int a = 0; a < size_; ++a) e = std::lcm(e, multiplicative_order(a));
    return e;
}

const Perm& Brace::perm(int g) const {
    if (!has_perm_realization())
        throw std::logic_error("Brace: no permutation realization");
    return perms_[g];
}

std::vector<int> Brace::word(int g) const {
    if (!lazy_) throw std::logic_error("Brace: no construction words");
    std::vector<int> w;
    while (g != 0) {
        w.push_back(lazy_->gen_point[g]);
        g = lazy_->parent[g];
    }
    std::reverse(w.begin(), w.end());
    return w;
}

// ---------------------------------------------------------------------------
// axioms

void Brace::verify_axioms(const BraceCheckOptions& opts) const {
    if (size_ < 1) throw BraceAxiomError("brace: empty carrier");
    for (int a = 0; a < size_; ++a) {
        if (add(0, a) != a || add(a, 0) != a)
            throw BraceAxiomError("brace: 0 is not the additive identity");
        if (mul(0, a) != a || mul(a, 0) != a)
            throw BraceAxiomError("brace: 0 is not the multiplicative identity");
        ensure_order_and_neg(a);
        if (add(a, neg(a)) != 0) throw BraceAxiomError("brace: negation fails");
        if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0)
            throw BraceAxiomError("brace: inversion fails");
    }

    auto check_triple = [&](int a, int b, int c) {
        if (add(a, b) != add(b, a))
            throw BraceAxiomError("brace: addition is not commutative");
        if (add(add(a, b), c) != add(a, add(b, c)))
            throw BraceAxiomError("brace: addition is not associative");
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw BraceAxiomError("brace: multiplication is not associative");
        // a o (b + c) = a o b - a + a o c
        if (mul(a, add(b, c)) != add(add(mul(a, b), neg(a)), mul(a, c)))
            throw BraceAxiomError("brace: compatibility equation fails");
        if (lam(mul(a, b), c) != lam(a, lam(b, c)))
            throw BraceAxiomError("brace: lambda is not multiplicative");
        if (lam(a, add(b, c)) != add(lam(a, b), lam(a, c)))
            throw BraceAxiomError("brace: lambda is not additive");
    };

    if (size_ <= opts.exhaustive_limit) {
        for (int a = 0; a < size_; ++a)
            for (int b = 0; b < size_; ++b)
                for (int c = 0; c < size_; ++c) check_triple(a, b, c);
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<int> pick(0, size_ - 1);
        for (long long i = 0; i < opts.sample_triples; ++i)
            check_triple(pick(rng), pick(rng), pick(rng));
    }
}

void Brace::verify_permutation_identities(const CycleSet& X,
                                          const BraceCheckOptions& opts) const {
    const int n = X.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int lhs = add(generator_ids_[x], generator_ids_[y]);
            int rhs = mul(generator_ids_[x], generator_ids_[X.op(x, y)]);
            if (lhs != rhs)
                throw BraceAxiomError(
                    "permutation brace: defining identity "
                    "lambda_x + lambda_y = lambda_x o lambda_{x*y} fails");
        }
    }
    // lambda_g(lambda_x) = lambda_{g(x)}
    auto check_elem = [&](int g) {
        for (int x = 0; x < n; ++x)
            if (lam(g, generator_ids_[x]) != generator_ids_[perms_[g](x)])
                throw BraceAxiomError(
                    "permutation brace: point action identity fails");
    };
    if (size_ <= opts.exhaustive_limit) {
        for (int g = 0; g < size_; ++g) check_elem(g);
    } else {
        std::mt19937_64 rng(opts.seed + 1);
        std::uniform_int_distribution<int> pick(0, size_ - 1);
        for (int i = 0; i < 1000; ++i) check_elem(pick(rng));
    }
}

// ---------------------------------------------------------------------------
// subsets

BraceSubset Brace::socle() const {
    BraceSubset s{.members = {}, .kind = BraceSubsetKind::Ideal};
    for (int g = 0; g < size_; ++g) {
        bool in = true;
        for (int h = 0; h < size_ && in; ++h) in = lam(g, h) == h;
        if (in) s.members.push_back(g);
    }
    if (!is_ideal(s.members))
        throw BraceAxiomError("socle is not an ideal");
    return s;
}

BraceSubset Brace::fix() const {
    BraceSubset s{.members = {}, .kind = BraceSubsetKind::LeftIdeal};
    for (int h = 0; h < size_; ++h) {
        bool in = true;
        for (int g = 0; g < size_ && in; ++g) in = lam(g, h) == h;
        if (in) s.members.push_back(h);
    }
    if (!is_left_ideal(s.members))
        throw BraceAxiomError("fix is not a left ideal");
    return s;
}

BraceSubset Brace::center() const {
    BraceSubset s{.members = {}, .kind = BraceSubsetKind::MultiplicativeSubgroup};
    for (int z = 0; z < size_; ++z) {
        bool central = true;
        for (int g = 0; g < size_ && central; ++g)
            central = mul(z, g) == mul(g, z);
        if (central) s.members.push_back(z);
    }
    if (!is_multiplicative_subgroup(s.members))
        throw BraceAxiomError("center is not a multiplicative subgroup");
    return s;
}

BraceSubset Brace::primary_component(const std::vector<long long>& primes) const {
    BraceSubset s{.members = {}, .kind = BraceSubsetKind::LeftIdeal};
    for (int g = 0; g < size_; ++g) {
        bool in = true;
        for (long long p : prime_divisors(additive_order(g))) {
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
                in = false;
                break;
            }
        }
        if (in) s.members.push_back(g);
    }
    if (!is_left_ideal(s.members))
        throw BraceAxiomError("primary component is not a left ideal");
    return s;
}

BraceSubset Brace::relative_fix(const BraceSubset& L) const {
    if (!is_left_ideal(L.members))
        throw NotALeftIdealError("relative_fix: subset is not a left ideal");
    BraceSubset s{.members = {}, .kind = BraceSubsetKind::Subbrace};
    for (int h = 0; h < size_; ++h) {
        bool in = true;
        for (int g : L.members) {
            if (lam(g, h) != h) {
                in = false;
                break;
            }
        }
        if (in) s.members.push_back(h);
    }
    if (!is_subbrace(s.members))
        throw BraceAxiomError("relative fix is not a subbrace");
    return s;
}

bool Brace::is_additive_subgroup(const std::vector<int>& members) const {
    std::vector<bool> in(size_, false);
    for (int m : members) in[m] = true;
    if (members.empty() || !in[0]) return false;
    for (int a : members)
        for (int b : members)
            if (!in[add(a, b)]) return false;
    for (int a : members)
        if (!in[neg(a)]) return false;
    return true;
}

bool Brace::is_multiplicative_subgroup(const std::vector<int>& members) const {
    std::vector<bool> in(size_, false);
    for (int m : members) in[m] = true;
    if (members.empty() || !in[0]) return false;
    for (int a : members)
        for (int b : members)
            if (!in[mul(a, b)]) return false;
    for (int a : members)
        if (!in[inv(a)]) return false;
    return true;
}

bool Brace::is_left_ideal(const std::vector<int>& members) const {
    if (!is_additive_subgroup(members)) return false;
    std::vector<bool> in(size_, false);
    for (int m : members) in[m] = true;
    for (int g = 0; g < size_; ++g)
        for (int m : members)
            if (!in[lam(g, m)]) return false;
    return true;
}

bool Brace::is_ideal(const std::vector<int>& members) const {
    if (!is_left_ideal(members)) return false;
    std::vector<bool> in(size_, false);
    for (int m : members) in[m] = true;
    for (int g = 0; g < size_; ++g)
        for (int m : members)
            if (!in[mul(mul(g, m), inv(g))]) return false;
    return true;
}

bool Brace::is_subbrace(const std::vector<int>& members) const {
    return is_additive_subgroup(members) && is_multiplicative_subgroup(members);
}

namespace {

std::vector<int> span_under(int size, const std::vector<int>& gens,
                            const std::function<int(int, int)>& op) {
    std::vector<bool> in(size, false);
    std::vector<int> members{0};
    in[0] = true;
    for (int g : gens) {
        if (!in[g]) {
            in[g] = true;
            members.push_back(g);
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (int g : gens) {
            int v = op(members[i], g);
            if (!in[v]) {
                in[v] = true;
                members.push_back(v);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

std::vector<int> Brace::additive_span(const std::vector<int>& gens) const {
    return span_under(size_, gens, [this](int a, int b) { return add(a, b); });
}

std::vector<int> Brace::multiplicative_span(const std::vector<int>& gens) const {
    return span_under(size_, gens, [this](int a, int b) { return mul(a, b); });
}

CycleSet Brace::to_cycleset() const {
    std::vector<std::vector<int>> table(size_, std::vector<int>(size_));
    for (int g = 0; g < size_; ++g)
        for (int h = 0; h < size_; ++h) table[g][h] = lam_inv(g, h);
    return CycleSet::validate(std::move(table));
}

std::string Brace::serialize() const {
    std::ostringstream os;
    os << size_ << '\n';
    auto dump = [&](auto getter) {
        for (int a = 0; a < size_; ++a) {
            for (int b = 0; b < size_; ++b) {
                if (b) os << ' ';
                os << getter(a, b);
            }
            os << '\n';
        }
    };
    dump([this](int a, int b) { return add(a, b); });
    dump([this](int a, int b) { return mul(a, b); });
    return os.str();
}

// ---------------------------------------------------------------------------
// named constructions

CentralInvolutionSubbrace central_involution_subbrace(const Brace& B, int z) {
    for (int g = 0; g < B.size(); ++g)
        if (B.mul(z, g) != B.mul(g, z))
            throw NotCentralError("central_involution_subbrace: z is not central");
    if (B.mul(z, z) != 0)
        throw NotInvolutionError(
            "central_involution_subbrace: z o z is not the identity");

    const long long m = B.additive_order(z);
    long long mm = m;
    int k = 0;
    while (mm % 2 == 0) {
        mm /= 2;
        ++k;
    }
    if (mm != 1)
        throw BraceAxiomError(
            "central involution has additive order that is not a power of 2");

    CentralInvolutionSubbrace out;
    out.k = k;
    out.members.resize(m);
    for (long long a = 0; a < m; ++a) out.members[a] = B.scalar(a, z);

    // az o bz = (a + b - 2ab) z: <z>_+ is multiplicatively closed and the
    // map az |-> a is an isomorphism onto bk(k).
    for (long long a = 0; a < m; ++a) {
        for (long long b = 0; b < m; ++b) {
            long long c = ((a + b - 2 * a * b) % m + m) % m;
            if (B.mul(out.members[a], out.members[b]) != out.members[c])
                throw BraceAxiomError(
                    "central involution span: multiplication does not match bk");
        }
    }
    return out;
}

void check_cyclic_centralizing(const Brace& B, int a, int b) {
    const long long oa = B.additive_order(a), ob = B.additive_order(b);
    for (long long j = 0; j < ob; ++j) {
        int jb = B.scalar(j, b);
        if (B.mul(a, jb) != B.mul(jb, a))
            throw HypothesisFailsError(
                "check_cyclic_centralizing: a does not centralize <b>_+ at j=" +
                std::to_string(j));
    }
    for (long long j = 0; j < oa; ++j) {
        int ja = B.scalar(j, a);
        if (B.mul(b, ja) != B.mul(ja, b))
            throw HypothesisFailsError(
                "check_cyclic_centralizing: b does not centralize <a>_+ at j=" +
                std::to_string(j));
    }
    for (long long mi = 0; mi < oa; ++mi) {
        int ma = B.scalar(mi, a);
        for (long long ni = 0; ni < ob; ++ni) {
            int nb = B.scalar(ni, b);
            if (B.mul(ma, nb) != B.mul(nb, ma))
                throw BraceAxiomError(
                    "check_cyclic_centralizing: conclusion fails despite "
                    "hypotheses");
        }
    }
}

}  // namespace endocable
