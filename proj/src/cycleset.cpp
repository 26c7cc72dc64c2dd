#include "endocable/cycleset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace endocable {

CycleSet CycleSet::validate(std::vector<std::vector<int>> table) {
    const int n = static_cast<int>(table.size());
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n)
            throw CycleSetError(CycleSetError::Kind::Malformed,
                                "row " + std::to_string(x) + " has wrong length", x);
        std::vector<bool> seen(n, false);
        for (int y = 0; y < n; ++y) {
            int v = table[x][y];
            if (v < 0 || v >= n || seen[v])
                throw CycleSetError(CycleSetError::Kind::RowNotBijective,
                                    "row " + std::to_string(x) +
                                        " is not a permutation",
                                    x);
            seen[v] = true;
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (table[table[x][y]][table[x][z]] !=
                    table[table[y][x]][table[y][z]])
                    throw CycleSetError(
                        CycleSetError::Kind::CycloidViolation,
                        "cycloid law fails at (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + ")",
                        x, y, z);
            }
        }
    }
    {
        std::vector<bool> seen(n, false);
        for (int x = 0; x < n; ++x) {
            int v = table[x][x];
            if (seen[v])
                throw CycleSetError(CycleSetError::Kind::DiagonalNotBijective,
                                    "diagonal is not a bijection", x);
            seen[v] = true;
        }
    }

    CycleSet cs;
    cs.table_ = std::move(table);
    cs.sigma_.reserve(n);
    cs.lambda_.reserve(n);
    for (int x = 0; x < n; ++x) {
        cs.sigma_.emplace_back(cs.table_[x]);
        cs.lambda_.push_back(cs.sigma_[x].inverse());
    }
    return cs;
}

CycleSet CycleSet::trivial(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[x][y] = y;
    return validate(std::move(table));
}

Perm CycleSet::diagonal() const {
    std::vector<int> im(size());
    for (int x = 0; x < size(); ++x) im[x] = table_[x][x];
    return Perm(std::move(im));
}

std::string CycleSet::serialize() const {
    std::ostringstream os;
    os << size() << '\n';
    for (int x = 0; x < size(); ++x) {
        for (int y = 0; y < size(); ++y) {
            if (y) os << ' ';
            os << table_[x][y];
        }
        os << '\n';
    }
    return os.str();
}

CycleSet CycleSet::parse(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(is, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        rows.push_back(line);
    }
    if (rows.empty())
        throw CycleSetError(CycleSetError::Kind::Malformed, "empty input");

    auto parse_ints = [](const std::string& s) {
        std::istringstream ls(s);
        std::vector<int> out;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                out.push_back(v);
            } catch (const std::exception&) {
                throw CycleSetError(CycleSetError::Kind::Malformed,
                                    "not an integer: '" + tok + "'");
            }
        }
        return out;
    };

    std::vector<int> header = parse_ints(rows[0]);
    if (header.size() != 1 || header[0] < 1)
        throw CycleSetError(CycleSetError::Kind::Malformed,
                            "first line must be the size n >= 1");
    const int n = header[0];
    if (static_cast<int>(rows.size()) != n + 1)
        throw CycleSetError(CycleSetError::Kind::Malformed,
                            "expected " + std::to_string(n) + " table rows, got " +
                                std::to_string(rows.size() - 1));
    std::vector<std::vector<int>> table;
    for (int x = 0; x < n; ++x) {
        std::vector<int> row = parse_ints(rows[x + 1]);
        if (static_cast<int>(row.size()) != n)
            throw CycleSetError(CycleSetError::Kind::Malformed,
                                "row " + std::to_string(x) + " has " +
                                    std::to_string(row.size()) + " entries");
        for (int v : row)
            if (v < 0 || v >= n)
                throw CycleSetError(CycleSetError::Kind::Malformed,
                                    "entry " + std::to_string(v) +
                                        " out of range in row " + std::to_string(x));
        table.push_back(std::move(row));
    }
    return validate(std::move(table));
}

CycleSet CycleSet::load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw CycleSetError(CycleSetError::Kind::Malformed,
                            "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

PermGroup permutation_group(const CycleSet& X, std::size_t cap) {
    std::vector<Perm> gens;
    gens.reserve(X.size());
    for (int x = 0; x < X.size(); ++x) gens.push_back(X.sigma(x));
    return PermGroup::closure(std::move(gens), cap);
}

Retraction retract(const CycleSet& X) {
    const int n = X.size();
    Retraction r;
    r.projection.assign(n, -1);
    std::map<std::vector<int>, int> by_row;
    for (int x = 0; x < n; ++x) {
        auto [it, fresh] =
            by_row.emplace(X.table()[x], static_cast<int>(r.classes.size()));
        if (fresh) r.classes.push_back({});
        r.projection[x] = it->second;
        r.classes[it->second].push_back(x);
    }

    // Reorder classes by smallest member.
    std::vector<int> order(r.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return r.classes[a][0] < r.classes[b][0]; });
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> classes(r.classes.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        classes[i] = std::move(r.classes[order[i]]);
    r.classes = std::move(classes);
    for (int x = 0; x < n; ++x) r.projection[x] = rank[r.projection[x]];

    const int m = static_cast<int>(r.classes.size());
    std::vector<std::vector<int>> qtable(m, std::vector<int>(m, -1));
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            int a = r.projection[x], b = r.projection[y];
            int c = r.projection[X.op(x, y)];
            if (qtable[a][b] == -1)
                qtable[a][b] = c;
            else if (qtable[a][b] != c)
                throw std::logic_error("retract: quotient operation ill-defined");
        }
    }
    r.quotient = CycleSet::validate(std::move(qtable));
    return r;
}

bool is_retractable(const CycleSet& X) {
    return retract(X).quotient.size() < X.size();
}

MplResult mpl(const CycleSet& X) {
    MplResult res;
    CycleSet cur = X;
    res.tower_sizes.push_back(cur.size());
    int level = 0;
    while (true) {
        if (cur.size() == 1) {
            res.finite = true;
            res.level = level;
            return res;
        }
        CycleSet next = retract(cur).quotient;
        res.tower_sizes.push_back(next.size());
        if (next.size() == cur.size()) {
            res.finite = false;
            res.stationary = std::move(next);
            return res;
        }
        cur = std::move(next);
        ++level;
    }
}

Decomposition decomposition(const CycleSet& X) {
    Decomposition d;
    d.orbits = permutation_group(X).orbits();
    d.indecomposable = d.orbits.size() == 1;
    for (const auto& orbit : d.orbits) {
        std::vector<bool> in(X.size(), false);
        for (int x : orbit) in[x] = true;
        for (int x : orbit)
            for (int y : orbit)
                if (!in[X.op(x, y)])
                    throw std::logic_error(
                        "decomposition: orbit not closed under the operation");
    }
    return d;
}

std::vector<int> generated_subcycleset(const CycleSet& X,
                                       const std::vector<int>& seed) {
    if (seed.empty())
        throw std::invalid_argument("generated_subcycleset: empty seed");
    std::vector<bool> in(X.size(), false);
    std::vector<int> members;
    auto push = [&](int v) {
        if (!in[v]) {
            in[v] = true;
            members.push_back(v);
        }
    };
    for (int s : seed) push(s);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            push(X.op(members[i], members[j]));
            push(X.op(members[j], members[i]));
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_irreducible(const CycleSet& X) {
    for (int x = 0; x < X.size(); ++x)
        if (static_cast<int>(generated_subcycleset(X, {x}).size()) != X.size())
            return false;
    return true;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

PiTypeResult pi_type(const CycleSet& X, std::size_t cap) {
    PermGroup G = permutation_group(X, cap);
    if (G.orbits().size() != 1)
        throw NotIndecomposableError("pi_type: cycle set is decomposable");
    PiTypeResult r;
    r.primes_of_size = prime_divisors(X.size());
    r.primes_of_group = prime_divisors(static_cast<long long>(G.size()));
    r.is_pi_type = r.primes_of_size == r.primes_of_group;
    r.is_p_type = r.is_pi_type && r.primes_of_size.size() == 1;
    return r;
}

namespace {

// Signature preserved by any isomorphism: cycle type of the row permutation
// plus the length of the diagonal cycle through the point.
std::vector<std::pair<std::vector<int>, int>> iso_signatures(const CycleSet& X) {
    const int n = X.size();
    Perm T = X.diagonal();
    std::vector<int> t_cycle_len(n, 0);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int x = i;
        while (!seen[x]) {
            seen[x] = true;
            cyc.push_back(x);
            x = T(x);
        }
        for (int y : cyc) t_cycle_len[y] = static_cast<int>(cyc.size());
    }
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int x = 0; x < n; ++x)
        sig[x] = {X.sigma(x).cycle_structure().cycle_type, t_cycle_len[x]};
    return sig;
}

bool extend_isomorphism(const CycleSet& X, const CycleSet& Y,
                        const std::vector<std::pair<std::vector<int>, int>>& sx,
                        const std::vector<std::pair<std::vector<int>, int>>& sy,
                        std::vector<int>& f, std::vector<bool>& used, int x) {
    const int n = X.size();
    if (x == n) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (f[X.op(a, b)] != Y.op(f[a], f[b])) return false;
        return true;
    }
    for (int y = 0; y < n; ++y) {
        if (used[y] || sx[x] != sy[y]) continue;
        f[x] = y;
        used[y] = true;
        bool ok = true;
        for (int a = 0; ok && a <= x; ++a) {
            int u = X.op(a, x);
            if (u <= x && f[u] != Y.op(f[a], f[x])) ok = false;
            int v = X.op(x, a);
            if (ok && v <= x && f[v] != Y.op(f[x], f[a])) ok = false;
        }
        if (ok && extend_isomorphism(X, Y, sx, sy, f, used, x + 1)) return true;
        f[x] = -1;
        used[y] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const CycleSet& X, const CycleSet& Y,
                                            int size_cap) {
    if (X.size() != Y.size()) return std::nullopt;
    if (X.size() > size_cap)
        throw SizeCapExceededError("isomorphism: size " +
                                   std::to_string(X.size()) + " exceeds cap " +
                                   std::to_string(size_cap));
    auto sx = iso_signatures(X);
    auto sy = iso_signatures(Y);
    {
        auto mx = sx, my = sy;
        std::sort(mx.begin(), mx.end());
        std::sort(my.begin(), my.end());
        if (mx != my) return std::nullopt;
    }
    std::vector<int> f(X.size(), -1);
    std::vector<bool> used(X.size(), false);
    if (extend_isomorphism(X, Y, sx, sy, f, used, 0)) return f;
    return std::nullopt;
}

bool are_isomorphic(const CycleSet& X, const CycleSet& Y, int size_cap) {
    return isomorphism(X, Y, size_cap).has_value();
}

CycleSet relabel(const CycleSet& X, const Perm& f) {
    if (f.degree() != X.size())
        throw std::invalid_argument("relabel: degree mismatch");
    const int n = X.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) table[f(x)][f(y)] = f(X.op(x, y));
    return CycleSet::validate(std::move(table));
}

}  // namespace endocable
