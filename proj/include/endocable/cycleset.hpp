#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endocable/perm.hpp"

namespace endocable {

/// Structured rejection from CycleSet::validate and the file parser, naming
/// the first violated axiom and a witness.
struct CycleSetError : std::runtime_error {
    enum class Kind {
        RowNotBijective,
        CycloidViolation,
        DiagonalNotBijective,
        Malformed,
    };
    Kind kind;
    int x = -1, y = -1, z = -1;

    CycleSetError(Kind kind, std::string what, int x = -1, int y = -1, int z = -1)
        : std::runtime_error(std::move(what)), kind(kind), x(x), y(y), z(z) {}
};

struct NotIndecomposableError : std::runtime_error {
    explicit NotIndecomposableError(const std::string& what)
        : std::runtime_error(what) {}
};

struct SizeCapExceededError : std::runtime_error {
    explicit SizeCapExceededError(const std::string& what)
        : std::runtime_error(what) {}
};

/// A finite cycle set on {0, ..., n-1}: an n x n table with table(x, y) =
/// x * y such that every left translation sigma_x = (y |-> x * y) is a
/// bijection and the cycloid law
///     (x * y) * (x * z) = (y * x) * (y * z)
/// holds for all x, y, z. The diagonal T(x) = x * x is asserted bijective.
/// sigma_x is row x of the table; lambda_x denotes its inverse, the
/// generator of the permutation group attached to x.
class CycleSet {
public:
    CycleSet() = default;  // the empty cycle set; assign a validated one

    /// Checks the axioms in order (rows bijective, cycloid law, diagonal
    /// bijective) and caches the row permutations. Throws CycleSetError.
    static CycleSet validate(std::vector<std::vector<int>> table);

    /// table(x, y) = y: every sigma_x is the identity.
    static CycleSet trivial(int n);

    int size() const { return static_cast<int>(table_.size()); }
    int op(int x, int y) const { return table_[x][y]; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    const Perm& sigma(int x) const { return sigma_[x]; }
    const Perm& lambda(int x) const { return lambda_[x]; }
    Perm diagonal() const;

    bool operator==(const CycleSet& other) const { return table_ == other.table_; }

    /// File format: first non-comment line is n, then n lines of n integers
    /// in 0..n-1 (row x of the table). Lines starting with '#' are ignored.
    std::string serialize() const;
    static CycleSet parse(const std::string& text);
    static CycleSet load(const std::string& path);

private:
    std::vector<std::vector<int>> table_;
    std::vector<Perm> sigma_;
    std::vector<Perm> lambda_;
};

/// Closure of {sigma_x}; equal, as a group, to the closure of {lambda_x}.
PermGroup permutation_group(const CycleSet& X,
                            std::size_t cap = PermGroup::kDefaultCap);

/// Quotient by the relation sigma_x = sigma_y. Classes are ordered by their
/// smallest member, which also serves as representative.
struct Retraction {
    CycleSet quotient;
    std::vector<int> projection;           // x |-> class index
    std::vector<std::vector<int>> classes; // sorted members per class
};
Retraction retract(const CycleSet& X);

bool is_retractable(const CycleSet& X);

/// Iterated retraction. Finite case: level k at the first singleton.
/// Stationary case (|X^(k+1)| = |X^(k)| > 1): finite = false and the
/// stationary cycle set is returned.
struct MplResult {
    bool finite = false;
    int level = 0;                    // meaningful when finite
    std::vector<int> tower_sizes;     // |X^(0)|, |X^(1)|, ... up to stop
    std::optional<CycleSet> stationary;
};
MplResult mpl(const CycleSet& X);

/// Orbits of the permutation group on X; each orbit is asserted to be
/// closed under * (a sub-cycle set).
struct Decomposition {
    std::vector<std::vector<int>> orbits;
    bool indecomposable = false;
};
Decomposition decomposition(const CycleSet& X);

/// Smallest subset containing seed and closed under * in both arguments.
/// For finite cycle sets such a subset is a sub-cycle set.
std::vector<int> generated_subcycleset(const CycleSet& X,
                                       const std::vector<int>& seed);

/// True iff the closure of every single point is all of X.
bool is_irreducible(const CycleSet& X);

/// Prime divisors of |X| and of |G(X)| compared. Only defined for
/// indecomposable X; throws NotIndecomposableError otherwise.
struct PiTypeResult {
    std::vector<long long> primes_of_size;
    std::vector<long long> primes_of_group;
    bool is_pi_type = false;
    bool is_p_type = false;
};
PiTypeResult pi_type(const CycleSet& X,
                     std::size_t cap = PermGroup::kDefaultCap);

/// A bijection f with f(x * y) = f(x) * f(y), or nullopt. Backtracking with
/// row-signature pruning; sizes above size_cap throw SizeCapExceededError.
std::optional<std::vector<int>> isomorphism(const CycleSet& X, const CycleSet& Y,
                                            int size_cap = 8);
bool are_isomorphic(const CycleSet& X, const CycleSet& Y, int size_cap = 8);

/// The cycle set on the same points with x' * y' = f(f^-1(x') * f^-1(y')),
/// i.e. the image of X under the relabelling f (an isomorphism X -> result).
CycleSet relabel(const CycleSet& X, const Perm& f);

std::vector<long long> prime_divisors(long long n);

}  // namespace endocable
