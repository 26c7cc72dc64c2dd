#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "endocable/cycleset.hpp"
#include "endocable/perm.hpp"

namespace endocable {

/// A constructed table failed a brace axiom. Always fatal: every check
/// downstream assumes the tables form a genuine brace.
struct BraceAxiomError : std::logic_error {
    explicit BraceAxiomError(const std::string& what) : std::logic_error(what) {}
};

struct NotCentralError : std::invalid_argument {
    explicit NotCentralError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct NotInvolutionError : std::invalid_argument {
    explicit NotInvolutionError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct NotALeftIdealError : std::invalid_argument {
    explicit NotALeftIdealError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct HypothesisFailsError : std::invalid_argument {
    explicit HypothesisFailsError(const std::string& what)
        : std::invalid_argument(what) {}
};

enum class BraceSubsetKind {
    AdditiveSubgroup,
    MultiplicativeSubgroup,
    LeftIdeal,
    Ideal,
    Subbrace,
};

struct BraceSubset {
    std::vector<int> members;  // sorted element ids
    BraceSubsetKind kind;
    bool contains(int g) const;
    std::size_t size() const { return members.size(); }
};

struct BraceCheckOptions {
    int exhaustive_limit = 512;       // exhaustive triples up to this size
    long long sample_triples = 100000;  // randomized triples beyond
    unsigned long long seed = 0;
};

/// A finite brace: one set with an abelian group (B, +), a group (B, o) and
/// the compatibility a o (b + c) = a o b - a + a o c. Elements are ids
/// 0..size-1 with 0 the shared identity. The lambda action is
/// lam(g, h) = g o h - g.
///
/// Tables are fully materialized up to the dense threshold; larger braces
/// keep per-row memoized tables computed from the construction words. All
/// axioms are verified at construction (exhaustively for small braces,
/// by seeded sampling beyond) and a failure throws BraceAxiomError.
class Brace {
public:
    static constexpr int kDenseThreshold = 4096;

    static Brace from_tables(std::vector<std::vector<int>> add,
                             std::vector<std::vector<int>> mul,
                             const BraceCheckOptions& opts = {});

    /// Z_{2^k} with a o b = a + b - 2ab.
    static Brace bk(int k, const BraceCheckOptions& opts = {});

    /// The brace on the permutation group of X: the closure of the
    /// generators lambda_x under composition, which coincides with their
    /// additive closure. Element 0 is the identity; ids follow the additive
    /// breadth-first order, and each element keeps the word
    /// lambda_{x_1} + ... + lambda_{x_k} found at first visit.
    static Brace permutation_brace(const CycleSet& X,
                                   std::size_t cap = PermGroup::kDefaultCap,
                                   const BraceCheckOptions& opts = {},
                                   int dense_threshold = kDenseThreshold);

    int size() const { return size_; }
    bool is_dense() const { return dense_; }

    int add(int a, int b) const;
    int mul(int a, int b) const;
    int neg(int a) const;
    int inv(int a) const;
    int sub(int a, int b) const { return add(a, neg(b)); }
    int lam(int g, int h) const;
    int lam_inv(int g, int h) const { return lam(inv(g), h); }
    int scalar(long long k, int a) const;  // k * a in (B, +)
    int power(long long k, int a) const;   // a^k in (B, o)

    long long additive_order(int a) const;
    long long multiplicative_order(int a) const;
    long long additive_exponent() const;
    long long multiplicative_exponent() const;

    /// Permutation realization (only for permutation braces): the
    /// permutation each element acts by on X, and x |-> id of lambda_x.
    bool has_perm_realization() const { return degree_ > 0; }
    int degree() const { return degree_; }
    const Perm& perm(int g) const;
    int generator_id(int x) const { return generator_ids_[x]; }
    const std::vector<int>& generator_ids() const { return generator_ids_; }
    /// Additive word (list of points x) stored for element g.
    std::vector<int> word(int g) const;

    BraceSubset socle() const;   // kernel of the lambda action; an ideal
    BraceSubset fix() const;     // elements fixed by every lambda_g; left ideal
    BraceSubset center() const;  // center of (B, o)
    /// Elements whose additive order has all prime divisors in `primes`.
    BraceSubset primary_component(const std::vector<long long>& primes) const;
    /// {h : lam(g, h) = h for all g in L}; requires L to be a left ideal.
    BraceSubset relative_fix(const BraceSubset& L) const;

    bool is_additive_subgroup(const std::vector<int>& members) const;
    bool is_multiplicative_subgroup(const std::vector<int>& members) const;
    bool is_left_ideal(const std::vector<int>& members) const;
    bool is_ideal(const std::vector<int>& members) const;
    bool is_subbrace(const std::vector<int>& members) const;

    std::vector<int> additive_span(const std::vector<int>& gens) const;
    std::vector<int> multiplicative_span(const std::vector<int>& gens) const;

    /// The cycle set with g * h = lam_inv(g, h).
    CycleSet to_cycleset() const;

    std::string serialize() const;  // size line, then add and mul row-wise

private:
    Brace() = default;
    struct LazyData;

    void init_from_dense(const BraceCheckOptions& opts);
    void verify_axioms(const BraceCheckOptions& opts) const;
    void verify_permutation_identities(const CycleSet& X,
                                       const BraceCheckOptions& opts) const;
    const std::vector<int>& add_row(int a) const;
    const std::vector<int>& mul_row(int a) const;
    void ensure_order_and_neg(int a) const;

    int size_ = 0;
    bool dense_ = true;
    std::vector<std::vector<int>> add_;
    std::vector<std::vector<int>> mul_;
    mutable std::vector<int> neg_;
    mutable std::vector<int> inv_;
    mutable std::vector<long long> add_order_;
    std::vector<std::vector<int>> lam_;  // dense only; lazy derives per query

    // permutation realization
    int degree_ = 0;
    std::vector<Perm> perms_;
    std::vector<int> generator_ids_;

    std::shared_ptr<LazyData> lazy_;
};

/// <z>_+ for a central multiplicative involution z, verified to be a
/// subbrace isomorphic to bk(k) with 2^k = additive order of z. members[a]
/// is the element a*z, so the isomorphism is members[a] |-> a.
struct CentralInvolutionSubbrace {
    int k = 0;
    std::vector<int> members;
};
CentralInvolutionSubbrace central_involution_subbrace(const Brace& B, int z);

/// Requires that a centralizes <b>_+ and b centralizes <a>_+ (else
/// HypothesisFailsError), then asserts that ma o nb = nb o ma for all m, n.
void check_cyclic_centralizing(const Brace& B, int a, int b);

}  // namespace endocable
