#pragma once

#include <vector>

#include "endocable/perm.hpp"

namespace endocable {

struct NotPrimePowerError : std::invalid_argument {
    explicit NotPrimePowerError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// The affine map x |-> alpha*x + beta on Z_m, with gcd(alpha, m) = 1.
/// These maps form the holomorph Hol(Z_m) inside the symmetric group on Z_m.
struct AffineMap {
    int modulus = 1;
    int alpha = 1;
    int beta = 0;

    AffineMap() = default;
    AffineMap(int modulus, int alpha, int beta);

    int operator()(int x) const;
    AffineMap after(const AffineMap& g) const;  // x |-> this(g(x))
    bool is_identity() const { return alpha == 1 % modulus && beta == 0; }
    bool has_fixed_point() const;
    long long order() const;
    Perm to_perm() const;

    bool operator==(const AffineMap&) const = default;
    auto operator<=>(const AffineMap&) const = default;  // (modulus, alpha, beta)
};

/// All phi(m)*m affine maps on Z_m in lexicographic (alpha, beta) order.
std::vector<AffineMap> hol_enumerate(int m);

/// Decompose m as p^v, or throw NotPrimePowerError.
struct PrimePower {
    long long p;
    int v;
};
PrimePower factor_prime_power(int m);

/// Brute force over Hol(Z_m), m = p^v: the fixed-point-free maps g with
/// g^r = id. Supported exponents are r = p (odd p) and r = 2 (p = 2).
std::vector<AffineMap> classify_fixed_point_free(int m, int r);

/// Closed form for odd p: the set {x |-> x + i*p^(v-1) : 0 < i < p}.
std::vector<AffineMap> predicted_fixed_point_free_odd(long long p, int v);

/// Closed form for m = 2^v: {x |-> x + 2^(v-1)} together with
/// {x |-> beta - x : beta odd}.
std::vector<AffineMap> predicted_fixed_point_free_two(int v);

/// Fixed-point-free involutions of S_{Z_{2^v}} commuting with i |-> i+2,
/// found by exhaustive search over that centralizer, next to the closed-form
/// prediction: i |-> i + 2^(v-1), and for each odd gamma the parity swap
/// i |-> i + gamma (i even) / i - gamma (i odd). Requires v >= 2.
struct ShiftCentralizerInvolutions {
    std::vector<Perm> found;
    std::vector<Perm> predicted;
    bool match() const { return found == predicted; }
};
ShiftCentralizerInvolutions classify_double_shift_centralizer(int v);

}  // namespace endocable
