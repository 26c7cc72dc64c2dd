#pragma once

#include <map>
#include <vector>

#include "endocable/brace.hpp"
#include "endocable/report.hpp"

namespace endocable {

struct NotAdditiveHomError : std::invalid_argument {
    explicit NotAdditiveHomError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct NotCentralInGroupRingError : std::invalid_argument {
    explicit NotCentralInGroupRingError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct NotRelativeEndoError : std::invalid_argument {
    explicit NotRelativeEndoError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct NotFullEndoError : std::invalid_argument {
    explicit NotFullEndoError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct BraceMismatchError : std::invalid_argument {
    explicit BraceMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

/// An additive endomorphism phi of a brace, with its commutation flags
/// against the lambda action:
///   full:     lam(g, phi(h)) = phi(lam(g, h)) for all g, h
///   relative: the same for g restricted to phi(B)
/// The additive homomorphism property is mandatory; a violation is an error.
/// Holds a pointer to the brace: sums, compositions and cablings require
/// endomorphisms over the same Brace object.
class LambdaEndo {
public:
    static LambdaEndo classify(const Brace& B, std::vector<int> image);
    static LambdaEndo identity(const Brace& B);
    static LambdaEndo zero(const Brace& B);
    /// g |-> k*g. Always a full lambda-endomorphism.
    static LambdaEndo scalar(const Brace& B, long long k);
    /// lambda_z for central z; throws NotCentralError otherwise.
    static LambdaEndo central(const Brace& B, int z);
    /// h |-> sum of k_g * lam(g, h) for a conjugation-invariant coefficient
    /// map (a central element of the integral group ring of (B, o)).
    static LambdaEndo group_ring(const Brace& B,
                                 const std::map<int, long long>& coeffs);

    const Brace& brace() const { return *brace_; }
    int operator()(int g) const { return image_[g]; }
    const std::vector<int>& image() const { return image_; }
    std::vector<int> image_set() const;  // sorted unique values
    bool is_full() const { return full_; }
    bool is_relative() const { return relative_; }

    friend LambdaEndo operator+(const LambdaEndo& a, const LambdaEndo& b);
    /// (a o b)(g) = a(b(g)); flags are re-derived by classify, so a composite
    /// of relative endomorphisms comes back with its own honest flags.
    friend LambdaEndo compose(const LambdaEndo& a, const LambdaEndo& b);

private:
    LambdaEndo(const Brace* brace, std::vector<int> image, bool full, bool relative)
        : brace_(brace), image_(std::move(image)), full_(full), relative_(relative) {}
    const Brace* brace_ = nullptr;
    std::vector<int> image_;
    bool full_ = false;
    bool relative_ = false;
};

/// The cabled cycle set X_phi with x *_phi y = lambda_{phi(lambda_x)}^{-1}(y),
/// for phi a (relative) lambda-endomorphism of the permutation brace of X.
/// The result is validated from scratch. Throws NotRelativeEndoError when
/// phi is neither full nor relative.
CycleSet cable(const CycleSet& X, const LambdaEndo& phi);

/// Partition of X by phi(lambda_x) = phi(lambda_y), for full phi. Asserted
/// to be invariant under the permutation group and to coincide with the
/// retraction classes of X_phi. Blocks are ordered by smallest member.
std::vector<std::vector<int>> blocks(const CycleSet& X, const LambdaEndo& phi);

/// For central z and phi = id - lambda_z, checks
///   (a) phi^2 = 2 phi          (b) lam(z, g) = -g on phi(B)
///   (c) lam(g, z) = z - 2g on phi(B)
///   (d) phi(g) = z - lam(g, z) everywhere
/// and z not in phi(B). (a)-(c) require z to be a multiplicative involution
/// and are skipped otherwise; the membership check is skipped at z = 0.
Report phi_z_report(const Brace& B, int z);

/// Exhaustive verification of the cabling identities on X over the family
/// of all scalar endomorphisms, all lambda_z for central z, and their
/// pairwise sums. See the individual CHECK names in the report. The seed
/// drives the sampled axiom checks of braces too large for exhaustion.
Report identity_suite(const CycleSet& X, std::size_t cap = PermGroup::kDefaultCap,
                      unsigned long long seed = 0);

/// For a 2-group permutation brace, a central multiplicative involution z
/// and phi = id - lambda_z: whenever X_{k phi} is retractable with class
/// divisible by 4, a second central involution z' != z must exist; reports
/// it, or FAILs. Premise failures are recorded as SKIPs.
Report replacement_check(const CycleSet& X, int z, long long k,
                         std::size_t cap = PermGroup::kDefaultCap);

/// All full lambda-endomorphisms of B, by brute force over the images of a
/// greedily chosen additive generating set; each generator image is
/// constrained to elements of compatible additive order. Deduplicated by
/// image array. Throws CapExceededError when the candidate count passes cap.
std::vector<LambdaEndo> enumerate_lambda_endos(const Brace& B,
                                               long long cap = 2000000);

}  // namespace endocable
