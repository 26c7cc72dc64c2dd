#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace endocable {

/// Thrown when a group closure (or a derived construction) would exceed its
/// element cap.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// A permutation of {0, ..., n-1}, stored as its image list: images()[i] is
/// the image of i. Composition is written (p * q)(x) = p(q(x)), i.e. q acts
/// first; permutations act on points from the left throughout.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);

    static Perm identity(int degree);
    /// Single cycle on the listed points; all other points are fixed.
    static Perm cycle(int degree, const std::vector<int>& points);
    /// x |-> x + shift (mod degree).
    static Perm rotation(int degree, int shift);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Perm inverse() const;
    friend Perm operator*(const Perm& p, const Perm& q);
    Perm power(long long k) const;

    bool is_identity() const;
    bool has_fixed_point() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

    /// Cycles of length >= 2, each starting at its smallest point, sorted by
    /// that point. Fixed points are not listed.
    std::vector<std::vector<int>> cycles() const;

    struct CycleStructure {
        long long order = 1;
        std::vector<int> cycle_type;  // all cycle lengths incl. 1s, ascending
        bool is_full_cycle = false;
    };
    CycleStructure cycle_structure() const;
    long long order() const { return cycle_structure().order; }

    /// Whitespace-separated image list on one line.
    std::string to_string() const;
    static Perm parse(const std::string& line);

private:
    std::vector<int> images_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const;
};

/// A permutation group given by the explicit list of its elements, produced
/// by breadth-first closure of a generating set. Element ids are BFS order:
/// id 0 is the identity, and each element stores one word in the generators
/// (indices into generators()) found at first visit.
class PermGroup {
public:
    static constexpr std::size_t kDefaultCap = std::size_t{1} << 16;

    static PermGroup closure(std::vector<Perm> generators,
                             std::size_t cap = kDefaultCap);

    int degree() const { return degree_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const Perm& element(int id) const { return elements_[id]; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<int>& word(int id) const { return words_[id]; }

    /// Element id, or -1 if the permutation is not in the group.
    int index_of(const Perm& p) const;
    bool contains(const Perm& p) const { return index_of(p) >= 0; }

    int compose(int a, int b) const;  // id of element(a) * element(b)
    int inverse(int a) const;

    std::vector<std::vector<int>> orbits() const;
    bool is_transitive() const;
    /// All point stabilizers trivial: no element other than the identity
    /// fixes a point.
    bool is_semiregular() const;
    std::vector<int> center() const;
    std::vector<int> centralizer_of(const std::vector<int>& subset) const;

private:
    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
    std::vector<std::vector<int>> words_;
};

}  // namespace endocable
