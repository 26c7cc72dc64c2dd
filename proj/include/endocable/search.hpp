#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endocable/cycleset.hpp"
#include "endocable/report.hpp"

namespace endocable {

struct InconsistentSpecError : std::invalid_argument {
    explicit InconsistentSpecError(const std::string& what)
        : std::invalid_argument(what) {}
};
struct UnsupportedVError : std::invalid_argument {
    explicit UnsupportedVError(const std::string& what)
        : std::invalid_argument(what) {}
};

enum class DiagonalKind { None, FullCycle, Explicit };

/// Declarative constraints over an n x n cycle-set table C:
///   - every row of C is a permutation and C satisfies the cycloid law
///     (always on; they make the table a cycle set),
///   - diagonal: FullCycle pins C(i,i) = i+1 mod n, Explicit pins C(i,i),
///   - central_symmetry beta (odd): C(i, beta-j) = beta - C(i,j) mod n,
///   - shift_automorphism s (0 < s < n): C(i+s, j+s) = C(i,j) + s mod n,
///   - require_irretractable: all rows pairwise distinct.
struct ModelSpec {
    int n = 0;
    std::vector<std::array<int, 3>> fixed_cells;  // {row, col, value}
    DiagonalKind diagonal = DiagonalKind::None;
    std::optional<Perm> explicit_diagonal;
    std::optional<int> central_symmetry;
    std::optional<int> shift_automorphism;
    bool require_irretractable = false;
    bool require_all_solutions = false;

    std::string serialize() const;
    static ModelSpec parse(const std::string& text);
    static ModelSpec load(const std::string& path);
};

/// A compiled model: the symmetry constraints are folded into cell-equality
/// classes so that each class has a single decision variable, and every cell
/// stores the affine transform (v |-> eps*v + off mod n) from its class
/// value to the cell value.
class SearchModel {
public:
    static SearchModel build(const ModelSpec& spec);
    /// The power-of-two nonexistence model: n = 2^v, full-cycle diagonal,
    /// central symmetry beta = 1, shift automorphism s = n/2,
    /// irretractability. Only v in {3, 4} is supported.
    static SearchModel appendix(int v);

    const ModelSpec& spec() const { return spec_; }
    int n() const { return spec_.n; }
    int num_classes() const { return static_cast<int>(class_domains_.size()); }

    struct CellRef {
        int class_id;
        int eps;  // +1 or -1
        int off;  // cell value = eps * class value + off (mod n)
    };
    const CellRef& cell(int row, int col) const { return cells_[row * spec_.n + col]; }
    const std::vector<std::uint64_t>& class_domains() const { return class_domains_; }
    /// Representative cell (smallest row, col) per class.
    const std::vector<std::pair<int, int>>& class_reps() const { return reps_; }

    /// Independent re-check of every constraint on a full table.
    bool satisfied_by(const CycleSet& X) const;

private:
    ModelSpec spec_;
    std::vector<CellRef> cells_;
    std::vector<std::uint64_t> class_domains_;
    std::vector<std::pair<int, int>> reps_;
};

enum class SolveMode { First, All, Decide };
enum class SolveStatus { Sat, Unsat, Timeout };

struct Budget {
    long long max_nodes = -1;    // < 0: unlimited
    double max_seconds = -1.0;   // < 0: unlimited
};

struct SearchStats {
    long long nodes = 0;
    long long propagations = 0;
    double wall_seconds = 0.0;
};

struct SearchOutcome {
    SolveStatus status = SolveStatus::Unsat;
    std::vector<CycleSet> solutions;  // sorted by serialized table
    SearchStats stats;
};

/// Backtracking search: minimum-remaining-domain variable order (ties by the
/// representative cell), ascending values, row-allDifferent pruning and
/// forward checking of the cycloid law on ground triples. Every emitted
/// solution is revalidated through CycleSet::validate and an independent
/// constraint check. Deterministic node counts in single-threaded mode;
/// with threads > 1 the value choices at the root are split across workers.
SearchOutcome solve(const SearchModel& model, SolveMode mode, Budget budget = {},
                    int threads = 1);

/// Every cycle set on {0..n-1}, streamed via the solver. Raw enumeration is
/// capped at n <= 5; n in {6, 7, 8} requires a diagonal constraint. With
/// up_to_iso, solutions are deduplicated by isomorphism (iso cap 8).
std::vector<CycleSet> enumerate_cyclesets(
    int n, bool up_to_iso = false,
    DiagonalKind diagonal = DiagonalKind::None, Budget budget = {});

enum class TheoremName { FullCycleOdd, FullCycleTwo };

/// Enumerates all cycle sets of size n with diagonal pinned to the full
/// cycle i |-> i+1 (no generality lost: any full-cycle diagonal can be
/// relabelled to this one) and checks the retractability statements:
///   FullCycleOdd  (n a power of an odd prime): retractable, finite level;
///   FullCycleTwo  (n a power of two): retractable for n > 4; every tower
///                 ends in a singleton or stabilizes at the exceptional
///                 irretractable size-4 set.
/// A budget overrun yields a non-exhaustive report with the verified
/// fraction; checks cover everything enumerated so far.
Report verify_theorem(TheoremName name, int n, Budget budget = {},
                      bool allow_extended = false);

/// The unique irretractable cycle set of size 4 with a 4-cycle diagonal,
/// in the labelling shipped as fixtures/x4_19.cs.
CycleSet x4_19();

}  // namespace endocable
