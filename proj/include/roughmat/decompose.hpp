#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roughmat/boolmat.hpp"

namespace roughmat {

/// Default cap on the vertex count accepted by exact mode. Overridable per
/// call; the CLI maps the RM_EXACT_BOUND environment variable onto it.
inline constexpr std::size_t kDefaultExactBound = 24;

/// The all-or-nothing pattern X x X as an n x n matrix: entry(i,j) = 1 iff
/// both i and j lie in the vertex set.
BoolMatrix subformula_matrix(const SetVec& vertex_set);

/// Reason why a square matrix admits no factorization B = A * A^T, or
/// nullopt when it does. Messages use 1-based indices ("not symmetric at
/// (i,j)", "B_ij=1 but B_ii=0").
std::optional<std::string> why_not_decomposable(const BoolMatrix& b);

/// True iff b is symmetric and every row containing a 1 has a 1 on the
/// diagonal; equivalently, some A with B = A * A^T exists.
bool is_decomposable(const BoolMatrix& b);

/// All inclusion-maximal vertex sets X with the X x X pattern contained in b:
/// the maximal cliques of b's support graph, isolated looped vertices
/// included as singletons. Output in canonical block order. Requires
/// is_decomposable(b).
std::vector<SetVec> maximal_subformulas(const BoolMatrix& b);

enum class DecomposeMode { paper, exact, greedy };

/// A factorization B = A * A^T. Columns of `a` are the characteristic
/// vectors of `blocks` in order. The all-zero matrix is the one degenerate
/// case: it decomposes with an empty block list and a single zero column
/// (matrices have at least one column).
struct Decomposition {
    std::vector<SetVec> blocks;
    BoolMatrix a;
    DecomposeMode mode;

    std::size_t block_count() const noexcept { return blocks.size(); }
};

/// Either a decomposition or the reason there is none (or why the requested
/// mode cannot run, for the exact-mode size bound).
struct DecomposeResult {
    std::optional<Decomposition> decomposition;
    std::string reason;

    explicit operator bool() const noexcept { return decomposition.has_value(); }
};

/// Factors b using every maximal sub-formula as a block. Sound and complete
/// (succeeds exactly when is_decomposable holds) but not always of minimum
/// width; see decompose_exact.
DecomposeResult decompose_paper(const BoolMatrix& b);

/// Minimum-width factorization: the fewest columns m such that some
/// A in {0,1}^(n x m) has A * A^T = B, found as a minimum sub-collection of
/// maximal sub-formulas covering every 1-entry. Ties broken by the
/// lexicographically smallest canonical block list. Instances larger than
/// vertex_bound are refused with advice to use paper mode.
DecomposeResult decompose_exact(const BoolMatrix& b, std::size_t vertex_bound = kDefaultExactBound);

/// Greedy cover by maximal sub-formulas (largest uncovered-1-count first,
/// ties in canonical order). Fast and verified but not necessarily minimal.
DecomposeResult decompose_greedy(const BoolMatrix& b);

/// True iff the union of the blocks' sub-formula matrices equals b.
bool verify_decomposition(const BoolMatrix& b, const Decomposition& d);

}  // namespace roughmat
