#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "roughmat/covering.hpp"

namespace roughmat {

/// Default cap on the universe size accepted by the sixth-upper search.
inline constexpr std::size_t kDefaultSixthBound = 6;

/// A set operator tabulated on every subset of a small universe (n <= 12).
/// Subsets are indexed by bit mask with element i at bit i.
class OperatorTable {
public:
    OperatorTable(Universe universe, std::vector<SetVec> images);

    static OperatorTable tabulate(Universe universe, const std::function<SetVec(const SetVec&)>& fn);

    const Universe& universe() const noexcept { return universe_; }
    std::size_t subset_count() const noexcept { return images_.size(); }

    const SetVec& image(std::uint32_t mask) const;
    const SetVec& image(const SetVec& subset) const;

private:
    Universe universe_;
    std::vector<SetVec> images_;
};

/// Row i is the image of the i-th singleton: entry(i,j) = 1 iff x_j lies in
/// H({x_i}).
BoolMatrix singleton_matrix(const OperatorTable& h);

/// True iff H(empty) is empty and H(X) is the union of H({x}) over x in X for
/// every subset X; only such operators can match an upper approximation
/// operator on all subsets.
bool is_representable(const OperatorTable& h);

struct CheckResult {
    bool accepted = false;
    std::string reason;                  // failed condition and witness, on rejection
    std::optional<Covering> witness;     // on acceptance
    std::optional<BoolMatrix> relation;  // sixth only: B with A = B * B^T

    explicit operator bool() const noexcept { return accepted; }
};

/// Is A the singleton matrix of SH for some covering? Accepts iff A is
/// symmetric with an all-ones diagonal; the witness covering's SH reproduces
/// A (and H on every subset, for the table overload).
CheckResult check_second_upper(const BoolMatrix& a);
CheckResult check_second_upper(const OperatorTable& h);

/// Is A the singleton matrix of IH for some covering? Accepts iff A is
/// idempotent with an all-ones diagonal.
CheckResult check_fifth_upper(const BoolMatrix& a);
CheckResult check_fifth_upper(const OperatorTable& h);

/// Is A the singleton matrix of XH for some covering? Holds iff some
/// reflexive idempotent B has B * B^T = A. The search runs over off-diagonal
/// support subsets of A (sound: reflexive B with B * B^T = A satisfies
/// B <= A, because B_ij = B_ij and B_jj = 1 give (B * B^T)_ij = 1) and
/// refuses universes larger than search_bound.
CheckResult check_sixth_upper(const BoolMatrix& a, std::size_t search_bound = kDefaultSixthBound);

}  // namespace roughmat
