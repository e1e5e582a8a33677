#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace roughmat {

/// Characteristic bit vector of a subset of an ordered finite set of size
/// `len`. Bit i set means the i-th element belongs to the subset. Bits past
/// `len` in the last storage word are kept zero at all times.
class SetVec {
public:
    explicit SetVec(std::size_t len);
    static SetVec from_indices(std::size_t len, std::initializer_list<std::size_t> indices);
    static SetVec from_mask(std::size_t len, std::uint64_t mask);

    std::size_t len() const noexcept { return len_; }
    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);

    std::size_t count() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }

    bool is_subset_of(const SetVec& other) const;
    bool intersects(const SetVec& other) const;
    SetVec complement() const;

    SetVec& operator|=(const SetVec& other);
    SetVec& operator&=(const SetVec& other);
    friend SetVec operator|(SetVec lhs, const SetVec& rhs) { return lhs |= rhs; }
    friend SetVec operator&(SetVec lhs, const SetVec& rhs) { return lhs &= rhs; }
    bool operator==(const SetVec& other) const = default;

    /// Subset as a bit mask with element 0 in the least significant bit.
    /// Only for len <= 64.
    std::uint64_t to_mask() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

private:
    std::size_t len_;
    std::vector<std::uint64_t> words_;
};

/// Orders vertex sets by their bit pattern read as an integer with element 0
/// as the most significant bit, descending. Blocks containing earlier
/// elements sort first, so block lists read in natural element order.
bool canonical_block_less(const SetVec& a, const SetVec& b);

class BoolMatrix;

/// Dense matrix over {0,1,2}: the raw result of the odot operation before
/// the booleanness contract is applied.
class TriMatrix {
public:
    TriMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, std::uint8_t value);

    bool operator==(const TriMatrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> entries_;
};

/// Dense bit-packed boolean matrix, row-major, 64 entries per word.
/// Shapes are at least 1x1; padding bits in the last word of each row are
/// kept zero, so word-wise comparison is entry-wise comparison.
class BoolMatrix {
public:
    BoolMatrix(std::size_t rows, std::size_t cols);
    static BoolMatrix identity(std::size_t n);
    static BoolMatrix from_rows(const std::vector<SetVec>& rows);
    static BoolMatrix from_columns(const std::vector<SetVec>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool test(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value = true);

    SetVec row(std::size_t i) const;
    SetVec column(std::size_t j) const;

    bool row_is_zero(std::size_t i) const;

    std::span<const std::uint64_t> row_words(std::size_t i) const;

    bool operator==(const BoolMatrix& other) const = default;

    friend BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
    friend BoolMatrix union_of(const BoolMatrix& a, const BoolMatrix& b);

private:
    std::span<std::uint64_t> mutable_row_words(std::size_t i);

    std::size_t rows_;
    std::size_t cols_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> bits_;
};

/// Boolean matrix product: result(i,j) = OR over k of (a(i,k) AND b(k,j)).
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

/// The odot composition: result(i,j) = min over k of (b(k,j) - a(i,k) + 1).
/// Each term is 0 for (a=1,b=0), 1 for a=b, and 2 for (a=0,b=1); the result
/// entry is 1 exactly when the row-i support of `a` is a nonempty-context
/// subset of the column-j support of `b` (see to_boolean for the 2 case).
TriMatrix odot(const BoolMatrix& a, const BoolMatrix& b);

/// Reinterprets a {0,1}-valued TriMatrix as a BoolMatrix. An entry equal to
/// 2 means the caller violated the no-all-zero-row contract (for instance the
/// block family is not a covering) and raises std::domain_error naming the
/// first offending entry.
BoolMatrix to_boolean(const TriMatrix& t);

BoolMatrix transpose(const BoolMatrix& a);

/// Entry-wise OR of two equally shaped matrices.
BoolMatrix union_of(const BoolMatrix& a, const BoolMatrix& b);

/// Entry-wise order: true iff a(i,j) <= b(i,j) everywhere.
bool leq(const BoolMatrix& a, const BoolMatrix& b);

struct MatrixPredicates {
    bool symmetric;
    bool diag_all_ones;
    bool reflexive;    // same as diag_all_ones
    bool idempotent;   // A*A == A
    bool transitive;   // A*A <= A
};

/// Relational predicates of a square matrix.
MatrixPredicates predicates(const BoolMatrix& a);

bool is_symmetric(const BoolMatrix& a);
bool has_unit_diagonal(const BoolMatrix& a);
bool is_idempotent(const BoolMatrix& a);
bool is_transitive(const BoolMatrix& a);

}  // namespace roughmat
