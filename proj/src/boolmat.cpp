#include "roughmat/boolmat.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace roughmat {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

// All-ones mask for the used bits of the last word of a `bits`-long row.
std::uint64_t tail_mask(std::size_t bits) {
    const std::size_t rem = bits % kWordBits;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

std::string shape(std::size_t r, std::size_t c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

SetVec::SetVec(std::size_t len) : len_(len), words_(word_count(len), 0) {
    require(len >= 1, "SetVec: length must be at least 1");
}

SetVec SetVec::from_indices(std::size_t len, std::initializer_list<std::size_t> indices) {
    SetVec v(len);
    for (std::size_t i : indices) v.set(i);
    return v;
}

SetVec SetVec::from_mask(std::size_t len, std::uint64_t mask) {
    require(len <= kWordBits, "SetVec::from_mask: length exceeds 64");
    require(len == kWordBits || (mask >> len) == 0, "SetVec::from_mask: mask has bits past length");
    SetVec v(len);
    v.words_[0] = mask;
    return v;
}

bool SetVec::test(std::size_t i) const {
    require(i < len_, "SetVec::test: index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void SetVec::set(std::size_t i, bool value) {
    require(i < len_, "SetVec::set: index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= bit;
    } else {
        words_[i / kWordBits] &= ~bit;
    }
}

std::size_t SetVec::count() const noexcept {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool SetVec::any() const noexcept {
    for (std::uint64_t w : words_) {
        if (w != 0) return true;
    }
    return false;
}

bool SetVec::is_subset_of(const SetVec& other) const {
    require(len_ == other.len_, "SetVec::is_subset_of: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & ~other.words_[w]) return false;
    }
    return true;
}

bool SetVec::intersects(const SetVec& other) const {
    require(len_ == other.len_, "SetVec::intersects: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] & other.words_[w]) return true;
    }
    return false;
}

SetVec SetVec::complement() const {
    SetVec out(len_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
    out.words_.back() &= tail_mask(len_);
    return out;
}

SetVec& SetVec::operator|=(const SetVec& other) {
    require(len_ == other.len_, "SetVec::operator|=: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

SetVec& SetVec::operator&=(const SetVec& other) {
    require(len_ == other.len_, "SetVec::operator&=: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

std::uint64_t SetVec::to_mask() const {
    require(len_ <= kWordBits, "SetVec::to_mask: length exceeds 64");
    return words_[0];
}

bool canonical_block_less(const SetVec& a, const SetVec& b) {
    if (a.len() != b.len()) throw std::invalid_argument("canonical_block_less: length mismatch");
    const auto aw = a.words();
    const auto bw = b.words();
    for (std::size_t w = 0; w < aw.size(); ++w) {
        const std::uint64_t diff = aw[w] ^ bw[w];
        if (diff != 0) {
            // Lowest differing bit is the earliest differing element; the set
            // containing it sorts first.
            const int bit = std::countr_zero(diff);
            return (aw[w] >> bit) & 1u;
        }
    }
    return false;
}

TriMatrix::TriMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    require(rows >= 1 && cols >= 1, "TriMatrix: shape must be at least 1x1");
}

std::uint8_t TriMatrix::at(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, "TriMatrix::at: index out of range");
    return entries_[i * cols_ + j];
}

void TriMatrix::set(std::size_t i, std::size_t j, std::uint8_t value) {
    require(i < rows_ && j < cols_, "TriMatrix::set: index out of range");
    require(value <= 2, "TriMatrix::set: entries range over {0,1,2}");
    entries_[i * cols_ + j] = value;
}

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_(word_count(cols)), bits_(rows * words_per_row_, 0) {
    require(rows >= 1 && cols >= 1, "BoolMatrix: shape must be at least 1x1");
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<SetVec>& rows) {
    require(!rows.empty(), "BoolMatrix::from_rows: need at least one row");
    BoolMatrix m(rows.size(), rows.front().len());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].len() == m.cols_, "BoolMatrix::from_rows: row length mismatch");
        auto dst = m.mutable_row_words(i);
        auto src = rows[i].words();
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] = src[w];
    }
    return m;
}

BoolMatrix BoolMatrix::from_columns(const std::vector<SetVec>& columns) {
    require(!columns.empty(), "BoolMatrix::from_columns: need at least one column");
    BoolMatrix m(columns.front().len(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        require(columns[j].len() == m.rows_, "BoolMatrix::from_columns: column length mismatch");
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (columns[j].test(i)) m.set(i, j);
        }
    }
    return m;
}

bool BoolMatrix::test(std::size_t i, std::size_t j) const {
    require(i < rows_ && j < cols_, "BoolMatrix::test: index out of range");
    return (bits_[i * words_per_row_ + j / kWordBits] >> (j % kWordBits)) & 1u;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
    require(i < rows_ && j < cols_, "BoolMatrix::set: index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (j % kWordBits);
    if (value) {
        bits_[i * words_per_row_ + j / kWordBits] |= bit;
    } else {
        bits_[i * words_per_row_ + j / kWordBits] &= ~bit;
    }
}

SetVec BoolMatrix::row(std::size_t i) const {
    require(i < rows_, "BoolMatrix::row: index out of range");
    SetVec v(cols_);
    auto src = row_words(i);
    auto dst = v.words();
    for (std::size_t w = 0; w < src.size(); ++w) dst[w] = src[w];
    return v;
}

SetVec BoolMatrix::column(std::size_t j) const {
    require(j < cols_, "BoolMatrix::column: index out of range");
    SetVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (test(i, j)) v.set(i);
    }
    return v;
}

bool BoolMatrix::row_is_zero(std::size_t i) const {
    for (std::uint64_t w : row_words(i)) {
        if (w != 0) return false;
    }
    return true;
}

std::span<const std::uint64_t> BoolMatrix::row_words(std::size_t i) const {
    require(i < rows_, "BoolMatrix::row_words: index out of range");
    return {bits_.data() + i * words_per_row_, words_per_row_};
}

std::span<std::uint64_t> BoolMatrix::mutable_row_words(std::size_t i) {
    return {bits_.data() + i * words_per_row_, words_per_row_};
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    require(a.cols() == b.rows(), "bool_product: inner dimensions disagree (" + shape(a.rows(), a.cols()) +
                                      " times " + shape(b.rows(), b.cols()) + ")");
    BoolMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row_words(i);
        auto dst = out.mutable_row_words(i);
        for (std::size_t w = 0; w < arow.size(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits != 0) {
                const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                auto brow = b.row_words(k);
                for (std::size_t v = 0; v < dst.size(); ++v) dst[v] |= brow[v];
            }
        }
    }
    return out;
}

TriMatrix odot(const BoolMatrix& a, const BoolMatrix& b) {
    require(a.cols() == b.rows(), "odot: inner dimensions disagree (" + shape(a.rows(), a.cols()) + " odot " +
                                      shape(b.rows(), b.cols()) + ")");
    const std::size_t m = a.cols();
    const BoolMatrix bt = transpose(b);
    const std::uint64_t tail = tail_mask(m);
    TriMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row_words(i);
        const bool a_zero = a.row_is_zero(i);
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto bcol = bt.row_words(j);
            // Some k with a=1, b=0 forces a 0 term; a's padding bits are zero
            // so the unmasked AND-NOT is safe.
            bool has_zero_term = false;
            for (std::size_t w = 0; w < arow.size(); ++w) {
                if (arow[w] & ~bcol[w]) {
                    has_zero_term = true;
                    break;
                }
            }
            if (has_zero_term) continue;  // entry stays 0
            if (a_zero) {
                bool b_all_ones = true;
                for (std::size_t w = 0; w < bcol.size(); ++w) {
                    const std::uint64_t full = (w + 1 == bcol.size()) ? tail : ~std::uint64_t{0};
                    if (bcol[w] != full) {
                        b_all_ones = false;
                        break;
                    }
                }
                if (b_all_ones) {
                    out.set(i, j, 2);  // every term is 2
                    continue;
                }
            }
            out.set(i, j, 1);
        }
    }
    return out;
}

BoolMatrix to_boolean(const TriMatrix& t) {
    BoolMatrix out(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const std::uint8_t e = t.at(i, j);
            if (e == 2) {
                throw std::domain_error("to_boolean: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") is 2; operand has an all-zero row");
            }
            if (e == 1) out.set(i, j);
        }
    }
    return out;
}

BoolMatrix transpose(const BoolMatrix& a) {
    BoolMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row_words(i);
        for (std::size_t w = 0; w < arow.size(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits != 0) {
                const std::size_t j = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                out.set(j, i);
            }
        }
    }
    return out;
}

BoolMatrix union_of(const BoolMatrix& a, const BoolMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "union_of: shape mismatch (" + shape(a.rows(), a.cols()) + " vs " + shape(b.rows(), b.cols()) + ")");
    BoolMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = out.mutable_row_words(i);
        auto src = b.row_words(i);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
    }
    return out;
}

bool leq(const BoolMatrix& a, const BoolMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(),
            "leq: shape mismatch (" + shape(a.rows(), a.cols()) + " vs " + shape(b.rows(), b.cols()) + ")");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto arow = a.row_words(i);
        auto brow = b.row_words(i);
        for (std::size_t w = 0; w < arow.size(); ++w) {
            if (arow[w] & ~brow[w]) return false;
        }
    }
    return true;
}

bool is_symmetric(const BoolMatrix& a) {
    require(a.rows() == a.cols(), "is_symmetric: matrix is not square");
    return transpose(a) == a;
}

bool has_unit_diagonal(const BoolMatrix& a) {
    require(a.rows() == a.cols(), "has_unit_diagonal: matrix is not square");
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a.test(i, i)) return false;
    }
    return true;
}

bool is_idempotent(const BoolMatrix& a) {
    require(a.rows() == a.cols(), "is_idempotent: matrix is not square");
    return bool_product(a, a) == a;
}

bool is_transitive(const BoolMatrix& a) {
    require(a.rows() == a.cols(), "is_transitive: matrix is not square");
    return leq(bool_product(a, a), a);
}

MatrixPredicates predicates(const BoolMatrix& a) {
    require(a.rows() == a.cols(), "predicates: matrix is not square");
    MatrixPredicates p{};
    p.symmetric = is_symmetric(a);
    p.diag_all_ones = has_unit_diagonal(a);
    p.reflexive = p.diag_all_ones;
    const BoolMatrix sq = bool_product(a, a);
    p.idempotent = sq == a;
    p.transitive = leq(sq, a);
    return p;
}

}  // namespace roughmat
