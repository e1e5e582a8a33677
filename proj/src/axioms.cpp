#include "roughmat/axioms.hpp"

#include <stdexcept>
#include <utility>

#include "roughmat/decompose.hpp"

namespace roughmat {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

std::string set_to_string(const Universe& u, const SetVec& s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < s.len(); ++i) {
        if (!s.test(i)) continue;
        if (!first) out += ",";
        out += u.name(i);
        first = false;
    }
    return out + "}";
}

std::string pair_witness(const Universe& u, std::size_t i, std::size_t j) {
    return "(" + u.name(i) + "," + u.name(j) + ")";
}

// Rejection reasons for the singleton-matrix conditions shared by the
// checkers; nullopt when the condition holds.
std::optional<std::string> not_symmetric_reason(const BoolMatrix& a, const Universe& u) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            if (a.test(i, j) != a.test(j, i)) {
                return "not symmetric at " + pair_witness(u, i, j);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> not_unit_diagonal_reason(const BoolMatrix& a, const Universe& u) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (!a.test(i, i)) {
            return "diagonal is not all ones at " + pair_witness(u, i, i);
        }
    }
    return std::nullopt;
}

std::optional<std::string> not_idempotent_reason(const BoolMatrix& a, const Universe& u) {
    const BoolMatrix squared = bool_product(a, a);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (squared.test(i, j) != a.test(i, j)) {
                return "not idempotent: A^2 and A differ at " + pair_witness(u, i, j);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> not_representable_reason(const OperatorTable& h) {
    const Universe& u = h.universe();
    const std::size_t n = u.size();
    SetVec empty(n);
    if (h.image(std::uint32_t{0}).any()) {
        return "not representable: H({}) = " + set_to_string(u, h.image(std::uint32_t{0})) + " is nonempty";
    }
    for (std::uint32_t mask = 1; mask < h.subset_count(); ++mask) {
        SetVec additive(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint32_t{1} << i)) additive |= h.image(std::uint32_t{1} << i);
        }
        if (!(additive == h.image(mask))) {
            return "not representable: H" + set_to_string(u, SetVec::from_mask(n, mask)) + " = " +
                   set_to_string(u, h.image(mask)) + " but the union of singleton images is " +
                   set_to_string(u, additive);
        }
    }
    return std::nullopt;
}

CheckResult reject(std::string reason) {
    CheckResult r;
    r.accepted = false;
    r.reason = std::move(reason);
    return r;
}

CheckResult check_second_impl(const BoolMatrix& a, const Universe& u) {
    require(a.rows() == a.cols(), "check_second_upper: matrix is not square");
    if (auto r = not_symmetric_reason(a, u)) return reject(*r);
    if (auto r = not_unit_diagonal_reason(a, u)) return reject(*r);
    // Symmetric with unit diagonal, so the block cover always exists; its
    // gamma is the union of the block patterns, which is a itself.
    DecomposeResult dec = decompose_paper(a);
    std::vector<SetVec> blocks = gir(SetFamily(u, dec.decomposition->blocks)).blocks();
    CheckResult r;
    r.accepted = true;
    r.witness = validate_covering(SetFamily(u, std::move(blocks)));
    return r;
}

CheckResult check_fifth_impl(const BoolMatrix& a, const Universe& u) {
    require(a.rows() == a.cols(), "check_fifth_upper: matrix is not square");
    if (auto r = not_unit_diagonal_reason(a, u)) return reject(*r);
    if (auto r = not_idempotent_reason(a, u)) return reject(*r);
    // Row i of the singleton matrix of IH is {x | x_i in N(x)}, so IH's
    // matrix is pi transposed; the covering must therefore satisfy
    // pi = a^T, which the successor sets of a^T deliver.
    CheckResult r;
    r.accepted = true;
    r.witness = covering_from_relation(transpose(a), RelationMode::preorder, u);
    return r;
}

}  // namespace

OperatorTable::OperatorTable(Universe universe, std::vector<SetVec> images)
    : universe_(std::move(universe)), images_(std::move(images)) {
    require(universe_.size() <= 12, "OperatorTable: universe larger than 12 elements");
    require(images_.size() == (std::size_t{1} << universe_.size()),
            "OperatorTable: need an image for each of the 2^n subsets");
    for (const SetVec& img : images_) {
        require(img.len() == universe_.size(), "OperatorTable: image length does not match universe");
    }
}

OperatorTable OperatorTable::tabulate(Universe universe, const std::function<SetVec(const SetVec&)>& fn) {
    require(universe.size() <= 12, "OperatorTable: universe larger than 12 elements");
    const std::size_t n = universe.size();
    std::vector<SetVec> images;
    images.reserve(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        images.push_back(fn(SetVec::from_mask(n, mask)));
    }
    return OperatorTable(std::move(universe), std::move(images));
}

const SetVec& OperatorTable::image(std::uint32_t mask) const {
    require(mask < images_.size(), "OperatorTable::image: mask out of range");
    return images_[mask];
}

const SetVec& OperatorTable::image(const SetVec& subset) const {
    require(subset.len() == universe_.size(), "OperatorTable::image: subset length mismatch");
    return image(static_cast<std::uint32_t>(subset.to_mask()));
}

BoolMatrix singleton_matrix(const OperatorTable& h) {
    const std::size_t n = h.universe().size();
    std::vector<SetVec> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(h.image(std::uint32_t{1} << i));
    }
    return BoolMatrix::from_rows(rows);
}

bool is_representable(const OperatorTable& h) {
    return !not_representable_reason(h).has_value();
}

CheckResult check_second_upper(const BoolMatrix& a) {
    return check_second_impl(a, Universe::numbered(a.rows()));
}

CheckResult check_second_upper(const OperatorTable& h) {
    if (auto r = not_representable_reason(h)) return reject(*r);
    return check_second_impl(singleton_matrix(h), h.universe());
}

CheckResult check_fifth_upper(const BoolMatrix& a) {
    return check_fifth_impl(a, Universe::numbered(a.rows()));
}

CheckResult check_fifth_upper(const OperatorTable& h) {
    if (auto r = not_representable_reason(h)) return reject(*r);
    return check_fifth_impl(singleton_matrix(h), h.universe());
}

CheckResult check_sixth_upper(const BoolMatrix& a, std::size_t search_bound) {
    require(a.rows() == a.cols(), "check_sixth_upper: matrix is not square");
    const std::size_t n = a.rows();
    require(n <= search_bound, "check_sixth_upper: universe size " + std::to_string(n) +
                                   " exceeds the search bound " + std::to_string(search_bound));
    const Universe u = Universe::numbered(n);
    // B * B^T is symmetric and, for reflexive B, has a unit diagonal.
    if (auto r = not_symmetric_reason(a, u)) return reject(*r);
    if (auto r = not_unit_diagonal_reason(a, u)) {
        return reject(*r + "; a reflexive B forces ones on the diagonal of B*B^T");
    }

    std::vector<std::pair<std::size_t, std::size_t>> positions;  // off-diagonal support of a
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && a.test(i, j)) positions.emplace_back(i, j);
        }
    }
    require(positions.size() < 64, "check_sixth_upper: search space too large");
    const std::uint64_t limit = std::uint64_t{1} << positions.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        BoolMatrix b = BoolMatrix::identity(n);
        for (std::size_t p = 0; p < positions.size(); ++p) {
            if (mask & (std::uint64_t{1} << p)) b.set(positions[p].first, positions[p].second);
        }
        if (!is_idempotent(b)) continue;
        if (bool_product(b, transpose(b)) != a) continue;
        // XH's singleton matrix over a covering is pi^T * pi, so a covering
        // with pi = B^T reproduces a = B * B^T.
        CheckResult r;
        r.accepted = true;
        r.relation = b;
        r.witness = covering_from_relation(transpose(b), RelationMode::preorder, u);
        return r;
    }
    return reject("no reflexive idempotent B with B*B^T = A exists (exhaustive search)");
}

}  // namespace roughmat
