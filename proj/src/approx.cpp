#include "roughmat/approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace roughmat {

namespace {

void check_query(const Covering& c, const SetVec& x) {
    if (x.len() != c.universe().size()) {
        throw std::invalid_argument("approx: query length " + std::to_string(x.len()) +
                                    " does not match universe size " + std::to_string(c.universe().size()));
    }
}

SetVec column_to_set(const BoolMatrix& column) {
    return column.column(0);
}

BoolMatrix set_to_column(const SetVec& x) {
    BoolMatrix m(x.len(), 1);
    for (std::size_t i = 0; i < x.len(); ++i) {
        if (x.test(i)) m.set(i, 0);
    }
    return m;
}

}  // namespace

std::optional<OpKind> parse_op_kind(std::string_view token) {
    if (token == "sh") return OpKind::SH;
    if (token == "sl") return OpKind::SL;
    if (token == "ih") return OpKind::IH;
    if (token == "il") return OpKind::IL;
    if (token == "xh") return OpKind::XH;
    if (token == "xl") return OpKind::XL;
    return std::nullopt;
}

std::string to_string(OpKind kind) {
    switch (kind) {
        case OpKind::SH: return "sh";
        case OpKind::SL: return "sl";
        case OpKind::IH: return "ih";
        case OpKind::IL: return "il";
        case OpKind::XH: return "xh";
        case OpKind::XL: return "xl";
    }
    return "?";
}

SetVec oracle_approx(const Covering& c, OpKind kind, const SetVec& x) {
    check_query(c, x);
    const std::size_t n = c.universe().size();
    switch (kind) {
        case OpKind::SH: {
            SetVec out(n);
            for (const SetVec& block : c.blocks()) {
                if (block.intersects(x)) out |= block;
            }
            return out;
        }
        case OpKind::SL:
            return oracle_approx(c, OpKind::SH, x.complement()).complement();
        case OpKind::IH: {
            const Neighborhoods nb = neighborhoods(c);
            SetVec out(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (nb.neighborhood[i].intersects(x)) out.set(i);
            }
            return out;
        }
        case OpKind::IL: {
            const Neighborhoods nb = neighborhoods(c);
            SetVec out(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (nb.neighborhood[i].is_subset_of(x)) out.set(i);
            }
            return out;
        }
        case OpKind::XH: {
            const Neighborhoods nb = neighborhoods(c);
            SetVec out(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (nb.neighborhood[i].intersects(x)) out |= nb.neighborhood[i];
            }
            return out;
        }
        case OpKind::XL: {
            const Neighborhoods nb = neighborhoods(c);
            SetVec out(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (nb.neighborhood[i].is_subset_of(x)) out |= nb.neighborhood[i];
            }
            return out;
        }
    }
    throw std::logic_error("oracle_approx: unreachable");
}

SetVec matrix_approx(const Covering& c, OpKind kind, const SetVec& x) {
    check_query(c, x);
    const BoolMatrix chi = set_to_column(x);
    switch (kind) {
        case OpKind::SH:
            return column_to_set(bool_product(gamma(c), chi));
        case OpKind::SL:
            // gamma has an all-ones diagonal, so no odot entry can reach 2.
            return column_to_set(to_boolean(odot(gamma(c), chi)));
        case OpKind::IH:
            return column_to_set(bool_product(pi(c), chi));
        case OpKind::IL:
            return column_to_set(to_boolean(odot(pi(c), chi)));
        case OpKind::XH: {
            const BoolMatrix p = pi(c);
            return column_to_set(bool_product(bool_product(transpose(p), p), chi));
        }
        case OpKind::XL: {
            // XL(X) collects the neighborhoods contained in X: the columns of
            // pi^T are the neighborhoods, and pi odot chi selects them.
            const BoolMatrix p = pi(c);
            const BoolMatrix selected = to_boolean(odot(p, chi));
            return column_to_set(bool_product(transpose(p), selected));
        }
    }
    throw std::logic_error("matrix_approx: unreachable");
}

Covering cov_of(const Covering& c) {
    const Neighborhoods nb = neighborhoods(c);
    std::vector<SetVec> blocks;
    for (const SetVec& n : nb.neighborhood) {
        if (std::find(blocks.begin(), blocks.end(), n) == blocks.end()) blocks.push_back(n);
    }
    return validate_covering(SetFamily(c.universe(), std::move(blocks)));
}

}  // namespace roughmat
