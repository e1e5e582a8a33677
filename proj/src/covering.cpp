#include "roughmat/covering.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace roughmat {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

// First-occurrence deduplication of a block list.
std::vector<SetVec> dedup_blocks(const std::vector<SetVec>& blocks) {
    std::vector<SetVec> out;
    out.reserve(blocks.size());
    for (const SetVec& b : blocks) {
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    }
    return out;
}

}  // namespace

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    require(!names_.empty(), "Universe: needs at least one element");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        require(!names_[i].empty(), "Universe: element names must be nonempty");
        const auto [it, inserted] = index_.emplace(names_[i], i);
        require(inserted, "Universe: duplicate element name '" + names_[i] + "'");
    }
}

Universe Universe::numbered(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return Universe(std::move(names));
}

const std::string& Universe::name(std::size_t i) const {
    require(i < names_.size(), "Universe::name: index out of range");
    return names_[i];
}

std::optional<std::size_t> Universe::find(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Universe::index_of(std::string_view name) const {
    const auto found = find(name);
    require(found.has_value(), "Universe: unknown element '" + std::string(name) + "'");
    return *found;
}

SetFamily::SetFamily(Universe universe, std::vector<SetVec> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
    require(!blocks_.empty(), "SetFamily: needs at least one block");
    for (const SetVec& b : blocks_) {
        require(b.len() == universe_.size(), "SetFamily: block length does not match universe size");
    }
}

Covering validate_covering(SetFamily family) {
    SetVec covered(family.universe().size());
    for (std::size_t j = 0; j < family.size(); ++j) {
        const SetVec& block = family.blocks()[j];
        if (block.none()) {
            throw std::invalid_argument("invalid covering: block " + std::to_string(j + 1) + " is empty");
        }
        covered |= block;
    }
    for (std::size_t i = 0; i < covered.len(); ++i) {
        if (!covered.test(i)) {
            throw std::invalid_argument("invalid covering: element " + family.universe().name(i) +
                                        " is uncovered");
        }
    }
    return Covering(std::move(family));
}

BoolMatrix membership_matrix(const SetFamily& family) {
    return BoolMatrix::from_columns(family.blocks());
}

Neighborhoods neighborhoods(const Covering& c) {
    const std::size_t n = c.universe().size();
    Neighborhoods out;
    out.indiscernible.reserve(n);
    out.neighborhood.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        SetVec ind(n);
        SetVec nbr = SetVec(n).complement();  // start from U, intersect down
        for (const SetVec& block : c.blocks()) {
            if (block.test(i)) {
                ind |= block;
                nbr &= block;
            }
        }
        out.indiscernible.push_back(std::move(ind));
        out.neighborhood.push_back(std::move(nbr));
    }
    return out;
}

BoolMatrix gamma(const Covering& c) {
    const BoolMatrix m = membership_matrix(c.family());
    return bool_product(m, transpose(m));
}

BoolMatrix pi(const Covering& c) {
    const BoolMatrix m = membership_matrix(c.family());
    return to_boolean(odot(m, transpose(m)));
}

Covering reduct(const Covering& c) {
    std::vector<SetVec> blocks = dedup_blocks(c.blocks());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            SetVec joined(blocks[i].len());
            for (std::size_t j = 0; j < blocks.size(); ++j) {
                if (j != i && blocks[j].is_subset_of(blocks[i])) joined |= blocks[j];
            }
            if (joined == blocks[i]) {
                blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return validate_covering(SetFamily(c.universe(), std::move(blocks)));
}

SetFamily gir(const SetFamily& family) {
    const std::vector<SetVec> unique = dedup_blocks(family.blocks());
    std::vector<SetVec> maximal;
    for (const SetVec& b : unique) {
        const bool contained = std::any_of(unique.begin(), unique.end(), [&](const SetVec& other) {
            return !(other == b) && b.is_subset_of(other);
        });
        if (!contained) maximal.push_back(b);
    }
    return SetFamily(family.universe(), std::move(maximal));
}

Covering covering_from_relation(const BoolMatrix& m, RelationMode mode) {
    return covering_from_relation(m, mode, Universe::numbered(m.rows()));
}

Covering covering_from_relation(const BoolMatrix& m, RelationMode mode, const Universe& universe) {
    require(m.rows() == m.cols(), "covering_from_relation: matrix is not square");
    require(universe.size() == m.rows(), "covering_from_relation: universe size does not match matrix");
    const std::size_t n = m.rows();

    auto witness = [&](std::size_t i, std::size_t j) {
        return "(" + universe.name(i) + "," + universe.name(j) + ")";
    };
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.test(i, i)) {
            throw std::invalid_argument("relation is not reflexive: missing " + witness(i, i));
        }
    }
    if (mode == RelationMode::equivalence) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (m.test(i, j) != m.test(j, i)) {
                    throw std::invalid_argument("relation is not symmetric: at " + witness(i, j));
                }
            }
        }
    }
    const BoolMatrix squared = bool_product(m, m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (squared.test(i, j) && !m.test(i, j)) {
                throw std::invalid_argument("relation is not transitive: missing " + witness(i, j));
            }
        }
    }

    // Rows are the successor sets R(x); for an equivalence they are exactly
    // the classes. Duplicates collapse, first occurrence order.
    std::vector<SetVec> blocks;
    blocks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) blocks.push_back(m.row(i));
    return validate_covering(SetFamily(universe, dedup_blocks(blocks)));
}

}  // namespace roughmat
