#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "roughmat/boolmat.hpp"

namespace roughmat {

/// Ordered universe of distinct, nonempty element names. The construction
/// order fixes the row index of every element in every derived matrix.
class Universe {
public:
    explicit Universe(std::vector<std::string> names);

    /// Universe named x1..xn, used when elements come from a bare matrix.
    static Universe numbered(std::size_t n);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws on unknown name

    bool operator==(const Universe& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Ordered family of subsets of a universe. Blocks may repeat and may be
/// empty; Covering adds the constraints that make the family a covering.
class SetFamily {
public:
    SetFamily(Universe universe, std::vector<SetVec> blocks);

    const Universe& universe() const noexcept { return universe_; }
    const std::vector<SetVec>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }

private:
    Universe universe_;
    std::vector<SetVec> blocks_;
};

/// A family with no empty block whose union is the whole universe.
/// Obtained only through validate_covering.
class Covering {
public:
    const SetFamily& family() const noexcept { return family_; }
    const Universe& universe() const noexcept { return family_.universe(); }
    const std::vector<SetVec>& blocks() const noexcept { return family_.blocks(); }
    std::size_t size() const noexcept { return family_.size(); }

private:
    explicit Covering(SetFamily family) : family_(std::move(family)) {}
    friend Covering validate_covering(SetFamily family);

    SetFamily family_;
};

/// Checks the covering axioms; throws std::invalid_argument naming the first
/// empty block (1-based index) or the first uncovered element.
Covering validate_covering(SetFamily family);

/// Membership matrix: entry(i,j) = 1 iff element i lies in block j, blocks in
/// family order.
BoolMatrix membership_matrix(const SetFamily& family);

struct Neighborhoods {
    std::vector<SetVec> indiscernible;  // I(x): union of blocks containing x
    std::vector<SetVec> neighborhood;   // N(x): intersection of blocks containing x
};

Neighborhoods neighborhoods(const Covering& c);

/// Type-1 characteristic matrix M*M^T: entry(i,j) = 1 iff x_j lies in I(x_i).
/// Symmetric with all-ones diagonal.
BoolMatrix gamma(const Covering& c);

/// Type-2 characteristic matrix, the odot of M with M^T: entry(i,j) = 1 iff
/// x_j lies in N(x_i). Reflexive and transitive.
BoolMatrix pi(const Covering& c);

/// Drops every block expressible as a union of other blocks, iterating to a
/// fixpoint. Duplicate blocks collapse to one copy.
Covering reduct(const Covering& c);

/// Keeps only the inclusion-maximal blocks (one copy of duplicated maximal
/// blocks). Defined for arbitrary families.
SetFamily gir(const SetFamily& family);

enum class RelationMode {
    equivalence,  // reflexive, symmetric, transitive; yields the partition U/R
    preorder,     // reflexive, transitive; yields the successor-set covering
};

/// Builds a covering from a relational matrix. In equivalence mode the result
/// is the partition of equivalence classes; in preorder mode it is the family
/// of successor sets {R(x)} with duplicates removed, which satisfies
/// pi(result) = m. Throws std::invalid_argument naming the violated predicate
/// and a witness pair when m fails the mode's preconditions.
Covering covering_from_relation(const BoolMatrix& m, RelationMode mode);
Covering covering_from_relation(const BoolMatrix& m, RelationMode mode, const Universe& universe);

}  // namespace roughmat
