#include "roughmat/decompose.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace roughmat {

namespace {

void require(bool cond, const std::string& message) {
    if (!cond) throw std::invalid_argument(message);
}

void require_square(const BoolMatrix& b, const char* who) {
    require(b.rows() == b.cols(), std::string(who) + ": matrix is not square");
}

// Bron-Kerbosch with pivoting over bit-set adjacency rows. Vertices are the
// looped indices of b; adjacency is the off-diagonal support.
class CliqueEnumerator {
public:
    explicit CliqueEnumerator(const BoolMatrix& b) : n_(b.rows()) {
        adjacency_.reserve(n_);
        SetVec looped(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            SetVec row = b.row(i);
            row.set(i, false);
            adjacency_.push_back(std::move(row));
            if (b.test(i, i)) looped.set(i);
        }
        if (looped.any()) {
            expand(SetVec(n_), looped, SetVec(n_));
        }
    }

    std::vector<SetVec> take() && { return std::move(cliques_); }

private:
    void expand(const SetVec& r, SetVec p, SetVec x) {
        if (p.none() && x.none()) {
            cliques_.push_back(r);
            return;
        }
        const std::size_t pivot = choose_pivot(p, x);
        SetVec candidates = p;
        candidates &= adjacency_[pivot].complement();
        for (std::size_t v = 0; v < n_; ++v) {
            if (!candidates.test(v)) continue;
            SetVec next_r = r;
            next_r.set(v);
            expand(next_r, p & adjacency_[v], x & adjacency_[v]);
            p.set(v, false);
            x.set(v);
        }
    }

    std::size_t choose_pivot(const SetVec& p, const SetVec& x) const {
        std::size_t best = 0;
        std::size_t best_score = 0;
        bool found = false;
        const SetVec pool = p | x;
        for (std::size_t u = 0; u < n_; ++u) {
            if (!pool.test(u)) continue;
            const std::size_t score = (p & adjacency_[u]).count();
            if (!found || score > best_score) {
                best = u;
                best_score = score;
                found = true;
            }
        }
        return best;
    }

    std::size_t n_;
    std::vector<SetVec> adjacency_;
    std::vector<SetVec> cliques_;
};

// The 1-entries of the upper triangle (diagonal included) as cover items.
struct CoverInstance {
    std::size_t item_count = 0;
    std::vector<SetVec> coverage;  // per clique, over items

    CoverInstance(const BoolMatrix& b, const std::vector<SetVec>& cliques) {
        const std::size_t n = b.rows();
        std::vector<std::vector<std::size_t>> item_index(n, std::vector<std::size_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                if (b.test(i, j)) item_index[i][j] = item_count++;
            }
        }
        if (item_count == 0) return;
        coverage.reserve(cliques.size());
        for (const SetVec& clique : cliques) {
            SetVec covers(item_count);
            for (std::size_t i = 0; i < n; ++i) {
                if (!clique.test(i)) continue;
                for (std::size_t j = i; j < n; ++j) {
                    if (clique.test(j)) covers.set(item_index[i][j]);
                }
            }
            coverage.push_back(std::move(covers));
        }
    }
};

std::vector<std::size_t> greedy_cover(const CoverInstance& inst) {
    std::vector<std::size_t> chosen;
    SetVec covered(inst.item_count);
    while (covered.count() < inst.item_count) {
        std::size_t best = inst.coverage.size();
        std::size_t best_gain = 0;
        for (std::size_t s = 0; s < inst.coverage.size(); ++s) {
            const std::size_t gain = (inst.coverage[s] & covered.complement()).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = s;
            }
        }
        if (best == inst.coverage.size()) {
            throw std::logic_error("greedy_cover: uncoverable item");
        }
        chosen.push_back(best);
        covered |= inst.coverage[best];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// Branch and bound for the minimum cover size: branch on the uncovered item
// with the fewest covering sets.
class MinCoverSearch {
public:
    explicit MinCoverSearch(const CoverInstance& inst) : inst_(inst) {
        covering_sets_.resize(inst.item_count);
        for (std::size_t s = 0; s < inst.coverage.size(); ++s) {
            const SetVec& cov = inst.coverage[s];
            max_cover_ = std::max(max_cover_, cov.count());
            for (std::size_t it = 0; it < inst.item_count; ++it) {
                if (cov.test(it)) covering_sets_[it].push_back(s);
            }
        }
    }

    std::size_t solve(std::size_t upper_bound) {
        best_ = upper_bound;
        descend(SetVec(inst_.item_count), 0);
        return best_;
    }

private:
    void descend(const SetVec& covered, std::size_t used) {
        const std::size_t remaining = inst_.item_count - covered.count();
        if (remaining == 0) {
            best_ = std::min(best_, used);
            return;
        }
        const std::size_t lower = (remaining + max_cover_ - 1) / max_cover_;
        if (used + lower >= best_) return;

        std::size_t branch_item = inst_.item_count;
        std::size_t fewest = ~std::size_t{0};
        for (std::size_t it = 0; it < inst_.item_count; ++it) {
            if (covered.test(it)) continue;
            if (covering_sets_[it].size() < fewest) {
                fewest = covering_sets_[it].size();
                branch_item = it;
            }
        }
        for (std::size_t s : covering_sets_[branch_item]) {
            descend(covered | inst_.coverage[s], used + 1);
        }
    }

    const CoverInstance& inst_;
    std::vector<std::vector<std::size_t>> covering_sets_;
    std::size_t max_cover_ = 1;
    std::size_t best_ = 0;
};

// First size-k cover found when trying set indices in ascending order: the
// lexicographically smallest one, since cliques are already canonically
// sorted.
bool lex_cover_at(const CoverInstance& inst, std::size_t k, std::size_t first, const SetVec& covered,
                  std::size_t max_cover, std::vector<std::size_t>& chosen) {
    const std::size_t remaining = inst.item_count - covered.count();
    if (remaining == 0) return true;
    if (chosen.size() == k) return false;
    if (remaining > (k - chosen.size()) * max_cover) return false;
    for (std::size_t s = first; s < inst.coverage.size(); ++s) {
        chosen.push_back(s);
        if (lex_cover_at(inst, k, s + 1, covered | inst.coverage[s], max_cover, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

Decomposition make_decomposition(const BoolMatrix& b, std::vector<SetVec> blocks, DecomposeMode mode) {
    const std::size_t n = b.rows();
    BoolMatrix a = blocks.empty() ? BoolMatrix(n, 1) : BoolMatrix::from_columns(blocks);
    Decomposition d{std::move(blocks), std::move(a), mode};
    if (bool_product(d.a, transpose(d.a)) != b) {
        throw std::logic_error("decompose: constructed blocks do not reproduce the input");
    }
    return d;
}

DecomposeResult cover_based(const BoolMatrix& b, DecomposeMode mode, std::size_t vertex_bound) {
    if (auto reason = why_not_decomposable(b)) {
        return {std::nullopt, "no decomposition exists: " + *reason};
    }
    if (mode == DecomposeMode::exact && b.rows() > vertex_bound) {
        return {std::nullopt, "exact mode supports at most " + std::to_string(vertex_bound) +
                                  " vertices (got " + std::to_string(b.rows()) +
                                  "); use paper or greedy mode, or raise the bound"};
    }
    std::vector<SetVec> cliques = maximal_subformulas(b);
    if (mode == DecomposeMode::paper) {
        return {make_decomposition(b, std::move(cliques), mode), {}};
    }

    const CoverInstance inst(b, cliques);
    std::vector<std::size_t> chosen;
    if (inst.item_count > 0) {
        std::size_t max_cover = 1;
        for (const SetVec& cov : inst.coverage) max_cover = std::max(max_cover, cov.count());
        if (mode == DecomposeMode::greedy) {
            chosen = greedy_cover(inst);
        } else {
            const std::size_t best = MinCoverSearch(inst).solve(greedy_cover(inst).size());
            if (!lex_cover_at(inst, best, 0, SetVec(inst.item_count), max_cover, chosen)) {
                throw std::logic_error("decompose_exact: optimum not reproducible");
            }
        }
    }
    std::vector<SetVec> blocks;
    blocks.reserve(chosen.size());
    for (std::size_t s : chosen) blocks.push_back(cliques[s]);
    return {make_decomposition(b, std::move(blocks), mode), {}};
}

}  // namespace

BoolMatrix subformula_matrix(const SetVec& vertex_set) {
    const std::size_t n = vertex_set.len();
    BoolMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!vertex_set.test(i)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (vertex_set.test(j)) out.set(i, j);
        }
    }
    return out;
}

std::optional<std::string> why_not_decomposable(const BoolMatrix& b) {
    require_square(b, "why_not_decomposable");
    const std::size_t n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (b.test(i, j) != b.test(j, i)) {
                return "not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (b.test(i, i)) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.test(i, j)) {
                return "B_" + std::to_string(i + 1) + std::to_string(j + 1) + "=1 but B_" +
                       std::to_string(i + 1) + std::to_string(i + 1) + "=0";
            }
        }
    }
    return std::nullopt;
}

bool is_decomposable(const BoolMatrix& b) {
    return !why_not_decomposable(b).has_value();
}

std::vector<SetVec> maximal_subformulas(const BoolMatrix& b) {
    require_square(b, "maximal_subformulas");
    if (auto reason = why_not_decomposable(b)) {
        throw std::invalid_argument("maximal_subformulas: " + *reason);
    }
    std::vector<SetVec> cliques = CliqueEnumerator(b).take();
    std::sort(cliques.begin(), cliques.end(), canonical_block_less);
    return cliques;
}

DecomposeResult decompose_paper(const BoolMatrix& b) {
    require_square(b, "decompose_paper");
    return cover_based(b, DecomposeMode::paper, 0);
}

DecomposeResult decompose_exact(const BoolMatrix& b, std::size_t vertex_bound) {
    require_square(b, "decompose_exact");
    return cover_based(b, DecomposeMode::exact, vertex_bound);
}

DecomposeResult decompose_greedy(const BoolMatrix& b) {
    require_square(b, "decompose_greedy");
    return cover_based(b, DecomposeMode::greedy, 0);
}

bool verify_decomposition(const BoolMatrix& b, const Decomposition& d) {
    if (b.rows() != b.cols() || d.a.rows() != b.rows()) return false;
    BoolMatrix joined(b.rows(), b.cols());
    for (const SetVec& block : d.blocks) {
        if (block.len() != b.rows()) return false;
        joined = union_of(joined, subformula_matrix(block));
    }
    return joined == b;
}

}  // namespace roughmat
