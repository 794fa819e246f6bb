#ifndef CPT_ORACLE_HPP
#define CPT_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpt/errors.hpp"
#include "cpt/poset.hpp"

namespace cpt {

struct DimensionResult {
    std::optional<int> dimension; // empty = exceeds kmax
    Realizer witness;             // size == *dimension when found
};

namespace detail {

// Decides whether k linear extensions can realize the poset. Every ordered
// incomparable pair (x,y) must have y before x in some extension; the search
// assigns each such requirement to one of k extensions and keeps, per
// extension, the transitive closure of poset relations plus assigned
// reversals as reachability bitmasks. Requirements with a single feasible
// extension are placed eagerly; branching picks the most constrained
// requirement and skips extensions whose state duplicates one already tried.
class DimensionSearch {
public:
    DimensionSearch(const Poset& poset, int k) : poset_(poset), p_(poset.size()), k_(k) {
        base_.assign(static_cast<std::size_t>(p_), 0);
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < p_; ++j)
                if (poset.less_by_index(i, j)) base_[static_cast<std::size_t>(i)] |= bit(j);
        for (int i = 0; i < p_; ++i)
            for (int j = 0; j < p_; ++j)
                if (i != j && !poset.less_by_index(i, j) && !poset.less_by_index(j, i))
                    reqs_.emplace_back(i, j); // j must precede i in some extension
    }

    bool run(Realizer& witness) {
        std::vector<Mask> reach(static_cast<std::size_t>(k_) * static_cast<std::size_t>(p_));
        for (int e = 0; e < k_; ++e)
            std::copy(base_.begin(), base_.end(), reach.begin() + static_cast<std::ptrdiff_t>(e) * p_);
        std::vector<char> done(reqs_.size(), 0);
        if (!search(reach, done)) return false;
        witness.extensions.clear();
        for (int e = 0; e < k_; ++e)
            witness.extensions.push_back(extension_of(&solution_[static_cast<std::size_t>(e) * static_cast<std::size_t>(p_)]));
        return true;
    }

private:
    using Mask = std::uint32_t;

    static Mask bit(int i) { return Mask{1} << i; }
    // j can still be placed before i in this extension
    bool feasible(const Mask* r, int i, int j) const { return (r[static_cast<std::size_t>(i)] & bit(j)) == 0; }
    // j is already forced before i
    static bool satisfied(const Mask* r, int i, int j) { return (r[static_cast<std::size_t>(j)] & bit(i)) != 0; }

    void add_before(Mask* r, int u, int v) const { // u before v
        if (r[static_cast<std::size_t>(u)] & bit(v)) return;
        const Mask add = r[static_cast<std::size_t>(v)] | bit(v);
        for (int a = 0; a < p_; ++a)
            if (a == u || (r[static_cast<std::size_t>(a)] & bit(u))) r[static_cast<std::size_t>(a)] |= add;
    }

    bool search(std::vector<Mask>& reach, std::vector<char>& done) {
        for (;;) {
            int best_req = -1;
            int best_count = k_ + 1;
            bool all_done = true;
            bool changed = false;
            for (std::size_t c = 0; c < reqs_.size(); ++c) {
                if (done[c]) continue;
                const auto [i, j] = reqs_[c];
                bool sat = false;
                int count = 0;
                int only = -1;
                for (int e = 0; e < k_; ++e) {
                    const Mask* r = &reach[static_cast<std::size_t>(e) * static_cast<std::size_t>(p_)];
                    if (satisfied(r, i, j)) {
                        sat = true;
                        break;
                    }
                    if (feasible(r, i, j)) {
                        ++count;
                        only = e;
                    }
                }
                if (sat) {
                    done[c] = 1;
                    continue;
                }
                if (count == 0) return false;
                if (count == 1) {
                    done[c] = 1;
                    add_before(&reach[static_cast<std::size_t>(only) * static_cast<std::size_t>(p_)], j, i);
                    changed = true;
                    continue;
                }
                all_done = false;
                if (count < best_count) {
                    best_count = count;
                    best_req = static_cast<int>(c);
                }
            }
            if (changed) continue; // rescan after forced placements
            if (all_done) {
                solution_ = reach;
                return true;
            }
            const auto [i, j] = reqs_[static_cast<std::size_t>(best_req)];
            std::vector<const Mask*> tried;
            for (int e = 0; e < k_; ++e) {
                Mask* r = &reach[static_cast<std::size_t>(e) * static_cast<std::size_t>(p_)];
                if (!feasible(r, i, j)) continue;
                bool dup = false;
                for (const Mask* s : tried)
                    if (std::equal(s, s + p_, r)) {
                        dup = true;
                        break;
                    }
                if (dup) continue; // identical state: symmetric branch
                tried.push_back(r);
                std::vector<Mask> reach2 = reach;
                std::vector<char> done2 = done;
                done2[static_cast<std::size_t>(best_req)] = 1;
                add_before(&reach2[static_cast<std::size_t>(e) * static_cast<std::size_t>(p_)], j, i);
                if (search(reach2, done2)) return true;
            }
            return false;
        }
    }

    // Kahn's algorithm, smallest index first, over the closed relation.
    LinearExtension extension_of(const Mask* r) const {
        std::vector<int> indeg(static_cast<std::size_t>(p_), 0);
        for (int u = 0; u < p_; ++u)
            for (int v = 0; v < p_; ++v)
                if (r[static_cast<std::size_t>(u)] & bit(v)) ++indeg[static_cast<std::size_t>(v)];
        std::vector<char> used(static_cast<std::size_t>(p_), 0);
        LinearExtension ext;
        ext.order.reserve(static_cast<std::size_t>(p_));
        for (int step = 0; step < p_; ++step) {
            for (int v = 0; v < p_; ++v) {
                if (used[static_cast<std::size_t>(v)] || indeg[static_cast<std::size_t>(v)] != 0) continue;
                used[static_cast<std::size_t>(v)] = 1;
                ext.order.push_back(poset_.ids()[static_cast<std::size_t>(v)]);
                for (int w = 0; w < p_; ++w)
                    if (r[static_cast<std::size_t>(v)] & bit(w)) --indeg[static_cast<std::size_t>(w)];
                break;
            }
        }
        return ext;
    }

    const Poset& poset_;
    int p_;
    int k_;
    std::vector<Mask> base_;
    std::vector<std::pair<int, int>> reqs_;
    std::vector<Mask> solution_;
};

} // namespace detail

/// Exact poset dimension by iterative deepening on the realizer size,
/// with a witness realizer of that size. Sound and complete; guarded to
/// ground sets of at most 12 elements.
inline DimensionResult exact_dimension(const Poset& poset, int kmax) {
    if (poset.size() == 0) throw std::invalid_argument("exact_dimension: empty poset");
    if (poset.size() > 12)
        throw GuardError("exact_dimension: poset has " + std::to_string(poset.size()) + " elements, guard is 12");
    DimensionResult res;
    for (int k = 1; k <= kmax; ++k) {
        detail::DimensionSearch s(poset, k);
        Realizer witness;
        if (s.run(witness)) {
            res.dimension = k;
            res.witness = std::move(witness);
            return res;
        }
    }
    return res; // exceeds kmax
}

/// log2 log2 n; the dimension of the inclusion order on 1- and 2-element
/// subsets of [n] strictly exceeds this.
inline double p12_lower_bound(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("p12_lower_bound: n must be >= 2");
    return std::log2(std::log2(static_cast<double>(n)));
}

} // namespace cpt

#endif // CPT_ORACLE_HPP
