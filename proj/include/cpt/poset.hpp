#ifndef CPT_POSET_HPP
#define CPT_POSET_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cpt/errors.hpp"

namespace cpt {

/// Strict partial order over integer element ids. The relation matrix is
/// validated (irreflexive, antisymmetric, transitive) on construction.
class Poset {
public:
    Poset() = default;

    Poset(std::vector<int> ids, const std::vector<std::pair<int, int>>& strict_pairs) : ids_(std::move(ids)) {
        const int p = size();
        for (int i = 0; i < p; ++i) {
            if (idx_.count(ids_[static_cast<std::size_t>(i)]))
                throw std::invalid_argument("Poset: duplicate element id " +
                                            std::to_string(ids_[static_cast<std::size_t>(i)]));
            idx_[ids_[static_cast<std::size_t>(i)]] = i;
        }
        less_.assign(static_cast<std::size_t>(p), std::vector<char>(static_cast<std::size_t>(p), 0));
        for (const auto& [x, y] : strict_pairs) {
            const auto ix = idx_.find(x);
            const auto iy = idx_.find(y);
            if (ix == idx_.end() || iy == idx_.end())
                throw std::invalid_argument("Poset: relation mentions unknown id");
            if (x == y) throw std::invalid_argument("Poset: reflexive pair " + std::to_string(x));
            less_[static_cast<std::size_t>(ix->second)][static_cast<std::size_t>(iy->second)] = 1;
        }
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                if (less_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                    less_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                    throw std::invalid_argument("Poset: relation is not antisymmetric");
                if (!less_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
                for (int k = 0; k < p; ++k)
                    if (less_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
                        !less_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                        throw std::invalid_argument("Poset: relation is not transitive");
            }
    }

    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& ids() const { return ids_; }

    int index_of(int id) const {
        const auto it = idx_.find(id);
        return it == idx_.end() ? -1 : it->second;
    }

    bool less_by_index(int i, int j) const {
        return less_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
    }

    /// x strictly below y.
    bool less(int x, int y) const {
        const int i = index_of(x);
        const int j = index_of(y);
        if (i < 0 || j < 0) throw std::invalid_argument("Poset::less: unknown id");
        return less_by_index(i, j);
    }

    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
    bool incomparable(int x, int y) const { return x != y && !comparable(x, y); }

private:
    std::vector<int> ids_;
    std::unordered_map<int, int> idx_;
    std::vector<std::vector<char>> less_;
};

/// Total order over element ids, listed lowest first.
struct LinearExtension {
    std::vector<int> order;

    bool operator==(const LinearExtension&) const = default;
};

/// A set of linear extensions claimed to realize a poset.
struct Realizer {
    std::vector<LinearExtension> extensions;

    int size() const { return static_cast<int>(extensions.size()); }
};

namespace detail {

// order-of-id map, or empty when ext is not over exactly the poset's ids.
inline std::vector<int> extension_positions(const Poset& poset, const LinearExtension& ext) {
    const int p = poset.size();
    if (static_cast<int>(ext.order.size()) != p) return {};
    std::vector<int> pos(static_cast<std::size_t>(p), -1);
    for (int r = 0; r < p; ++r) {
        const int i = poset.index_of(ext.order[static_cast<std::size_t>(r)]);
        if (i < 0 || pos[static_cast<std::size_t>(i)] >= 0) return {};
        pos[static_cast<std::size_t>(i)] = r;
    }
    return pos;
}

} // namespace detail

/// ext covers exactly the poset's ground set and respects every strict pair.
inline bool is_linear_extension(const Poset& poset, const LinearExtension& ext) {
    const auto pos = detail::extension_positions(poset, ext);
    if (poset.size() > 0 && pos.empty()) return false;
    const int p = poset.size();
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (poset.less_by_index(i, j) && pos[static_cast<std::size_t>(i)] > pos[static_cast<std::size_t>(j)])
                return false;
    return true;
}

/// True iff every member is a linear extension and every ordered incomparable
/// pair (x,y) has some member placing y before x, i.e. the intersection of
/// the members is exactly the poset. An empty realizer realizes nothing.
/// Throws on a ground-set mismatch.
inline bool verify_realizer(const Poset& poset, const Realizer& realizer) {
    if (realizer.extensions.empty()) return false;
    const int p = poset.size();
    std::vector<std::vector<int>> pos;
    pos.reserve(realizer.extensions.size());
    for (const LinearExtension& ext : realizer.extensions) {
        auto m = detail::extension_positions(poset, ext);
        if (p > 0 && m.empty())
            throw std::invalid_argument("verify_realizer: extension is not over the poset's ground set");
        pos.push_back(std::move(m));
    }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            if (i == j) continue;
            if (poset.less_by_index(i, j)) {
                for (const auto& m : pos)
                    if (m[static_cast<std::size_t>(i)] > m[static_cast<std::size_t>(j)]) return false;
            } else if (!poset.less_by_index(j, i)) {
                // incomparable: some extension must put j before i
                bool reversed = false;
                for (const auto& m : pos)
                    if (m[static_cast<std::size_t>(j)] < m[static_cast<std::size_t>(i)]) {
                        reversed = true;
                        break;
                    }
                if (!reversed) return false;
            }
        }
    return true;
}

} // namespace cpt

#endif // CPT_POSET_HPP
