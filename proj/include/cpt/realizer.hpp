#ifndef CPT_REALIZER_HPP
#define CPT_REALIZER_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "cpt/drawings.hpp"
#include "cpt/errors.hpp"
#include "cpt/poset.hpp"
#include "cpt/tree.hpp"

namespace cpt {

/// One poset element: an id and the host-tree path that models it.
struct CptElement {
    int id = 0;
    TreePath path;
};

/// A containment model: host tree plus labelled paths.
struct CptInstance {
    RootedTree tree;
    std::vector<CptElement> elements;

    int p() const { return static_cast<int>(elements.size()); }
};

/// x below y iff x's path is strictly contained in y's (contained and
/// shorter, which for paths is exactly proper vertex-set inclusion).
inline Poset poset_from_paths(const CptInstance& inst) {
    std::vector<int> ids;
    ids.reserve(inst.elements.size());
    for (const CptElement& e : inst.elements) ids.push_back(e.id);
    std::vector<std::pair<int, int>> pairs;
    for (const CptElement& x : inst.elements)
        for (const CptElement& y : inst.elements)
            if (x.path.length < y.path.length && path_contains(inst.tree, y.path, x.path))
                pairs.emplace_back(x.id, y.id);
    return Poset(std::move(ids), pairs); // ctor asserts transitivity
}

/// Tie order for elements whose paths share both the last-listed vertex and
/// the length (only possible for incomparable elements, e.g. duplicates).
enum class TieOrder { ascending_id, descending_id };

/// Per-vertex lists of the elements whose path has that vertex as an endpoint
/// or top, sorted by (length, id). Built once per instance and shared by all
/// traversal-to-extension conversions.
struct PathIndex {
    std::vector<std::vector<int>> at_vertex; // element indices into inst.elements
};

inline PathIndex build_path_index(const CptInstance& inst) {
    PathIndex idx;
    idx.at_vertex.assign(static_cast<std::size_t>(inst.tree.n) + 1, {});
    for (int e = 0; e < inst.p(); ++e) {
        const TreePath& p = inst.elements[static_cast<std::size_t>(e)].path;
        int verts[3] = {p.u, p.v, p.top};
        std::sort(verts, verts + 3);
        for (int i = 0; i < 3; ++i)
            if (i == 0 || verts[i] != verts[i - 1]) idx.at_vertex[static_cast<std::size_t>(verts[i])].push_back(e);
    }
    for (auto& bucket : idx.at_vertex)
        std::sort(bucket.begin(), bucket.end(), [&](int a, int b) {
            const CptElement& ea = inst.elements[static_cast<std::size_t>(a)];
            const CptElement& eb = inst.elements[static_cast<std::size_t>(b)];
            if (ea.path.length != eb.path.length) return ea.path.length < eb.path.length;
            return ea.id < eb.id;
        });
    return idx;
}

/// Linear order induced by a traversal: elements sorted by (position of the
/// last-listed path vertex, path length, tie order). O(n + p).
///
/// The traversal must list either every node after all its ancestors (any
/// preorder) or every node before all its ancestors (the level-wise
/// traversal); then the last-listed vertex of a path is among its two
/// endpoints and its top, so it is found in O(1).
inline LinearExtension extension_from_listing(const CptInstance& inst, const PathIndex& idx, const Listing& listing,
                                              TieOrder tie = TieOrder::ascending_id) {
    const int p = inst.p();
    std::vector<int> last(static_cast<std::size_t>(p));
    for (int e = 0; e < p; ++e) {
        const TreePath& path = inst.elements[static_cast<std::size_t>(e)].path;
        int best = path.u;
        if (listing.position[static_cast<std::size_t>(path.v)] > listing.position[static_cast<std::size_t>(best)])
            best = path.v;
        if (listing.position[static_cast<std::size_t>(path.top)] > listing.position[static_cast<std::size_t>(best)])
            best = path.top;
        last[static_cast<std::size_t>(e)] = best;
    }
    LinearExtension ext;
    ext.order.reserve(static_cast<std::size_t>(p));
    for (int w : listing.order) {
        const auto& bucket = idx.at_vertex[static_cast<std::size_t>(w)];
        std::size_t i = 0;
        while (i < bucket.size()) {
            // run of equal path length; ids ascend inside the run
            std::size_t j = i + 1;
            const int len = inst.elements[static_cast<std::size_t>(bucket[i])].path.length;
            while (j < bucket.size() && inst.elements[static_cast<std::size_t>(bucket[j])].path.length == len) ++j;
            if (tie == TieOrder::ascending_id) {
                for (std::size_t k = i; k < j; ++k)
                    if (last[static_cast<std::size_t>(bucket[k])] == w)
                        ext.order.push_back(inst.elements[static_cast<std::size_t>(bucket[k])].id);
            } else {
                for (std::size_t k = j; k-- > i;)
                    if (last[static_cast<std::size_t>(bucket[k])] == w)
                        ext.order.push_back(inst.elements[static_cast<std::size_t>(bucket[k])].id);
            }
            i = j;
        }
    }
    return ext;
}

inline LinearExtension extension_from_listing(const CptInstance& inst, const Listing& listing,
                                              TieOrder tie = TieOrder::ascending_id) {
    return extension_from_listing(inst, build_path_index(inst), listing, tie);
}

/// Size of the realizer build_realizer produces: one extension per drawing
/// descriptor plus the level-wise one. Equals
/// 2*ceil(log2 log2 D) + 2*ceil(log2 r) + 3 with D the maximum child count.
inline int realizer_size_bound(const RootedTree& t) {
    const int ll = ceil_log2_log2(std::max(t.max_children, 2));
    const int lr = t.radius <= 1 ? 0 : ceil_log2(t.radius);
    return 2 * ll + 2 * lr + 3;
}

/// min(leaf count, 2*ceil(log2 log2 D) + 2*ceil(log2 r) + 3). Reporting only;
/// the leaf-count part is a known bound with no construction behind it here.
inline int dimension_bound(const RootedTree& t) { return std::min(t.leafcount, realizer_size_bound(t)); }

/// One linear extension per drawing of the 3-suitable family (preorder,
/// ascending-id ties) plus one from the level-wise traversal (descending-id
/// ties, so persistent ties such as duplicate paths get reversed somewhere).
inline Realizer build_realizer(const CptInstance& inst) {
    const PathIndex idx = build_path_index(inst);
    const DrawingFamily fam = build_drawing_family(inst.tree);
    Realizer r;
    r.extensions.reserve(fam.descriptors.size() + 1);
    for (const DrawingDescriptor& d : fam.descriptors)
        r.extensions.push_back(extension_from_listing(inst, idx, preorder(inst.tree, d), TieOrder::ascending_id));
    r.extensions.push_back(extension_from_listing(inst, idx, levelwise(inst.tree), TieOrder::descending_id));
    return r;
}

} // namespace cpt

#endif // CPT_REALIZER_HPP
