#ifndef CPT_DRAWINGS_HPP
#define CPT_DRAWINGS_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cpt/errors.hpp"
#include "cpt/permutations.hpp"
#include "cpt/tree.hpp"

namespace cpt {

/// Lazy rule giving each node's child order for one drawing of the tree.
///
/// At a node v the base permutation is applied to v's canonical child
/// indices; when mask_bit = t is set and bit (t-1) of level(v) is 1 the base
/// is used reversed. mirrored flips the final order at every node. The full
/// radius-2^ceil(log2 r) template tree is never materialized: descriptors are
/// evaluated only at real nodes.
struct DrawingDescriptor {
    Permutation base;             // permutation of [m], m >= max child count
    std::optional<int> mask_bit;  // t >= 1; absent = uniform (same rule at every level)
    bool mirrored = false;
};

inline DrawingDescriptor mirror(DrawingDescriptor d) {
    d.mirrored = !d.mirrored;
    return d;
}

/// Orders v's children by the descriptor's rule.
inline std::vector<int> child_order(const RootedTree& t, const DrawingDescriptor& d, int v) {
    const auto& kids = t.children[static_cast<std::size_t>(v)];
    std::vector<int> out;
    if (kids.empty()) return out;
    out.reserve(kids.size());
    const int m = d.base.size();
    if (m < static_cast<int>(kids.size()))
        throw std::logic_error("child_order: descriptor base smaller than the node's child count");
    const bool rev_base =
        d.mask_bit.has_value() && ((t.level[static_cast<std::size_t>(v)] >> (*d.mask_bit - 1)) & 1) != 0;
    for (int i = 0; i < m; ++i) {
        const int idx = rev_base ? d.base.order[static_cast<std::size_t>(m - 1 - i)]
                                 : d.base.order[static_cast<std::size_t>(i)];
        if (idx <= static_cast<int>(kids.size())) out.push_back(kids[static_cast<std::size_t>(idx - 1)]);
    }
    if (d.mirrored) std::reverse(out.begin(), out.end());
    return out;
}

inline Listing preorder(const RootedTree& t, const DrawingDescriptor& d) {
    return preorder(t, [&](int v) { return child_order(t, d, v); });
}

struct DrawingFamily {
    std::vector<DrawingDescriptor> descriptors;
    FamilyKind kind = FamilyKind::unverified;
    bool degenerate = false; // single-node host
};

/// 3-suitable drawing family of size 2*(ceil(log2 log2 D) + 1 + ceil(log2 r))
/// where D is the tree's maximum child count (the branching of the smallest
/// full D-ary tree the host embeds into via canonical child indices).
///
/// Members: one uniform descriptor per permutation of a weakly 3-suitable
/// base family, one masked descriptor per radius bit (reversing the first
/// base permutation exactly at levels with that bit set), and the mirror of
/// each. A single-node host gets the two trivial descriptors.
inline DrawingFamily build_drawing_family(const RootedTree& t) {
    DrawingFamily fam;
    fam.kind = FamilyKind::three_suitable;
    if (t.radius == 0) {
        fam.degenerate = true;
        DrawingDescriptor d;
        d.base = Permutation::identity(std::max(t.max_children, 1));
        fam.descriptors.push_back(d);
        fam.descriptors.push_back(mirror(d));
        return fam;
    }
    const PermutationFamily base = build_weakly_3suitable(std::max(t.max_children, 2));
    const int radius_bits = ceil_log2(t.radius);
    for (const Permutation& p : base.members) fam.descriptors.push_back({p, std::nullopt, false});
    for (int bit = 1; bit <= radius_bits; ++bit) fam.descriptors.push_back({base.members.front(), bit, false});
    const std::size_t half = fam.descriptors.size();
    for (std::size_t i = 0; i < half; ++i) fam.descriptors.push_back(mirror(fam.descriptors[i]));
    return fam;
}

enum class SuitabilityMode { weak, strong };

/// Brute force over all pairwise-incomparable vertex triples: for every
/// distinguished vertex some descriptor's preorder must place it after both
/// others (strong) or after both / before both (weak). Guarded; raise
/// max_nodes deliberately when a larger check is intended.
inline bool verify_drawing_family(const RootedTree& t, const DrawingFamily& fam, SuitabilityMode mode,
                                  int max_nodes = 200) {
    if (t.n > max_nodes)
        throw GuardError("verify_drawing_family: tree has " + std::to_string(t.n) + " nodes, guard is " +
                         std::to_string(max_nodes));
    const int n = t.n;
    const bool weak = mode == SuitabilityMode::weak;

    std::vector<std::vector<int>> pos;
    pos.reserve(fam.descriptors.size());
    for (const DrawingDescriptor& d : fam.descriptors) pos.push_back(preorder(t, d).position);

    std::vector<char> incmp(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (is_incomparable(t, u, v))
                incmp[static_cast<std::size_t>(u) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(v)] = 1;
    auto inc = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return incmp[static_cast<std::size_t>(u) * static_cast<std::size_t>(n + 1) + static_cast<std::size_t>(v)] != 0;
    };

    int triple[3];
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (!inc(a, b)) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (!inc(a, c) || !inc(b, c)) continue;
                triple[0] = a;
                triple[1] = b;
                triple[2] = c;
                for (int d = 0; d < 3; ++d) {
                    const int x = triple[d];
                    const int o1 = triple[(d + 1) % 3];
                    const int o2 = triple[(d + 2) % 3];
                    bool found = false;
                    for (const auto& q : pos) {
                        const int px = q[static_cast<std::size_t>(x)];
                        const int p1 = q[static_cast<std::size_t>(o1)];
                        const int p2 = q[static_cast<std::size_t>(o2)];
                        if ((px > p1 && px > p2) || (weak && px < p1 && px < p2)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) return false;
                }
            }
        }
    return true;
}

/// Debug/CLI dump: "uniform <perm>" or "mask <t> <perm>", " mirrored" suffix.
inline std::string descriptor_to_string(const DrawingDescriptor& d) {
    std::ostringstream os;
    if (d.mask_bit.has_value())
        os << "mask " << *d.mask_bit;
    else
        os << "uniform";
    for (int e : d.base.order) os << ' ' << e;
    if (d.mirrored) os << " mirrored";
    return os.str();
}

} // namespace cpt

#endif // CPT_DRAWINGS_HPP
