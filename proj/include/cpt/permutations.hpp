#ifndef CPT_PERMUTATIONS_HPP
#define CPT_PERMUTATIONS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cpt/errors.hpp"

namespace cpt {

/// A permutation of [n], stored rank-to-element: order[i] is the element at
/// rank i (rank 0 = first/lowest). Elements are the integers 1..n.
struct Permutation {
    std::vector<int> order;

    static Permutation identity(int n) {
        Permutation p;
        p.order.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.order[static_cast<std::size_t>(i)] = i + 1;
        return p;
    }

    int size() const { return static_cast<int>(order.size()); }

    Permutation reversed() const {
        Permutation p = *this;
        std::reverse(p.order.begin(), p.order.end());
        return p;
    }

    /// Element-to-rank inverse; pos[e] is the 0-based rank of element e.
    /// pos[0] is unused padding.
    std::vector<int> positions() const {
        std::vector<int> pos(order.size() + 1, -1);
        for (int i = 0; i < size(); ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        return pos;
    }

    bool valid_on(int n) const {
        if (size() != n) return false;
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int e : order) {
            if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]) return false;
            seen[static_cast<std::size_t>(e)] = 1;
        }
        return true;
    }

    bool operator==(const Permutation&) const = default;
};

enum class FamilyKind { unverified, weakly_3_suitable, three_suitable };

/// A family of permutations of [n] together with the suitability it claims.
/// The claim is established by the builders and checked by the is_* verifiers.
struct PermutationFamily {
    int n = 0;
    std::vector<Permutation> members;
    FamilyKind kind = FamilyKind::unverified;
};

/// ceil(log2(x)) for x >= 1.
inline int ceil_log2(std::int64_t x) {
    int k = 0;
    std::int64_t v = 1;
    while (v < x) {
        v <<= 1;
        ++k;
    }
    return k;
}

/// Smallest k >= 0 with n <= 2^(2^k); 0 for n <= 2.
inline int ceil_log2_log2(std::int64_t n) {
    int k = 0;
    std::int64_t cap = 2;
    while (cap < n) {
        cap = cap * cap;
        ++k;
    }
    return k;
}

namespace detail {

// One doubling step: blocks of size B are ordered by L and each block's
// interior is ordered by L as well (or reversed, for the extra member).
// Elements above n are padding and get dropped; blocks that are pure padding
// are skipped outright, so a step costs O(n + B) per member.
inline Permutation blow_up(const Permutation& L, std::int64_t block, int n, bool reverse_within) {
    Permutation r;
    r.order.reserve(static_cast<std::size_t>(n));
    const int B = static_cast<int>(block);
    for (int a = 0; a < B; ++a) {
        const std::int64_t base = static_cast<std::int64_t>(L.order[static_cast<std::size_t>(a)] - 1) * block;
        if (base >= n) continue;
        for (int b = 0; b < B; ++b) {
            const int member = L.order[static_cast<std::size_t>(reverse_within ? B - 1 - b : b)];
            const std::int64_t e = base + member;
            if (e <= n) r.order.push_back(static_cast<int>(e));
        }
    }
    return r;
}

} // namespace detail

/// Builds a weakly 3-suitable family of permutations of [n] of cardinality
/// ceil(log2 log2 n) + 1 (a single permutation for n <= 2).
///
/// Recursive doubling: pad [n] to the next 2^(2^k), split into 2^(2^(k-1))
/// blocks of that same size, order blocks and block interiors by each member
/// of the recursively built family, and add one extra member that reverses
/// every block interior of the first. Padding elements are deleted at each
/// level, preserving relative order. The subfamily is built once and shared
/// by all blocks.
inline PermutationFamily build_weakly_3suitable(int n) {
    if (n < 1) throw std::invalid_argument("build_weakly_3suitable: n must be >= 1");
    PermutationFamily fam;
    fam.n = n;
    fam.kind = FamilyKind::weakly_3_suitable;
    if (n <= 2) {
        fam.members.push_back(Permutation::identity(n));
        return fam;
    }
    const int k = ceil_log2_log2(n);
    const std::int64_t block = std::int64_t{1} << (std::int64_t{1} << (k - 1));
    const PermutationFamily sub = build_weakly_3suitable(static_cast<int>(block));
    fam.members.reserve(sub.members.size() + 1);
    for (const Permutation& L : sub.members) fam.members.push_back(detail::blow_up(L, block, n, false));
    fam.members.push_back(detail::blow_up(sub.members.front(), block, n, true));
    return fam;
}

/// Appends the reversal of every member. Turns a weakly 3-suitable family
/// into a 3-suitable one; the size doubles.
inline PermutationFamily close_under_reversal(const PermutationFamily& f) {
    PermutationFamily out;
    out.n = f.n;
    out.members.reserve(f.members.size() * 2);
    out.members = f.members;
    for (const Permutation& p : f.members) out.members.push_back(p.reversed());
    out.kind = FamilyKind::three_suitable;
    return out;
}

/// 3-suitable family of [n] of cardinality 2*ceil(log2 log2 n) + 2.
inline PermutationFamily build_3suitable(int n) {
    return close_under_reversal(build_weakly_3suitable(n));
}

namespace detail {

// Brute force over all 3-subsets and distinguished elements, O(|f| n^3) with
// precomputed position arrays. strong: the distinguished element must succeed
// both others in some member; weak: succeed both or precede both.
inline bool check_suitability(const PermutationFamily& f, bool weak) {
    const int n = f.n;
    for (const Permutation& p : f.members)
        if (!p.valid_on(n)) return false;
    if (n < 3) return true; // no 3-subsets

    std::vector<std::vector<int>> pos;
    pos.reserve(f.members.size());
    for (const Permutation& p : f.members) pos.push_back(p.positions());

    int triple[3];
    for (int a1 = 1; a1 <= n; ++a1)
        for (int a2 = a1 + 1; a2 <= n; ++a2)
            for (int a3 = a2 + 1; a3 <= n; ++a3) {
                triple[0] = a1;
                triple[1] = a2;
                triple[2] = a3;
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
    return true;
}

} // namespace detail

/// True iff for every 3-subset and distinguished element, some member lists
/// the distinguished element before both others or after both others.
inline bool is_weakly_3suitable(const PermutationFamily& f) {
    return detail::check_suitability(f, /*weak=*/true);
}

/// True iff for every 3-subset and distinguished element, some member lists
/// the distinguished element after both others.
inline bool is_3suitable(const PermutationFamily& f) {
    return detail::check_suitability(f, /*weak=*/false);
}

} // namespace cpt

#endif // CPT_PERMUTATIONS_HPP
