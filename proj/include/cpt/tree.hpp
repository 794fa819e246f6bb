#ifndef CPT_TREE_HPP
#define CPT_TREE_HPP

#include <algorithm>
#include <concepts>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "cpt/errors.hpp"

namespace cpt {

/// Unrooted tree on nodes 1..n, adjacency lists sorted ascending.
struct Tree {
    int n = 0;
    std::vector<std::vector<int>> adj; // index 0 unused
};

/// Validates that the edges form a tree on 1..n and builds the adjacency
/// structure. Throws InvalidInputError on loops, duplicate edges, wrong edge
/// count, out-of-range endpoints, or a disconnected/cyclic input.
inline Tree load_tree(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw InvalidInputError("load_tree: node count must be >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
        throw InvalidInputError("load_tree: a tree on " + std::to_string(n) + " nodes needs exactly " +
                                std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));
    Tree t;
    t.n = n;
    t.adj.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw InvalidInputError("load_tree: edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
        if (u == v) throw InvalidInputError("load_tree: self-loop at node " + std::to_string(u));
        t.adj[static_cast<std::size_t>(u)].push_back(v);
        t.adj[static_cast<std::size_t>(v)].push_back(u);
    }
    // n-1 edges + connected => tree (also rules out duplicate edges).
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::queue<int> q;
    q.push(1);
    seen[1] = 1;
    int visited = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        ++visited;
        for (int v : t.adj[static_cast<std::size_t>(u)])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                q.push(v);
            }
    }
    if (visited != n) throw InvalidInputError("load_tree: edges do not form a connected tree");
    for (auto& a : t.adj) std::sort(a.begin(), a.end());
    return t;
}

/// Rooted view of a host tree. Children are kept in canonical order
/// (ascending node id); the canonical child index of children[v][i] is i+1.
struct RootedTree {
    int n = 0;
    int root = 0;
    std::vector<int> parent;                // parent[root] = 0
    std::vector<std::vector<int>> children; // ascending ids
    std::vector<int> level;                 // distance from root
    int radius = 0;                         // max level
    int maxdeg = 0;                         // max degree in the unrooted tree
    int max_children = 0;                   // max number of children of any node
    int leafcount = 0;                      // nodes of unrooted degree <= 1
};

inline RootedTree root_tree(const Tree& t, int root) {
    RootedTree r;
    r.n = t.n;
    r.root = root;
    r.parent.assign(static_cast<std::size_t>(t.n) + 1, 0);
    r.children.assign(static_cast<std::size_t>(t.n) + 1, {});
    r.level.assign(static_cast<std::size_t>(t.n) + 1, -1);
    std::queue<int> q;
    q.push(root);
    r.level[static_cast<std::size_t>(root)] = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        r.radius = std::max(r.radius, r.level[static_cast<std::size_t>(u)]);
        for (int v : t.adj[static_cast<std::size_t>(u)])
            if (r.level[static_cast<std::size_t>(v)] < 0) {
                r.level[static_cast<std::size_t>(v)] = r.level[static_cast<std::size_t>(u)] + 1;
                r.parent[static_cast<std::size_t>(v)] = u;
                r.children[static_cast<std::size_t>(u)].push_back(v);
                q.push(v);
            }
    }
    for (int v = 1; v <= t.n; ++v) {
        auto& ch = r.children[static_cast<std::size_t>(v)];
        std::sort(ch.begin(), ch.end()); // canonical child order: ascending node id
        const int deg = static_cast<int>(t.adj[static_cast<std::size_t>(v)].size());
        r.maxdeg = std::max(r.maxdeg, deg);
        r.max_children = std::max(r.max_children, static_cast<int>(ch.size()));
        if (deg <= 1) ++r.leafcount;
    }
    return r;
}

namespace detail {

inline std::vector<int> bfs_dist(const Tree& t, int src) {
    std::vector<int> dist(static_cast<std::size_t>(t.n) + 1, -1);
    std::queue<int> q;
    q.push(src);
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : t.adj[static_cast<std::size_t>(u)])
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

inline int farthest(const std::vector<int>& dist) {
    int best = 1;
    for (int v = 1; v < static_cast<int>(dist.size()); ++v)
        if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)]) best = v;
    return best; // smallest id among the farthest
}

} // namespace detail

/// A center vertex (minimum eccentricity); the smaller id when there are two.
inline int tree_center(const Tree& t) {
    if (t.n == 1) return 1;
    const auto d0 = detail::bfs_dist(t, 1);
    const int u = detail::farthest(d0);
    const auto du = detail::bfs_dist(t, u);
    const int w = detail::farthest(du);
    const int diameter = du[static_cast<std::size_t>(w)];
    // Walk the diameter path w -> u and pick its middle vertex (or the
    // smaller-id one of the two middles when the diameter is odd).
    const auto dw = detail::bfs_dist(t, w);
    std::vector<int> path;
    int cur = w;
    path.push_back(cur);
    while (cur != u) {
        for (int v : t.adj[static_cast<std::size_t>(cur)])
            if (du[static_cast<std::size_t>(v)] == du[static_cast<std::size_t>(cur)] - 1 &&
                dw[static_cast<std::size_t>(v)] == dw[static_cast<std::size_t>(cur)] + 1) {
                cur = v;
                break;
            }
        path.push_back(cur);
    }
    if (diameter % 2 == 0) return path[static_cast<std::size_t>(diameter / 2)];
    const int a = path[static_cast<std::size_t>(diameter / 2)];
    const int b = path[static_cast<std::size_t>(diameter / 2 + 1)];
    return std::min(a, b);
}

/// Roots the tree at a center vertex; the resulting radius is
/// ceil(diameter/2).
inline RootedTree root_at_center(const Tree& t) { return root_tree(t, tree_center(t)); }

/// Lowest common ancestor by level-aligned parent walking, O(radius).
inline int lca(const RootedTree& t, int u, int v) {
    while (t.level[static_cast<std::size_t>(u)] > t.level[static_cast<std::size_t>(v)]) u = t.parent[static_cast<std::size_t>(u)];
    while (t.level[static_cast<std::size_t>(v)] > t.level[static_cast<std::size_t>(u)]) v = t.parent[static_cast<std::size_t>(v)];
    while (u != v) {
        u = t.parent[static_cast<std::size_t>(u)];
        v = t.parent[static_cast<std::size_t>(v)];
    }
    return u;
}

/// Neither node is a descendant of the other.
inline bool is_incomparable(const RootedTree& t, int u, int v) {
    const int a = lca(t, u, v);
    return a != u && a != v;
}

inline int tree_distance(const RootedTree& t, int u, int v) {
    return t.level[static_cast<std::size_t>(u)] + t.level[static_cast<std::size_t>(v)] -
           2 * t.level[static_cast<std::size_t>(lca(t, u, v))];
}

/// A path of the host tree, identified by its endpoints. The top vertex is
/// the unique minimum-level vertex on the path; length counts vertices, so a
/// single-vertex path has length 1.
struct TreePath {
    int u = 0;
    int v = 0;
    int top = 0;
    int length = 0;

    bool operator==(const TreePath&) const = default;
};

inline TreePath make_path(const RootedTree& t, int u, int v) {
    TreePath p;
    p.u = u;
    p.v = v;
    p.top = lca(t, u, v);
    p.length = t.level[static_cast<std::size_t>(u)] + t.level[static_cast<std::size_t>(v)] -
               2 * t.level[static_cast<std::size_t>(p.top)] + 1;
    return p;
}

/// w lies on the path iff dist(u,w) + dist(w,v) = dist(u,v).
inline bool path_has_vertex(const RootedTree& t, const TreePath& p, int w) {
    return tree_distance(t, p.u, w) + tree_distance(t, w, p.v) == p.length - 1;
}

/// Every vertex of inner lies on outer; it suffices to test inner's endpoints.
inline bool path_contains(const RootedTree& t, const TreePath& outer, const TreePath& inner) {
    return path_has_vertex(t, outer, inner.u) && path_has_vertex(t, outer, inner.v);
}

/// A traversal of the tree: position[v] in 1..n and its inverse sequence.
struct Listing {
    std::vector<int> position; // position[v], index 0 unused
    std::vector<int> order;    // order[i] = node listed at rank i (0-based)
};

/// Depth-first preorder; children of each node are visited in the order
/// produced by child_order(v).
template <class ChildOrderFn>
    requires std::invocable<ChildOrderFn&, int>
Listing preorder(const RootedTree& t, ChildOrderFn&& child_order) {
    Listing l;
    l.position.assign(static_cast<std::size_t>(t.n) + 1, 0);
    l.order.reserve(static_cast<std::size_t>(t.n));
    std::vector<int> stack;
    stack.push_back(t.root);
    int next = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        l.position[static_cast<std::size_t>(v)] = next++;
        l.order.push_back(v);
        const std::vector<int> kids = child_order(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
    }
    return l;
}

/// Preorder of the canonical drawing (children ascending by id).
inline Listing preorder(const RootedTree& t) {
    return preorder(t, [&](int v) { return t.children[static_cast<std::size_t>(v)]; });
}

/// Level-wise traversal: deepest level first, root last; within a level,
/// left to right in the canonical drawing (= ascending canonical preorder
/// position).
inline Listing levelwise(const RootedTree& t) {
    const Listing pre = preorder(t);
    std::vector<int> nodes(static_cast<std::size_t>(t.n));
    for (int v = 1; v <= t.n; ++v) nodes[static_cast<std::size_t>(v - 1)] = v;
    std::sort(nodes.begin(), nodes.end(), [&](int a, int b) {
        if (t.level[static_cast<std::size_t>(a)] != t.level[static_cast<std::size_t>(b)])
            return t.level[static_cast<std::size_t>(a)] > t.level[static_cast<std::size_t>(b)];
        return pre.position[static_cast<std::size_t>(a)] < pre.position[static_cast<std::size_t>(b)];
    });
    Listing l;
    l.position.assign(static_cast<std::size_t>(t.n) + 1, 0);
    l.order = nodes;
    for (int i = 0; i < t.n; ++i) l.position[static_cast<std::size_t>(nodes[static_cast<std::size_t>(i)])] = i + 1;
    return l;
}

} // namespace cpt

#endif // CPT_TREE_HPP
