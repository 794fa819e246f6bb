#ifndef CPT_INSTANCES_HPP
#define CPT_INSTANCES_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpt/errors.hpp"
#include "cpt/realizer.hpp"
#include "cpt/tree.hpp"

namespace cpt {

struct GeneratorSpec {
    enum class Kind { p12, random_model };
    Kind kind = Kind::p12;
    int arity = 0;  // p12: branching of the complete tree
    int radius = 0; // p12
    int nodes = 0;  // random
    int paths = 0;  // random
    std::uint64_t seed = 0;
};

/// Complete arity-ary tree of the given radius, nodes numbered level by
/// level with the root at 1 (which is also its center). Every internal node
/// has exactly arity children; the leaves are the last arity^radius ids.
inline RootedTree complete_tree(int arity, int radius) {
    if (arity < 2 || radius < 1) throw std::invalid_argument("complete_tree: need arity >= 2 and radius >= 1");
    std::int64_t leaves = 1;
    for (int i = 0; i < radius; ++i) {
        leaves *= arity;
        if (leaves > 4096)
            throw GuardError("complete_tree: " + std::to_string(arity) + "^" + std::to_string(radius) +
                             " leaves exceed the guard of 4096");
    }
    const std::int64_t node_count = (leaves * arity - 1) / (arity - 1);
    const int internal = static_cast<int>(node_count - leaves);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(node_count - 1));
    for (int v = 1; v <= internal; ++v)
        for (int c = 1; c <= arity; ++c) edges.emplace_back(v, arity * (v - 1) + 1 + c);
    return root_at_center(load_tree(static_cast<int>(node_count), edges));
}

/// Inclusion order on the 1- and 2-element subsets of [arity^radius], modeled
/// on a complete arity-ary host tree of the given radius: leaf k carries the
/// singleton {k}, the leaf-to-leaf path between leaves i and j carries {i,j}.
/// Leaves are numbered 1..arity^radius in canonical preorder; singleton
/// elements get ids 1..m, pair elements continue in lexicographic (i,j) order.
inline CptInstance gen_p12(int arity, int radius) {
    if (arity < 2 || radius < 1) throw std::invalid_argument("gen_p12: need arity >= 2 and radius >= 1");
    CptInstance inst;
    inst.tree = complete_tree(arity, radius);

    std::int64_t leaves = 1;
    for (int i = 0; i < radius; ++i) leaves *= arity;
    const int m = static_cast<int>(leaves);
    const int first_leaf = inst.tree.n - m + 1;
    auto leaf_node = [&](int label) { return first_leaf + label - 1; };
    inst.elements.reserve(static_cast<std::size_t>(m) + static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int i = 1; i <= m; ++i) inst.elements.push_back({i, make_path(inst.tree, leaf_node(i), leaf_node(i))});
    int id = m;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            inst.elements.push_back({++id, make_path(inst.tree, leaf_node(i), leaf_node(j))});
    return inst;
}

/// Random host tree by uniform parent attachment (node v attaches to a
/// uniform node in 1..v-1), then p paths with both endpoints drawn uniformly.
/// Fully determined by the seed; duplicate paths are allowed.
inline CptInstance gen_random_instance(int n, int p, std::uint64_t seed) {
    if (n < 1 || p < 1) throw std::invalid_argument("gen_random_instance: need n >= 1 and p >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&](int m) { return static_cast<int>(rng() % static_cast<std::uint64_t>(m)) + 1; };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    for (int v = 2; v <= n; ++v) edges.emplace_back(draw(v - 1), v);
    CptInstance inst;
    inst.tree = root_at_center(load_tree(n, edges));
    inst.elements.reserve(static_cast<std::size_t>(p));
    for (int e = 1; e <= p; ++e) {
        const int u = draw(n);
        const int v = draw(n);
        inst.elements.push_back({e, make_path(inst.tree, u, v)});
    }
    return inst;
}

inline CptInstance generate(const GeneratorSpec& spec) {
    if (spec.kind == GeneratorSpec::Kind::p12) return gen_p12(spec.arity, spec.radius);
    return gen_random_instance(spec.nodes, spec.paths, spec.seed);
}

} // namespace cpt

#endif // CPT_INSTANCES_HPP
