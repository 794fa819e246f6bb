#include <doctest.h>

#include <algorithm>
#include <set>

#include "cpt/instances.hpp"
#include "cpt/poset.hpp"
#include "cpt/realizer.hpp"

using namespace cpt;

namespace {

std::set<int> vertex_set(const RootedTree& t, const TreePath& p) {
    std::set<int> s;
    for (int w = 1; w <= t.n; ++w)
        if (path_has_vertex(t, p, w)) s.insert(w);
    return s;
}

LinearExtension ext(std::vector<int> order) {
    LinearExtension e;
    e.order = std::move(order);
    return e;
}

} // namespace

TEST_SUITE_BEGIN("realizer");

TEST_CASE("Poset validates its relation") {
    CHECK_NOTHROW(Poset({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}));
    CHECK_THROWS_AS(Poset({1, 2}, {{1, 1}}), std::invalid_argument);          // reflexive
    CHECK_THROWS_AS(Poset({1, 2}, {{1, 2}, {2, 1}}), std::invalid_argument);  // antisymmetry
    CHECK_THROWS_AS(Poset({1, 2, 3}, {{1, 2}, {2, 3}}), std::invalid_argument); // not transitive
    CHECK_THROWS_AS(Poset({1, 1}, {}), std::invalid_argument);                // duplicate id
    CHECK_THROWS_AS(Poset({1, 2}, {{1, 9}}), std::invalid_argument);          // unknown id

    const Poset p({1, 2, 3}, {{1, 3}, {2, 3}});
    CHECK(p.less(1, 3));
    CHECK_FALSE(p.less(3, 1));
    CHECK(p.incomparable(1, 2));
}

TEST_CASE("poset_from_paths") {
    SUBCASE("two disjoint paths are incomparable") {
        CptInstance inst;
        inst.tree = root_at_center(load_tree(4, {{1, 2}, {2, 3}, {3, 4}}));
        inst.elements = {{1, make_path(inst.tree, 1, 1)}, {2, make_path(inst.tree, 3, 4)}};
        const Poset p = poset_from_paths(inst);
        CHECK(p.incomparable(1, 2));
    }

    SUBCASE("single vertex inside a longer path is strictly below it") {
        CptInstance inst;
        inst.tree = root_at_center(load_tree(3, {{1, 2}, {2, 3}}));
        inst.elements = {{7, make_path(inst.tree, 2, 2)}, {9, make_path(inst.tree, 1, 3)}};
        const Poset p = poset_from_paths(inst);
        CHECK(p.less(7, 9));
        CHECK_FALSE(p.less(9, 7));
    }

    SUBCASE("duplicate paths are incomparable, not equal") {
        CptInstance inst;
        inst.tree = root_at_center(load_tree(3, {{1, 2}, {2, 3}}));
        inst.elements = {{1, make_path(inst.tree, 1, 3)}, {2, make_path(inst.tree, 3, 1)}};
        const Poset p = poset_from_paths(inst);
        CHECK(p.incomparable(1, 2));
    }

    SUBCASE("relation equals brute-force vertex-set comparison") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const CptInstance inst = gen_random_instance(12 + static_cast<int>(seed), 20, 7000 + seed);
            const Poset p = poset_from_paths(inst);
            for (const CptElement& x : inst.elements)
                for (const CptElement& y : inst.elements) {
                    const auto sx = vertex_set(inst.tree, x.path);
                    const auto sy = vertex_set(inst.tree, y.path);
                    const bool proper = sx != sy && std::includes(sy.begin(), sy.end(), sx.begin(), sx.end());
                    CHECK(p.less(x.id, y.id) == proper);
                }
        }
    }
}

TEST_CASE("extension_from_listing") {
    SUBCASE("one element") {
        CptInstance inst;
        inst.tree = root_at_center(load_tree(1, {}));
        inst.elements = {{5, make_path(inst.tree, 1, 1)}};
        const LinearExtension e = extension_from_listing(inst, preorder(inst.tree));
        CHECK(e.order == std::vector<int>{5});
    }

    SUBCASE("shared last vertex: shorter path first") {
        CptInstance inst;
        inst.tree = root_at_center(load_tree(3, {{1, 2}, {2, 3}}));
        REQUIRE(inst.tree.root == 2);
        // preorder is 2,1,3; both paths end last at vertex 3
        inst.elements = {{1, make_path(inst.tree, 2, 3)}, {2, make_path(inst.tree, 3, 3)}};
        const LinearExtension e = extension_from_listing(inst, preorder(inst.tree));
        CHECK(e.order == std::vector<int>{2, 1});
    }

    SUBCASE("full tie falls back to id order, direction per TieOrder") {
        CptInstance inst;
        inst.tree = root_at_center(load_tree(3, {{1, 2}, {2, 3}}));
        inst.elements = {{4, make_path(inst.tree, 1, 3)}, {2, make_path(inst.tree, 3, 1)}};
        const Listing l = preorder(inst.tree);
        CHECK(extension_from_listing(inst, l, TieOrder::ascending_id).order == std::vector<int>{2, 4});
        CHECK(extension_from_listing(inst, l, TieOrder::descending_id).order == std::vector<int>{4, 2});
    }

    SUBCASE("every produced order is a linear extension of the path poset") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const CptInstance inst = gen_random_instance(15, 25, 8000 + seed);
            const Poset poset = poset_from_paths(inst);
            const PathIndex idx = build_path_index(inst);
            const DrawingFamily fam = build_drawing_family(inst.tree);
            for (const DrawingDescriptor& d : fam.descriptors)
                CHECK(is_linear_extension(poset, extension_from_listing(inst, idx, preorder(inst.tree, d))));
            CHECK(is_linear_extension(
                poset, extension_from_listing(inst, idx, levelwise(inst.tree), TieOrder::descending_id)));
        }
    }
}

TEST_CASE("verify_realizer") {
    const Poset antichain({1, 2}, {});
    Realizer both;
    both.extensions = {ext({1, 2}), ext({2, 1})};
    CHECK(verify_realizer(antichain, both));

    Realizer one;
    one.extensions = {ext({1, 2})};
    CHECK_FALSE(verify_realizer(antichain, one));

    const Poset chain({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
    Realizer chain_ext;
    chain_ext.extensions = {ext({1, 2, 3})};
    CHECK(verify_realizer(chain, chain_ext));

    Realizer wrong;
    wrong.extensions = {ext({2, 1, 3})};
    CHECK_FALSE(verify_realizer(chain, wrong)); // not a linear extension

    Realizer mismatch;
    mismatch.extensions = {ext({1, 2})};
    CHECK_THROWS_AS(verify_realizer(chain, mismatch), std::invalid_argument);

    Realizer empty;
    CHECK_FALSE(verify_realizer(chain, empty));
}

TEST_CASE("build_realizer") {
    SUBCASE("single element") {
        CptInstance inst;
        inst.tree = root_at_center(load_tree(2, {{1, 2}}));
        inst.elements = {{1, make_path(inst.tree, 1, 2)}};
        const Realizer r = build_realizer(inst);
        CHECK(r.size() <= realizer_size_bound(inst.tree));
        for (const LinearExtension& e : r.extensions) CHECK(e.order == std::vector<int>{1});
        CHECK(verify_realizer(poset_from_paths(inst), r));
    }

    SUBCASE("p12 on the complete binary tree of radius 2 fits in 5") {
        const CptInstance inst = gen_p12(2, 2);
        const Realizer r = build_realizer(inst);
        CHECK(r.size() <= 5);
        CHECK(verify_realizer(poset_from_paths(inst), r));
    }

    SUBCASE("random instances verify within the bound") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            const CptInstance inst = gen_random_instance(4 + static_cast<int>(seed * 3), 30, 9000 + seed);
            const Realizer r = build_realizer(inst);
            CHECK(r.size() <= realizer_size_bound(inst.tree));
            CHECK(verify_realizer(poset_from_paths(inst), r));
        }
    }

    SUBCASE("duplicate paths appear in both relative orders") {
        CptInstance inst = gen_random_instance(10, 6, 4242);
        inst.elements[3].path = inst.elements[0].path; // force a duplicate
        const Realizer r = build_realizer(inst);
        CHECK(verify_realizer(poset_from_paths(inst), r));
        const int a = inst.elements[0].id;
        const int b = inst.elements[3].id;
        bool ab = false;
        bool ba = false;
        for (const LinearExtension& e : r.extensions) {
            const auto pa = std::find(e.order.begin(), e.order.end(), a);
            const auto pb = std::find(e.order.begin(), e.order.end(), b);
            (pa < pb ? ab : ba) = true;
        }
        CHECK(ab);
        CHECK(ba);
    }
}

TEST_CASE("dimension_bound") {
    const RootedTree star = root_at_center(load_tree(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}));
    CHECK(dimension_bound(star) == 5); // min(5 leaves, 2*2+0+3)

    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < 9; ++v) edges.emplace_back(v, v + 1);
    const RootedTree path9 = root_at_center(load_tree(9, edges));
    CHECK(dimension_bound(path9) == 2); // two leaves

    const RootedTree binary4 = complete_tree(2, 4);
    CHECK(dimension_bound(binary4) == 7); // min(16, 0+2*2+3)
    CHECK(realizer_size_bound(binary4) == 7);
}

TEST_SUITE_END();
