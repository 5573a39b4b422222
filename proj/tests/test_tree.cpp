#include <doctest.h>

#include <random>

#include "k3maps/tree.hpp"

using namespace k3maps;

namespace {

// The worked six-node forest: two roots, one child each, and two further
// blow-ups on the first child.
ExceptionalTree paper_example(bool labeled = false) {
    std::vector<TreeNode> nodes;
    auto add = [&](Int id, std::optional<Int> parent, Int gamma) {
        TreeNode n;
        n.id = id;
        n.parent = parent;
        if (labeled) n.gamma = gamma;
        nodes.push_back(n);
    };
    add(1, std::nullopt, 0);
    add(2, std::nullopt, 0);
    add(3, 1, 0);
    add(4, 2, 1);
    add(5, 3, 1);
    add(6, 3, 1);
    return ExceptionalTree(std::move(nodes));
}

ExceptionalTree random_forest(Int p, std::mt19937& rng, bool labeled = false) {
    std::vector<TreeNode> nodes;
    std::uniform_int_distribution<int> coin(0, 2);
    std::uniform_int_distribution<Int> gam(0, 3);
    for (Int id = 1; id <= p; ++id) {
        TreeNode n;
        n.id = id;
        if (id > 1 && coin(rng) != 0) {
            std::uniform_int_distribution<Int> par(1, id - 1);
            n.parent = par(rng);
        }
        if (labeled) n.gamma = gam(rng);
        nodes.push_back(n);
    }
    return ExceptionalTree(std::move(nodes));
}

} // namespace

TEST_CASE("depths of the worked example") {
    ExceptionalTree t = paper_example();
    CHECK(t.node_depth(1) == 1);
    CHECK(t.node_depth(2) == 1);
    CHECK(t.node_depth(3) == 2);
    CHECK(t.node_depth(4) == 2);
    CHECK(t.node_depth(5) == 3);
    CHECK(t.node_depth(6) == 3);
    CHECK(t.tree_depth() == 3);
    CHECK(t.descendants(3) == std::vector<Int>{3, 5, 6});
    CHECK_THROWS_AS(t.node_depth(7), std::invalid_argument);
}

TEST_CASE("total transform expansion") {
    ExceptionalTree t = paper_example();
    BlowupContext ctx(PolarizedGenus(2), 6);
    // E3 = F3 + F5 + F6
    DivisorClass e3 = t.total_transform(ctx, 3);
    DivisorClass sum = t.proper_transform(ctx, 3) + t.proper_transform(ctx, 5) +
                       t.proper_transform(ctx, 6);
    CHECK(e3 == sum);

    // isolated root: E = F
    std::vector<TreeNode> one{{1, std::nullopt, std::nullopt}};
    ExceptionalTree iso{std::move(one)};
    BlowupContext c1(PolarizedGenus(2), 1);
    CHECK(iso.total_transform(c1, 1) == iso.proper_transform(c1, 1));
}

TEST_CASE("proper transform intersection numbers") {
    ExceptionalTree t = paper_example();
    BlowupContext ctx(PolarizedGenus(3), 6);
    for (Int i = 1; i <= 6; ++i) {
        for (Int j = 1; j <= 6; ++j) {
            Int got = intersect(t.proper_transform(ctx, i), t.proper_transform(ctx, j));
            if (i == j) {
                CHECK(got == -1 - static_cast<Int>(t.children(i).size()));
            } else {
                bool adjacent = false;
                for (Int c : t.children(i)) adjacent |= (c == j);
                for (Int c : t.children(j)) adjacent |= (c == i);
                CHECK(got == (adjacent ? 1 : 0));
            }
        }
    }
}

TEST_CASE("beta from gamma") {
    std::vector<TreeNode> chain{{1, std::nullopt, 0}, {2, 1, 1}};
    CHECK(ExceptionalTree(std::move(chain)).beta_from_gamma() == std::vector<Int>{1, 1});

    std::vector<TreeNode> one{{1, std::nullopt, 3}};
    CHECK(ExceptionalTree(std::move(one)).beta_from_gamma() == std::vector<Int>{3});

    ExceptionalTree t = paper_example(true);
    std::vector<Int> betas = t.beta_from_gamma();
    CHECK(betas == std::vector<Int>{2, 1, 2, 1, 1, 1});

    CHECK_THROWS_AS(paper_example(false).beta_from_gamma(), std::invalid_argument);
}

TEST_CASE("minimality") {
    std::vector<TreeNode> contracted{{1, std::nullopt, 0}};
    CHECK_FALSE(ExceptionalTree(std::move(contracted)).is_minimal());
    std::vector<TreeNode> kept{{1, std::nullopt, 1}};
    CHECK(ExceptionalTree(std::move(kept)).is_minimal());
    CHECK(paper_example(true).is_minimal()); // leaves 4, 5, 6 all have gamma 1
}

TEST_CASE("depth predicate") {
    std::vector<TreeNode> chain2{{1, std::nullopt, {}}, {2, 1, {}}};
    ExceptionalTree c2{std::move(chain2)};
    CHECK(c2.check_depth(4));

    std::vector<TreeNode> mixed{{1, std::nullopt, {}}, {2, 1, {}}, {3, std::nullopt, {}}};
    CHECK_FALSE(ExceptionalTree(std::move(mixed)).check_depth(4)); // 2 + 1 > 2

    std::vector<TreeNode> any{{1, std::nullopt, {}}};
    CHECK_FALSE(ExceptionalTree(std::move(any)).check_depth(2));
}

TEST_CASE("leaf pair predicate") {
    std::vector<TreeNode> roots{{1, std::nullopt, {}}, {2, std::nullopt, {}}, {3, std::nullopt, {}}};
    CHECK(ExceptionalTree(std::move(roots)).check_leaf_pairs(4)); // 1+1+2 = 4

    std::vector<TreeNode> mixed{{1, std::nullopt, {}}, {2, 1, {}}, {3, std::nullopt, {}}};
    CHECK_FALSE(ExceptionalTree(std::move(mixed)).check_leaf_pairs(4)); // 2+1+2 = 5

    std::vector<TreeNode> chain{{1, std::nullopt, {}}, {2, 1, {}}, {3, 2, {}}};
    CHECK(ExceptionalTree(std::move(chain)).check_leaf_pairs(2)); // single leaf, vacuous
}

TEST_CASE("width predicate") {
    auto roots = [](Int p) {
        std::vector<TreeNode> ns;
        for (Int i = 1; i <= p; ++i) ns.push_back({i, std::nullopt, {}});
        return ExceptionalTree(std::move(ns));
    };
    CHECK(roots(24).check_width(4));
    CHECK_FALSE(roots(25).check_width(4));
    std::vector<TreeNode> deep{{1, std::nullopt, {}}, {2, 1, {}}};
    CHECK(ExceptionalTree(std::move(deep)).check_width(9)); // depth != 1
}

TEST_CASE("shape classification deg 4") {
    std::vector<ShapeDescriptor> shapes = classify_shapes(4, 25);
    REQUIRE(shapes.size() == 25);
    // depth-1 forests with 1..24 roots plus the single 2-chain
    int chains = 0, depth1 = 0;
    for (const ShapeDescriptor& s : shapes) {
        if (s.code == "(())") {
            ++chains;
            CHECK(s.nodes == 2);
        } else {
            CHECK(s.depth == 1);
            CHECK(s.nodes <= 24);
            ++depth1;
        }
    }
    CHECK(chains == 1);
    CHECK(depth1 == 24);
}

TEST_CASE("shape classification small cases") {
    CHECK(classify_shapes(2, 10).empty());
    std::vector<ShapeDescriptor> s93 = classify_shapes(9, 3);
    // every forest on <= 3 nodes passes for deg 9
    CHECK(s93.size() == 7);
    bool chain3 = false, cherry = false;
    for (const ShapeDescriptor& s : s93) {
        if (s.code == "((()))") chain3 = true;
        if (s.code == "(()())") cherry = true;
    }
    CHECK(chain3);
    CHECK(cherry);
}

TEST_CASE("canonical expansion identity on random forests") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<Int> pd(1, 12);
    for (int it = 0; it < 300; ++it) {
        Int p = pd(rng);
        ExceptionalTree t = random_forest(p, rng);
        BlowupContext ctx(PolarizedGenus(2), p);
        // sum of E_i equals sum of m_i * Fhat_i
        DivisorClass lhs = canonical_class(ctx);
        DivisorClass rhs(ctx, 0, std::vector<Int>(p, 0));
        for (const TreeNode& n : t.nodes())
            rhs = rhs + t.proper_transform(ctx, n.id).scaled(t.node_depth(n.id));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("beta equals descendant gamma sums") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<Int> pd(1, 10);
    for (int it = 0; it < 200; ++it) {
        ExceptionalTree t = random_forest(pd(rng), rng, true);
        std::vector<Int> betas = t.beta_from_gamma();
        Int i = 0;
        for (const TreeNode& n : t.nodes()) {
            Int expect = 0;
            for (Int id : t.descendants(n.id))
                for (const TreeNode& m : t.nodes())
                    if (m.id == id) expect += *m.gamma;
            CHECK(betas[i++] == expect);
        }
    }
}

TEST_CASE("invalid trees are rejected") {
    std::vector<TreeNode> cyclic{{2, 3, {}}, {3, 2, {}}};
    CHECK_THROWS_AS(ExceptionalTree(std::move(cyclic)), std::invalid_argument);
    std::vector<TreeNode> dup{{1, std::nullopt, {}}, {1, std::nullopt, {}}};
    CHECK_THROWS_AS(ExceptionalTree(std::move(dup)), std::invalid_argument);
    std::vector<TreeNode> orphan{{2, 1, {}}};
    CHECK_THROWS_AS(ExceptionalTree(std::move(orphan)), std::invalid_argument);
    std::vector<TreeNode> neg{{1, std::nullopt, -1}};
    CHECK_THROWS_AS(ExceptionalTree(std::move(neg)), std::invalid_argument);
}

TEST_CASE("shape code round trip") {
    ExceptionalTree t = paper_example();
    ExceptionalTree back = ExceptionalTree::from_shape_code(t.shape_code());
    CHECK(back.shape_code() == t.shape_code());
    CHECK(back.size() == t.size());
    CHECK(back.tree_depth() == t.tree_depth());
}
