#include <set>
#include <string>
#include <vector>

#include "doctest.h"

#include "fcc/numeric.hpp"
#include "fcc/tree.hpp"

namespace {
constexpr std::uint64_t kCap = 1'000'000;
}

TEST_CASE("empty tree") {
    const fcc::DecompositionTree tree = fcc::DecompositionTree::empty(3);
    CHECK(tree.node_count() == 0);
    CHECK(fcc::tree_encode(tree) == "E");
    CHECK(fcc::tree_decode("E", 3) == tree);
}

TEST_CASE("encode and decode round trip") {
    CHECK(fcc::tree_encode(fcc::tree_decode("((EE)E)", 2)) == "((EE)E)");
    CHECK(fcc::tree_encode(fcc::tree_decode("(E(EEE)E)", 3)) == "(E(EEE)E)");

    for (int d = 2; d <= 4; ++d) {
        const int max_n = d == 2 ? 6 : (d == 3 ? 4 : 3);
        for (int n = 0; n <= max_n; ++n) {
            fcc::for_each_tree(d, n, kCap, [&](const fcc::DecompositionTree& tree) {
                CHECK(fcc::tree_decode(fcc::tree_encode(tree), d) == tree);
            });
        }
    }
}

TEST_CASE("decode rejects malformed text") {
    CHECK_THROWS_AS(fcc::tree_decode("", 2), fcc::ParseError);
    CHECK_THROWS_AS(fcc::tree_decode("x", 2), fcc::ParseError);
    CHECK_THROWS_AS(fcc::tree_decode("(EE", 2), fcc::ParseError);
    CHECK_THROWS_AS(fcc::tree_decode("(EEE)", 2), fcc::ParseError);
    CHECK_THROWS_AS(fcc::tree_decode("(EE)E", 2), fcc::ParseError);
    CHECK_THROWS_AS(fcc::tree_decode("EE", 2), fcc::ParseError);
    CHECK_THROWS_AS(fcc::tree_decode("E", 1), fcc::InvalidDimension);

    try {
        fcc::tree_decode("(E!)", 2);
        CHECK(false);
    } catch (const fcc::ParseError& e) {
        CHECK(e.position == 2);
    }
    try {
        fcc::tree_decode("(EE)(", 2);
        CHECK(false);
    } catch (const fcc::ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("node ids follow preorder") {
    // ((E(EE))(EE)): root 0, slot-0 child 1, grandchild 2, slot-1 child 3.
    const fcc::DecompositionTree tree = fcc::tree_decode("((E(EE))(EE))", 2);
    CHECK(tree.node_count() == 4);
    CHECK(tree.child(0, 0) == 1);
    CHECK(tree.child(0, 1) == 3);
    CHECK(tree.child(1, 0) == -1);
    CHECK(tree.child(1, 1) == 2);
    CHECK(tree.child(2, 0) == -1);
    CHECK(tree.child(3, 1) == -1);
}

TEST_CASE("canonical enumeration order") {
    const std::vector<fcc::DecompositionTree> trees = fcc::enumerate_trees(2, 3, kCap);
    const std::vector<std::string> expected = {
        "(((EE)E)E)", "((E(EE))E)", "((EE)(EE))", "(E((EE)E))", "(E(E(EE)))",
    };
    REQUIRE(trees.size() == expected.size());
    for (std::size_t i = 0; i < trees.size(); ++i)
        CHECK(fcc::tree_encode(trees[i]) == expected[i]);
}

TEST_CASE("enumeration counts and distinctness") {
    for (int d = 2; d <= 4; ++d) {
        const int max_n = d == 2 ? 8 : (d == 3 ? 5 : 3);
        for (int n = 0; n <= max_n; ++n) {
            std::set<std::string> seen;
            std::string previous;
            fcc::for_each_tree(d, n, kCap, [&](const fcc::DecompositionTree& tree) {
                const std::string text = fcc::tree_encode(tree);
                CHECK(previous < text);
                previous = text;
                seen.insert(text);
            });
            CHECK(fcc::BigInt(seen.size()) == fcc::fuss_catalan(d, n));
        }
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(fcc::enumerate_trees(2, 12, 100), fcc::ResourceCapExceeded);
    CHECK_NOTHROW(fcc::enumerate_trees(2, 5, 42));
}
