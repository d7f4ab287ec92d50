#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fcc/errors.hpp"
#include "fcc/numeric.hpp"

namespace fcc {

/// Rooted tree in which every node carries exactly d ordered slots, each
/// either empty or holding a child. Nodes are stored in preorder: node 0 is
/// the root, and slot j of node v is children()[v * d + j] (-1 when empty).
/// The tree with zero nodes is allowed and stands for the index-0 object.
class DecompositionTree {
public:
    /// Validates d >= 2 and that `children` encodes a preorder forest rooted
    /// at node 0.
    DecompositionTree(int d, std::vector<std::int32_t> children);

    static DecompositionTree empty(int d) { return DecompositionTree(d, {}); }

    int d() const { return d_; }
    int node_count() const { return static_cast<int>(children_.size()) / d_; }

    /// Child in slot `slot` (0-based) of `node`, or -1.
    std::int32_t child(int node, int slot) const {
        return children_[static_cast<std::size_t>(node) * d_ + slot];
    }

    const std::vector<std::int32_t>& children() const { return children_; }

    bool operator==(const DecompositionTree& other) const = default;

private:
    int d_;
    std::vector<std::int32_t> children_;
};

/// Text form: empty slot "E", node "(" followed by its d slot encodings and
/// ")". The zero-node tree encodes as "E".
std::string tree_encode(const DecompositionTree& tree);

/// Inverse of tree_encode. Throws ParseError (with byte position) on
/// malformed text and InvalidDimension for d < 2.
DecompositionTree tree_decode(const std::string& text, int d);

/// All trees with n nodes in canonical order: lexicographic on the text
/// encodings, which is slot-major with nonempty slots before empty ones.
/// Throws ResourceCapExceeded when fuss_catalan(d, n) exceeds `cap`.
std::vector<DecompositionTree> enumerate_trees(int d, int n, std::uint64_t cap);

/// Streaming variant of enumerate_trees, same canonical order.
void for_each_tree(int d, int n, std::uint64_t cap,
                   const std::function<void(const DecompositionTree&)>& fn);

} // namespace fcc
