#include "fcc/tree.hpp"

#include <algorithm>
#include <cstddef>

namespace fcc {

namespace {

// Walks the children array in preorder from node 0; returns false if the
// visit order is not exactly 0, 1, ..., n-1 with every entry in range.
bool is_preorder(int d, const std::vector<std::int32_t>& children) {
    const int n = static_cast<int>(children.size()) / d;
    if (n == 0) return true;
    int next = 0;
    // Explicit stack of nodes whose slots still need visiting, slot cursor kept
    // implicitly by visiting children immediately (preorder = DFS order).
    std::vector<std::pair<int, int>> stack; // (node, next slot)
    if (next++ != 0) return false;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [node, slot] = stack.back();
        if (slot == d) {
            stack.pop_back();
            continue;
        }
        const std::int32_t c = children[static_cast<std::size_t>(node) * d + slot];
        ++slot;
        if (c == -1) continue;
        if (c < 0 || c >= n || c != next) return false;
        ++next;
        stack.emplace_back(c, 0);
    }
    return next == n;
}

// All encodings of trees with exactly `m` nodes, m <= table size; table[k]
// holds the encodings for k nodes (unsorted).
void fill_slot(int d, int slot, int remaining,
               const std::vector<std::vector<std::string>>& table,
               std::string& buffer, std::vector<std::string>& out) {
    if (slot == d) {
        out.push_back("(" + buffer + ")");
        return;
    }
    const std::size_t mark = buffer.size();
    const int low = (slot == d - 1) ? remaining : 0;
    for (int take = low; take <= remaining; ++take) {
        for (const std::string& enc : table[static_cast<std::size_t>(take)]) {
            buffer += enc;
            fill_slot(d, slot + 1, remaining - take, table, buffer, out);
            buffer.resize(mark);
        }
    }
}

std::vector<std::string> sorted_encodings(int d, int n) {
    std::vector<std::vector<std::string>> table(static_cast<std::size_t>(n) + 1);
    table[0] = {"E"};
    for (int m = 1; m <= n; ++m) {
        std::string buffer;
        fill_slot(d, 0, m - 1, table, buffer, table[static_cast<std::size_t>(m)]);
    }
    std::vector<std::string> result = std::move(table[static_cast<std::size_t>(n)]);
    std::sort(result.begin(), result.end());
    return result;
}

void guard_cap(int d, int n, std::uint64_t cap) {
    if (fuss_catalan(d, n) > BigInt(cap)) {
        throw ResourceCapExceeded("enumeration of " + fuss_catalan(d, n).str() +
                                  " trees exceeds the cap of " + std::to_string(cap));
    }
}

} // namespace

DecompositionTree::DecompositionTree(int d, std::vector<std::int32_t> children)
    : d_(d), children_(std::move(children)) {
    if (d_ < 2) throw InvalidDimension("tree arity must be at least 2");
    if (children_.size() % static_cast<std::size_t>(d_) != 0 || !is_preorder(d_, children_)) {
        throw Error("children array is not a preorder tree");
    }
}

std::string tree_encode(const DecompositionTree& tree) {
    if (tree.node_count() == 0) return "E";
    std::string out;
    const int d = tree.d();
    std::function<void(int)> emit = [&](int node) {
        out += '(';
        for (int j = 0; j < d; ++j) {
            const std::int32_t c = tree.child(node, j);
            if (c == -1) {
                out += 'E';
            } else {
                emit(c);
            }
        }
        out += ')';
    };
    emit(0);
    return out;
}

DecompositionTree tree_decode(const std::string& text, int d) {
    if (d < 2) throw InvalidDimension("tree arity must be at least 2");
    std::vector<std::int32_t> children;
    std::size_t pos = 0;

    // Parses one slot starting at `pos`; returns the node id or -1.
    std::function<std::int32_t()> parse_slot = [&]() -> std::int32_t {
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        const char c = text[pos];
        if (c == 'E') {
            ++pos;
            return -1;
        }
        if (c != '(') throw ParseError(std::string("unexpected character '") + c + "'", pos);
        ++pos;
        const std::int32_t id = static_cast<std::int32_t>(children.size()) / d;
        children.resize(children.size() + static_cast<std::size_t>(d), -1);
        for (int j = 0; j < d; ++j) {
            children[static_cast<std::size_t>(id) * d + j] = parse_slot();
        }
        if (pos >= text.size()) throw ParseError("unexpected end of input, expected ')'", pos);
        if (text[pos] != ')') {
            throw ParseError(std::string("expected ')' but found '") + text[pos] + "'", pos);
        }
        ++pos;
        return id;
    };

    const std::int32_t root = parse_slot();
    if (pos != text.size()) throw ParseError("trailing characters after tree", pos);
    if (root == -1 && !children.empty()) throw ParseError("malformed tree", 0);
    return DecompositionTree(d, std::move(children));
}

std::vector<DecompositionTree> enumerate_trees(int d, int n, std::uint64_t cap) {
    std::vector<DecompositionTree> out;
    for_each_tree(d, n, cap, [&](const DecompositionTree& t) { out.push_back(t); });
    return out;
}

void for_each_tree(int d, int n, std::uint64_t cap,
                   const std::function<void(const DecompositionTree&)>& fn) {
    if (d < 2) throw InvalidDimension("tree arity must be at least 2");
    if (n < 0) throw Error("node count must be non-negative");
    guard_cap(d, n, cap);
    for (const std::string& enc : sorted_encodings(d, n)) {
        fn(tree_decode(enc, d));
    }
}

} // namespace fcc
