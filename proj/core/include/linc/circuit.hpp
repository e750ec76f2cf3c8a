#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "linc/assignment.hpp"
#include "linc/errors.hpp"

namespace linc {

using NodeIndex = std::uint32_t;

enum class NodeKind : std::uint8_t { True, False, Literal, And, Or };

const char* kind_name(NodeKind k);

struct Node {
    NodeKind kind;
    std::uint32_t var = 0; // literal payload, 1-based
    bool negated = false;  // literal payload
    std::vector<NodeIndex> children;
};

// Immutable NNF circuit. The node table is topologically ordered: every
// child index is smaller than its parent's index. Nodes not reachable from
// the root are kept in the table but flagged dead.
class Circuit {
public:
    Circuit() = default;

    const Node& node(NodeIndex i) const { return nodes_[i]; }
    NodeIndex root() const { return root_; }
    std::uint32_t var_count() const { return var_count_; }
    std::uint32_t table_size() const { return static_cast<std::uint32_t>(nodes_.size()); }

    bool is_reachable(NodeIndex i) const { return reachable_.test(i); }
    std::uint32_t reachable_count() const { return reachable_count_; }

    // Reachable node indices in increasing (topological) order.
    const std::vector<NodeIndex>& reachable_nodes() const { return reachable_order_; }

private:
    friend class CircuitBuilder;
    Circuit(std::vector<Node> nodes, NodeIndex root, std::uint32_t var_count);
    void compute_reachable();

    std::vector<Node> nodes_;
    NodeIndex root_ = 0;
    std::uint32_t var_count_ = 0;
    boost::dynamic_bitset<> reachable_;
    std::vector<NodeIndex> reachable_order_;
    std::uint32_t reachable_count_ = 0;
};

// Bottom-up constructor with structural sharing: nodes are hash-consed on
// (kind, payload, children), so identical gates are created once. Zero-child
// conjunctions/disjunctions are canonicalized to the TRUE/FALSE leaves.
class CircuitBuilder {
public:
    NodeIndex constant(bool value);
    NodeIndex literal(std::uint32_t var, bool negated);
    NodeIndex conj(std::vector<NodeIndex> children);
    NodeIndex disj(std::vector<NodeIndex> children);

    std::uint32_t table_size() const { return static_cast<std::uint32_t>(nodes_.size()); }

    // Seals the builder into a circuit. var_count must dominate every
    // literal variable index in the table.
    Circuit finish(NodeIndex root, std::uint32_t var_count);

private:
    struct Key {
        NodeKind kind;
        std::uint32_t var;
        bool negated;
        std::vector<NodeIndex> children;
        bool operator==(const Key& o) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };

    NodeIndex intern(Key key);

    std::vector<Node> nodes_;
    std::unordered_map<Key, NodeIndex, KeyHash> cache_;
    std::uint32_t max_var_ = 0;
};

} // namespace linc
