#include "linc/circuit.hpp"

namespace linc {

const char* kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::True: return "true";
    case NodeKind::False: return "false";
    case NodeKind::Literal: return "literal";
    case NodeKind::And: return "and";
    case NodeKind::Or: return "or";
    }
    return "?";
}

Circuit::Circuit(std::vector<Node> nodes, NodeIndex root, std::uint32_t var_count)
    : nodes_(std::move(nodes)), root_(root), var_count_(var_count) {
    compute_reachable();
}

void Circuit::compute_reachable() {
    reachable_.resize(nodes_.size());
    reachable_.reset();
    // Children precede parents, so one backward pass from the root settles
    // reachability without an explicit stack.
    reachable_.set(root_);
    for (NodeIndex i = root_ + 1; i-- > 0;) {
        if (!reachable_.test(i))
            continue;
        for (NodeIndex c : nodes_[i].children)
            reachable_.set(c);
    }
    reachable_order_.clear();
    for (NodeIndex i = 0; i < nodes_.size(); ++i)
        if (reachable_.test(i))
            reachable_order_.push_back(i);
    reachable_count_ = static_cast<std::uint32_t>(reachable_order_.size());
}

std::size_t CircuitBuilder::KeyHash::operator()(const Key& k) const {
    std::size_t seed = static_cast<std::size_t>(k.kind);
    auto mix = [&seed](std::size_t v) {
        seed ^= v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
    };
    mix(k.var);
    mix(k.negated ? 1 : 0);
    for (NodeIndex c : k.children)
        mix(c);
    return seed;
}

NodeIndex CircuitBuilder::intern(Key key) {
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    Node n;
    n.kind = key.kind;
    n.var = key.var;
    n.negated = key.negated;
    n.children = key.children;
    const NodeIndex idx = static_cast<NodeIndex>(nodes_.size());
    nodes_.push_back(std::move(n));
    cache_.emplace(std::move(key), idx);
    return idx;
}

NodeIndex CircuitBuilder::constant(bool value) {
    return intern(Key{value ? NodeKind::True : NodeKind::False, 0, false, {}});
}

NodeIndex CircuitBuilder::literal(std::uint32_t var, bool negated) {
    if (var == 0)
        throw StructureError("literal variables are 1-based; got 0");
    max_var_ = std::max(max_var_, var);
    return intern(Key{NodeKind::Literal, var, negated, {}});
}

NodeIndex CircuitBuilder::conj(std::vector<NodeIndex> children) {
    if (children.empty())
        return constant(true);
    for (NodeIndex c : children)
        if (c >= nodes_.size())
            throw StructureError("conj child index out of range");
    return intern(Key{NodeKind::And, 0, false, std::move(children)});
}

NodeIndex CircuitBuilder::disj(std::vector<NodeIndex> children) {
    if (children.empty())
        return constant(false);
    for (NodeIndex c : children)
        if (c >= nodes_.size())
            throw StructureError("disj child index out of range");
    return intern(Key{NodeKind::Or, 0, false, std::move(children)});
}

Circuit CircuitBuilder::finish(NodeIndex root, std::uint32_t var_count) {
    if (root >= nodes_.size())
        throw StructureError("root index out of range");
    if (var_count < max_var_)
        throw StructureError("var_count " + std::to_string(var_count) +
                             " below maximum literal variable x" + std::to_string(max_var_));
    return Circuit(nodes_, root, var_count);
}

} // namespace linc
