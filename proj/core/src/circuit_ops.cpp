#include "linc/circuit_ops.hpp"

#include <algorithm>
#include <unordered_map>

namespace linc {

bool evaluate(const Circuit& c, const Assignment& a) {
    std::vector<std::uint8_t> values(c.table_size(), 0);
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        switch (n.kind) {
        case NodeKind::True:
            values[i] = 1;
            break;
        case NodeKind::False:
            values[i] = 0;
            break;
        case NodeKind::Literal: {
            if (!a.contains(n.var))
                throw ScopeError("assignment does not cover variable x" + std::to_string(n.var),
                                 n.var);
            const bool v = a.value(n.var);
            values[i] = n.negated ? !v : v;
            break;
        }
        case NodeKind::And: {
            std::uint8_t acc = 1;
            for (NodeIndex ch : n.children)
                acc &= values[ch];
            values[i] = acc;
            break;
        }
        case NodeKind::Or: {
            std::uint8_t acc = 0;
            for (NodeIndex ch : n.children)
                acc |= values[ch];
            values[i] = acc;
            break;
        }
        }
    }
    return values[c.root()] != 0;
}

WordEvaluator::WordEvaluator(const Circuit& c) : circuit_(c), values_(c.table_size(), 0) {
    if (c.var_count() > 64)
        throw GuardError("word evaluation supports at most 64 variables", c.var_count(), 64);
}

bool WordEvaluator::operator()(std::uint64_t word) {
    const Circuit& c = circuit_;
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        switch (n.kind) {
        case NodeKind::True:
            values_[i] = 1;
            break;
        case NodeKind::False:
            values_[i] = 0;
            break;
        case NodeKind::Literal: {
            const bool v = (word >> (n.var - 1)) & 1u;
            values_[i] = n.negated ? !v : v;
            break;
        }
        case NodeKind::And: {
            std::uint8_t acc = 1;
            for (NodeIndex ch : n.children)
                acc &= values_[ch];
            values_[i] = acc;
            break;
        }
        case NodeKind::Or: {
            std::uint8_t acc = 0;
            for (NodeIndex ch : n.children)
                acc |= values_[ch];
            values_[i] = acc;
            break;
        }
        }
    }
    return values_[c.root()] != 0;
}

bool evaluate_word(const Circuit& c, std::uint64_t word) {
    WordEvaluator ev(c);
    return ev(word);
}

std::vector<VarSet> vars_below(const Circuit& c) {
    std::vector<VarSet> sets(c.table_size(), VarSet(c.var_count()));
    for (NodeIndex i = 0; i < c.table_size(); ++i) {
        const Node& n = c.node(i);
        if (n.kind == NodeKind::Literal) {
            sets[i].set(n.var - 1);
        } else {
            for (NodeIndex ch : n.children)
                sets[i] |= sets[ch];
        }
    }
    return sets;
}

std::vector<DecompViolation> check_decomposable(const Circuit& c) {
    const auto sets = vars_below(c);
    std::vector<DecompViolation> out;
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        if (n.kind != NodeKind::And)
            continue;
        for (std::size_t a = 0; a < n.children.size(); ++a) {
            for (std::size_t b = a + 1; b < n.children.size(); ++b) {
                VarSet shared = sets[n.children[a]] & sets[n.children[b]];
                if (shared.none())
                    continue;
                DecompViolation v;
                v.and_node = i;
                v.child_a = n.children[a];
                v.child_b = n.children[b];
                for (std::size_t bit = shared.find_first(); bit != VarSet::npos;
                     bit = shared.find_next(bit))
                    v.shared_vars.push_back(static_cast<std::uint32_t>(bit + 1));
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

namespace {

// Variables of `set` listed ascending, 1-based.
std::vector<std::uint32_t> set_to_vars(const VarSet& set) {
    std::vector<std::uint32_t> vars;
    for (std::size_t bit = set.find_first(); bit != VarSet::npos; bit = set.find_next(bit))
        vars.push_back(static_cast<std::uint32_t>(bit + 1));
    return vars;
}

} // namespace

std::vector<DetViolation> check_deterministic(const Circuit& c, std::uint64_t sweep_guard) {
    const auto sets = vars_below(c);
    std::vector<DetViolation> out;
    std::vector<std::uint8_t> values(c.table_size(), 0);
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        if (n.kind != NodeKind::Or)
            continue;
        const auto vars = set_to_vars(sets[i]);
        if (vars.size() >= 64 || (std::uint64_t{1} << vars.size()) > sweep_guard)
            throw GuardError("determinism sweep of OR node " + std::to_string(i) + " needs 2^" +
                                 std::to_string(vars.size()) + " evaluations",
                             vars.size() < 64 ? (std::uint64_t{1} << vars.size())
                                              : ~std::uint64_t{0},
                             sweep_guard);
        const std::uint64_t limit = std::uint64_t{1} << vars.size();
        // Nodes of the OR's subcircuit, in topological order.
        std::vector<NodeIndex> sub;
        {
            boost::dynamic_bitset<> mark(c.table_size());
            mark.set(i);
            for (NodeIndex j = i + 1; j-- > 0;) {
                if (!mark.test(j))
                    continue;
                sub.push_back(j);
                for (NodeIndex ch : c.node(j).children)
                    mark.set(ch);
            }
            std::reverse(sub.begin(), sub.end());
        }
        bool flagged = false;
        for (std::uint64_t w = 0; w < limit && !flagged; ++w) {
            std::uint64_t word = 0;
            for (std::size_t b = 0; b < vars.size(); ++b)
                if ((w >> b) & 1u)
                    word |= std::uint64_t{1} << (vars[b] - 1);
            for (NodeIndex j : sub) {
                const Node& m = c.node(j);
                switch (m.kind) {
                case NodeKind::True: values[j] = 1; break;
                case NodeKind::False: values[j] = 0; break;
                case NodeKind::Literal: {
                    const bool v = (word >> (m.var - 1)) & 1u;
                    values[j] = m.negated ? !v : v;
                    break;
                }
                case NodeKind::And: {
                    std::uint8_t acc = 1;
                    for (NodeIndex ch : m.children)
                        acc &= values[ch];
                    values[j] = acc;
                    break;
                }
                case NodeKind::Or: {
                    std::uint8_t acc = 0;
                    for (NodeIndex ch : m.children)
                        acc |= values[ch];
                    values[j] = acc;
                    break;
                }
                }
            }
            NodeIndex first_true = 0;
            bool have_first = false;
            for (NodeIndex ch : n.children) {
                if (!values[ch])
                    continue;
                if (!have_first) {
                    first_true = ch;
                    have_first = true;
                } else {
                    DetViolation v;
                    v.or_node = i;
                    v.child_a = first_true;
                    v.child_b = ch;
                    v.witness = Assignment(c.var_count());
                    for (std::uint32_t var : vars)
                        v.witness.set(var, (word >> (var - 1)) & 1u);
                    out.push_back(std::move(v));
                    flagged = true; // one witness per OR node is enough
                    break;
                }
            }
        }
    }
    return out;
}

mpz_class count_models(const Circuit& c, const CountOptions& opts) {
    {
        const auto bad = check_decomposable(c);
        if (!bad.empty())
            throw StructureError("count_models requires a decomposable circuit; AND node " +
                                 std::to_string(bad.front().and_node) + " shares variable x" +
                                 std::to_string(bad.front().shared_vars.front()));
    }
    if (opts.check_determinism) {
        const auto bad = check_deterministic(c, opts.sweep_guard);
        if (!bad.empty())
            throw DeterminismError("count_models: OR node " + std::to_string(bad.front().or_node) +
                                   " is satisfied twice under " + bad.front().witness.to_string());
    }
    const auto sets = vars_below(c);
    std::vector<mpz_class> counts(c.table_size());
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        switch (n.kind) {
        case NodeKind::True:
            counts[i] = 1;
            break;
        case NodeKind::False:
            counts[i] = 0;
            break;
        case NodeKind::Literal:
            counts[i] = 1;
            break;
        case NodeKind::And: {
            mpz_class acc = 1;
            for (NodeIndex ch : n.children)
                acc *= counts[ch];
            counts[i] = acc;
            break;
        }
        case NodeKind::Or: {
            mpz_class acc = 0;
            for (NodeIndex ch : n.children) {
                // Smoothing correction: a child missing k of the OR's
                // variables stands for 2^k extensions of each model.
                const std::size_t missing = sets[i].count() - sets[ch].count();
                mpz_class term = counts[ch];
                mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), missing);
                acc += term;
            }
            counts[i] = acc;
            break;
        }
        }
    }
    mpz_class total = counts[c.root()];
    const std::size_t pad = c.var_count() - sets[c.root()].count();
    mpz_mul_2exp(total.get_mpz_t(), total.get_mpz_t(), pad);
    return total;
}

namespace {

// Sorted distinct partial-model words per node, over the node's own
// variable set (bits of other variables are zero).
std::vector<std::uint64_t> node_models(const Circuit& c, const std::vector<VarSet>& sets,
                                       std::uint64_t guard) {
    std::vector<std::vector<std::uint64_t>> models(c.table_size());
    auto check_size = [guard](std::size_t s) {
        if (s > guard)
            throw GuardError("model enumeration exceeds the guard", s, guard);
    };
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        auto& out = models[i];
        switch (n.kind) {
        case NodeKind::True:
            out = {0};
            break;
        case NodeKind::False:
            out = {};
            break;
        case NodeKind::Literal:
            out = {n.negated ? 0 : (std::uint64_t{1} << (n.var - 1))};
            break;
        case NodeKind::And: {
            out = {0};
            for (NodeIndex ch : n.children) {
                std::vector<std::uint64_t> next;
                check_size(out.size() * models[ch].size());
                next.reserve(out.size() * models[ch].size());
                for (std::uint64_t a : out)
                    for (std::uint64_t b : models[ch])
                        next.push_back(a | b); // disjoint scopes
                out = std::move(next);
            }
            std::sort(out.begin(), out.end());
            break;
        }
        case NodeKind::Or: {
            for (NodeIndex ch : n.children) {
                // Expand each child model over the OR variables it misses.
                VarSet missing = sets[i] - sets[ch];
                const auto free_vars = set_to_vars(missing);
                if (free_vars.size() >= 63 ||
                    models[ch].size() > (guard >> free_vars.size()))
                    throw GuardError("model enumeration exceeds the guard",
                                     models[ch].size(), guard);
                for (std::uint64_t base : models[ch]) {
                    const std::uint64_t combos = std::uint64_t{1} << free_vars.size();
                    for (std::uint64_t f = 0; f < combos; ++f) {
                        std::uint64_t w = base;
                        for (std::size_t b = 0; b < free_vars.size(); ++b)
                            if ((f >> b) & 1u)
                                w |= std::uint64_t{1} << (free_vars[b] - 1);
                        out.push_back(w);
                    }
                }
                check_size(out.size());
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            break;
        }
        }
    }
    return models[c.root()];
}

} // namespace

std::vector<std::uint64_t> model_words(const Circuit& c, std::uint64_t guard) {
    if (c.var_count() > 63)
        throw GuardError("model enumeration supports at most 63 variables", c.var_count(), 63);
    {
        const auto bad = check_decomposable(c);
        if (!bad.empty())
            throw StructureError("model enumeration requires a decomposable circuit");
    }
    const auto sets = vars_below(c);
    auto base = node_models(c, sets, guard);
    // Pad to the full scope: variables absent from the root are free.
    VarSet missing(c.var_count());
    missing.set();
    missing -= sets[c.root()];
    const auto free_vars = set_to_vars(missing);
    if (free_vars.empty())
        return base;
    if (free_vars.size() >= 63 || base.size() > (guard >> free_vars.size()))
        throw GuardError("model enumeration exceeds the guard", base.size(), guard);
    std::vector<std::uint64_t> out;
    const std::uint64_t combos = std::uint64_t{1} << free_vars.size();
    out.reserve(base.size() * combos);
    for (std::uint64_t w : base) {
        for (std::uint64_t f = 0; f < combos; ++f) {
            std::uint64_t x = w;
            for (std::size_t b = 0; b < free_vars.size(); ++b)
                if ((f >> b) & 1u)
                    x |= std::uint64_t{1} << (free_vars[b] - 1);
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Assignment> enumerate_models(const Circuit& c, std::uint64_t guard) {
    const auto words = model_words(c, guard);
    std::vector<Assignment> out;
    out.reserve(words.size());
    for (std::uint64_t w : words)
        out.push_back(Assignment::from_word(w, c.var_count()));
    return out;
}

Circuit condition(const Circuit& c, const Assignment& partial) {
    CircuitBuilder b;
    // Sentinel mapping: kTrue/kFalse mark constant-folded nodes.
    constexpr NodeIndex kTrue = ~NodeIndex{0};
    constexpr NodeIndex kFalse = ~NodeIndex{0} - 1;
    std::vector<NodeIndex> mapped(c.table_size(), 0);
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        switch (n.kind) {
        case NodeKind::True:
            mapped[i] = kTrue;
            break;
        case NodeKind::False:
            mapped[i] = kFalse;
            break;
        case NodeKind::Literal:
            if (partial.contains(n.var)) {
                const bool v = n.negated ? !partial.value(n.var) : partial.value(n.var);
                mapped[i] = v ? kTrue : kFalse;
            } else {
                mapped[i] = b.literal(n.var, n.negated);
            }
            break;
        case NodeKind::And: {
            std::vector<NodeIndex> kept;
            bool false_child = false;
            for (NodeIndex ch : n.children) {
                if (mapped[ch] == kTrue)
                    continue;
                if (mapped[ch] == kFalse) {
                    false_child = true;
                    break;
                }
                kept.push_back(mapped[ch]);
            }
            if (false_child)
                mapped[i] = kFalse;
            else if (kept.empty())
                mapped[i] = kTrue;
            else if (kept.size() == 1)
                mapped[i] = kept.front();
            else
                mapped[i] = b.conj(std::move(kept));
            break;
        }
        case NodeKind::Or: {
            std::vector<NodeIndex> kept;
            bool true_child = false;
            for (NodeIndex ch : n.children) {
                if (mapped[ch] == kFalse)
                    continue;
                if (mapped[ch] == kTrue) {
                    true_child = true;
                    break;
                }
                kept.push_back(mapped[ch]);
            }
            if (true_child)
                mapped[i] = kTrue;
            else if (kept.empty())
                mapped[i] = kFalse;
            else if (kept.size() == 1)
                mapped[i] = kept.front();
            else
                mapped[i] = b.disj(std::move(kept));
            break;
        }
        }
    }
    NodeIndex root = mapped[c.root()];
    if (root == kTrue)
        root = b.constant(true);
    else if (root == kFalse)
        root = b.constant(false);
    return b.finish(root, c.var_count());
}

SizeReport size(const Circuit& c) {
    SizeReport r;
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        r.node_count++;
        r.edge_count += n.children.size();
        switch (n.kind) {
        case NodeKind::True: r.true_count++; break;
        case NodeKind::False: r.false_count++; break;
        case NodeKind::Literal: r.literal_count++; break;
        case NodeKind::And: r.and_count++; break;
        case NodeKind::Or: r.or_count++; break;
        }
    }
    return r;
}

} // namespace linc
