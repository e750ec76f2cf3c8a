#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "linc/circuit.hpp"

namespace linc {

// Default ceiling on exhaustive sweeps: 2^22 evaluations. Exceeding it is
// an error, never a silent approximation.
inline constexpr std::uint64_t kDefaultSweepGuard = std::uint64_t{1} << 22;

// Truth value of the circuit under a total assignment. Throws ScopeError
// if a reachable literal's variable is not assigned.
bool evaluate(const Circuit& c, const Assignment& a);

// Fast path for sweeps: variables 1..var_count packed into a word
// (bit var-1). Requires var_count <= 64.
bool evaluate_word(const Circuit& c, std::uint64_t word);

// Reusable buffer for repeated word evaluations of one circuit.
class WordEvaluator {
public:
    explicit WordEvaluator(const Circuit& c);
    bool operator()(std::uint64_t word);

private:
    const Circuit& circuit_;
    std::vector<std::uint8_t> values_;
};

// Per-node variable sets of the rooted subcircuits, indexed by node.
// Computed bottom-up for the whole table (dead nodes included).
std::vector<VarSet> vars_below(const Circuit& c);

struct DecompViolation {
    NodeIndex and_node;
    NodeIndex child_a;
    NodeIndex child_b;
    std::vector<std::uint32_t> shared_vars;
};

// Empty result iff every reachable AND node has pairwise variable-disjoint
// children.
std::vector<DecompViolation> check_decomposable(const Circuit& c);

struct DetViolation {
    NodeIndex or_node;
    NodeIndex child_a;
    NodeIndex child_b;
    Assignment witness; // over the OR node's variable set
};

// Exhaustively sweeps each reachable OR node's variable set looking for an
// assignment satisfying two children. Throws GuardError if any single
// node's sweep would exceed the guard.
std::vector<DetViolation> check_deterministic(const Circuit& c,
                                              std::uint64_t sweep_guard = kDefaultSweepGuard);

struct CountOptions {
    // When true, count_models runs check_deterministic first and throws
    // DeterminismError on a violation. When false the caller asserts
    // determinism by construction.
    bool check_determinism = false;
    std::uint64_t sweep_guard = kDefaultSweepGuard;
};

// Exact model count over the full var_count scope. Requires a decomposable
// circuit (checked). Counting is smoothing-aware: an OR child missing
// variables contributes count * 2^missing, and the root is padded to
// var_count.
mpz_class count_models(const Circuit& c, const CountOptions& opts = {});

// All models over the full var_count scope as packed words, sorted
// ascending, each exactly once. Requires decomposability (checked) and
// var_count <= 63; result size is bounded by the guard.
std::vector<std::uint64_t> model_words(const Circuit& c,
                                       std::uint64_t guard = kDefaultSweepGuard);

// model_words lifted to Assignments, in the same deterministic order.
std::vector<Assignment> enumerate_models(const Circuit& c,
                                         std::uint64_t guard = kDefaultSweepGuard);

// Instantiates the variables of `partial` and simplifies. The result
// mentions no variable from partial's scope and keeps the original
// var_count.
Circuit condition(const Circuit& c, const Assignment& partial);

struct SizeReport {
    std::uint64_t node_count = 0; // reachable nodes
    std::uint64_t edge_count = 0; // sum of reachable child-list lengths
    std::uint64_t true_count = 0;
    std::uint64_t false_count = 0;
    std::uint64_t literal_count = 0;
    std::uint64_t and_count = 0;
    std::uint64_t or_count = 0;

    bool operator==(const SizeReport&) const = default;
};

SizeReport size(const Circuit& c);

} // namespace linc
