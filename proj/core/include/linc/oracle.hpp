#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linc/assignment.hpp"
#include "linc/circuit.hpp"
#include "linc/cnf.hpp"
#include "linc/model_set.hpp"

namespace linc {

// Ground-truth side of every equivalence check. Nothing here goes through
// the circuit counting/enumeration path.

// 1 iff the relation induced over 1..n by a total word over the unordered
// pair variables is transitive. Completeness and irreflexivity are
// structural under this encoding.
bool is_linear_order_word(std::uint64_t word, std::uint32_t n);
bool is_linear_order_assignment(const Assignment& a, std::uint32_t n);

// Exhaustive sweep collecting every transitive word; |result| = n!.
// Throws GuardError when 2^(n(n-1)/2) exceeds the guard.
ModelSet mod_lin(std::uint32_t n, std::uint64_t sweep_guard = std::uint64_t{1} << 22,
                 std::uint32_t workers = 1);

// Image of all top-k orders under the assignment codec; the reference
// model set for the top-k circuits.
ModelSet mod_lintop(std::uint32_t n, std::uint32_t k);

// Anything that can be swept over words: a circuit, a CNF, a model set,
// or an arbitrary predicate.
struct SweepTarget {
    std::uint32_t var_count;
    std::function<bool(std::uint64_t)> eval;
    std::string label;
};

SweepTarget sweep_target(const Circuit& c, std::string label = "circuit");
SweepTarget sweep_target(const CnfFormula& f, std::string label = "cnf");
SweepTarget sweep_target(const ModelSet& ms, std::string label = "modelset");

struct EquivalenceReport {
    bool equivalent = false;
    std::uint64_t assignments_checked = 0;
    std::uint64_t disagreements = 0;
    // Up to 10 words where the two sides differ, ascending.
    std::vector<std::uint64_t> counterexamples;
};

// Full truth-table comparison. Throws on scope mismatch or guard excess.
EquivalenceReport truth_table_equiv(const SweepTarget& a, const SweepTarget& b,
                                    std::uint64_t sweep_guard = std::uint64_t{1} << 22,
                                    std::uint32_t workers = 1);

// Models of an arbitrary sweep target by exhaustive evaluation.
ModelSet sweep_models(const SweepTarget& t, std::uint64_t sweep_guard = std::uint64_t{1} << 22,
                      std::uint32_t workers = 1);

} // namespace linc
