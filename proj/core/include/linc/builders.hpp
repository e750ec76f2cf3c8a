#pragma once

#include <cstdint>

#include "linc/circuit.hpp"
#include "linc/pair_vars.hpp"

namespace linc {

// Census of the construction's gate families, counted by label. Because
// the node table is hash-consed, degenerate gates near the top of the
// subset lattice can share one physical node; these counts are the
// construction's own tally, independent of that sharing.
struct BuildStats {
    std::uint64_t subset_gates = 0; // one per placed-prefix set S
    std::uint64_t choice_gates = 0; // one per (next candidate i, set S)
};

struct BuildResult {
    Circuit circuit;
    BuildStats stats;
};

// DNNF circuit over the unordered pair variables whose models are exactly
// the assignments encoding linear orders of 1..n. Gate C_S ranges over the
// placed prefix S; the choice gate for (i,S) asserts i precedes everything
// not yet placed. Decomposability is checked before returning.
BuildResult build_lin_circuit(std::uint32_t n);

// DNNF circuit over the ordered pair variables whose models are exactly
// the top-k order assignments: subset gates stop at |S|=k, where the
// terminal gate zeroes every pair among the unchosen candidates.
BuildResult build_lintop_circuit(std::uint32_t n, std::uint32_t k);

// Census formulas (no circuit built): lin uses 2^n subset gates and
// n*2^(n-1) choice gates; lintop uses sum_{0<=s<=k} C(n,s) subset gates
// and sum_{0<=s<k} C(n,s)*(n-s) choice gates.
BuildStats lin_build_census(std::uint32_t n);
BuildStats lintop_build_census(std::uint32_t n, std::uint32_t k);

} // namespace linc
