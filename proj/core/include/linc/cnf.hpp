#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linc/pair_vars.hpp"

namespace linc {

// Clause = literals sorted by variable; positive literal = +var,
// negative = -var. Clauses never contain complementary pairs.
using Clause = std::vector<std::int32_t>;

struct CnfFormula {
    std::uint32_t var_count = 0;
    std::vector<Clause> clauses; // deduplicated, sorted lexicographically

    bool eval_word(std::uint64_t word) const;
};

struct LinCnfResult {
    CnfFormula formula;
    // Number of generated clauses before set-deduplication: n(n-1)(n-2).
    std::uint64_t raw_clause_count = 0;
};

// Transitivity 3CNF over the unordered pair variables: one clause per
// ordered distinct triple (i,j,k), with x_{j,i} realized as the negation
// of x_{i,j}, then deduplicated as literal sets.
LinCnfResult encode_lin_cnf(std::uint32_t n);

// DIMACS text: comments naming the pair map and the raw clause count, the
// `p cnf` header, then one 0-terminated clause per line.
std::string to_dimacs(const LinCnfResult& r, std::uint32_t n);

} // namespace linc
