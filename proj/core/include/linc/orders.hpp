#pragma once

#include <cstdint>
#include <vector>

#include "linc/assignment.hpp"
#include "linc/pair_vars.hpp"

namespace linc {

// Linear order over 1..n, most-preferred first.
struct LinearOrder {
    std::vector<std::uint32_t> perm;

    std::uint32_t n() const { return static_cast<std::uint32_t>(perm.size()); }
    // Throws if perm is not a permutation of 1..n.
    void validate() const;
};

// Top-k selection: the chosen set and a linear order over exactly that set.
struct TopKOrder {
    std::vector<std::uint32_t> k_set; // sorted ascending
    LinearOrder order;                // elements == k_set

    std::uint32_t k() const { return static_cast<std::uint32_t>(k_set.size()); }
    void validate(std::uint32_t n) const;
};

// Total assignment over the unordered pair variables: x_{i,j}=1 iff i
// precedes j.
Assignment order_to_assignment(const LinearOrder& o);

// Inverse direction. Throws DecodeError naming a violated triple when the
// assignment is not transitive (i.e. not a model of the order function).
LinearOrder assignment_to_order(const Assignment& a, std::uint32_t n);

// Total assignment over the ordered pair variables for a top-k order:
// within the set the order decides, set-members dominate outsiders, and
// all pairs of outsiders are zero.
Assignment topk_to_assignment(const TopKOrder& t, std::uint32_t n);

// All C(n,k)*k! top-k orders, in deterministic order (sets ascending
// lexicographically, then permutations in std::next_permutation order).
std::vector<TopKOrder> all_topk_orders(std::uint32_t n, std::uint32_t k);

} // namespace linc
