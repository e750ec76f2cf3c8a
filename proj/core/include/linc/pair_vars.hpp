#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "linc/errors.hpp"

namespace linc {

enum class PairMode : std::uint8_t {
    Unordered, // pairs i<j, m = n(n-1)/2; x_{j,i} is realized as the negation
    Ordered,   // pairs i!=j, m = n(n-1); diagonal excluded
};

// Bijection between candidate pairs and variable indices 1..m, in
// lexicographic pair order.
class PairVarMap {
public:
    PairVarMap(std::uint32_t n, PairMode mode);

    std::uint32_t n() const { return n_; }
    PairMode mode() const { return mode_; }
    std::uint32_t var_count() const { return m_; }

    // Unordered mode requires i<j; ordered mode requires i!=j.
    std::uint32_t index(std::uint32_t i, std::uint32_t j) const;
    // Inverse of index.
    std::pair<std::uint32_t, std::uint32_t> pair(std::uint32_t var) const;

    // The literal standing for "i precedes j". In unordered mode with i>j
    // this is the negation of x_{j,i}; in ordered mode always positive.
    struct Literal {
        std::uint32_t var;
        bool negated;
    };
    Literal precedes(std::uint32_t i, std::uint32_t j) const;

    std::string var_name(std::uint32_t var) const; // "x_{i,j}"

    // Candidate count recovered from a variable count, or 0 on mismatch.
    static std::uint32_t candidates_for_var_count(std::uint32_t m, PairMode mode);

private:
    void check_candidate(std::uint32_t i) const;
    std::uint32_t n_;
    PairMode mode_;
    std::uint32_t m_;
};

} // namespace linc
