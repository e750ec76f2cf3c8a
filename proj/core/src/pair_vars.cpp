#include "linc/pair_vars.hpp"

namespace linc {

PairVarMap::PairVarMap(std::uint32_t n, PairMode mode) : n_(n), mode_(mode) {
    if (n == 0)
        throw Error("PairVarMap needs at least one candidate");
    m_ = mode == PairMode::Unordered ? n * (n - 1) / 2 : n * (n - 1);
}

void PairVarMap::check_candidate(std::uint32_t i) const {
    if (i < 1 || i > n_)
        throw Error("candidate " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
}

std::uint32_t PairVarMap::index(std::uint32_t i, std::uint32_t j) const {
    check_candidate(i);
    check_candidate(j);
    if (mode_ == PairMode::Unordered) {
        if (i >= j)
            throw Error("unordered pair index requires i<j");
        // Rank of (i,j) in lexicographic order over i<j, 1-based.
        return (i - 1) * n_ - i * (i - 1) / 2 + (j - i);
    }
    if (i == j)
        throw Error("ordered pair index requires i!=j");
    return (i - 1) * (n_ - 1) + j - (j > i ? 1 : 0);
}

std::pair<std::uint32_t, std::uint32_t> PairVarMap::pair(std::uint32_t var) const {
    if (var < 1 || var > m_)
        throw Error("variable " + std::to_string(var) + " out of range 1.." + std::to_string(m_));
    if (mode_ == PairMode::Unordered) {
        std::uint32_t i = 1;
        std::uint32_t remaining = var;
        while (remaining > n_ - i) {
            remaining -= n_ - i;
            ++i;
        }
        return {i, i + remaining};
    }
    const std::uint32_t i = (var - 1) / (n_ - 1) + 1;
    std::uint32_t j = (var - 1) % (n_ - 1) + 1;
    if (j >= i)
        ++j;
    return {i, j};
}

PairVarMap::Literal PairVarMap::precedes(std::uint32_t i, std::uint32_t j) const {
    check_candidate(i);
    check_candidate(j);
    if (i == j)
        throw Error("no precedence literal for a candidate against itself");
    if (mode_ == PairMode::Ordered)
        return {index(i, j), false};
    return i < j ? Literal{index(i, j), false} : Literal{index(j, i), true};
}

std::string PairVarMap::var_name(std::uint32_t var) const {
    const auto [i, j] = pair(var);
    return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

std::uint32_t PairVarMap::candidates_for_var_count(std::uint32_t m, PairMode mode) {
    for (std::uint32_t n = 1; n <= 2 * m + 2; ++n) {
        const std::uint64_t expect = mode == PairMode::Unordered
                                         ? std::uint64_t{n} * (n - 1) / 2
                                         : std::uint64_t{n} * (n - 1);
        if (expect == m)
            return n;
        if (expect > m)
            return 0;
    }
    return 0;
}

} // namespace linc
