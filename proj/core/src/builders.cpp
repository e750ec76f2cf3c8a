#include "linc/builders.hpp"

#include <algorithm>
#include <vector>

#include "linc/circuit_ops.hpp"

namespace linc {

namespace {

// Masks with the same popcount, ascending. Gates are created for subsets
// in decreasing popcount order so children always exist first.
std::vector<std::vector<std::uint32_t>> masks_by_popcount(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> by_count(n + 1);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        by_count[static_cast<std::uint32_t>(__builtin_popcount(mask))].push_back(mask);
    return by_count;
}

void require_decomposable(const Circuit& c, const char* what) {
    const auto bad = check_decomposable(c);
    if (!bad.empty())
        throw PostconditionError(std::string(what) + ": construction is not decomposable at AND node " +
                                 std::to_string(bad.front().and_node));
}

constexpr std::uint32_t kMaxBuildCandidates = 26; // subset table is 2^n entries

} // namespace

BuildResult build_lin_circuit(std::uint32_t n) {
    if (n == 0)
        throw Error("build_lin_circuit requires n >= 1");
    if (n > kMaxBuildCandidates)
        throw GuardError("build_lin_circuit subset table would need 2^n entries", n,
                         kMaxBuildCandidates);
    const PairVarMap map(n, PairMode::Unordered);
    CircuitBuilder b;
    BuildStats stats;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<NodeIndex> subset_gate(1u << n, 0);
    subset_gate[full] = b.constant(true);
    stats.subset_gates = 1;
    const auto by_count = masks_by_popcount(n);
    for (std::uint32_t placed = n; placed-- > 0;) {
        for (std::uint32_t mask : by_count[placed]) {
            std::vector<NodeIndex> choices;
            for (std::uint32_t i = 1; i <= n; ++i) {
                if (mask & (1u << (i - 1)))
                    continue;
                // i beats every other unplaced candidate, then recurse.
                std::vector<NodeIndex> parts;
                for (std::uint32_t j = 1; j <= n; ++j) {
                    if (j == i || (mask & (1u << (j - 1))))
                        continue;
                    const auto lit = map.precedes(i, j);
                    parts.push_back(b.literal(lit.var, lit.negated));
                }
                parts.push_back(subset_gate[mask | (1u << (i - 1))]);
                choices.push_back(b.conj(std::move(parts)));
                stats.choice_gates++;
            }
            subset_gate[mask] = b.disj(std::move(choices));
            stats.subset_gates++;
        }
    }
    BuildResult res{b.finish(subset_gate[0], map.var_count()), stats};
    require_decomposable(res.circuit, "build_lin_circuit");
    return res;
}

BuildResult build_lintop_circuit(std::uint32_t n, std::uint32_t k) {
    if (k < 1 || n <= k)
        throw Error("build_lintop_circuit requires n > k >= 1");
    if (n > kMaxBuildCandidates)
        throw GuardError("build_lintop_circuit subset table would need 2^n entries", n,
                         kMaxBuildCandidates);
    const PairVarMap map(n, PairMode::Ordered);
    CircuitBuilder b;
    BuildStats stats;
    std::vector<NodeIndex> subset_gate(1u << n, 0);
    const auto by_count = masks_by_popcount(n);
    // Terminal gates: the chosen set is complete; every ordered pair among
    // the leftovers is false.
    for (std::uint32_t mask : by_count[k]) {
        std::vector<NodeIndex> parts;
        for (std::uint32_t i = 1; i <= n; ++i) {
            if (mask & (1u << (i - 1)))
                continue;
            for (std::uint32_t j = 1; j <= n; ++j) {
                if (j == i || (mask & (1u << (j - 1))))
                    continue;
                parts.push_back(b.literal(map.index(i, j), true));
            }
        }
        subset_gate[mask] = b.conj(std::move(parts));
        stats.subset_gates++;
    }
    for (std::uint32_t placed = k; placed-- > 0;) {
        for (std::uint32_t mask : by_count[placed]) {
            std::vector<NodeIndex> choices;
            for (std::uint32_t i = 1; i <= n; ++i) {
                if (mask & (1u << (i - 1)))
                    continue;
                std::vector<NodeIndex> parts;
                for (std::uint32_t j = 1; j <= n; ++j) {
                    if (j == i || (mask & (1u << (j - 1))))
                        continue;
                    parts.push_back(b.literal(map.index(i, j), false));
                    parts.push_back(b.literal(map.index(j, i), true));
                }
                parts.push_back(subset_gate[mask | (1u << (i - 1))]);
                choices.push_back(b.conj(std::move(parts)));
                stats.choice_gates++;
            }
            subset_gate[mask] = b.disj(std::move(choices));
            stats.subset_gates++;
        }
    }
    BuildResult res{b.finish(subset_gate[0], map.var_count()), stats};
    require_decomposable(res.circuit, "build_lintop_circuit");
    return res;
}

namespace {

std::uint64_t binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint32_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

BuildStats lin_build_census(std::uint32_t n) {
    BuildStats s;
    s.subset_gates = std::uint64_t{1} << n;
    s.choice_gates = std::uint64_t{n} << (n - 1);
    return s;
}

BuildStats lintop_build_census(std::uint32_t n, std::uint32_t k) {
    BuildStats s;
    for (std::uint32_t i = 0; i <= k; ++i)
        s.subset_gates += binomial(n, i);
    for (std::uint32_t i = 0; i < k; ++i)
        s.choice_gates += binomial(n, i) * (n - i);
    return s;
}

} // namespace linc
