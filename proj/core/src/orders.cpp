#include "linc/orders.hpp"

#include <algorithm>

namespace linc {

void LinearOrder::validate() const {
    std::vector<bool> seen(perm.size() + 1, false);
    for (std::uint32_t v : perm) {
        if (v < 1 || v > perm.size() || seen[v])
            throw Error("not a permutation of 1.." + std::to_string(perm.size()));
        seen[v] = true;
    }
}

void TopKOrder::validate(std::uint32_t n) const {
    if (k_set.empty())
        throw Error("top-k set must be nonempty");
    if (!std::is_sorted(k_set.begin(), k_set.end()))
        throw Error("top-k set must be sorted");
    for (std::size_t i = 0; i < k_set.size(); ++i) {
        if (k_set[i] < 1 || k_set[i] > n)
            throw Error("top-k member out of range");
        if (i > 0 && k_set[i] == k_set[i - 1])
            throw Error("top-k set has a duplicate");
    }
    if (order.perm.size() != k_set.size())
        throw Error("top-k order must rank exactly the chosen set");
    auto sorted = order.perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != k_set)
        throw Error("top-k order ranks elements outside the chosen set");
}

Assignment order_to_assignment(const LinearOrder& o) {
    o.validate();
    const std::uint32_t n = o.n();
    const PairVarMap map(n, PairMode::Unordered);
    // position[v] = rank in the order; smaller rank = more preferred.
    std::vector<std::uint32_t> position(n + 1, 0);
    for (std::uint32_t idx = 0; idx < n; ++idx)
        position[o.perm[idx]] = idx;
    Assignment a(map.var_count());
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = i + 1; j <= n; ++j)
            a.set(map.index(i, j), position[i] < position[j]);
    return a;
}

LinearOrder assignment_to_order(const Assignment& a, std::uint32_t n) {
    const PairVarMap map(n, PairMode::Unordered);
    auto prec = [&](std::uint32_t i, std::uint32_t j) {
        const auto lit = map.precedes(i, j);
        if (!a.contains(lit.var))
            throw ScopeError("assignment does not cover " + map.var_name(lit.var), lit.var);
        const bool v = a.value(lit.var);
        return lit.negated ? !v : v;
    };
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
            for (std::uint32_t k = 1; k <= n; ++k) {
                if (i == j || i == k || j == k)
                    continue;
                if (prec(i, j) && prec(j, k) && !prec(i, k))
                    throw DecodeError("assignment is not transitive: " + std::to_string(i) +
                                          " before " + std::to_string(j) + " before " +
                                          std::to_string(k) + " but not " + std::to_string(i) +
                                          " before " + std::to_string(k),
                                      i, j, k);
            }
    // In a transitive tournament the win count sorts the candidates.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> wins; // (count, candidate)
    for (std::uint32_t i = 1; i <= n; ++i) {
        std::uint32_t w = 0;
        for (std::uint32_t j = 1; j <= n; ++j)
            if (i != j && prec(i, j))
                ++w;
        wins.emplace_back(w, i);
    }
    std::sort(wins.begin(), wins.end(), [](auto& p, auto& q) { return p.first > q.first; });
    LinearOrder o;
    for (auto& [w, v] : wins)
        o.perm.push_back(v);
    o.validate();
    return o;
}

Assignment topk_to_assignment(const TopKOrder& t, std::uint32_t n) {
    t.validate(n);
    const PairVarMap map(n, PairMode::Ordered);
    std::vector<bool> in_set(n + 1, false);
    for (std::uint32_t v : t.k_set)
        in_set[v] = true;
    std::vector<std::uint32_t> position(n + 1, 0);
    for (std::uint32_t idx = 0; idx < t.order.perm.size(); ++idx)
        position[t.order.perm[idx]] = idx + 1; // 0 = unranked
    Assignment a(map.var_count());
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (i == j)
                continue;
            bool bit = false;
            if (in_set[i] && in_set[j])
                bit = position[i] < position[j];
            else if (in_set[i] && !in_set[j])
                bit = true;
            else
                bit = false; // j in set and i out, or both out
            a.set(map.index(i, j), bit);
        }
    return a;
}

std::vector<TopKOrder> all_topk_orders(std::uint32_t n, std::uint32_t k) {
    if (k < 1 || k >= n)
        throw Error("top-k enumeration requires 1 <= k < n");
    std::vector<TopKOrder> out;
    // Lexicographic k-subsets of 1..n.
    std::vector<std::uint32_t> set(k);
    for (std::uint32_t i = 0; i < k; ++i)
        set[i] = i + 1;
    while (true) {
        std::vector<std::uint32_t> perm = set;
        do {
            TopKOrder t;
            t.k_set = set;
            t.order.perm = perm;
            out.push_back(std::move(t));
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Advance the subset.
        std::int32_t pos = static_cast<std::int32_t>(k) - 1;
        while (pos >= 0 && set[pos] == n - (k - 1 - pos))
            --pos;
        if (pos < 0)
            break;
        ++set[pos];
        for (std::uint32_t q = pos + 1; q < k; ++q)
            set[q] = set[q - 1] + 1;
    }
    return out;
}

} // namespace linc
