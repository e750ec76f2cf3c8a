#include "linc/oracle.hpp"

#include <algorithm>
#include <thread>

#include "linc/circuit_ops.hpp"
#include "linc/orders.hpp"

namespace linc {

namespace {

// Partitions [0, total) into contiguous chunks, runs work(first, last) on
// each worker thread, and merges the per-chunk results in chunk order so
// the outcome is independent of scheduling.
template <typename Result, typename Work>
std::vector<Result> run_chunks(std::uint64_t total, std::uint32_t workers, Work work) {
    if (workers == 0)
        workers = 1;
    const std::uint64_t chunks = std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1));
    std::vector<Result> results(chunks);
    std::vector<std::thread> threads;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t first = total / chunks * c + std::min<std::uint64_t>(c, total % chunks);
        const std::uint64_t last =
            total / chunks * (c + 1) + std::min<std::uint64_t>(c + 1, total % chunks);
        threads.emplace_back([&results, c, first, last, &work] { results[c] = work(first, last); });
    }
    for (auto& t : threads)
        t.join();
    return results;
}

void check_guard(std::uint32_t bits, std::uint64_t guard, const char* what) {
    if (bits >= 64 || (std::uint64_t{1} << bits) > guard)
        throw GuardError(std::string(what) + " needs 2^" + std::to_string(bits) + " evaluations",
                         bits < 64 ? std::uint64_t{1} << bits : ~std::uint64_t{0}, guard);
}

} // namespace

bool is_linear_order_word(std::uint64_t word, std::uint32_t n) {
    const PairVarMap map(n, PairMode::Unordered);
    auto prec = [&](std::uint32_t i, std::uint32_t j) {
        const auto lit = map.precedes(i, j);
        const bool v = (word >> (lit.var - 1)) & 1u;
        return lit.negated ? !v : v;
    };
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j) {
            if (i == j || !prec(i, j))
                continue;
            for (std::uint32_t k = 1; k <= n; ++k) {
                if (k == i || k == j)
                    continue;
                if (prec(j, k) && !prec(i, k))
                    return false;
            }
        }
    return true;
}

bool is_linear_order_assignment(const Assignment& a, std::uint32_t n) {
    const PairVarMap map(n, PairMode::Unordered);
    return is_linear_order_word(a.to_word(map.var_count()), n);
}

ModelSet mod_lin(std::uint32_t n, std::uint64_t sweep_guard, std::uint32_t workers) {
    const PairVarMap map(n, PairMode::Unordered);
    const std::uint32_t m = map.var_count();
    check_guard(m, sweep_guard, "mod_lin sweep");
    const std::uint64_t total = std::uint64_t{1} << m;
    auto parts = run_chunks<std::vector<std::uint64_t>>(
        total, workers, [n](std::uint64_t first, std::uint64_t last) {
            std::vector<std::uint64_t> hits;
            for (std::uint64_t w = first; w < last; ++w)
                if (is_linear_order_word(w, n))
                    hits.push_back(w);
            return hits;
        });
    ModelSet ms;
    ms.var_count = m;
    ms.n = n;
    ms.pairs = ModelSet::Pairs::Unordered;
    for (auto& p : parts)
        ms.words.insert(ms.words.end(), p.begin(), p.end());
    // Chunks are contiguous ranges merged in order; already sorted.
    return ms;
}

ModelSet mod_lintop(std::uint32_t n, std::uint32_t k) {
    const PairVarMap map(n, PairMode::Ordered);
    if (map.var_count() > 63)
        throw GuardError("mod_lintop needs word-sized scopes", map.var_count(), 63);
    ModelSet ms;
    ms.var_count = map.var_count();
    ms.n = n;
    ms.pairs = ModelSet::Pairs::Ordered;
    for (const TopKOrder& t : all_topk_orders(n, k))
        ms.words.push_back(topk_to_assignment(t, n).to_word(map.var_count()));
    ms.normalize();
    return ms;
}

SweepTarget sweep_target(const Circuit& c, std::string label) {
    // Each worker thread needs its own evaluator; share the circuit only.
    return SweepTarget{c.var_count(),
                       [&c](std::uint64_t w) { return evaluate_word(c, w); }, std::move(label)};
}

SweepTarget sweep_target(const CnfFormula& f, std::string label) {
    return SweepTarget{f.var_count, [&f](std::uint64_t w) { return f.eval_word(w); },
                       std::move(label)};
}

SweepTarget sweep_target(const ModelSet& ms, std::string label) {
    return SweepTarget{ms.var_count, [&ms](std::uint64_t w) { return ms.contains(w); },
                       std::move(label)};
}

EquivalenceReport truth_table_equiv(const SweepTarget& a, const SweepTarget& b,
                                    std::uint64_t sweep_guard, std::uint32_t workers) {
    if (a.var_count != b.var_count)
        throw Error("scope mismatch: " + a.label + " has " + std::to_string(a.var_count) +
                    " variables, " + b.label + " has " + std::to_string(b.var_count));
    check_guard(a.var_count, sweep_guard, "truth_table_equiv sweep");
    const std::uint64_t total = std::uint64_t{1} << a.var_count;
    struct Part {
        std::uint64_t disagreements = 0;
        std::vector<std::uint64_t> examples;
    };
    auto parts =
        run_chunks<Part>(total, workers, [&a, &b](std::uint64_t first, std::uint64_t last) {
            Part p;
            for (std::uint64_t w = first; w < last; ++w) {
                if (a.eval(w) != b.eval(w)) {
                    p.disagreements++;
                    if (p.examples.size() < 10)
                        p.examples.push_back(w);
                }
            }
            return p;
        });
    EquivalenceReport rep;
    rep.assignments_checked = total;
    for (auto& p : parts) {
        rep.disagreements += p.disagreements;
        for (std::uint64_t w : p.examples)
            if (rep.counterexamples.size() < 10)
                rep.counterexamples.push_back(w);
    }
    rep.equivalent = rep.disagreements == 0;
    return rep;
}

ModelSet sweep_models(const SweepTarget& t, std::uint64_t sweep_guard, std::uint32_t workers) {
    check_guard(t.var_count, sweep_guard, "model sweep");
    const std::uint64_t total = std::uint64_t{1} << t.var_count;
    auto parts = run_chunks<std::vector<std::uint64_t>>(
        total, workers, [&t](std::uint64_t first, std::uint64_t last) {
            std::vector<std::uint64_t> hits;
            for (std::uint64_t w = first; w < last; ++w)
                if (t.eval(w))
                    hits.push_back(w);
            return hits;
        });
    ModelSet ms;
    ms.var_count = t.var_count;
    for (auto& p : parts)
        ms.words.insert(ms.words.end(), p.begin(), p.end());
    return ms;
}

} // namespace linc
