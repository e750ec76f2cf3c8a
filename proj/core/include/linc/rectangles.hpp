#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linc/circuit.hpp"
#include "linc/model_set.hpp"

namespace linc {

// Two-block variable partition over scope 1..m, as a mask of the first
// block (bit var-1). m <= 63.
struct Partition {
    std::uint32_t var_count = 0;
    std::uint64_t x1_mask = 0;

    std::uint64_t x2_mask() const {
        return var_count == 0 ? 0 : (~x1_mask) & (~std::uint64_t{0} >> (64 - var_count));
    }
    std::uint32_t x1_size() const { return static_cast<std::uint32_t>(__builtin_popcountll(x1_mask)); }
    std::uint32_t x2_size() const { return var_count - x1_size(); }
    // min(|X1|,|X2|) >= |X|/3, compared exactly in integers.
    bool balanced() const {
        return 3ull * std::min(x1_size(), x2_size()) >= var_count;
    }
};

// R1 x R2 over a partition. Member words carry bits only inside their own
// block, so a model of the rectangle is simply r1 | r2.
struct Rectangle {
    Partition partition;
    std::vector<std::uint64_t> r1; // sorted distinct, masked to X1
    std::vector<std::uint64_t> r2; // sorted distinct, masked to X2

    std::uint64_t model_count() const {
        return static_cast<std::uint64_t>(r1.size()) * r2.size();
    }
};

// |R1| * |R2| combined words, sorted.
ModelSet rectangle_models(const Rectangle& r);

struct RectangleCover {
    std::uint32_t var_count = 0;
    std::vector<Rectangle> rectangles;
};

struct CoverReport {
    bool valid = false;
    std::vector<std::uint64_t> missing; // target models no rectangle covers
    std::vector<std::uint64_t> extra;   // covered words outside the target
    std::vector<bool> balanced_flags;   // per rectangle
    bool all_balanced = false;
};

// Valid iff the union of the rectangles' model sets equals the target.
CoverReport validate_cover(const RectangleCover& cov, const ModelSet& target);

// The rectangle R1 x R2 inside `target` (over the given partition) with
// the maximum number of models, found exactly by closed-biclique
// enumeration over the bipartite compatibility relation between distinct
// X1- and X2-projections of the target. Guarded at |target| <= 10^4.
Rectangle max_rectangle(const Partition& p, const ModelSet& target,
                        std::uint64_t concept_guard = std::uint64_t{1} << 20);

// Balanced partitions of scope 1..m with X1 containing variable 1, which
// halves the X1/X2-swap duplicates. Ascending mask order.
std::vector<Partition> enumerate_balanced_partitions(std::uint32_t m);

struct PartitionStat {
    Partition partition;
    std::uint64_t max_rectangle_models = 0;
    std::uint64_t r1_size = 0;
    std::uint64_t r2_size = 0;
};

struct LowerBoundReport {
    std::uint32_t n = 0;
    std::uint64_t model_count = 0; // n!
    bool sampled = false;          // true when partitions were sampled, not exhausted
    std::uint64_t partitions_considered = 0;
    std::uint64_t r_max = 0;                 // max over balanced partitions
    std::uint64_t bound = 0;                 // ceil(n! / r_max)
    std::vector<PartitionStat> per_partition; // in enumeration order
};

// Exhaustive over all balanced partitions for n <= 5; for n == 6 a sampled
// subset must be requested explicitly (samples > 0) and is flagged.
LowerBoundReport lower_bound_from_covers(std::uint32_t n, std::uint64_t samples = 0,
                                         std::uint64_t seed = 0,
                                         std::uint64_t sweep_guard = std::uint64_t{1} << 22,
                                         std::uint32_t workers = 1);

// Balanced rectangle cover of Mod(c) read off a certificate walk of the
// smoothed, fan-in-two view of the circuit: every model is routed to a
// gate whose variable set has balanced size, and the models stopping at a
// gate form one rectangle. The result is re-validated semantically and
// every rectangle balance-checked before returning; a failure throws
// PostconditionError instead of returning a wrong cover.
RectangleCover extract_rectangle_cover(const Circuit& c,
                                       std::uint64_t sweep_guard = std::uint64_t{1} << 22);

// Cover text format: one header, then per rectangle a partition line
// followed by its R1 and R2 word blocks (hex, as in the model set format).
std::string write_cover(const RectangleCover& cov);
RectangleCover read_cover(const std::string& text);

} // namespace linc
