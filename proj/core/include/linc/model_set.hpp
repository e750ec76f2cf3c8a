#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "linc/errors.hpp"
#include "linc/pair_vars.hpp"

namespace linc {

// A set of total assignments over variables 1..var_count, stored as sorted
// distinct packed words (bit var-1). Optional metadata records which pair
// map the variables came from.
struct ModelSet {
    std::uint32_t var_count = 0;
    std::uint32_t n = 0; // candidate count, 0 when unknown
    enum class Pairs : std::uint8_t { None, Unordered, Ordered };
    Pairs pairs = Pairs::None;
    std::vector<std::uint64_t> words; // sorted ascending, no duplicates

    std::size_t size() const { return words.size(); }
    bool contains(std::uint64_t w) const;
    void normalize(); // sort + dedup

    bool operator==(const ModelSet& o) const {
        return var_count == o.var_count && words == o.words;
    }
};

// Text format: header `modelset vars=<m> n=<n> pairs=<unordered|ordered|none>`
// then one lowercase hex word per line, sorted ascending.
std::string write_model_set(const ModelSet& ms);
ModelSet read_model_set(const std::string& text);

} // namespace linc
