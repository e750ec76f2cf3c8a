#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "linc/errors.hpp"

namespace linc {

using VarSet = boost::dynamic_bitset<>;

// Partial or total truth assignment. Variables are 1-based; bit var-1 of
// the scope mask marks membership. Values outside the scope are meaningless.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::uint32_t universe)
        : scope_(universe), values_(universe) {}

    // Total assignment over variables 1..m from the low m bits of a word.
    static Assignment from_word(std::uint64_t word, std::uint32_t m);

    std::uint32_t universe() const { return static_cast<std::uint32_t>(scope_.size()); }
    std::size_t size() const { return scope_.count(); }
    bool empty() const { return scope_.none(); }

    bool contains(std::uint32_t var) const {
        return var >= 1 && var <= scope_.size() && scope_.test(var - 1);
    }
    // Precondition: contains(var).
    bool value(std::uint32_t var) const { return values_.test(var - 1); }

    void set(std::uint32_t var, bool value);
    void unset(std::uint32_t var);

    const VarSet& scope() const { return scope_; }

    // Word over variables 1..m. Requires the scope to cover 1..m exactly.
    std::uint64_t to_word(std::uint32_t m) const;

    // Union of two assignments. Throws ScopeError if they disagree on a
    // shared variable.
    Assignment union_with(const Assignment& other) const;

    bool operator==(const Assignment& other) const;

    // "x3=1 x7=0" in increasing variable order; "{}" when empty.
    std::string to_string() const;

private:
    VarSet scope_;
    VarSet values_;
};

} // namespace linc
