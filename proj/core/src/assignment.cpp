#include "linc/assignment.hpp"

#include <sstream>

namespace linc {

Assignment Assignment::from_word(std::uint64_t word, std::uint32_t m) {
    Assignment a(m);
    a.scope_.set();
    for (std::uint32_t v = 0; v < m; ++v)
        a.values_[v] = (word >> v) & 1u;
    return a;
}

void Assignment::set(std::uint32_t var, bool value) {
    if (var == 0)
        throw ScopeError("variable indices are 1-based; got 0", 0);
    if (var > scope_.size()) {
        scope_.resize(var);
        values_.resize(var);
    }
    scope_.set(var - 1);
    values_[var - 1] = value;
}

void Assignment::unset(std::uint32_t var) {
    if (var >= 1 && var <= scope_.size()) {
        scope_.reset(var - 1);
        values_.reset(var - 1);
    }
}

std::uint64_t Assignment::to_word(std::uint32_t m) const {
    if (m > 64)
        throw GuardError("assignment word requires at most 64 variables", m, 64);
    std::uint64_t w = 0;
    for (std::uint32_t v = 1; v <= m; ++v) {
        if (!contains(v))
            throw ScopeError("assignment is not total: variable x" + std::to_string(v) +
                                 " is unassigned",
                             v);
        if (value(v))
            w |= (std::uint64_t{1} << (v - 1));
    }
    return w;
}

Assignment Assignment::union_with(const Assignment& other) const {
    Assignment out(std::max(universe(), other.universe()));
    for (std::uint32_t v = 1; v <= out.universe(); ++v) {
        const bool in_a = contains(v);
        const bool in_b = other.contains(v);
        if (in_a && in_b && value(v) != other.value(v))
            throw ScopeError("assignments disagree on shared variable x" + std::to_string(v), v);
        if (in_a)
            out.set(v, value(v));
        else if (in_b)
            out.set(v, other.value(v));
    }
    return out;
}

bool Assignment::operator==(const Assignment& other) const {
    const std::uint32_t m = std::max(universe(), other.universe());
    for (std::uint32_t v = 1; v <= m; ++v) {
        if (contains(v) != other.contains(v))
            return false;
        if (contains(v) && value(v) != other.value(v))
            return false;
    }
    return true;
}

std::string Assignment::to_string() const {
    if (empty())
        return "{}";
    std::ostringstream out;
    bool first = true;
    for (std::uint32_t v = 1; v <= universe(); ++v) {
        if (!contains(v))
            continue;
        if (!first)
            out << ' ';
        out << 'x' << v << '=' << (value(v) ? '1' : '0');
        first = false;
    }
    return out.str();
}

} // namespace linc
