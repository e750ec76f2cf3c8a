#include "linc/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace linc {

bool CnfFormula::eval_word(std::uint64_t word) const {
    for (const Clause& cl : clauses) {
        bool sat = false;
        for (std::int32_t lit : cl) {
            const std::uint32_t var = static_cast<std::uint32_t>(lit < 0 ? -lit : lit);
            const bool v = (word >> (var - 1)) & 1u;
            if (lit > 0 ? v : !v) {
                sat = true;
                break;
            }
        }
        if (!sat)
            return false;
    }
    return true;
}

LinCnfResult encode_lin_cnf(std::uint32_t n) {
    if (n == 0)
        throw Error("encode_lin_cnf requires n >= 1");
    const PairVarMap map(n, PairMode::Unordered);
    LinCnfResult res;
    res.formula.var_count = map.var_count();
    std::set<Clause> dedup;
    auto lit = [&](std::uint32_t i, std::uint32_t j, bool positive) {
        const auto l = map.precedes(i, j);
        const bool neg = l.negated != !positive;
        return neg ? -static_cast<std::int32_t>(l.var) : static_cast<std::int32_t>(l.var);
    };
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint32_t j = 1; j <= n; ++j)
            for (std::uint32_t k = 1; k <= n; ++k) {
                if (i == j || i == k || j == k)
                    continue;
                // not(i<j) or not(j<k) or (i<k)
                Clause cl = {lit(i, j, false), lit(j, k, false), lit(i, k, true)};
                std::sort(cl.begin(), cl.end(), [](std::int32_t a, std::int32_t b) {
                    return std::abs(a) < std::abs(b);
                });
                res.raw_clause_count++;
                dedup.insert(std::move(cl));
            }
    res.formula.clauses.assign(dedup.begin(), dedup.end());
    std::sort(res.formula.clauses.begin(), res.formula.clauses.end());
    return res;
}

std::string to_dimacs(const LinCnfResult& r, std::uint32_t n) {
    const PairVarMap map(n, PairMode::Unordered);
    std::ostringstream out;
    out << "c transitivity constraints over pairwise preference variables, n=" << n << "\n";
    out << "c vars: lexicographic over pairs i<j, 1-based\n";
    for (std::uint32_t v = 1; v <= map.var_count(); ++v)
        out << "c " << v << " = " << map.var_name(v) << "\n";
    out << "c raw_clauses = " << r.raw_clause_count << "\n";
    out << "p cnf " << r.formula.var_count << ' ' << r.formula.clauses.size() << "\n";
    for (const Clause& cl : r.formula.clauses) {
        for (std::int32_t lit : cl)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace linc
