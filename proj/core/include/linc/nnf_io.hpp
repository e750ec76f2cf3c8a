#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "linc/circuit.hpp"

namespace linc {

// c2d-style text format. Header `nnf <nodes> <edges> <vars>`, then one line
// per reachable node in topological order, root last:
//   L <signed-literal>      1-based, negative = negated
//   A <c> <child...>        TRUE is the zero-child `A 0`
//   O <j> <c> <child...>    j always 0; FALSE is `O 0 0`
// Child references are 0-based positions of earlier lines.
std::string export_nnf(const Circuit& c);

// Inverse of export_nnf. The node table is rebuilt exactly in the emitted
// order (no re-consing), so export(import(text)) == text.
Circuit import_nnf(const std::string& text);
Circuit import_nnf_file(const std::string& path);

// Maps a literal to its display label, e.g. "x_{1,2}".
using LiteralLabeler = std::function<std::string(std::uint32_t var, bool negated)>;

// Graphviz dump with stable node numbering (same order as export_nnf).
// Default labels are x<k>; pass a labeler for pair-aware names.
std::string export_dot(const Circuit& c, const LiteralLabeler& label = {});

} // namespace linc
