#include "linc/nnf_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "linc/circuit_ops.hpp"

namespace linc {

std::string export_nnf(const Circuit& c) {
    const SizeReport rep = size(c);
    std::ostringstream out;
    out << "nnf " << rep.node_count << ' ' << rep.edge_count << ' ' << c.var_count() << '\n';
    std::vector<NodeIndex> pos(c.table_size(), 0);
    NodeIndex next = 0;
    for (NodeIndex i : c.reachable_nodes()) {
        pos[i] = next++;
        const Node& n = c.node(i);
        switch (n.kind) {
        case NodeKind::True:
            out << "A 0\n";
            break;
        case NodeKind::False:
            out << "O 0 0\n";
            break;
        case NodeKind::Literal:
            out << "L " << (n.negated ? "-" : "") << n.var << '\n';
            break;
        case NodeKind::And:
            out << "A " << n.children.size();
            for (NodeIndex ch : n.children)
                out << ' ' << pos[ch];
            out << '\n';
            break;
        case NodeKind::Or:
            out << "O 0 " << n.children.size();
            for (NodeIndex ch : n.children)
                out << ' ' << pos[ch];
            out << '\n';
            break;
        }
    }
    return out.str();
}

namespace {

struct LineTokens {
    std::vector<std::string> toks;
    std::uint64_t number; // 1-based
};

std::int64_t parse_int(const std::string& tok, std::uint64_t line) {
    std::int64_t v = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line);
    return v;
}

} // namespace

Circuit import_nnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<LineTokens> lines;
    std::uint64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        LineTokens lt;
        lt.number = lineno;
        std::string tok;
        while (ls >> tok)
            lt.toks.push_back(tok);
        if (lt.toks.empty())
            throw ParseError("blank line", lineno);
        lines.push_back(std::move(lt));
    }
    if (lines.empty())
        throw ParseError("empty input", 1);
    const auto& hdr = lines.front();
    if (hdr.toks.size() != 4 || hdr.toks[0] != "nnf")
        throw ParseError("malformed header, expected 'nnf <nodes> <edges> <vars>'", 1);
    const std::int64_t node_count = parse_int(hdr.toks[1], 1);
    const std::int64_t edge_count = parse_int(hdr.toks[2], 1);
    const std::int64_t var_count = parse_int(hdr.toks[3], 1);
    if (node_count < 1 || edge_count < 0 || var_count < 0)
        throw ParseError("header counts out of range", 1);
    if (static_cast<std::int64_t>(lines.size()) - 1 != node_count)
        throw ParseError("header announces " + std::to_string(node_count) + " nodes but " +
                             std::to_string(lines.size() - 1) + " node lines follow",
                         1);

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(node_count));
    std::int64_t edges_seen = 0;
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        const auto& lt = lines[idx];
        const std::uint64_t ln = lt.number;
        const std::string& tag = lt.toks[0];
        Node n;
        if (tag == "L") {
            if (lt.toks.size() != 2)
                throw ParseError("literal line takes exactly one argument", ln);
            const std::int64_t lit = parse_int(lt.toks[1], ln);
            if (lit == 0)
                throw ParseError("literal 0 is not a variable", ln);
            const std::int64_t var = lit < 0 ? -lit : lit;
            if (var > var_count)
                throw ParseError("literal variable " + std::to_string(var) +
                                     " exceeds declared var count",
                                 ln);
            n.kind = NodeKind::Literal;
            n.var = static_cast<std::uint32_t>(var);
            n.negated = lit < 0;
        } else if (tag == "A" || tag == "O") {
            std::size_t at = 1;
            if (tag == "O") {
                if (lt.toks.size() < 3)
                    throw ParseError("OR line needs '<j> <c>' counts", ln);
                parse_int(lt.toks[1], ln); // decision annotation, ignored
                at = 2;
            } else if (lt.toks.size() < 2) {
                throw ParseError("AND line needs a child count", ln);
            }
            const std::int64_t cnt = parse_int(lt.toks[at], ln);
            if (cnt < 0 || lt.toks.size() != at + 1 + static_cast<std::size_t>(cnt))
                throw ParseError("child count does not match the child list", ln);
            if (cnt == 0) {
                n.kind = tag == "A" ? NodeKind::True : NodeKind::False;
            } else {
                n.kind = tag == "A" ? NodeKind::And : NodeKind::Or;
                for (std::int64_t k = 0; k < cnt; ++k) {
                    const std::int64_t ch = parse_int(lt.toks[at + 1 + k], ln);
                    if (ch < 0 || ch >= static_cast<std::int64_t>(nodes.size()))
                        throw ParseError("child index " + std::to_string(ch) +
                                             " does not reference an earlier node",
                                         ln);
                    n.children.push_back(static_cast<NodeIndex>(ch));
                }
                edges_seen += cnt;
            }
        } else {
            throw ParseError("unknown node tag '" + tag + "'", ln);
        }
        nodes.push_back(std::move(n));
    }
    if (edges_seen != edge_count)
        throw ParseError("header announces " + std::to_string(edge_count) + " edges but " +
                             std::to_string(edges_seen) + " were read",
                         1);

    // Rebuild through the builder. Exports never contain duplicate nodes
    // (they come from a consing builder), so the rebuilt table keeps the
    // emitted order and round-trips byte-exactly.
    CircuitBuilder b;
    std::vector<NodeIndex> map(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        switch (n.kind) {
        case NodeKind::True: map[i] = b.constant(true); break;
        case NodeKind::False: map[i] = b.constant(false); break;
        case NodeKind::Literal: map[i] = b.literal(n.var, n.negated); break;
        case NodeKind::And: {
            std::vector<NodeIndex> ch;
            for (NodeIndex c : n.children)
                ch.push_back(map[c]);
            map[i] = b.conj(std::move(ch));
            break;
        }
        case NodeKind::Or: {
            std::vector<NodeIndex> ch;
            for (NodeIndex c : n.children)
                ch.push_back(map[c]);
            map[i] = b.disj(std::move(ch));
            break;
        }
        }
    }
    return b.finish(map.back(), static_cast<std::uint32_t>(var_count));
}

Circuit import_nnf_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return import_nnf(buf.str());
}

std::string export_dot(const Circuit& c, const LiteralLabeler& label) {
    std::ostringstream out;
    out << "digraph nnf {\n";
    out << "  rankdir=TB;\n  node [shape=ellipse];\n";
    std::vector<NodeIndex> pos(c.table_size(), 0);
    NodeIndex next = 0;
    for (NodeIndex i : c.reachable_nodes())
        pos[i] = next++;
    for (NodeIndex i : c.reachable_nodes()) {
        const Node& n = c.node(i);
        std::string text;
        switch (n.kind) {
        case NodeKind::True: text = "⊤"; break;
        case NodeKind::False: text = "⊥"; break;
        case NodeKind::And: text = "∧"; break;
        case NodeKind::Or: text = "∨"; break;
        case NodeKind::Literal:
            if (label)
                text = label(n.var, n.negated);
            else
                text = (n.negated ? std::string("¬x") : std::string("x")) +
                       std::to_string(n.var);
            break;
        }
        out << "  n" << pos[i] << " [label=\"" << text << "\"];\n";
    }
    for (NodeIndex i : c.reachable_nodes())
        for (NodeIndex ch : c.node(i).children)
            out << "  n" << pos[i] << " -> n" << pos[ch] << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace linc
