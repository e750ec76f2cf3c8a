#include "linc/model_set.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace linc {

bool ModelSet::contains(std::uint64_t w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

void ModelSet::normalize() {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

namespace {

const char* pairs_name(ModelSet::Pairs p) {
    switch (p) {
    case ModelSet::Pairs::Unordered: return "unordered";
    case ModelSet::Pairs::Ordered: return "ordered";
    case ModelSet::Pairs::None: return "none";
    }
    return "none";
}

} // namespace

std::string write_model_set(const ModelSet& ms) {
    std::ostringstream out;
    out << "modelset vars=" << ms.var_count << " n=" << ms.n << " pairs=" << pairs_name(ms.pairs)
        << "\n";
    out << std::hex;
    for (std::uint64_t w : ms.words)
        out << w << "\n";
    return out.str();
}

ModelSet read_model_set(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("empty model set", 1);
    ModelSet ms;
    {
        std::istringstream hs(line);
        std::string tag;
        hs >> tag;
        if (tag != "modelset")
            throw ParseError("expected 'modelset' header", 1);
        std::string field;
        while (hs >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos)
                throw ParseError("malformed header field '" + field + "'", 1);
            const std::string key = field.substr(0, eq);
            const std::string val = field.substr(eq + 1);
            if (key == "vars")
                ms.var_count = static_cast<std::uint32_t>(std::stoul(val));
            else if (key == "n")
                ms.n = static_cast<std::uint32_t>(std::stoul(val));
            else if (key == "pairs") {
                if (val == "unordered")
                    ms.pairs = ModelSet::Pairs::Unordered;
                else if (val == "ordered")
                    ms.pairs = ModelSet::Pairs::Ordered;
                else if (val == "none")
                    ms.pairs = ModelSet::Pairs::None;
                else
                    throw ParseError("unknown pairs mode '" + val + "'", 1);
            } else
                throw ParseError("unknown header field '" + key + "'", 1);
        }
    }
    std::uint64_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::uint64_t w = 0;
        const auto res = std::from_chars(line.data(), line.data() + line.size(), w, 16);
        if (res.ec != std::errc{} || res.ptr != line.data() + line.size())
            throw ParseError("bad hex word '" + line + "'", lineno);
        if (ms.var_count < 64 && w >= (std::uint64_t{1} << ms.var_count))
            throw ParseError("word exceeds the declared variable count", lineno);
        ms.words.push_back(w);
    }
    if (!std::is_sorted(ms.words.begin(), ms.words.end()))
        throw ParseError("model words are not sorted", lineno);
    if (std::adjacent_find(ms.words.begin(), ms.words.end()) != ms.words.end())
        throw ParseError("duplicate model word", lineno);
    return ms;
}

} // namespace linc
