#include "bfk/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace bfk {

BraidWord parse_braid(const std::string& text, int m) {
    if (m < 0) throw std::invalid_argument("parse_braid: m must be >= 0");
    BraidWord w;
    w.m = m;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_braid: not an integer: '" + tok + "'");
        }
        if (pos != tok.size())
            throw std::invalid_argument("parse_braid: not an integer: '" + tok + "'");
        if (v == 0) throw std::invalid_argument("parse_braid: generator index 0");
        if (std::abs(v) > m)
            throw std::invalid_argument("parse_braid: generator index " + std::to_string(v) +
                                        " out of range for m=" + std::to_string(m));
        w.letters.push_back(v);
    }
    return w;
}

std::string print_braid(const BraidWord& w) {
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(w.letters[i]);
    }
    return out;
}

}  // namespace bfk
