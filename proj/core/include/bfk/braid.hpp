#pragma once

#include <string>
#include <vector>

namespace bfk {

/// A word in the Artin generators of the braid group on m+1 strands:
/// signed indices k with 1 <= |k| <= m.  Words are kept as written; free
/// reduction is never applied.
struct BraidWord {
    int m = 0;
    std::vector<int> letters;

    bool empty() const { return letters.empty(); }
};

/// Parse whitespace-separated signed integers.  Empty text is the identity
/// braid.  Throws std::invalid_argument on non-integer tokens, zero, or
/// indices out of range.
BraidWord parse_braid(const std::string& text, int m);

std::string print_braid(const BraidWord& w);

}  // namespace bfk
