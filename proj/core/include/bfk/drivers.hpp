#pragma once

#include <map>
#include <string>

#include "bfk/ainf.hpp"
#include "bfk/braid.hpp"
#include "bfk/specseq.hpp"

namespace bfk {

/// Result of comparing gr of the strands-side word bimodule against the
/// quiver-side word bimodule, constant for constant.
struct GrCompareResult {
    bool pass = true;
    std::string algebra_detail;  // gr(algebra) vs quiver algebra
    std::string module_detail;   // gr(word bimodule) vs quiver word bimodule
    std::string bijection_detail;  // gr (x) gr = gr((x)) on the strands side
};

GrCompareResult gr_compare(int m, const BraidWord& w);

/// Quasi-isomorphism-class fingerprints for a word: per-idempotent-pair
/// homology dimensions of the strands-side bimodule and of its associated
/// graded, plus the gr homology split by filtration level.
struct InvariantsTable {
    std::map<std::pair<int, int>, int> total;  // H of the word bimodule
    std::map<std::pair<int, int>, int> graded;  // H of gr
    std::map<std::pair<int, int>, std::map<int, int>> graded_by_level;
};

InvariantsTable invariants(int m, const BraidWord& w);

/// Spectral sequence report for a word: per-pair page dims with the
/// E^1 = gr-homology and E^infinity = total-homology cross-checks.
struct SSReport {
    bool consistent = true;
    std::map<std::pair<int, int>, SpectralSequence> pages;
    std::map<std::pair<int, int>, int> e1, einf, gr_h, total_h;
};

SSReport ss_report(int m, const BraidWord& w);

/// Re-derives the quiver-side tables through homotopy transfer and diffs
/// them against the hardcoded layer; `pass` means every diff was empty.
struct TransferDiff {
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> lines;  // (what, detail or "ok")
    void add(const std::string& what, const StructureDiff& d);
    void add(const std::string& what, bool ok, const std::string& detail);
};

TransferDiff transfer_diff(int m, int cap = 4);

}  // namespace bfk
