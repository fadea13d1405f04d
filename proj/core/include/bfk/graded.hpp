#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bfk/f2.hpp"

namespace bfk {

/// A finite GF(2) vector space with labeled basis, an integer multigrading
/// (up to 3 components on the quiver side, a single Maslov component on the
/// strands side), optional per-basis filtration levels on an adapted basis,
/// and optional left/right idempotent indices.
struct GradedBasisSpace {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<std::vector<int>> grading;   // one vector per basis label; may be empty
    bool graded_ops = false;                 // enforce op-degree homogeneity in checkers
    std::vector<int> level;                  // filtration level per label
    bool filtered = false;
    std::vector<int> left_idem, right_idem;  // -1 where not applicable

    int dim() const { return static_cast<int>(labels.size()); }
    int add(const std::string& label,
            std::vector<int> grade = {},
            int lev = 0, int li = -1, int ri = -1);
    int find(const std::string& label) const;  // -1 if absent

    std::string chain_str(const Chain& c) const;
};

struct GradingShift {
    std::vector<int> shift;  // per grading component
    int filt_shift = 0;
};

/// Shift gradings and filtration levels; labels are unchanged.
/// (V shifted by s)_(g) = V_(g - s), so each basis grading gains s.
GradedBasisSpace apply_shift(const GradedBasisSpace& V, const GradingShift& s);

/// Quotient V/W with a chosen section.  W is given by spanning vectors in
/// V-coordinates.  Representatives are the basis labels of V that are not
/// trailing-pivot positions of W, so an adapted basis quotients onto its own
/// low-level labels.  projection * section = identity.
struct QuotientBasis {
    GradedBasisSpace space;   // labels borrowed from the chosen representatives
    std::vector<int> rep_index;  // representative basis index in V per quotient label
    F2Matrix projection;      // dim(Q) x dim(V)
    F2Matrix section;         // dim(V) x dim(Q)
};

QuotientBasis quotient_basis(const GradedBasisSpace& V, const std::vector<Chain>& W);

}  // namespace bfk
