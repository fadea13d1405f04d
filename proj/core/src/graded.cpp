#include "bfk/graded.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfk {

int GradedBasisSpace::add(const std::string& label, std::vector<int> grade,
                          int lev, int li, int ri) {
    if (index.count(label))
        throw std::invalid_argument("duplicate basis label: " + label);
    int id = dim();
    labels.push_back(label);
    index.emplace(label, id);
    grading.push_back(std::move(grade));
    level.push_back(lev);
    left_idem.push_back(li);
    right_idem.push_back(ri);
    return id;
}

int GradedBasisSpace::find(const std::string& label) const {
    auto it = index.find(label);
    return it == index.end() ? -1 : it->second;
}

std::string GradedBasisSpace::chain_str(const Chain& c) const {
    if (c.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += "+";
        out += labels[c[i]];
    }
    return out;
}

GradedBasisSpace apply_shift(const GradedBasisSpace& V, const GradingShift& s) {
    GradedBasisSpace out = V;
    for (auto& g : out.grading) {
        if (s.shift.size() > g.size())
            throw std::invalid_argument("shift arity exceeds grading arity");
        for (size_t i = 0; i < s.shift.size(); ++i) g[i] += s.shift[i];
    }
    if (s.filt_shift != 0) {
        for (auto& l : out.level) l += s.filt_shift;
        out.filtered = true;
    }
    return out;
}

QuotientBasis quotient_basis(const GradedBasisSpace& V, const std::vector<Chain>& W) {
    int n = V.dim();
    for (const auto& w : W)
        for (int c : w)
            if (c < 0 || c >= n)
                throw std::invalid_argument("spanning vector not inside V");

    // Echelonize W by trailing (highest-index) pivots so that representative
    // labels are the earliest basis labels, e.g. {rho,sigma}/(rho+sigma) -> rho.
    std::vector<Chain> rows = W;
    std::vector<Chain> reduced;
    std::vector<int> pivots;
    for (Chain r : rows) {
        for (size_t k = 0; k < reduced.size(); ++k) {
            if (!r.empty() && chain_contains(r, pivots[k]))
                r = chain_add(r, reduced[k]);
        }
        if (r.empty()) continue;
        int piv = r.back();
        for (size_t k = 0; k < reduced.size(); ++k)
            if (chain_contains(reduced[k], piv)) reduced[k] = chain_add(reduced[k], r);
        reduced.push_back(r);
        pivots.push_back(piv);
    }

    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;

    QuotientBasis out;
    out.space.graded_ops = V.graded_ops;
    out.space.filtered = V.filtered;
    for (int i = 0; i < n; ++i) {
        if (is_pivot[i]) continue;
        out.space.add(V.labels[i], V.grading[i], V.level[i], V.left_idem[i], V.right_idem[i]);
        out.rep_index.push_back(i);
    }
    int q = out.space.dim();
    out.section = F2Matrix(n, q);
    for (int j = 0; j < q; ++j) out.section.set(out.rep_index[j], j);
    // projection: reduce each V basis vector modulo W, then read representative coords
    out.projection = F2Matrix(q, n);
    for (int i = 0; i < n; ++i) {
        Chain v{i};
        for (size_t k = 0; k < reduced.size(); ++k)
            if (chain_contains(v, pivots[k])) v = chain_add(v, reduced[k]);
        for (int c : v) {
            auto it = std::lower_bound(out.rep_index.begin(), out.rep_index.end(), c);
            if (it == out.rep_index.end() || *it != c)
                throw std::logic_error("quotient reduction left a pivot coordinate");
            out.projection.set(static_cast<int>(it - out.rep_index.begin()), i);
        }
    }
    return out;
}

}  // namespace bfk
