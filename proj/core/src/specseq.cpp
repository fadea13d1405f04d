#include "bfk/specseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace bfk {

F2Matrix differential_matrix(const AInfBimodule& M) {
    int n = M.space.dim();
    F2Matrix d(n, n);
    auto it = M.acts.find({0, 0});
    if (it != M.acts.end())
        for (const auto& [key, out] : it->second)
            for (int t : out) d.flip(t, key[0]);
    return d;
}

int homology_dim(const GradedBasisSpace& space, const F2Matrix& d) {
    auto rki = rank_kernel_image(d);
    return space.dim() - 2 * rki.rank;
}

std::map<std::pair<int, int>, int> dims_by_idem(const GradedBasisSpace& space) {
    std::map<std::pair<int, int>, int> out;
    for (int i = 0; i < space.dim(); ++i)
        out[{space.left_idem[i], space.right_idem[i]}]++;
    return out;
}

namespace {

struct Block {
    std::vector<int> ids;  // basis ids of this idempotent block
};

std::map<std::pair<int, int>, Block> split_blocks(const GradedBasisSpace& space) {
    std::map<std::pair<int, int>, Block> blocks;
    for (int i = 0; i < space.dim(); ++i)
        blocks[{space.left_idem[i], space.right_idem[i]}].ids.push_back(i);
    return blocks;
}

F2Matrix restrict_matrix(const F2Matrix& d, const std::vector<int>& ids) {
    F2Matrix out(static_cast<int>(ids.size()), static_cast<int>(ids.size()));
    for (size_t c = 0; c < ids.size(); ++c)
        for (size_t r = 0; r < ids.size(); ++r)
            if (d.get(ids[r], ids[c])) out.set(static_cast<int>(r), static_cast<int>(c));
    return out;
}

void check_block_preserving(const AInfBimodule& M, const F2Matrix& d) {
    for (int c = 0; c < M.space.dim(); ++c)
        for (int r = 0; r < M.space.dim(); ++r)
            if (d.get(r, c) &&
                (M.space.left_idem[r] != M.space.left_idem[c] ||
                 M.space.right_idem[r] != M.space.right_idem[c]))
                throw std::logic_error("differential does not preserve idempotent blocks");
}

}  // namespace

std::map<std::pair<int, int>, int> homology_dims_by_idem(const AInfBimodule& M) {
    F2Matrix d = differential_matrix(M);
    check_block_preserving(M, d);
    std::map<std::pair<int, int>, int> out;
    for (auto& [pair, block] : split_blocks(M.space)) {
        F2Matrix db = restrict_matrix(d, block.ids);
        auto rki = rank_kernel_image(db);
        int h = static_cast<int>(block.ids.size()) - 2 * rki.rank;
        if (h) out[pair] = h;
    }
    return out;
}

namespace {

/// Subspace spanned by basis vectors of level <= s.
F2Matrix filtration_span(const std::vector<int>& levels, int n, int s) {
    std::vector<Chain> rows;
    for (int i = 0; i < n; ++i)
        if (levels[i] <= s) rows.push_back({i});
    return F2Matrix::from_rows(rows, n);
}

F2Matrix image_of(const F2Matrix& d, const F2Matrix& span) {
    std::vector<Chain> rows;
    for (int r = 0; r < span.rows(); ++r) rows.push_back(d.apply(span.row_chain(r)));
    return row_echelon(F2Matrix::from_rows(rows, d.rows()));
}

}  // namespace

SpectralSequence spectral_sequence(const GradedBasisSpace& space, const F2Matrix& d) {
    int n = space.dim();
    SpectralSequence ss;
    if (n == 0) {
        ss.pages.push_back({});
        return ss;
    }
    int lmin = *std::min_element(space.level.begin(), space.level.end());
    int lmax = *std::max_element(space.level.begin(), space.level.end());
    int span_width = lmax - lmin;

    // Z^r_s = F_s cap d^{-1}(F_{s-r});  E^r_s = Z^r_s / (Z^{r-1}_{s-1} + d Z^{r-1}_{s+r-1})
    auto F = [&](int s) { return filtration_span(space.level, n, s); };
    auto Z = [&](int r, int s) {
        if (r <= 0) return F(s);
        return subspace_intersection(F(s), preimage_subspace(d, F(s - r)));
    };

    for (int r = 0;; ++r) {
        SpectralPage page;
        page.r = r;
        std::map<int, F2Matrix> denom;  // per level s
        for (int s = lmin; s <= lmax; ++s) {
            F2Matrix zrs = Z(r, s);
            F2Matrix den = subspace_sum(Z(r - 1, s - 1), image_of(d, Z(r - 1, s + r - 1)));
            den = subspace_intersection(den, zrs);  // boundary terms inside Z^r_s
            int dim = subspace_dim(zrs) - subspace_dim(den);
            if (dim > 0) page.dim_by_level[s] = dim;
            page.total_dim += dim;
            denom.emplace(s, std::move(den));
        }
        // rank of d_r: E^r_s -> E^r_{s-r}
        for (int s = lmin; s <= lmax; ++s) {
            F2Matrix zrs = Z(r, s);
            F2Matrix img = image_of(d, zrs);
            int target = s - r;
            F2Matrix den_t = (target >= lmin && target <= lmax)
                                 ? denom.at(target)
                                 : subspace_sum(Z(r - 1, target - 1),
                                                image_of(d, Z(r - 1, target + r - 1)));
            int rank = subspace_dim(subspace_sum(img, den_t)) - subspace_dim(den_t);
            if (rank > 0) page.d_rank_by_level[s] = rank;
            page.total_d_rank += rank;
        }
        ss.pages.push_back(page);
        if (page.total_d_rank == 0 && r > span_width) {
            int cp = static_cast<int>(ss.pages.size()) - 1;
            while (cp > 0 && ss.pages[cp - 1].total_d_rank == 0 &&
                   ss.pages[cp - 1].dim_by_level == page.dim_by_level)
                --cp;
            ss.collapse_page = cp;
            break;
        }
    }
    return ss;
}

SpectralSequence spectral_sequence(const AInfBimodule& M) {
    return spectral_sequence(M.space, differential_matrix(M));
}

std::map<std::pair<int, int>, SpectralSequence> spectral_sequence_by_idem(const AInfBimodule& M) {
    F2Matrix d = differential_matrix(M);
    check_block_preserving(M, d);
    std::map<std::pair<int, int>, SpectralSequence> out;
    for (auto& [pair, block] : split_blocks(M.space)) {
        GradedBasisSpace sub;
        sub.filtered = M.space.filtered;
        for (int id : block.ids)
            sub.add(M.space.labels[id], M.space.grading[id], M.space.level[id],
                    M.space.left_idem[id], M.space.right_idem[id]);
        out.emplace(pair, spectral_sequence(sub, restrict_matrix(d, block.ids)));
    }
    return out;
}

}  // namespace bfk
