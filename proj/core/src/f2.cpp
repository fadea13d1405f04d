#include "bfk/f2.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace bfk {

Chain chain_add(const Chain& a, const Chain& b) {
    Chain out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

void chain_add_inplace(Chain& a, const Chain& b) {
    if (b.empty()) return;
    a = chain_add(a, b);
}

bool chain_contains(const Chain& a, int i) {
    return std::binary_search(a.begin(), a.end(), i);
}

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    stride_ = (cols + 63) / 64;
    bits_.assign(static_cast<size_t>(rows) * stride_, 0);
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i);
    return m;
}

F2Matrix F2Matrix::from_rows(const std::vector<Chain>& rows, int cols) {
    F2Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) m.set_row(r, rows[r]);
    return m;
}

bool F2Matrix::get(int r, int c) const {
    return (bits_[static_cast<size_t>(r) * stride_ + c / 64] >> (c % 64)) & 1u;
}

void F2Matrix::set(int r, int c, bool v) {
    auto& w = bits_[static_cast<size_t>(r) * stride_ + c / 64];
    if (v)
        w |= (std::uint64_t{1} << (c % 64));
    else
        w &= ~(std::uint64_t{1} << (c % 64));
}

void F2Matrix::flip(int r, int c) {
    bits_[static_cast<size_t>(r) * stride_ + c / 64] ^= (std::uint64_t{1} << (c % 64));
}

void F2Matrix::add_row_into(int src, int dst) {
    const std::uint64_t* s = &bits_[static_cast<size_t>(src) * stride_];
    std::uint64_t* d = &bits_[static_cast<size_t>(dst) * stride_];
    for (int w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void F2Matrix::xor_row(int r, const F2Matrix& other, int other_row) {
    assert(stride_ == other.stride_);
    const std::uint64_t* s = &other.bits_[static_cast<size_t>(other_row) * other.stride_];
    std::uint64_t* d = &bits_[static_cast<size_t>(r) * stride_];
    for (int w = 0; w < stride_; ++w) d[w] ^= s[w];
}

Chain F2Matrix::row_chain(int r) const {
    Chain out;
    for (int w = 0; w < stride_; ++w) {
        std::uint64_t v = bits_[static_cast<size_t>(r) * stride_ + w];
        while (v) {
            int b = __builtin_ctzll(v);
            out.push_back(w * 64 + b);
            v &= v - 1;
        }
    }
    return out;
}

void F2Matrix::set_row(int r, const Chain& support) {
    for (int w = 0; w < stride_; ++w) bits_[static_cast<size_t>(r) * stride_ + w] = 0;
    for (int c : support) set(r, c);
}

bool F2Matrix::row_is_zero(int r) const {
    for (int w = 0; w < stride_; ++w)
        if (bits_[static_cast<size_t>(r) * stride_ + w]) return false;
    return true;
}

int F2Matrix::row_leading(int r) const {
    for (int w = 0; w < stride_; ++w) {
        std::uint64_t v = bits_[static_cast<size_t>(r) * stride_ + w];
        if (v) return w * 64 + __builtin_ctzll(v);
    }
    return -1;
}

int F2Matrix::row_trailing(int r) const {
    for (int w = stride_ - 1; w >= 0; --w) {
        std::uint64_t v = bits_[static_cast<size_t>(r) * stride_ + w];
        if (v) return w * 64 + 63 - __builtin_clzll(v);
    }
    return -1;
}

Chain F2Matrix::apply(const Chain& x) const {
    // y_r = sum_c M[r][c] x_c
    Chain y;
    for (int r = 0; r < rows_; ++r) {
        int parity = 0;
        for (int c : x) parity ^= static_cast<int>(get(r, c));
        if (parity) y.push_back(r);
    }
    return y;
}

F2Matrix F2Matrix::multiply(const F2Matrix& other) const {
    assert(cols_ == other.rows_);
    F2Matrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k)
            if (get(r, k)) out.xor_row(r, other, k);
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) out.set(c, r);
    return out;
}

bool F2Matrix::operator==(const F2Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
}

std::string F2Matrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '.');
        os << '\n';
    }
    return os.str();
}

F2Matrix row_echelon(const F2Matrix& M) {
    F2Matrix w = M;
    int rows = w.rows(), cols = w.cols();
    std::vector<int> pivot_rows;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (w.get(r, c)) { sel = r; break; }
        if (sel < 0) continue;
        // swap rows sel and rank
        if (sel != rank) {
            Chain a = w.row_chain(sel), b = w.row_chain(rank);
            w.set_row(sel, b);
            w.set_row(rank, a);
        }
        for (int r = 0; r < rows; ++r)
            if (r != rank && w.get(r, c)) w.add_row_into(rank, r);
        ++rank;
    }
    F2Matrix out(rank, cols);
    for (int r = 0; r < rank; ++r) out.set_row(r, w.row_chain(r));
    return out;
}

int subspace_dim(const F2Matrix& span) { return row_echelon(span).rows(); }

F2Matrix subspace_sum(const F2Matrix& a, const F2Matrix& b) {
    assert(a.cols() == b.cols() || a.rows() == 0 || b.rows() == 0);
    int cols = std::max(a.cols(), b.cols());
    F2Matrix stacked(a.rows() + b.rows(), cols);
    for (int r = 0; r < a.rows(); ++r) stacked.set_row(r, a.row_chain(r));
    for (int r = 0; r < b.rows(); ++r) stacked.set_row(a.rows() + r, b.row_chain(r));
    return row_echelon(stacked);
}

RankKernelImage rank_kernel_image(const F2Matrix& M) {
    // Eliminate on columns of M by tracking the identity alongside:
    // work on the augmented rows [x | Mx] for x ranging over unit vectors.
    int n = M.cols();
    F2Matrix MT = M.transpose();  // rows are images of the unit vectors
    F2Matrix X = F2Matrix::identity(n);

    int rank = 0;
    for (int c = 0; c < M.rows() && rank < n; ++c) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (MT.get(r, c)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != rank) {
            Chain a = MT.row_chain(sel), b = MT.row_chain(rank);
            MT.set_row(sel, b); MT.set_row(rank, a);
            Chain xa = X.row_chain(sel), xb = X.row_chain(rank);
            X.set_row(sel, xb); X.set_row(rank, xa);
        }
        for (int r = 0; r < n; ++r)
            if (r != rank && MT.get(r, c)) {
                MT.add_row_into(rank, r);
                X.add_row_into(rank, r);
            }
        ++rank;
    }

    RankKernelImage out;
    out.rank = rank;
    out.image = F2Matrix(rank, M.rows());
    out.preimage = F2Matrix(rank, n);
    for (int r = 0; r < rank; ++r) {
        out.image.set_row(r, MT.row_chain(r));
        out.preimage.set_row(r, X.row_chain(r));
    }
    out.kernel = F2Matrix(n - rank, n);
    for (int r = rank; r < n; ++r) out.kernel.set_row(r - rank, X.row_chain(r));
    out.kernel = row_echelon(out.kernel);
    return out;
}

F2Matrix subspace_intersection(const F2Matrix& a, const F2Matrix& b) {
    // Zassenhaus: echelonize [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    int n = std::max(a.cols(), b.cols());
    int rows = a.rows() + b.rows();
    F2Matrix big(rows, 2 * n);
    for (int r = 0; r < a.rows(); ++r)
        for (int c : a.row_chain(r)) { big.set(r, c); big.set(r, n + c); }
    for (int r = 0; r < b.rows(); ++r)
        for (int c : b.row_chain(r)) big.set(a.rows() + r, c);
    F2Matrix e = row_echelon(big);
    std::vector<Chain> inter;
    for (int r = 0; r < e.rows(); ++r) {
        int lead = e.row_leading(r);
        if (lead >= n) {
            Chain v;
            for (int c : e.row_chain(r)) v.push_back(c - n);
            inter.push_back(v);
        }
    }
    return row_echelon(F2Matrix::from_rows(inter, n));
}

bool subspace_contains(const F2Matrix& span, const Chain& v) {
    if (v.empty()) return true;
    F2Matrix e = row_echelon(span);
    Chain acc = v;
    for (int r = 0; r < e.rows() && !acc.empty(); ++r) {
        int lead = e.row_leading(r);
        if (chain_contains(acc, lead)) acc = chain_add(acc, e.row_chain(r));
    }
    return acc.empty();
}

bool subspace_leq(const F2Matrix& a, const F2Matrix& b) {
    for (int r = 0; r < a.rows(); ++r)
        if (!subspace_contains(b, a.row_chain(r))) return false;
    return true;
}

std::optional<std::vector<int>> express_in_span(const F2Matrix& span, const Chain& v) {
    // Gaussian elimination with bookkeeping of row combinations.
    int rows = span.rows();
    F2Matrix w = span;
    F2Matrix track = F2Matrix::identity(rows);
    Chain acc = v;
    Chain used;  // indices into track rows, accumulated as a chain
    int rank = 0;
    for (int c = 0; c < span.cols() && rank < rows; ++c) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (w.get(r, c)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != rank) {
            Chain a = w.row_chain(sel), b = w.row_chain(rank);
            w.set_row(sel, b); w.set_row(rank, a);
            Chain ta = track.row_chain(sel), tb = track.row_chain(rank);
            track.set_row(sel, tb); track.set_row(rank, ta);
        }
        for (int r = rank + 1; r < rows; ++r)
            if (w.get(r, c)) { w.add_row_into(rank, r); track.add_row_into(rank, r); }
        if (chain_contains(acc, c)) {
            acc = chain_add(acc, w.row_chain(rank));
            used = chain_add(used, track.row_chain(rank));
        }
        ++rank;
    }
    if (!acc.empty()) return std::nullopt;
    std::vector<int> idx(used.begin(), used.end());
    return idx;
}

std::optional<F2Matrix> f2_inverse(const F2Matrix& M) {
    if (M.rows() != M.cols()) return std::nullopt;
    int n = M.rows();
    F2Matrix w = M;
    F2Matrix inv = F2Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int r = c; r < n; ++r)
            if (w.get(r, c)) { sel = r; break; }
        if (sel < 0) return std::nullopt;
        if (sel != c) {
            Chain a = w.row_chain(sel), b = w.row_chain(c);
            w.set_row(sel, b); w.set_row(c, a);
            Chain ia = inv.row_chain(sel), ib = inv.row_chain(c);
            inv.set_row(sel, ib); inv.set_row(c, ia);
        }
        for (int r = 0; r < n; ++r)
            if (r != c && w.get(r, c)) { w.add_row_into(c, r); inv.add_row_into(c, r); }
    }
    return inv;
}

F2Matrix preimage_subspace(const F2Matrix& M, const F2Matrix& S) {
    // {x : Mx in rowspace(S)}.  Solve by eliminating [M^T | I] against S.
    int n = M.cols();
    F2Matrix Se = row_echelon(S);
    F2Matrix MT = M.transpose();  // row r = M(e_r)
    F2Matrix X = F2Matrix::identity(n);
    // reduce each M(e_r) modulo Se
    for (int r = 0; r < n; ++r) {
        Chain img = MT.row_chain(r);
        for (int s = 0; s < Se.rows() && !img.empty(); ++s) {
            int lead = Se.row_leading(s);
            if (chain_contains(img, lead)) img = chain_add(img, Se.row_chain(s));
        }
        MT.set_row(r, img);
    }
    // now need {x : (M mod S)(x) = 0}: eliminate rows of MT tracking X
    int rank = 0;
    for (int c = 0; c < M.rows() && rank < n; ++c) {
        int sel = -1;
        for (int r = rank; r < n; ++r)
            if (MT.get(r, c)) { sel = r; break; }
        if (sel < 0) continue;
        if (sel != rank) {
            Chain a = MT.row_chain(sel), b = MT.row_chain(rank);
            MT.set_row(sel, b); MT.set_row(rank, a);
            Chain xa = X.row_chain(sel), xb = X.row_chain(rank);
            X.set_row(sel, xb); X.set_row(rank, xa);
        }
        for (int r = 0; r < n; ++r)
            if (r != rank && MT.get(r, c)) { MT.add_row_into(rank, r); X.add_row_into(rank, r); }
        ++rank;
    }
    F2Matrix out(n - rank, n);
    for (int r = rank; r < n; ++r) out.set_row(r - rank, X.row_chain(r));
    return row_echelon(out);
}

}  // namespace bfk
