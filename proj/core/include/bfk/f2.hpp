#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bfk {

/// A GF(2) vector as a sorted list of nonzero coordinate indices.
/// Addition is symmetric difference.
using Chain = std::vector<int>;

Chain chain_add(const Chain& a, const Chain& b);
void chain_add_inplace(Chain& a, const Chain& b);
bool chain_contains(const Chain& a, int i);

/// Dense bit-packed matrix over GF(2).  Rows are the primary objects;
/// a subspace is a matrix whose rows span it.
class F2Matrix {
public:
    F2Matrix() : rows_(0), cols_(0) {}
    F2Matrix(int rows, int cols);

    static F2Matrix identity(int n);
    static F2Matrix zero(int rows, int cols) { return F2Matrix(rows, cols); }
    static F2Matrix from_rows(const std::vector<Chain>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v = true);
    void flip(int r, int c);

    void add_row_into(int src, int dst);   // row dst += row src
    void xor_row(int r, const F2Matrix& other, int other_row);

    Chain row_chain(int r) const;
    void set_row(int r, const Chain& support);
    bool row_is_zero(int r) const;
    int row_leading(int r) const;          // lowest set column, -1 if zero
    int row_trailing(int r) const;         // highest set column, -1 if zero

    /// Matrix-vector product M * x, with x and the result as Chains.
    Chain apply(const Chain& x) const;
    /// Matrix product (this * other).
    F2Matrix multiply(const F2Matrix& other) const;
    F2Matrix transpose() const;

    bool operator==(const F2Matrix& o) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    int stride_ = 0;                       // words per row
    std::vector<std::uint64_t> bits_;
    friend struct RowOps;
};

/// Result of one Gaussian elimination pass: echelonized kernel and image
/// bases plus a fixed preimage for every image basis vector.
struct RankKernelImage {
    int rank = 0;
    F2Matrix kernel;     // rows span ker(M), reduced echelon form
    F2Matrix image;      // rows span im(M), reduced echelon form
    F2Matrix preimage;   // preimage.row(i) maps to image.row(i) under M
};

/// Rank/kernel/image of M acting on column vectors (x -> Mx).
RankKernelImage rank_kernel_image(const F2Matrix& M);

/// Row space utilities.  All results are in reduced row echelon form with
/// zero rows dropped, so bases are canonical.
F2Matrix row_echelon(const F2Matrix& M);
int subspace_dim(const F2Matrix& span);
F2Matrix subspace_sum(const F2Matrix& a, const F2Matrix& b);
F2Matrix subspace_intersection(const F2Matrix& a, const F2Matrix& b);
bool subspace_contains(const F2Matrix& span, const Chain& v);
bool subspace_leq(const F2Matrix& a, const F2Matrix& b);  // a <= b

/// Solve span^T * c = v in the row space sense: express v as a sum of rows
/// of `span`.  Returns the row indices used, or nullopt if v is outside.
std::optional<std::vector<int>> express_in_span(const F2Matrix& span, const Chain& v);

/// {x : Mx in rowspace(S)} as a row-echelon basis (preimage of a subspace).
F2Matrix preimage_subspace(const F2Matrix& M, const F2Matrix& S);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<F2Matrix> f2_inverse(const F2Matrix& M);

}  // namespace bfk
