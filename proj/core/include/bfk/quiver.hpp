#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfk/f2.hpp"

namespace bfk {

/// A basis path of the zigzag path algebra in normal form, stored as the
/// complete ordered tuple of vertices it traverses.  Normal forms are
/// exactly (i), (i|i+1), (i|i-1) and (i|i-1|i).
struct Path {
    std::vector<int> vertices;

    int start() const { return vertices.front(); }
    int end() const { return vertices.back(); }
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    /// Internal degree: number of leftward (descending) steps.
    int degree() const;
    std::string str() const;  // "(i|j|k)"

    bool operator==(const Path& o) const { return vertices == o.vertices; }
    bool operator<(const Path& o) const { return vertices < o.vertices; }
};

/// Reduce an arbitrary vertex tuple by the defining relations.  Returns the
/// normal form, or nullopt when the path is zero in the algebra.
std::optional<Path> reduce_path(std::vector<int> vertices, int m);

/// The zigzag quiver algebra on vertices 0..m.  Immutable after
/// construction; the multiplication table is built once by rewriting.
class ZigzagAlgebra {
public:
    explicit ZigzagAlgebra(int m);

    int m() const { return m_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Path>& basis() const { return basis_; }
    const Path& path(int id) const { return basis_[id]; }
    int idempotent(int v) const;            // basis id of (v)
    int find(const Path& p) const;          // -1 if not a basis path

    /// Product of two basis paths: a basis id, or -1 when the product is 0.
    int multiply(int a, int b) const;
    std::optional<Path> multiply(const Path& a, const Path& b) const;

    /// All basis paths from vertex a to vertex b.
    std::vector<int> paths_between(int a, int b) const;

private:
    int m_;
    std::vector<Path> basis_;
    std::vector<int> idem_;
    std::vector<int> table_;  // dim*dim, -1 for zero
};

std::vector<Path> path_basis(int m);

}  // namespace bfk
