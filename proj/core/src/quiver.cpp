#include "bfk/quiver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bfk {

int Path::degree() const {
    int d = 0;
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i + 1] < vertices[i]) ++d;
    return d;
}

std::string Path::str() const {
    std::string out = "(";
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += "|";
        out += std::to_string(vertices[i]);
    }
    return out + ")";
}

std::optional<Path> reduce_path(std::vector<int> v, int m) {
    for (int x : v)
        if (x < 0 || x > m) return std::nullopt;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (std::abs(v[i + 1] - v[i]) != 1)
            return std::nullopt;  // not a path of the quiver

    // Rewrite leftmost reducible triple until none remains.  The peak rule
    // (a|a+1|a) -> (a|a-1|a) strictly lowers the vertex sum, so this
    // terminates; confluence is checked exhaustively in the tests.
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 2 < v.size(); ++i) {
            int a = v[i], b = v[i + 1], c = v[i + 2];
            if (c == a + 2 || c == a - 2) return std::nullopt;  // straight-through
            if (c == a && b == a + 1) {
                if (a == 0) return std::nullopt;  // (0|1|0) = 0
                v[i + 1] = a - 1;                 // (a|a+1|a) = (a|a-1|a)
                changed = true;
                break;
            }
        }
    }
    // Any nonzero normal form is a valley (a|a-1|a) or has at most one edge.
    if (v.size() > 3) return std::nullopt;
    if (v.size() == 3 && !(v[0] == v[2] && v[1] == v[0] - 1)) return std::nullopt;
    return Path{std::move(v)};
}

std::vector<Path> path_basis(int m) {
    if (m < 0) throw std::invalid_argument("path_basis: m must be >= 0");
    std::vector<Path> out;
    for (int i = 0; i <= m; ++i) out.push_back(Path{{i}});
    for (int i = 0; i < m; ++i) out.push_back(Path{{i, i + 1}});
    for (int i = 1; i <= m; ++i) out.push_back(Path{{i, i - 1}});
    for (int i = 1; i <= m; ++i) out.push_back(Path{{i, i - 1, i}});
    return out;
}

ZigzagAlgebra::ZigzagAlgebra(int m) : m_(m), basis_(path_basis(m)) {
    idem_.assign(m + 1, -1);
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].length() == 0) idem_[basis_[i].start()] = i;

    table_.assign(static_cast<size_t>(dim()) * dim(), -1);
    for (int a = 0; a < dim(); ++a) {
        for (int b = 0; b < dim(); ++b) {
            if (basis_[a].end() != basis_[b].start()) continue;
            std::vector<int> cat = basis_[a].vertices;
            cat.insert(cat.end(), basis_[b].vertices.begin() + 1, basis_[b].vertices.end());
            auto r = reduce_path(std::move(cat), m_);
            if (!r) continue;
            int id = find(*r);
            if (id < 0) throw std::logic_error("reduction left a non-basis path");
            table_[static_cast<size_t>(a) * dim() + b] = id;
        }
    }
}

int ZigzagAlgebra::idempotent(int v) const {
    if (v < 0 || v > m_) throw std::out_of_range("idempotent: vertex out of range");
    return idem_[v];
}

int ZigzagAlgebra::find(const Path& p) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[i] == p) return i;
    return -1;
}

int ZigzagAlgebra::multiply(int a, int b) const {
    return table_[static_cast<size_t>(a) * dim() + b];
}

std::optional<Path> ZigzagAlgebra::multiply(const Path& a, const Path& b) const {
    int ia = find(a), ib = find(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("multiply: input not in normal form");
    int r = multiply(ia, ib);
    if (r < 0) return std::nullopt;
    return basis_[r];
}

std::vector<int> ZigzagAlgebra::paths_between(int a, int b) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (basis_[i].start() == a && basis_[i].end() == b) out.push_back(i);
    return out;
}

}  // namespace bfk
