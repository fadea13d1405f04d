#include <map>
#include <stdexcept>
#include <set>

#include "doctest.h"

#include "bfk/quiver.hpp"

using namespace bfk;

namespace {

// Independent oracle: enumerate raw vertex tuples and reduce them by the
// defining relations, trying every reduction order to confirm confluence.
struct Oracle {
    int m;

    // All fully reduced outcomes of v, exploring every redex in every
    // order; the empty tuple stands for zero.  Confluence of the rewriting
    // system means this set is always a singleton.
    std::set<std::vector<int>> normal_forms(const std::vector<int>& v) const {
        std::set<std::vector<int>> redexes;
        for (size_t i = 0; i + 2 < v.size(); ++i) {
            int a = v[i], b = v[i + 1], c = v[i + 2];
            if (c == a + 2 || c == a - 2) {
                redexes.insert(std::vector<int>{});
            } else if (c == a && b == a + 1) {
                if (a == 0) {
                    redexes.insert(std::vector<int>{});
                } else {
                    auto w = v;
                    w[i + 1] = a - 1;
                    redexes.insert(w);
                }
            }
        }
        if (redexes.empty()) return {v};
        std::set<std::vector<int>> out;
        for (const auto& w : redexes) {
            if (w.empty()) out.insert(w);
            else for (const auto& nf : normal_forms(w)) out.insert(nf);
        }
        return out;
    }

    bool is_valid_path(const std::vector<int>& v) const {
        for (int x : v)
            if (x < 0 || x > m) return false;
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (std::abs(v[i + 1] - v[i]) != 1) return false;
        return true;
    }

    // surviving normal forms among all paths of length <= maxlen
    std::set<std::vector<int>> surviving(int maxlen) const {
        std::set<std::vector<int>> out;
        std::vector<std::vector<int>> frontier;
        for (int s = 0; s <= m; ++s) frontier.push_back({s});
        for (int len = 0; len <= maxlen; ++len) {
            std::vector<std::vector<int>> next;
            for (const auto& v : frontier) {
                auto nfs = normal_forms(v);
                REQUIRE(nfs.size() == 1);  // confluence by exhaustion
                if (!nfs.begin()->empty()) out.insert(*nfs.begin());
                for (int d : {-1, 1}) {
                    auto w = v;
                    w.push_back(v.back() + d);
                    if (is_valid_path(w)) next.push_back(w);
                }
            }
            frontier = std::move(next);
        }
        return out;
    }
};

}  // namespace

TEST_CASE("path basis dimension 4m+1, validated by the rewriting oracle") {
    CHECK(path_basis(0).size() == 1);
    CHECK(path_basis(1).size() == 5);
    CHECK(path_basis(2).size() == 9);
    for (int m = 0; m <= 3; ++m) {
        Oracle o{m};
        auto survivors = o.surviving(4);
        // oracle survivors of length <= 4 are exactly the normal-form basis
        std::set<std::vector<int>> expected;
        for (const auto& p : path_basis(m)) expected.insert(p.vertices);
        CHECK(survivors == expected);
        CHECK(static_cast<int>(expected.size()) == 4 * m + 1);
    }
    CHECK(path_basis(5).size() == 21);
}

TEST_CASE("defining relations") {
    ZigzagAlgebra A(2);
    auto mul = [&](std::vector<int> a, std::vector<int> b) {
        return A.multiply(Path{a}, Path{b});
    };
    CHECK_FALSE(mul({0, 1}, {1, 0}).has_value());          // (0|1|0) = 0
    auto loop = mul({1, 2}, {2, 1});                        // (1|2|1) = (1|0|1)
    REQUIRE(loop.has_value());
    CHECK(loop->vertices == std::vector<int>{1, 0, 1});
    CHECK(mul({2}, {2})->vertices == std::vector<int>{2});  // idempotent
    CHECK_FALSE(mul({2, 1}, {1, 0}).has_value());           // descending triple
    CHECK_FALSE(mul({0, 1}, {1, 2}).has_value());           // ascending triple
    CHECK(mul({1, 0}, {0, 1})->vertices == std::vector<int>{1, 0, 1});
}

TEST_CASE("degrees and lengths") {
    Path down{{1, 0}}, up{{0, 1}}, loop{{1, 0, 1}};
    CHECK(down.degree() == 1);
    CHECK(down.length() == 1);
    CHECK(up.degree() == 0);
    CHECK(up.length() == 1);
    CHECK(loop.degree() == 1);
    CHECK(loop.length() == 2);
    CHECK(loop.str() == "(1|0|1)");
}

TEST_CASE("associativity, exhaustively for m <= 5") {
    for (int m = 0; m <= 5; ++m) {
        ZigzagAlgebra A(m);
        int n = A.dim();
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (int r = 0; r < n; ++r) {
                    int pq = A.multiply(p, q);
                    int qr = A.multiply(q, r);
                    int lhs = pq < 0 ? -1 : A.multiply(pq, r);
                    int rhs = qr < 0 ? -1 : A.multiply(p, qr);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("unit, homogeneity, idempotent truncation") {
    for (int m = 1; m <= 4; ++m) {
        ZigzagAlgebra A(m);
        for (int p = 0; p < A.dim(); ++p) {
            const Path& P = A.path(p);
            // sum of idempotents is a two-sided unit
            int left = A.multiply(A.idempotent(P.start()), p);
            int right = A.multiply(p, A.idempotent(P.end()));
            CHECK(left == p);
            CHECK(right == p);
            for (int v = 0; v <= m; ++v) {
                int l = A.multiply(A.idempotent(v), p);
                CHECK((l == p || l == -1));
                if (v != P.start()) CHECK(l == -1);
            }
            // homogeneity
            for (int q = 0; q < A.dim(); ++q) {
                int pq = A.multiply(p, q);
                if (pq >= 0) {
                    CHECK(A.path(pq).degree() == P.degree() + A.path(q).degree());
                    CHECK(A.path(pq).length() == P.length() + A.path(q).length());
                }
            }
        }
    }
}

TEST_CASE("constructor rejects bad input") {
    ZigzagAlgebra A(2);
    CHECK_THROWS_AS(A.multiply(Path{{0, 1, 2}}, Path{{2}}), std::invalid_argument);
    CHECK_FALSE(reduce_path({0, 1, 2}, 2).has_value());
    CHECK_FALSE(reduce_path({0, 2}, 2).has_value());
    CHECK(reduce_path({2, 1, 2}, 2)->vertices == std::vector<int>{2, 1, 2});
}
