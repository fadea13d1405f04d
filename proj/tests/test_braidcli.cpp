#include <stdexcept>

#include "doctest.h"

#include "bfk/drivers.hpp"
#include "bfk/hfside.hpp"

using namespace bfk;

TEST_CASE("parse round trip and validation") {
    BraidWord w = parse_braid("1 -2 1", 2);
    CHECK(w.letters == std::vector<int>{1, -2, 1});
    CHECK(print_braid(w) == "1 -2 1");
    CHECK(parse_braid(print_braid(w), 2).letters == w.letters);

    BraidWord e = parse_braid("", 3);
    CHECK(e.empty());

    CHECK_THROWS_AS(parse_braid("3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("x", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_braid("1.5", 2), std::invalid_argument);
}

TEST_CASE("words are not freely reduced") {
    BraidWord w = parse_braid("1 -1", 1);
    CHECK(w.letters.size() == 2);
}

TEST_CASE("gr_compare passes on single letters and the identity word") {
    for (int m = 1; m <= 2; ++m) {
        CHECK(gr_compare(m, parse_braid("", m)).pass);
        for (int k = 1; k <= m; ++k) {
            CHECK(gr_compare(m, parse_braid(std::to_string(k), m)).pass);
            CHECK(gr_compare(m, parse_braid(std::to_string(-k), m)).pass);
        }
    }
}

TEST_CASE("gr_compare passes on a mixed two-letter word") {
    GrCompareResult res = gr_compare(2, parse_braid("1 -2", 2));
    INFO(res.algebra_detail << res.module_detail << res.bijection_detail);
    CHECK(res.pass);
}

TEST_CASE("invariants tables") {
    // identity word: ranks of the algebra blocks (1 on the diagonal, 2 below)
    InvariantsTable id = invariants(2, parse_braid("", 2));
    std::map<std::pair<int, int>, int> expect;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= i; ++j) expect[{i, j}] = i == j ? 1 : 2;
    CHECK(id.total == expect);
    CHECK(id.graded == expect);

    // braid relation invariance
    InvariantsTable a = invariants(2, parse_braid("1 2 1", 2));
    InvariantsTable b = invariants(2, parse_braid("2 1 2", 2));
    CHECK(a.total == b.total);
    CHECK(a.graded == b.graded);

    // a cancelling pair has the identity-word table
    InvariantsTable c = invariants(2, parse_braid("1 -1", 2));
    CHECK(c.total == id.total);
}

TEST_CASE("spectral sequence report is internally consistent") {
    SSReport rep = ss_report(1, parse_braid("1 -1", 1));
    CHECK(rep.consistent);
    SSReport rep2 = ss_report(2, parse_braid("1 2", 2));
    CHECK(rep2.consistent);
}
