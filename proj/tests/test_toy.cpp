#include <stdexcept>

#include "doctest.h"

#include "bfk/specseq.hpp"
#include "bfk/toy.hpp"

using namespace bfk;

namespace {

// Independent simplicial oracle: two vertices a, b and two edges A, B with
// boundary dA = dB = a + b; the coboundary is the transpose of the
// incidence matrix, and the involution swaps the edges.
struct SimplicialOracle {
    F2Matrix coboundary() const {
        F2Matrix inc(2, 2);  // rows vertices {a,b}, cols edges {A,B}
        inc.set(0, 0); inc.set(1, 0);
        inc.set(0, 1); inc.set(1, 1);
        // delta on cochains: (delta f)(edge) = f(boundary edge)
        F2Matrix d(4, 4);  // basis order a*, b*, A*, B*
        for (int e = 0; e < 2; ++e)
            for (int v = 0; v < 2; ++v)
                if (inc.get(v, e)) d.set(2 + e, v);
        return d;
    }
    F2Matrix involution_diff() const {
        F2Matrix d(4, 4);
        // tau fixes a*, b*, swaps A* and B*; d_tau = 1 + tau
        d.set(2, 2); d.set(3, 2);
        d.set(2, 3); d.set(3, 3);
        return d;
    }
};

}  // namespace

TEST_CASE("differentials come from the simplicial structure") {
    ToyComplex T = build_toy();
    SimplicialOracle o;
    CHECK(T.delta == o.coboundary());
    CHECK(T.dtau == o.involution_diff());
    // delta(a*) = A* + B*, d_tau(A*) = A* + B*, d_tau(a*) = 0
    CHECK(T.delta.apply({0}) == Chain{2, 3});
    CHECK(T.dtau.apply({2}) == Chain{2, 3});
    CHECK(T.dtau.apply({0}).empty());
}

TEST_CASE("cup product values from the table") {
    ToyComplex T = build_toy();
    int a = 0, b = 1, A = 2, B = 3;
    CHECK(T.graded->eval(2, {{a}, {A}}) == Chain{A});
    CHECK(T.graded->eval(2, {{A}, {a}}).empty());
    CHECK(T.graded->eval(2, {{a}, {B}}) == Chain{B});
    CHECK(T.graded->eval(2, {{A}, {b}}) == Chain{A});
    // a* + b* is the unit
    for (int x = 0; x < 4; ++x) {
        CHECK(T.graded->eval(2, {{a, b}, {x}}) == Chain{x});
        CHECK(T.graded->eval(2, {{x}, {a, b}}) == Chain{x});
    }
}

TEST_CASE("graded homology dims (1,1) by degree") {
    ToyComplex T = build_toy();
    // degree 0 part: ker(delta restricted) = span(a*+b*)
    F2Matrix d0(2, 2);  // from {a*,b*} to {A*,B*} coordinates collapsed
    for (int c = 0; c < 2; ++c)
        for (int r = 0; r < 2; ++r)
            if (T.delta.get(2 + r, c)) d0.set(r, c);
    auto rki = rank_kernel_image(d0);
    CHECK(rki.kernel.rows() == 1);               // H^0 dim 1
    CHECK(2 - rki.rank == 1);                    // H^1 dim 1
}

TEST_CASE("full verification report") {
    ToyReport rep = toy_verify();
    for (const auto& l : rep.lines) {
        INFO(l);
        CHECK(l.rfind("[PASS]", 0) == 0);
    }
    CHECK(rep.ok);
}

TEST_CASE("spectral sequence of the toy filtration") {
    ToyComplex T = build_toy();
    F2Matrix d(4, 4);
    for (const auto& [key, out] : T.total->mult.at(1))
        for (int t : out) d.set(t, key[0]);
    SpectralSequence ss = spectral_sequence(T.space, d);
    REQUIRE(ss.pages.size() >= 2);
    CHECK(ss.pages[0].total_dim == 4);
    CHECK(ss.pages[1].total_dim == 2);
    CHECK(ss.pages[1].total_d_rank == 0);
    CHECK(ss.einf().total_dim == 2);
    // E^1 by level: one class at level 0, one at level 1
    CHECK(ss.pages[1].dim_by_level.at(0) == 1);
    CHECK(ss.pages[1].dim_by_level.at(1) == 1);
}
