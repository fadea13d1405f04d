#include <stdexcept>

#include "doctest.h"

#include "bfk/complexes.hpp"
#include "bfk/khside.hpp"
#include "bfk/toy.hpp"
#include "bfk/transfer.hpp"

using namespace bfk;

TEST_CASE("rooted tree counts follow the bracketing sequence") {
    CHECK(rooted_trees(2).size() == 1);
    CHECK(rooted_trees(3).size() == 3);
    CHECK(rooted_trees(4).size() == 11);
    CHECK(rooted_trees(5).size() == 45);
}

TEST_CASE("generic split on zero differential is the identity splitting") {
    GradedBasisSpace C;
    C.add("e0");
    C.add("e1");
    SplittingData S = split(C, F2Matrix::zero(2, 2));
    CHECK(S.H.dim() == 2);
    CHECK(S.iota.multiply(S.proj) == F2Matrix::identity(2));
    CHECK(S.htpy == F2Matrix::zero(2, 2));
}

TEST_CASE("generic split on an acyclic complex") {
    // Hom(Q_0, Q_1) for m = 1: (0) -> (0|1), acyclic
    ZigzagAlgebra alg(1);
    HomComplex H = hom_complex(alg, build_Q(1, 0), build_Q(1, 1));
    F2Matrix d(H.space.dim(), H.space.dim());
    for (const auto& [key, out] : H.differential)
        for (int t : out) d.set(t, key[0]);
    SplittingData S = split(H.space, d);
    CHECK(S.H.dim() == 0);
    // h inverts d on its image
    CHECK(validate_splitting(S).ok);
}

TEST_CASE("generic split of the toy complex has homology dims (1,1)") {
    ToyComplex T = build_toy();
    F2Matrix d(4, 4);
    for (const auto& [key, out] : T.graded->mult.at(1))
        for (int t : out) d.set(t, key[0]);
    SplittingData S = split(T.raw, d);
    CHECK(S.H.dim() == 2);
}

TEST_CASE("split_prescribed accepts the toy splittings and rejects broken maps") {
    ToyComplex T = build_toy();
    CHECK_NOTHROW(toy_split_delta(T));
    CHECK_NOTHROW(toy_split_total(T));

    // h with h^2 != 0 must be rejected
    GradedBasisSpace H;
    H.add("1");
    H.add("x");
    F2Matrix iota(4, 2), proj(2, 4), h(4, 4);
    iota.set(0, 0); iota.set(1, 0); iota.set(2, 1);
    proj.set(0, 0); proj.set(1, 2); proj.set(1, 3);
    h.set(1, 3); h.set(3, 1);  // h^2 != 0
    CHECK_THROWS_WITH_AS(split_prescribed(T.raw, T.delta, H, iota, proj, h),
                         doctest::Contains("h^2"), std::invalid_argument);
}

TEST_CASE("prescribed splittings for the Hom algebra and the column modules") {
    for (int m = 1; m <= 3; ++m) {
        AInfAlgebra B = build_B(m);
        CHECK_NOTHROW(bkh_prescribed_splitting(B, m));
        auto Bp = std::make_shared<AInfAlgebra>(B);
        for (int k = 1; k <= m; ++k) {
            AInfBimodule Pt = build_Ptilde(m, k, Bp);
            AInfBimodule kPt = build_kPtilde(m, k, Bp);
            CHECK_NOTHROW(pk_prescribed_splitting(Pt, m, k));
            CHECK_NOTHROW(kp_prescribed_splitting(kPt, m, k));
        }
    }
}

TEST_CASE("transfer of a dga with zero differential is the original structure") {
    auto A = bkh(2);  // honest algebra, no differential
    SplittingData S = split(A->space, F2Matrix::zero(A->space.dim(), A->space.dim()));
    // relabel H to match A so the comparison is label-for-label
    S.H = A->space;
    AInfAlgebra T = transfer_algebra(*A, S, 4);
    T.idem_ids = A->idem_ids;
    T.unit = A->unit;
    CHECK(compare_algebras(T, *A).equal);
    CHECK(!T.mult.count(3));
    CHECK(!T.mult.count(4));
}

TEST_CASE("transferred minimal model of the Hom dg algebra is formal, m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        AInfAlgebra B = build_B(m);
        SplittingData S = bkh_prescribed_splitting(B, m);
        AInfAlgebra T = transfer_algebra(B, S, 4);
        CHECK(!T.mult.count(3));
        CHECK(!T.mult.count(4));
        FormalityCertificate cert = check_formality_alg(B, S);
        CHECK(cert.formal);
        CHECK(cert.which == "FormalCond");
    }
}

TEST_CASE("formality certificates reject a perturbed homotopy") {
    ToyComplex T = build_toy();
    SplittingData S = toy_split_delta(T);
    // break the side condition proj h = 0 while keeping the five identities
    // is impossible; instead perturb h so h iota != 0 and revalidate the
    // certificate path only
    S.htpy.set(1, 0);  // h(a*) = b*: now h iota != 0 since iota(1) = a*+b*
    FormalityCertificate cert = check_formality_alg(*T.graded, S);
    CHECK_FALSE(cert.formal);
}

TEST_CASE("module transfer: column modules over the homology algebra") {
    for (int m = 1; m <= 3; ++m) {
        AInfAlgebra B = build_B(m);
        SplittingData SB = bkh_prescribed_splitting(B, m);
        auto Akh = bkh(m);
        auto Bp = std::make_shared<AInfAlgebra>(B);
        for (int k = 1; k <= m; ++k) {
            AInfBimodule Pt = build_Ptilde(m, k, Bp);
            SplittingData SP = pk_prescribed_splitting(Pt, m, k);
            AInfBimodule Pt_r = restrict_along_iota(Pt, SB, Akh);
            AInfBimodule HP = transfer_bimodule(Pt_r, SP, 4);
            // all operations of total arity > 2 vanish (formality)
            for (const auto& [sig, op] : HP.acts)
                if (sig.first + 1 + sig.second > 2) CHECK(op.empty());
            CHECK(compare_bimodules(HP, pk_kh(m, k, Akh)).equal);
            FormalityCertificate cert = check_formality_mod(Pt_r, SP);
            CHECK(cert.formal);

            AInfBimodule kPt = build_kPtilde(m, k, Bp);
            SplittingData SkP = kp_prescribed_splitting(kPt, m, k);
            AInfBimodule kPt_r = restrict_along_iota(kPt, SB, Akh);
            AInfBimodule HkP = transfer_bimodule(kPt_r, SkP, 4);
            CHECK(compare_bimodules(HkP, kp_kh(m, k, Akh)).equal);
            // u . x[k,k-1] = v
            int u = HkP.space.find("u"), v = HkP.space.find("v");
            int xk = Akh->space.find("x[" + std::to_string(k) + "," + std::to_string(k - 1) + "]");
            CHECK(HkP.eval({0, 1}, {{u}, {xk}}) == Chain{v});
        }
    }
}

TEST_CASE("module transfer with zero differential returns the original action") {
    auto Akh = bkh(1);
    AInfBimodule M = pk_kh(1, 1, Akh);
    SplittingData S = split(M.space, F2Matrix::zero(2, 2));
    S.H = M.space;
    AInfBimodule T = transfer_bimodule(M, S, 4);
    CHECK(compare_bimodules(T, M).equal);
}

TEST_CASE("transferred inclusion and projection are A-infinity morphisms") {
    for (int m = 1; m <= 2; ++m) {
        AInfAlgebra B = build_B(m);
        SplittingData SB = bkh_prescribed_splitting(B, m);
        auto Akh = bkh(m);
        auto Breg = std::make_shared<AInfBimodule>(
            restrict_along_iota(AInfBimodule::regular(std::make_shared<AInfAlgebra>(B)), SB,
                                Akh));
        auto BregH = std::make_shared<AInfBimodule>(AInfBimodule::regular(Akh));
        AInfMorphism inc = iota_infty(Breg, BregH, SB, 4);
        AInfMorphism prj = proj_infty(Breg, BregH, SB, 4);
        CheckOptions opt;
        opt.cap = 4;
        CHECK(check_morphism(inc, opt).ok);
        CHECK(check_morphism(prj, opt).ok);
        // inclusion is strict here (FormalCond hypotheses hold)
        CHECK(inc.is_strict());
        // proj . iota = Id strictly
        for (int x = 0; x < BregH->space.dim(); ++x) {
            Chain mid = inc.eval({0, 0}, {{x}});
            CHECK(prj.eval({0, 0}, {mid}) == Chain{x});
        }
        // the left (1|1|0) component of proj vanishes, the right one does not
        if (prj.comps.count({1, 0}))
            CHECK(prj.comps.at({1, 0}).empty());
        if (m >= 1) {
            REQUIRE(prj.comps.count({0, 1}));
            CHECK(!prj.comps.at({0, 1}).empty());
        }
    }
}

TEST_CASE("projection component values match the two-step recursion tables") {
    // p_(0|1|1)(a (x) b) with a = (l|l+1) in block (i,j), i < j, b = 1[j,k]:
    // equals 1[i,k] for k <= l <= i
    int m = 2;
    AInfAlgebra B = build_B(m);
    SplittingData SB = bkh_prescribed_splitting(B, m);
    auto Akh = bkh(m);
    auto Breg = std::make_shared<AInfBimodule>(
        restrict_along_iota(AInfBimodule::regular(std::make_shared<AInfAlgebra>(B)), SB, Akh));
    auto BregH = std::make_shared<AInfBimodule>(AInfBimodule::regular(Akh));
    AInfMorphism prj = proj_infty(Breg, BregH, SB, 4);
    // i=0 < j=1, a = (0|1) in block (0,1), b = 1[1,0], k=0 <= l=0 <= i=0
    int a = Breg->space.find("0,1:0,1:(0|1)");
    int b = BregH->space.find("1[1,0]");
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    Chain out = prj.eval({0, 1}, {{a}, {b}});
    REQUIRE(out.size() == 1);
    CHECK(BregH->space.labels[out[0]] == "1[0,0]");
    // and with b = x[1,0]: l must satisfy k+1 <= l <= i: empty for i=0, so 0
    int bx = BregH->space.find("x[1,0]");
    CHECK(prj.eval({0, 1}, {{a}, {bx}}).empty());
}

TEST_CASE("transfer of the identity morphism is the identity") {
    int m = 1;
    AInfAlgebra B = build_B(m);
    SplittingData SB = bkh_prescribed_splitting(B, m);
    auto Akh = bkh(m);
    auto Breg = std::make_shared<AInfBimodule>(
        restrict_along_iota(AInfBimodule::regular(std::make_shared<AInfAlgebra>(B)), SB, Akh));
    auto BregH = std::make_shared<AInfBimodule>(AInfBimodule::regular(Akh));
    AInfMorphism id;
    id.src = Breg;
    id.dst = Breg;
    SparseOp c;
    for (int x = 0; x < Breg->space.dim(); ++x) c.emplace(std::vector<int>{x}, Chain{x});
    id.comps[{0, 0}] = std::move(c);
    AInfMorphism T = transfer_morphism(id, SB, SB, BregH, BregH, 4);
    for (int x = 0; x < BregH->space.dim(); ++x)
        CHECK(T.eval({0, 0}, {{x}}) == Chain{x});
    // identity on homology has no higher components here
    for (const auto& [sig, op] : T.comps)
        if (sig != Sig{0, 0}) CHECK(op.empty());
}
