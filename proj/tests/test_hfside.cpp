#include <map>
#include <stdexcept>

#include "doctest.h"

#include "bfk/hfside.hpp"
#include "bfk/khside.hpp"
#include "bfk/specseq.hpp"
#include "bfk/tensor.hpp"

using namespace bfk;

TEST_CASE("raw algebra tables") {
    auto A = bhf_raw(2);
    auto id = [&](const std::string& l) { return A->space.find(l); };
    CHECK(A->eval(2, {{id("rho[2,1]")}, {id("rho[1,0]")}}) == Chain{id("rho[2,0]")});
    CHECK(A->eval(2, {{id("rho[2,1]")}, {id("sig[1,0]")}}).empty());
    CHECK(A->eval(2, {{id("sig[2,1]")}, {id("rho[1,0]")}}).empty());
    CHECK(check_algebra(*A, CheckOptions{4, true, true, 4}).ok);
    CHECK(check_strict_unitality(*A).ok);
    CHECK(A->space.dim() == 3 + 2 * 3);
}

TEST_CASE("adapted algebra is filtered and gr matches the quiver side, m <= 5") {
    for (int m = 0; m <= 5; ++m) {
        auto A = bhf(m);
        CHECK(check_algebra(*A, CheckOptions{4, true, true, 4}).ok);
        CHECK(check_strict_unitality(*A).ok);
        CHECK(check_filtered_algebra(*A).ok);
        AInfAlgebra gr = associated_graded(*A);
        CHECK(compare_algebras(gr, *bkh(m), hf_to_kh_rename()).equal);
    }
    // a level-dropping product is killed in gr
    auto A2 = bhf(2);
    AInfAlgebra gr2 = associated_graded(*A2);
    auto id2 = [&](const std::string& l) { return A2->space.find(l); };
    CHECK(!A2->eval(2, {{id2("rho[2,1]")}, {id2("rho[1,0]")}}).empty());
    CHECK(gr2.eval(2, {{id2("rho[2,1]")}, {id2("rho[1,0]")}}).empty());
}

TEST_CASE("module sides with their filtrations") {
    auto A = bhf(2);
    AInfBimodule P = pk_hf(2, 1, A);
    AInfBimodule kP = kp_hf(2, 1, A);
    CHECK(P.space.level[P.space.find("v*")] == 0);
    CHECK(P.space.level[P.space.find("u*")] == 1);
    CHECK(kP.space.level[kP.space.find("u")] == 0);
    CHECK(kP.space.level[kP.space.find("v")] == 1);
    CHECK(check_bimodule(P, CheckOptions{4, true, true, 4}).ok);
    CHECK(check_filtered_bimodule(P).ok);
    CHECK(check_filtered_bimodule(kP).ok);
    auto aid = [&](const std::string& l) { return A->space.find(l); };
    CHECK(P.eval({1, 0}, {{aid("rho[1,0]")}, {P.space.find("v*")}}) ==
          Chain{P.space.find("u*")});
    CHECK(P.eval({1, 0}, {{aid("1[1,0]")}, {P.space.find("v*")}}).empty());
    CHECK(kP.eval({0, 1}, {{kP.space.find("u")}, {aid("rho[1,0]")}}) ==
          Chain{kP.space.find("v")});

    auto Ar = bhf_raw(2);
    AInfBimodule Pr = pk_hf_raw(2, 1, Ar);
    auto rid = [&](const std::string& l) { return Ar->space.find(l); };
    CHECK(Pr.eval({1, 0}, {{rid("rho[1,0]")}, {Pr.space.find("v*")}}) ==
          Chain{Pr.space.find("u*")});
    CHECK(Pr.eval({1, 0}, {{rid("sig[1,0]")}, {Pr.space.find("v*")}}) ==
          Chain{Pr.space.find("u*")});
    AInfBimodule kPr = kp_hf_raw(2, 1, Ar);
    CHECK(kPr.eval({0, 1}, {{kPr.space.find("u")}, {rid("sig[1,0]")}}) ==
          Chain{kPr.space.find("v")});
    // Maslov: the pair is concentrated in degree 1
    auto pair = pk_pair_hf(2, 1, A);
    for (int g = 0; g < pair->space.dim(); ++g) CHECK(pair->space.grading[g][0] == 1);
}

TEST_CASE("beta and gamma: filtered A-infinity morphisms with the stated tables") {
    for (int m = 1; m <= 3; ++m) {
        auto A = bhf(m);
        for (int k = 1; k <= m; ++k) {
            AInfMorphism beta = beta_hf(m, k, A);
            AInfMorphism gamma = gamma_hf(m, k, A);
            CHECK(check_morphism(beta, CheckOptions{4, true, true, 4}).ok);
            CHECK(check_morphism(gamma, CheckOptions{4, true, true, 4}).ok);
            CHECK(check_filtered_morphism(beta).ok);
            CHECK(check_filtered_morphism(gamma).ok);
            CHECK(gamma.is_strict());
            for (const auto& [sig, op] : beta.comps)
                if (!op.empty()) CHECK(sig.first + sig.second == 1);
            // Maslov: beta components drop the grading by one, gamma raises it
            for (const auto& [sig, op] : beta.comps)
                for (const auto& [key, out] : op)
                    for (int t : out) {
                        int in = 0;
                        for (size_t i = 0; i < key.size(); ++i)
                            in += (static_cast<int>(i) == sig.first)
                                      ? beta.src->space.grading[key[i]][0]
                                      : beta.src->over->space.grading[key[i]][0];
                        CHECK(beta.dst->space.grading[t][0] == in - 1);
                    }
            for (const auto& [key, out] : gamma.comps.at({0, 0}))
                for (int t : out)
                    CHECK(gamma.dst->space.grading[t][0] ==
                          gamma.src->space.grading[key[0]][0] + 1);
        }
    }
    auto Ar = bhf_raw(2);
    AInfMorphism br = beta_hf_raw(2, 1, Ar);
    auto rid = [&](const std::string& l) { return Ar->space.find(l); };
    auto pid = [&](const std::string& l) { return br.src->space.find(l); };
    auto oid = [&](const std::string& l) { return br.dst->space.find(l); };
    CHECK(br.eval({1, 0}, {{rid("sig[1,0]")}, {pid("v*(x)u")}}) == Chain{oid("1[1,1]")});
    CHECK(br.eval({1, 0}, {{rid("rho[1,0]")}, {pid("v*(x)u")}}).empty());
    CHECK(br.eval({1, 0}, {{rid("rho[2,1]")}, {pid("u*(x)u")}}) == Chain{oid("rho[2,1]")});
    CHECK(br.eval({1, 0}, {{rid("sig[2,1]")}, {pid("u*(x)u")}}).empty());
    CHECK(br.eval({0, 1}, {{pid("u*(x)u")}, {rid("rho[1,0]")}}) == Chain{oid("rho[1,0]")});
    CHECK(br.eval({0, 1}, {{pid("v*(x)u")}, {rid("sig[1,0]")}}) == Chain{oid("1[0,0]")});

    AInfMorphism gm = gamma_hf_raw(2, 1, Ar);
    CHECK(gm.eval({0, 0}, {{oid("rho[1,0]")}}) == Chain{gm.dst->space.find("u*(x)v")});
    CHECK(gm.eval({0, 0}, {{oid("sig[1,0]")}}) == Chain{gm.dst->space.find("u*(x)v")});
    CHECK(gm.eval({0, 0}, {{oid("1[1,1]")}}) == Chain{gm.dst->space.find("u*(x)u")});
}

TEST_CASE("the three homomorphism identities hold exhaustively, k <= m <= 4") {
    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= m; ++k) {
            CheckReport rep = verify_hf_homomorphism_identities(m, k);
            INFO("m=" << m << " k=" << k);
            CHECK(rep.ok);
        }
}

TEST_CASE("a removed table entry breaks the identities with a located failure") {
    int m = 2, k = 1;
    auto A = bhf_raw(m);
    auto pair = pk_pair_hf_raw(m, k, A);
    AInfMorphism beta = beta_hf_raw(m, k, A);
    std::vector<int> key{A->space.find("sig[1,0]"), pair->space.find("v*(x)u")};
    REQUIRE(beta.comps.at({1, 0}).erase(key) == 1);
    CHECK_FALSE(check_morphism(beta, CheckOptions{3, true, true, 4}).ok);
}

TEST_CASE("beta vanishes on idempotent algebra inputs") {
    int m = 2, k = 1;
    auto A = bhf_raw(m);
    AInfMorphism beta = beta_hf_raw(m, k, A);
    for (int e : A->idem_ids)
        for (int x = 0; x < beta.src->space.dim(); ++x)
            CHECK(beta.eval({1, 0}, {{e}, {x}}).empty());
}

TEST_CASE("gr of the cones equals the quiver-side cones, k <= m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        auto Ahf = bhf(m);
        auto Akh = bkh(m);
        auto grA = std::make_shared<AInfAlgebra>(associated_graded(*Ahf));
        for (int k = 1; k <= m; ++k)
            for (bool positive : {true, false}) {
                AInfBimodule chf = artin_bimodule_hf(m, k, positive, Ahf);
                AInfBimodule ckh = artin_bimodule_kh(m, k, positive, Akh);
                AInfBimodule gr = associated_graded(chf, grA);
                CHECK(compare_bimodules(gr, ckh, hf_to_kh_rename()).equal);
                CHECK(check_bimodule(chf, CheckOptions{4, true, true, 4}).ok);
                CHECK(check_filtered_bimodule(chf).ok);
            }
    }
}

TEST_CASE("braid relation fingerprints agree for the two 3-letter words, m = 2") {
    auto A = bhf(2);
    AInfBimodule M1 = braid_bimodule_hf(2, parse_braid("1 2 1", 2), A);
    AInfBimodule M2 = braid_bimodule_hf(2, parse_braid("2 1 2", 2), A);
    CHECK(homology_dims_by_idem(M1) == homology_dims_by_idem(M2));
}

TEST_CASE("empty word and a cancelling pair") {
    auto A = bhf(1);
    AInfBimodule id = braid_bimodule_hf(1, parse_braid("", 1), A);
    CHECK(compare_bimodules(id, AInfBimodule::regular(A)).equal);
    AInfBimodule M = braid_bimodule_hf(1, parse_braid("1 -1", 1), A);
    auto dims = homology_dims_by_idem(M);
    std::map<std::pair<int, int>, int> expect{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 0}, 2}};
    for (auto& [p, d] : expect) CHECK(dims[p] == d);
    for (auto& [p, d] : dims)
        if (!expect.count(p)) CHECK(d == 0);
}
