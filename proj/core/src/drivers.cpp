#include "bfk/drivers.hpp"

#include "bfk/complexes.hpp"
#include "bfk/hfside.hpp"
#include "bfk/khside.hpp"
#include "bfk/tensor.hpp"
#include "bfk/transfer.hpp"

namespace bfk {

GrCompareResult gr_compare(int m, const BraidWord& w) {
    GrCompareResult res;
    auto rename = hf_to_kh_rename();

    auto Ahf = bhf(m);
    auto Akh = bkh(m);
    auto grA = std::make_shared<AInfAlgebra>(associated_graded(*Ahf));
    StructureDiff da = compare_algebras(*grA, *Akh, rename);
    if (!da.equal) {
        res.pass = false;
        res.algebra_detail = da.detail;
    }

    AInfBimodule Mhf = braid_bimodule_hf(m, w, Ahf);
    AInfBimodule Mkh = braid_bimodule_kh(m, w, Akh);
    AInfBimodule grM = associated_graded(Mhf, grA);
    StructureDiff dm = compare_bimodules(grM, Mkh, rename);
    if (!dm.equal) {
        res.pass = false;
        res.module_detail = dm.detail;
    }

    // the tensor/gr exchange on the strands side, factor by factor
    if (w.letters.size() >= 2) {
        AInfBimodule acc = artin_bimodule_hf(m, std::abs(w.letters[0]), w.letters[0] > 0, Ahf);
        for (size_t t = 1; t < w.letters.size(); ++t) {
            AInfBimodule next =
                artin_bimodule_hf(m, std::abs(w.letters[t]), w.letters[t] > 0, Ahf);
            StructureDiff db = gr_commutes_with_tensor(acc, next);
            if (!db.equal) {
                res.pass = false;
                res.bijection_detail = db.detail;
                break;
            }
            acc = reduced_tensor(acc, next);
        }
    }
    return res;
}

InvariantsTable invariants(int m, const BraidWord& w) {
    InvariantsTable tab;
    auto Ahf = bhf(m);
    AInfBimodule M = braid_bimodule_hf(m, w, Ahf);
    tab.total = homology_dims_by_idem(M);

    auto grA = std::make_shared<AInfAlgebra>(associated_graded(*Ahf));
    AInfBimodule G = associated_graded(M, grA);
    tab.graded = homology_dims_by_idem(G);

    // gr homology per filtration level: the gr differential preserves the
    // level, so restrict blockwise
    F2Matrix d = differential_matrix(G);
    std::map<std::pair<int, int>, std::map<int, std::vector<int>>> blocks;
    for (int i = 0; i < G.space.dim(); ++i)
        blocks[{G.space.left_idem[i], G.space.right_idem[i]}][G.space.level[i]].push_back(i);
    for (auto& [pair, by_level] : blocks)
        for (auto& [lev, ids] : by_level) {
            F2Matrix sub(static_cast<int>(ids.size()), static_cast<int>(ids.size()));
            for (size_t cc = 0; cc < ids.size(); ++cc)
                for (size_t rr = 0; rr < ids.size(); ++rr)
                    if (d.get(ids[rr], ids[cc])) sub.set(static_cast<int>(rr), static_cast<int>(cc));
            int h = static_cast<int>(ids.size()) - 2 * rank_kernel_image(sub).rank;
            if (h) tab.graded_by_level[pair][lev] = h;
        }
    return tab;
}

SSReport ss_report(int m, const BraidWord& w) {
    SSReport rep;
    auto Ahf = bhf(m);
    AInfBimodule M = braid_bimodule_hf(m, w, Ahf);
    rep.pages = spectral_sequence_by_idem(M);
    rep.total_h = homology_dims_by_idem(M);

    auto grA = std::make_shared<AInfAlgebra>(associated_graded(*Ahf));
    AInfBimodule G = associated_graded(M, grA);
    rep.gr_h = homology_dims_by_idem(G);

    for (auto& [pair, ss] : rep.pages) {
        int e1 = ss.pages.size() > 1 ? ss.pages[1].total_dim : ss.pages[0].total_dim;
        rep.e1[pair] = e1;
        rep.einf[pair] = ss.einf().total_dim;
        int grh = rep.gr_h.count(pair) ? rep.gr_h[pair] : 0;
        int toth = rep.total_h.count(pair) ? rep.total_h[pair] : 0;
        if (e1 != grh || rep.einf[pair] != toth) rep.consistent = false;
    }
    for (auto& [pair, h] : rep.gr_h)
        if (!rep.pages.count(pair) && h != 0) rep.consistent = false;
    return rep;
}

void TransferDiff::add(const std::string& what, const StructureDiff& d) {
    lines.emplace_back(what, d.equal ? "ok" : d.detail);
    pass = pass && d.equal;
}

void TransferDiff::add(const std::string& what, bool ok, const std::string& detail) {
    lines.emplace_back(what, ok ? "ok" : detail);
    pass = pass && ok;
}

TransferDiff transfer_diff(int m, int cap) {
    TransferDiff res;
    AInfAlgebra B = build_B(m);
    SplittingData SB = bkh_prescribed_splitting(B, m);
    auto Akh = bkh(m);

    AInfAlgebra derived = transfer_algebra(B, SB, cap);
    derived.idem_ids = Akh->idem_ids;
    derived.unit = Akh->unit;
    res.add("algebra: derived == hardcoded", compare_algebras(derived, *Akh));
    bool vanish = true;
    for (int n = 3; n <= cap; ++n)
        if (derived.mult.count(n) && !derived.mult.at(n).empty()) vanish = false;
    res.add("algebra: m_n = 0 for 3 <= n <= cap", vanish, "higher operations survive");

    auto Bp = std::make_shared<AInfAlgebra>(B);
    for (int k = 1; k <= m; ++k) {
        std::string kk = std::to_string(k);
        AInfBimodule Pt = build_Ptilde(m, k, Bp);
        AInfBimodule kPt = build_kPtilde(m, k, Bp);
        SplittingData SP = pk_prescribed_splitting(Pt, m, k);
        SplittingData SkP = kp_prescribed_splitting(kPt, m, k);

        AInfBimodule Pt_r = restrict_along_iota(Pt, SB, Akh);
        AInfBimodule kPt_r = restrict_along_iota(kPt, SB, Akh);
        AInfBimodule dP = transfer_bimodule(Pt_r, SP, cap);
        AInfBimodule dkP = transfer_bimodule(kPt_r, SkP, cap);
        res.add("P_" + kk + " left module tables", compare_bimodules(dP, pk_kh(m, k, Akh)));
        res.add("P_" + kk + " right module tables", compare_bimodules(dkP, kp_kh(m, k, Akh)));

        // the pair bimodule and the two morphisms
        auto pairC = std::make_shared<AInfBimodule>(ptilde_pair(Pt_r, kPt_r));
        auto pairH = pk_pair_kh(m, k, Akh);
        SplittingData Spair = pair_splitting(SP, SkP, pairC->space, pairH->space);
        AInfBimodule dpair = transfer_bimodule(*pairC, Spair, cap);
        res.add("P_" + kk + " pair bimodule tables", compare_bimodules(dpair, *pairH));

        auto Breg = std::make_shared<AInfBimodule>(
            restrict_along_iota(AInfBimodule::regular(Bp), SB, Akh));
        auto BregH = std::make_shared<AInfBimodule>(AInfBimodule::regular(Akh));
        AInfMorphism bt = beta_tilde(m, k, pairC, Breg);
        AInfMorphism dbeta = transfer_morphism(bt, Spair, SB, pairH, BregH, cap);
        res.add("beta_" + kk + " morphism tables",
                compare_morphisms(dbeta, beta_kh(m, k, Akh)));

        auto pairS = std::make_shared<AInfBimodule>(ptilde_pair_shifted(*pairC));
        AInfMorphism gt = gamma_tilde(m, k, Breg, pairS);
        AInfMorphism dgamma = transfer_morphism(gt, SB, Spair, BregH, pairH, cap);
        res.add("gamma_" + kk + " morphism tables",
                compare_morphisms(dgamma, gamma_kh(m, k, Akh)));
    }
    return res;
}

}  // namespace bfk
