#include "bfk/complexes.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace bfk {

ProjectiveComplex build_Q(int m, int j) {
    if (j < 0 || j > m) throw std::out_of_range("build_Q: j out of range");
    ProjectiveComplex Q;
    Q.side = ProjectiveComplex::Side::Left;
    for (int t = 0; t <= j; ++t) Q.terms.push_back({t, t, 0});
    for (int t = 0; t < j; ++t) Q.steps.push_back(Path{{t, t + 1}});
    return Q;
}

ProjectiveComplex build_P_single(int m, int k) {
    if (k < 0 || k > m) throw std::out_of_range("build_P_single: k out of range");
    ProjectiveComplex P;
    P.side = ProjectiveComplex::Side::Left;
    P.terms.push_back({k, k, 0});
    return P;
}

namespace {

std::string grid_label(int r, int c, const Path& p) {
    return std::to_string(r) + "," + std::to_string(c) + ":" + p.str();
}

std::string block_label(int i, int j, int r, int c, const Path& p) {
    return std::to_string(i) + "," + std::to_string(j) + ":" + grid_label(r, c, p);
}

std::string col_label(int blk, int pos, const Path& p) {
    return std::to_string(blk) + ":" + std::to_string(pos) + ":" + p.str();
}

int parse_path(const ZigzagAlgebra& alg, const std::string& s) {
    for (int pid = 0; pid < alg.dim(); ++pid)
        if (alg.path(pid).str() == s) return pid;
    throw std::logic_error("not a basis path: " + s);
}

struct BGen { int i, j, r, c, pid; };

/// Recover the block/grid/path data of the Hom algebra from its labels.
std::vector<BGen> decode_B(const GradedBasisSpace& space, const ZigzagAlgebra& alg) {
    std::vector<BGen> out;
    out.reserve(space.dim());
    for (const auto& lbl : space.labels) {
        BGen g;
        char buf[64];
        if (std::sscanf(lbl.c_str(), "%d,%d:%d,%d:%63s", &g.i, &g.j, &g.r, &g.c, buf) != 5)
            throw std::logic_error("unexpected Hom-algebra label: " + lbl);
        g.pid = parse_path(alg, buf);
        out.push_back(g);
    }
    return out;
}

struct ColGen { int blk, pos, pid; };

std::vector<ColGen> decode_cols(const GradedBasisSpace& space, const ZigzagAlgebra& alg) {
    std::vector<ColGen> out;
    out.reserve(space.dim());
    for (const auto& lbl : space.labels) {
        ColGen g;
        char buf[64];
        if (std::sscanf(lbl.c_str(), "%d:%d:%63s", &g.blk, &g.pos, buf) != 3)
            throw std::logic_error("unexpected column label: " + lbl);
        g.pid = parse_path(alg, buf);
        out.push_back(g);
    }
    return out;
}

}  // namespace

HomComplex hom_complex(const ZigzagAlgebra& alg, const ProjectiveComplex& R,
                       const ProjectiveComplex& S) {
    if (R.side != ProjectiveComplex::Side::Left || S.side != ProjectiveComplex::Side::Left)
        throw std::invalid_argument("hom_complex: both complexes must be left-sided");
    HomComplex H;
    H.space.graded_ops = true;
    for (int r = 0; r < static_cast<int>(R.terms.size()); ++r) {
        for (int c = 0; c < static_cast<int>(S.terms.size()); ++c) {
            for (int pid : alg.paths_between(R.terms[r].vertex, S.terms[c].vertex)) {
                const Path& p = alg.path(pid);
                int coh = S.terms[c].coh - R.terms[r].coh;
                int internal = p.degree() + S.terms[c].internal - R.terms[r].internal;
                H.space.add(grid_label(r, c, p), {coh, internal, p.length()});
                H.row.push_back(r);
                H.col.push_back(c);
                H.path_id.push_back(pid);
            }
        }
    }
    // D(F) = d_S F + F d_R: post-compose with the target step (right
    // multiplication on the connecting path), pre-compose with the source
    // step (left multiplication).
    for (int g = 0; g < H.space.dim(); ++g) {
        Chain out;
        int r = H.row[g], c = H.col[g];
        if (c + 1 < static_cast<int>(S.terms.size())) {
            int q = alg.multiply(H.path_id[g], alg.find(S.steps[c]));
            if (q >= 0) {
                int t = H.space.find(grid_label(r, c + 1, alg.path(q)));
                if (t >= 0) chain_add_inplace(out, {t});
            }
        }
        if (r > 0) {
            int q = alg.multiply(alg.find(R.steps[r - 1]), H.path_id[g]);
            if (q >= 0) {
                int t = H.space.find(grid_label(r - 1, c, alg.path(q)));
                if (t >= 0) chain_add_inplace(out, {t});
            }
        }
        if (!out.empty()) H.differential.emplace(std::vector<int>{g}, std::move(out));
    }
    return H;
}

std::string complex_to_json(const HomComplex& H) {
    nlohmann::json j;
    j["terms"] = nlohmann::json::array();
    for (int g = 0; g < H.space.dim(); ++g) {
        nlohmann::json t;
        t["label"] = H.space.labels[g];
        t["grading"] = H.space.grading[g];
        j["terms"].push_back(t);
    }
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& [key, out] : H.differential)
        for (int t : out) arrows.emplace_back(H.space.labels[key[0]], H.space.labels[t]);
    std::sort(arrows.begin(), arrows.end());
    j["differential"] = nlohmann::json::array();
    for (auto& [s, t] : arrows) j["differential"].push_back({s, t});
    return j.dump(2);
}

AInfAlgebra build_B(int m) {
    ZigzagAlgebra alg(m);
    AInfAlgebra B;
    B.space.graded_ops = true;

    std::vector<BGen> gens;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j)
            for (int r = 0; r <= i; ++r)
                for (int c = 0; c <= j; ++c)
                    for (int pid : alg.paths_between(r, c)) {
                        const Path& p = alg.path(pid);
                        B.space.add(block_label(i, j, r, c, p),
                                    {c - r, p.degree(), p.length()}, 0, i, j);
                        gens.push_back({i, j, r, c, pid});
                    }

    SparseOp d;
    for (int g = 0; g < B.space.dim(); ++g) {
        const BGen& G = gens[g];
        Chain out;
        if (G.c + 1 <= G.j) {
            int q = alg.multiply(G.pid, alg.find(Path{{G.c, G.c + 1}}));
            if (q >= 0)
                chain_add_inplace(
                    out, {B.space.find(block_label(G.i, G.j, G.r, G.c + 1, alg.path(q)))});
        }
        if (G.r > 0) {
            int q = alg.multiply(alg.find(Path{{G.r - 1, G.r}}), G.pid);
            if (q >= 0)
                chain_add_inplace(
                    out, {B.space.find(block_label(G.i, G.j, G.r - 1, G.c, alg.path(q)))});
        }
        if (!out.empty()) d.emplace(std::vector<int>{g}, std::move(out));
    }
    if (!d.empty()) B.mult[1] = std::move(d);

    // composition of module morphisms = path multiplication in the middle
    SparseOp m2;
    for (int a = 0; a < B.space.dim(); ++a) {
        const BGen& ga = gens[a];
        for (int b = 0; b < B.space.dim(); ++b) {
            const BGen& gb = gens[b];
            if (ga.j != gb.i || ga.c != gb.r) continue;
            int q = alg.multiply(ga.pid, gb.pid);
            if (q < 0) continue;
            int t = B.space.find(block_label(ga.i, gb.j, ga.r, gb.c, alg.path(q)));
            m2.emplace(std::vector<int>{a, b}, Chain{t});
        }
    }
    B.mult[2] = std::move(m2);

    for (int i = 0; i <= m; ++i)
        for (int r = 0; r <= i; ++r)
            B.unit.push_back(B.space.find(block_label(i, i, r, r, Path{{r}})));
    std::sort(B.unit.begin(), B.unit.end());
    return B;
}

AInfBimodule build_Ptilde(int m, int k, std::shared_ptr<const AInfAlgebra> B) {
    if (k < 1 || k > m) throw std::out_of_range("build_Ptilde: k out of range");
    ZigzagAlgebra alg(m);
    AInfBimodule P;
    P.over = B;
    P.space.graded_ops = true;

    std::vector<ColGen> gens;
    for (int i = 0; i <= m; ++i)
        for (int r = 0; r <= i; ++r)
            for (int pid : alg.paths_between(r, k)) {
                const Path& p = alg.path(pid);
                P.space.add(col_label(i, r, p), {k - r, p.degree(), p.length()}, 0, i, -1);
                gens.push_back({i, r, pid});
            }

    SparseOp d;
    for (int g = 0; g < P.space.dim(); ++g) {
        const ColGen& G = gens[g];
        if (G.pos == 0) continue;
        int q = alg.multiply(alg.find(Path{{G.pos - 1, G.pos}}), G.pid);
        if (q < 0) continue;
        d.emplace(std::vector<int>{g}, Chain{P.space.find(col_label(G.blk, G.pos - 1, alg.path(q)))});
    }
    if (!d.empty()) P.acts[{0, 0}] = std::move(d);

    std::vector<BGen> bgens = decode_B(B->space, alg);
    SparseOp act;
    for (int b = 0; b < B->space.dim(); ++b) {
        const BGen& gb = bgens[b];
        for (int g = 0; g < P.space.dim(); ++g) {
            const ColGen& G = gens[g];
            if (G.blk != gb.j || G.pos != gb.c) continue;
            int q = alg.multiply(gb.pid, G.pid);
            if (q < 0) continue;
            act.emplace(std::vector<int>{b, g},
                        Chain{P.space.find(col_label(gb.i, gb.r, alg.path(q)))});
        }
    }
    P.acts[{1, 0}] = std::move(act);
    return P;
}

AInfBimodule build_kPtilde(int m, int k, std::shared_ptr<const AInfAlgebra> B) {
    if (k < 1 || k > m) throw std::out_of_range("build_kPtilde: k out of range");
    ZigzagAlgebra alg(m);
    AInfBimodule P;
    P.over = B;
    P.space.graded_ops = true;

    std::vector<ColGen> gens;
    for (int j = 0; j <= m; ++j)
        for (int c = 0; c <= j; ++c)
            for (int pid : alg.paths_between(k, c)) {
                const Path& p = alg.path(pid);
                P.space.add(col_label(j, c, p), {c - k, p.degree(), p.length()}, 0, -1, j);
                gens.push_back({j, c, pid});
            }

    SparseOp d;
    for (int g = 0; g < P.space.dim(); ++g) {
        const ColGen& G = gens[g];
        if (G.pos + 1 > G.blk) continue;
        int q = alg.multiply(G.pid, alg.find(Path{{G.pos, G.pos + 1}}));
        if (q < 0) continue;
        d.emplace(std::vector<int>{g}, Chain{P.space.find(col_label(G.blk, G.pos + 1, alg.path(q)))});
    }
    if (!d.empty()) P.acts[{0, 0}] = std::move(d);

    std::vector<BGen> bgens = decode_B(B->space, alg);
    SparseOp act;
    for (int b = 0; b < B->space.dim(); ++b) {
        const BGen& gb = bgens[b];
        for (int g = 0; g < P.space.dim(); ++g) {
            const ColGen& G = gens[g];
            if (G.blk != gb.i || G.pos != gb.r) continue;
            int q = alg.multiply(G.pid, gb.pid);
            if (q < 0) continue;
            act.emplace(std::vector<int>{g, b},
                        Chain{P.space.find(col_label(gb.j, gb.c, alg.path(q)))});
        }
    }
    P.acts[{0, 1}] = std::move(act);
    return P;
}

AInfBimodule ptilde_pair(const AInfBimodule& Pt, const AInfBimodule& kPt) {
    return pair_bimodule(Pt, kPt);
}

AInfBimodule ptilde_pair_shifted(const AInfBimodule& pair) {
    AInfBimodule out = pair;
    out.space = apply_shift(pair.space, GradingShift{{0, -1}, 0});
    return out;
}

AInfMorphism beta_tilde(int m, int k, std::shared_ptr<const AInfBimodule> pair,
                        std::shared_ptr<const AInfBimodule> Breg) {
    if (k < 1 || k > m) throw std::out_of_range("beta_tilde: k out of range");
    ZigzagAlgebra alg(m);
    AInfMorphism f;
    f.src = pair;
    f.dst = Breg;
    SparseOp comp;
    for (int g = 0; g < pair->space.dim(); ++g) {
        const std::string& lbl = pair->space.labels[g];
        auto cut = lbl.find("(x)");
        int i, r, j, c;
        char pb[64], qb[64];
        if (std::sscanf(lbl.substr(0, cut).c_str(), "%d:%d:%63s", &i, &r, pb) != 3 ||
            std::sscanf(lbl.substr(cut + 3).c_str(), "%d:%d:%63s", &j, &c, qb) != 3)
            throw std::logic_error("beta_tilde: bad pair label " + lbl);
        int prod = alg.multiply(parse_path(alg, pb), parse_path(alg, qb));
        if (prod < 0) continue;
        int t = Breg->space.find(block_label(i, j, r, c, alg.path(prod)));
        if (t >= 0) comp.emplace(std::vector<int>{g}, Chain{t});
    }
    f.comps[{0, 0}] = std::move(comp);
    return f;
}

AInfMorphism gamma_tilde(int m, int k, std::shared_ptr<const AInfBimodule> Breg,
                         std::shared_ptr<const AInfBimodule> pair_shifted) {
    if (k < 1 || k > m) throw std::out_of_range("gamma_tilde: k out of range");
    ZigzagAlgebra alg(m);
    AInfMorphism f;
    f.src = Breg;
    f.dst = pair_shifted;
    // the canonical element of P_k (x) kP inserted in the middle
    std::vector<std::pair<Path, Path>> insert = {
        {Path{{k - 1, k}}, Path{{k, k - 1}}},
        {Path{{k + 1, k}}, Path{{k, k + 1}}},
        {Path{{k}}, Path{{k, k - 1, k}}},
        {Path{{k, k - 1, k}}, Path{{k}}},
    };
    std::vector<BGen> bgens = decode_B(Breg->space, alg);
    SparseOp comp;
    for (int g = 0; g < Breg->space.dim(); ++g) {
        const BGen& G = bgens[g];
        Chain out;
        for (const auto& [x, y] : insert) {
            int xid = alg.find(x), yid = alg.find(y);
            if (xid < 0 || yid < 0) continue;  // absent for k = m
            int px = alg.multiply(G.pid, xid);
            if (px < 0) continue;
            if (y.end() > G.j) continue;  // target column must exist in Q_j
            int t = pair_shifted->space.find(col_label(G.i, G.r, alg.path(px)) + "(x)" +
                                             col_label(G.j, y.end(), y));
            if (t >= 0) chain_add_inplace(out, {t});
        }
        if (!out.empty()) comp.emplace(std::vector<int>{g}, std::move(out));
    }
    f.comps[{0, 0}] = std::move(comp);
    return f;
}

}  // namespace bfk
