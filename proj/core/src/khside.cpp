#include "bfk/khside.hpp"

#include <stdexcept>

#include "bfk/tensor.hpp"

namespace bfk {

namespace {

std::string one(int i, int j) { return "1[" + std::to_string(i) + "," + std::to_string(j) + "]"; }
std::string ex(int i, int j) { return "x[" + std::to_string(i) + "," + std::to_string(j) + "]"; }

}  // namespace

std::shared_ptr<AInfAlgebra> bkh(int m) {
    if (m < 0) throw std::invalid_argument("bkh: m must be >= 0");
    auto A = std::make_shared<AInfAlgebra>();
    A->space.graded_ops = true;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= i; ++j) {
            A->space.add(one(i, j), {0, 0, 0}, 0, i, j);
            if (i > j) A->space.add(ex(i, j), {-1, 1, 1}, 0, i, j);
        }
    for (int i = 0; i <= m; ++i) {
        A->idem_ids.push_back(A->space.find(one(i, i)));
        A->unit.push_back(A->space.find(one(i, i)));
    }
    std::sort(A->unit.begin(), A->unit.end());

    SparseOp m2;
    auto put = [&](const std::string& a, const std::string& b, const std::string& c) {
        m2.emplace(std::vector<int>{A->space.find(a), A->space.find(b)},
                   Chain{A->space.find(c)});
    };
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k <= j; ++k) {
                put(one(i, j), one(j, k), one(i, k));
                if (i > k) {
                    if (j > k) put(one(i, j), ex(j, k), ex(i, k));
                    if (i > j) put(ex(i, j), one(j, k), ex(i, k));
                }
                // x * x = 0
            }
    A->mult[2] = std::move(m2);
    return A;
}

AInfBimodule pk_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    if (k < 1 || k > m) throw std::out_of_range("pk_kh: k out of range");
    AInfBimodule M;
    M.over = A;
    M.space.graded_ops = true;
    M.space.add("u*", {0, 1, 2}, 0, k, -1);
    M.space.add("v*", {1, 0, 1}, 0, k - 1, -1);
    SparseOp act;
    auto put = [&](const std::string& t, const std::string& x, const std::string& y) {
        act.emplace(std::vector<int>{A->space.find(t), M.space.find(x)},
                    Chain{M.space.find(y)});
    };
    put(one(k, k), "u*", "u*");
    put(one(k - 1, k - 1), "v*", "v*");
    put(ex(k, k - 1), "v*", "u*");
    M.acts[{1, 0}] = std::move(act);
    return M;
}

AInfBimodule kp_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    if (k < 1 || k > m) throw std::out_of_range("kp_kh: k out of range");
    AInfBimodule M;
    M.over = A;
    M.space.graded_ops = true;
    M.space.add("u", {0, 0, 0}, 0, -1, k);
    M.space.add("v", {-1, 1, 1}, 0, -1, k - 1);
    SparseOp act;
    auto put = [&](const std::string& x, const std::string& t, const std::string& y) {
        act.emplace(std::vector<int>{M.space.find(x), A->space.find(t)},
                    Chain{M.space.find(y)});
    };
    put("u", one(k, k), "u");
    put("u", ex(k, k - 1), "v");
    put("v", one(k - 1, k - 1), "v");
    M.acts[{0, 1}] = std::move(act);
    return M;
}

std::shared_ptr<AInfBimodule> pk_pair_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return std::make_shared<AInfBimodule>(pair_bimodule(pk_kh(m, k, A), kp_kh(m, k, A)));
}

AInfMorphism beta_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    auto pair = pk_pair_kh(m, k, A);
    auto reg = std::make_shared<AInfBimodule>(AInfBimodule::regular(A));
    AInfMorphism f;
    f.src = pair;
    f.dst = reg;
    SparseOp c110, c011;
    auto putL = [&](const std::string& a, const std::string& x, const std::string& out) {
        c110.emplace(std::vector<int>{A->space.find(a), pair->space.find(x)},
                     Chain{reg->space.find(out)});
    };
    auto putR = [&](const std::string& x, const std::string& a, const std::string& out) {
        c011.emplace(std::vector<int>{pair->space.find(x), A->space.find(a)},
                     Chain{reg->space.find(out)});
    };
    for (int i = k + 1; i <= m; ++i) putL(one(i, k), "u*(x)u", ex(i, k));
    for (int i = k; i <= m; ++i) putL(one(i, k - 1), "v*(x)u", one(i, k));
    for (int i = k + 1; i <= m; ++i) putL(ex(i, k - 1), "v*(x)u", ex(i, k));
    for (int i = k; i <= m; ++i) putL(one(i, k - 1), "v*(x)v", ex(i, k - 1));
    for (int j = 0; j <= k - 1; ++j) putR("u*(x)u", one(k, j), ex(k, j));
    for (int j = 0; j <= k - 1; ++j) putR("v*(x)u", one(k, j), one(k - 1, j));
    for (int j = 0; j <= k - 2; ++j) putR("v*(x)u", ex(k, j), ex(k - 1, j));
    for (int j = 0; j <= k - 2; ++j) putR("v*(x)v", one(k - 1, j), ex(k - 1, j));
    f.comps[{1, 0}] = std::move(c110);
    f.comps[{0, 1}] = std::move(c011);
    return f;
}

AInfMorphism gamma_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    auto pair = pk_pair_kh(m, k, A);
    auto shifted = std::make_shared<AInfBimodule>(*pair);
    shifted->space = apply_shift(pair->space, GradingShift{{0, -1}, 0});
    auto reg = std::make_shared<AInfBimodule>(AInfBimodule::regular(A));
    AInfMorphism f;
    f.src = reg;
    f.dst = shifted;
    SparseOp comp;
    auto put = [&](const std::string& a, const std::string& out) {
        comp.emplace(std::vector<int>{reg->space.find(a)}, Chain{shifted->space.find(out)});
    };
    put(one(k - 1, k - 1), "v*(x)v");
    put(one(k, k), "u*(x)u");
    put(ex(k, k - 1), "u*(x)v");
    f.comps[{0, 0}] = std::move(comp);
    return f;
}

AInfBimodule artin_bimodule_kh(int m, int k, bool positive,
                               std::shared_ptr<const AInfAlgebra> A) {
    if (k < 1 || k > m) throw std::out_of_range("artin_bimodule_kh: k out of range");
    return positive ? mapping_cone(beta_kh(m, k, A)) : mapping_cone(gamma_kh(m, k, A));
}

AInfBimodule braid_bimodule_kh(int m, const BraidWord& w,
                               std::shared_ptr<const AInfAlgebra> A) {
    if (w.m != m) throw std::invalid_argument("braid_bimodule_kh: word over wrong index");
    if (w.empty()) return AInfBimodule::regular(A);
    AInfBimodule acc = artin_bimodule_kh(m, std::abs(w.letters[0]), w.letters[0] > 0, A);
    for (size_t t = 1; t < w.letters.size(); ++t) {
        AInfBimodule next = artin_bimodule_kh(m, std::abs(w.letters[t]), w.letters[t] > 0, A);
        acc = reduced_tensor(acc, next);
    }
    return acc;
}

namespace {

int must_find(const GradedBasisSpace& s, const std::string& l) {
    int id = s.find(l);
    if (id < 0) throw std::logic_error("missing basis label: " + l);
    return id;
}

std::string bl(int i, int j, int r, int c, const std::string& p) {
    return std::to_string(i) + "," + std::to_string(j) + ":" + std::to_string(r) + "," +
           std::to_string(c) + ":" + p;
}

std::string cl(int blk, int pos, const std::string& p) {
    return std::to_string(blk) + ":" + std::to_string(pos) + ":" + p;
}

std::string idpath(int v) { return "(" + std::to_string(v) + ")"; }
std::string up(int v) { return "(" + std::to_string(v) + "|" + std::to_string(v + 1) + ")"; }
std::string down(int v) { return "(" + std::to_string(v) + "|" + std::to_string(v - 1) + ")"; }
std::string loop(int v) {
    return "(" + std::to_string(v) + "|" + std::to_string(v - 1) + "|" + std::to_string(v) + ")";
}

}  // namespace

SplittingData bkh_prescribed_splitting(const AInfAlgebra& B, int m) {
    SplittingData S;
    S.C = B.space;
    int n = B.space.dim();
    S.d = F2Matrix(n, n);
    if (B.mult.count(1))
        for (const auto& [key, out] : B.mult.at(1))
            for (int t : out) S.d.set(t, key[0]);

    auto H = bkh(m);
    S.H = H->space;
    int hk = S.H.dim();
    S.iota = F2Matrix(n, hk);
    S.proj = F2Matrix(hk, n);
    S.htpy = F2Matrix(n, n);
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= i; ++j) {
            int h1 = must_find(S.H, one(i, j));
            for (int l = 0; l <= j; ++l) S.iota.set(must_find(S.C, bl(i, j, l, l, idpath(l))), h1);
            S.proj.set(h1, must_find(S.C, bl(i, j, j, j, idpath(j))));
            if (i > j) {
                int hx = must_find(S.H, ex(i, j));
                for (int l = 1; l <= j + 1; ++l)
                    S.iota.set(must_find(S.C, bl(i, j, l, l - 1, down(l))), hx);
                S.proj.set(hx, must_find(S.C, bl(i, j, j + 1, j, down(j + 1))));
            }
        }
    }
    // h: staircase edges to the partial sums below them, loops likewise
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= m; ++j) {
            for (int l = 0; l <= std::min(i, j - 1); ++l) {
                int src = must_find(S.C, bl(i, j, l, l + 1, up(l)));
                for (int t = 0; t <= l; ++t)
                    S.htpy.set(must_find(S.C, bl(i, j, t, t, idpath(t))), src);
            }
            for (int l = 1; l <= std::min(i, j); ++l) {
                int src = must_find(S.C, bl(i, j, l, l, loop(l)));
                for (int t = 1; t <= l; ++t)
                    S.htpy.set(must_find(S.C, bl(i, j, t, t - 1, down(t))), src);
            }
        }
    CheckReport rep = validate_splitting(S);
    if (!rep.ok)
        throw std::logic_error("bkh_prescribed_splitting: " + rep.failures.front().relation);
    return S;
}

SplittingData pk_prescribed_splitting(const AInfBimodule& Ptilde, int m, int k) {
    SplittingData S;
    S.C = Ptilde.space;
    int n = S.C.dim();
    S.d = F2Matrix(n, n);
    if (Ptilde.acts.count({0, 0}))
        for (const auto& [key, out] : Ptilde.acts.at({0, 0}))
            for (int t : out) S.d.set(t, key[0]);
    S.H.graded_ops = true;
    S.H.add("u*", {0, 1, 2}, 0, k, -1);
    S.H.add("v*", {1, 0, 1}, 0, k - 1, -1);
    S.iota = F2Matrix(n, 2);
    S.proj = F2Matrix(2, n);
    S.htpy = F2Matrix(n, n);
    S.iota.set(must_find(S.C, cl(k, k, loop(k))), 0);
    S.iota.set(must_find(S.C, cl(k - 1, k - 1, up(k - 1))), 1);
    S.proj.set(0, must_find(S.C, cl(k, k, loop(k))));
    S.proj.set(1, must_find(S.C, cl(k - 1, k - 1, up(k - 1))));
    for (int i = k; i <= m; ++i)
        S.htpy.set(must_find(S.C, cl(i, k, idpath(k))), must_find(S.C, cl(i, k - 1, up(k - 1))));
    for (int i = k + 1; i <= m; ++i)
        S.htpy.set(must_find(S.C, cl(i, k + 1, down(k + 1))), must_find(S.C, cl(i, k, loop(k))));
    CheckReport rep = validate_splitting(S);
    if (!rep.ok)
        throw std::logic_error("pk_prescribed_splitting: " + rep.failures.front().relation);
    return S;
}

SplittingData kp_prescribed_splitting(const AInfBimodule& kPtilde, int m, int k) {
    SplittingData S;
    S.C = kPtilde.space;
    int n = S.C.dim();
    S.d = F2Matrix(n, n);
    if (kPtilde.acts.count({0, 0}))
        for (const auto& [key, out] : kPtilde.acts.at({0, 0}))
            for (int t : out) S.d.set(t, key[0]);
    S.H.graded_ops = true;
    S.H.add("u", {0, 0, 0}, 0, -1, k);
    S.H.add("v", {-1, 1, 1}, 0, -1, k - 1);
    S.iota = F2Matrix(n, 2);
    S.proj = F2Matrix(2, n);
    S.htpy = F2Matrix(n, n);
    S.iota.set(must_find(S.C, cl(k, k, idpath(k))), 0);
    S.iota.set(must_find(S.C, cl(k - 1, k - 1, down(k))), 1);
    S.proj.set(0, must_find(S.C, cl(k, k, idpath(k))));
    S.proj.set(1, must_find(S.C, cl(k - 1, k - 1, down(k))));
    for (int j = k; j <= m; ++j)
        S.htpy.set(must_find(S.C, cl(j, k - 1, down(k))), must_find(S.C, cl(j, k, loop(k))));
    for (int j = k + 1; j <= m; ++j)
        S.htpy.set(must_find(S.C, cl(j, k, idpath(k))), must_find(S.C, cl(j, k + 1, up(k))));
    CheckReport rep = validate_splitting(S);
    if (!rep.ok)
        throw std::logic_error("kp_prescribed_splitting: " + rep.failures.front().relation);
    return S;
}

SplittingData pair_splitting(const SplittingData& L, const SplittingData& R,
                             const GradedBasisSpace& pair_C, const GradedBasisSpace& pair_H) {
    int nl = L.C.dim(), nr = R.C.dim();
    int hl = L.H.dim(), hr = R.H.dim();
    SplittingData S;
    S.C = pair_C;
    S.H = pair_H;
    int n = nl * nr, h = hl * hr;
    if (pair_C.dim() != n || pair_H.dim() != h)
        throw std::invalid_argument("pair_splitting: space dimensions do not multiply up");
    auto cid = [&](int a, int b) { return a * nr + b; };
    auto hid = [&](int a, int b) { return a * hr + b; };
    S.d = F2Matrix(n, n);
    S.iota = F2Matrix(n, h);
    S.proj = F2Matrix(h, n);
    S.htpy = F2Matrix(n, n);
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b) {
            for (int t = 0; t < nl; ++t)
                if (L.d.get(t, a)) S.d.set(cid(t, b), cid(a, b));
            for (int t = 0; t < nr; ++t)
                if (R.d.get(t, b)) S.d.set(cid(a, t), cid(a, b));
            // h (x) 1
            for (int t = 0; t < nl; ++t)
                if (L.htpy.get(t, a)) S.htpy.set(cid(t, b), cid(a, b));
            // iota proj (x) h'
            Chain ip = L.iota.apply(L.proj.apply({a}));
            Chain hb = R.htpy.apply({b});
            for (int t : ip)
                for (int u : hb) S.htpy.flip(cid(t, u), cid(a, b));
        }
    for (int x = 0; x < hl; ++x)
        for (int y = 0; y < hr; ++y) {
            Chain ix = L.iota.apply({x}), iy = R.iota.apply({y});
            for (int a : ix)
                for (int b : iy) S.iota.set(cid(a, b), hid(x, y));
        }
    for (int a = 0; a < nl; ++a)
        for (int b = 0; b < nr; ++b) {
            Chain px = L.proj.apply({a}), py = R.proj.apply({b});
            for (int x : px)
                for (int y : py) S.proj.set(hid(x, y), cid(a, b));
        }
    CheckReport rep = validate_splitting(S);
    if (!rep.ok)
        throw std::logic_error("pair_splitting: " + rep.failures.front().relation);
    return S;
}

AInfBimodule restrict_along_iota(const AInfBimodule& M, const SplittingData& S,
                                 std::shared_ptr<const AInfAlgebra> small) {
    AInfBimodule out;
    out.over = std::move(small);
    out.space = M.space;
    if (M.acts.count({0, 0})) out.acts[{0, 0}] = M.acts.at({0, 0});
    if (M.acts.count({1, 0})) {
        SparseOp act;
        for (int a = 0; a < out.over->space.dim(); ++a) {
            Chain ia = S.iota.apply({a});
            for (int x = 0; x < M.space.dim(); ++x) {
                Chain v = M.eval({1, 0}, {ia, {x}});
                if (!v.empty()) act.emplace(std::vector<int>{a, x}, std::move(v));
            }
        }
        out.acts[{1, 0}] = std::move(act);
    }
    if (M.acts.count({0, 1})) {
        SparseOp act;
        for (int a = 0; a < out.over->space.dim(); ++a) {
            Chain ia = S.iota.apply({a});
            for (int x = 0; x < M.space.dim(); ++x) {
                Chain v = M.eval({0, 1}, {{x}, ia});
                if (!v.empty()) act.emplace(std::vector<int>{x, a}, std::move(v));
            }
        }
        out.acts[{0, 1}] = std::move(act);
    }
    return out;
}

}  // namespace bfk
