#include "bfk/hfside.hpp"

#include <stdexcept>

#include "bfk/tensor.hpp"

namespace bfk {

namespace {

std::string one(int i, int j) { return "1[" + std::to_string(i) + "," + std::to_string(j) + "]"; }
std::string rho(int i, int j) { return "rho[" + std::to_string(i) + "," + std::to_string(j) + "]"; }
std::string sig(int i, int j) { return "sig[" + std::to_string(i) + "," + std::to_string(j) + "]"; }


}  // namespace

std::shared_ptr<AInfAlgebra> bhf_raw(int m) {
    if (m < 0) throw std::invalid_argument("bhf_raw: m must be >= 0");
    auto A = std::make_shared<AInfAlgebra>();
    A->space.graded_ops = true;  // Maslov degree, all generators in degree 0
    for (int i = 0; i <= m; ++i) {
        A->space.add(one(i, i), {0}, 0, i, i);
        for (int j = 0; j < i; ++j) {
            A->space.add(rho(i, j), {0}, 0, i, j);
            A->space.add(sig(i, j), {0}, 0, i, j);
        }
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
    for (int i = 0; i <= m; ++i) {
        put(one(i, i), one(i, i), one(i, i));
        for (int j = 0; j < i; ++j) {
            put(one(i, i), rho(i, j), rho(i, j));
            put(one(i, i), sig(i, j), sig(i, j));
            put(rho(i, j), one(j, j), rho(i, j));
            put(sig(i, j), one(j, j), sig(i, j));
            for (int k = 0; k < j; ++k) {
                put(rho(i, j), rho(j, k), rho(i, k));
                put(sig(i, j), sig(j, k), sig(i, k));
            }
        }
    }
    A->mult[2] = std::move(m2);
    return A;
}

std::shared_ptr<AInfAlgebra> bhf(int m) {
    if (m < 0) throw std::invalid_argument("bhf: m must be >= 0");
    auto A = std::make_shared<AInfAlgebra>();
    A->space.graded_ops = true;
    A->space.filtered = true;
    for (int i = 0; i <= m; ++i) {
        A->space.add(one(i, i), {0}, 0, i, i);
        for (int j = 0; j < i; ++j) {
            A->space.add(one(i, j), {0}, 0, i, j);
            A->space.add(rho(i, j), {0}, 1, i, j);
        }
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
    // (rho+sig)(rho+sig) = rho+sig,  (rho+sig)rho = rho(rho+sig) = rho rho = rho
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k <= j; ++k) {
                put(one(i, j), one(j, k), one(i, k));
                if (i > k) {
                    if (j > k) put(one(i, j), rho(j, k), rho(i, k));
                    if (i > j) put(rho(i, j), one(j, k), rho(i, k));
                    if (i > j && j > k) put(rho(i, j), rho(j, k), rho(i, k));
                }
            }
    A->mult[2] = std::move(m2);
    return A;
}

namespace {

AInfBimodule pk_hf_impl(int m, int k, std::shared_ptr<const AInfAlgebra> A, bool raw) {
    if (k < 1 || k > m) throw std::out_of_range("pk_hf: k out of range");
    AInfBimodule M;
    M.over = A;
    M.space.filtered = !raw;
    M.space.add("u*", {1}, 1, k, -1);
    M.space.add("v*", {1}, 0, k - 1, -1);
    SparseOp act;
    auto put = [&](const std::string& t, const std::string& x, const std::string& y) {
        act.emplace(std::vector<int>{A->space.find(t), M.space.find(x)},
                    Chain{M.space.find(y)});
    };
    put(one(k, k), "u*", "u*");
    put(one(k - 1, k - 1), "v*", "v*");
    put(rho(k, k - 1), "v*", "u*");
    if (raw) put(sig(k, k - 1), "v*", "u*");
    M.acts[{1, 0}] = std::move(act);
    return M;
}

AInfBimodule kp_hf_impl(int m, int k, std::shared_ptr<const AInfAlgebra> A, bool raw) {
    if (k < 1 || k > m) throw std::out_of_range("kp_hf: k out of range");
    AInfBimodule M;
    M.over = A;
    M.space.filtered = !raw;
    M.space.add("u", {0}, 0, -1, k);
    M.space.add("v", {0}, 1, -1, k - 1);
    SparseOp act;
    auto put = [&](const std::string& x, const std::string& t, const std::string& y) {
        act.emplace(std::vector<int>{M.space.find(x), A->space.find(t)},
                    Chain{M.space.find(y)});
    };
    put("u", one(k, k), "u");
    put("v", one(k - 1, k - 1), "v");
    put("u", rho(k, k - 1), "v");
    if (raw) put("u", sig(k, k - 1), "v");
    M.acts[{0, 1}] = std::move(act);
    return M;
}

}  // namespace

AInfBimodule pk_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return pk_hf_impl(m, k, std::move(A), false);
}
AInfBimodule kp_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return kp_hf_impl(m, k, std::move(A), false);
}
AInfBimodule pk_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return pk_hf_impl(m, k, std::move(A), true);
}
AInfBimodule kp_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return kp_hf_impl(m, k, std::move(A), true);
}

std::shared_ptr<AInfBimodule> pk_pair_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return std::make_shared<AInfBimodule>(pair_bimodule(pk_hf(m, k, A), kp_hf(m, k, A)));
}
std::shared_ptr<AInfBimodule> pk_pair_hf_raw(int m, int k,
                                             std::shared_ptr<const AInfAlgebra> A) {
    return std::make_shared<AInfBimodule>(pair_bimodule(pk_hf_raw(m, k, A), kp_hf_raw(m, k, A)));
}

namespace {

AInfMorphism beta_hf_impl(int m, int k, std::shared_ptr<const AInfAlgebra> A, bool raw) {
    auto pair = raw ? pk_pair_hf_raw(m, k, A) : pk_pair_hf(m, k, A);
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
    if (raw) {
        for (int i = k + 1; i <= m; ++i) putL(rho(i, k), "u*(x)u", rho(i, k));
        putL(sig(k, k - 1), "v*(x)u", one(k, k));
        for (int i = k + 1; i <= m; ++i) putL(rho(i, k - 1), "v*(x)u", rho(i, k));
        for (int i = k + 1; i <= m; ++i) putL(sig(i, k - 1), "v*(x)u", sig(i, k));
        for (int i = k; i <= m; ++i) putL(rho(i, k - 1), "v*(x)v", rho(i, k - 1));
        for (int j = 0; j <= k - 1; ++j) putR("u*(x)u", rho(k, j), rho(k, j));
        putR("v*(x)u", sig(k, k - 1), one(k - 1, k - 1));
        for (int j = 0; j <= k - 2; ++j) putR("v*(x)u", rho(k, j), rho(k - 1, j));
        for (int j = 0; j <= k - 2; ++j) putR("v*(x)u", sig(k, j), sig(k - 1, j));
        for (int j = 0; j <= k - 2; ++j) putR("v*(x)v", rho(k - 1, j), rho(k - 1, j));
    } else {
        // same tables on the adapted basis 1 = rho+sig
        for (int i = k + 1; i <= m; ++i) putL(one(i, k), "u*(x)u", rho(i, k));
        for (int i = k + 1; i <= m; ++i) putL(rho(i, k), "u*(x)u", rho(i, k));
        for (int i = k; i <= m; ++i) putL(one(i, k - 1), "v*(x)u", one(i, k));
        for (int i = k + 1; i <= m; ++i) putL(rho(i, k - 1), "v*(x)u", rho(i, k));
        for (int i = k; i <= m; ++i) putL(one(i, k - 1), "v*(x)v", rho(i, k - 1));
        for (int i = k; i <= m; ++i) putL(rho(i, k - 1), "v*(x)v", rho(i, k - 1));
        for (int j = 0; j <= k - 1; ++j) putR("u*(x)u", one(k, j), rho(k, j));
        for (int j = 0; j <= k - 1; ++j) putR("u*(x)u", rho(k, j), rho(k, j));
        for (int j = 0; j <= k - 1; ++j) putR("v*(x)u", one(k, j), one(k - 1, j));
        for (int j = 0; j <= k - 2; ++j) putR("v*(x)u", rho(k, j), rho(k - 1, j));
        for (int j = 0; j <= k - 2; ++j) putR("v*(x)v", one(k - 1, j), rho(k - 1, j));
        for (int j = 0; j <= k - 2; ++j) putR("v*(x)v", rho(k - 1, j), rho(k - 1, j));
    }
    f.comps[{1, 0}] = std::move(c110);
    f.comps[{0, 1}] = std::move(c011);
    return f;
}

AInfMorphism gamma_hf_impl(int m, int k, std::shared_ptr<const AInfAlgebra> A, bool raw) {
    auto pair = raw ? pk_pair_hf_raw(m, k, A) : pk_pair_hf(m, k, A);
    auto shifted = std::make_shared<AInfBimodule>(*pair);
    if (!raw) shifted->space = apply_shift(pair->space, GradingShift{{}, -1});
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
    put(rho(k, k - 1), "u*(x)v");
    if (raw) put(sig(k, k - 1), "u*(x)v");
    f.comps[{0, 0}] = std::move(comp);
    return f;
}

}  // namespace

AInfMorphism beta_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return beta_hf_impl(m, k, std::move(A), false);
}
AInfMorphism beta_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return beta_hf_impl(m, k, std::move(A), true);
}
AInfMorphism gamma_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return gamma_hf_impl(m, k, std::move(A), false);
}
AInfMorphism gamma_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A) {
    return gamma_hf_impl(m, k, std::move(A), true);
}

AInfBimodule artin_bimodule_hf(int m, int k, bool positive,
                               std::shared_ptr<const AInfAlgebra> A) {
    if (k < 1 || k > m) throw std::out_of_range("artin_bimodule_hf: k out of range");
    return positive ? mapping_cone(beta_hf(m, k, A)) : mapping_cone(gamma_hf(m, k, A));
}

AInfBimodule braid_bimodule_hf(int m, const BraidWord& w,
                               std::shared_ptr<const AInfAlgebra> A) {
    if (w.m != m) throw std::invalid_argument("braid_bimodule_hf: word over wrong index");
    if (w.empty()) return AInfBimodule::regular(A);
    AInfBimodule acc = artin_bimodule_hf(m, std::abs(w.letters[0]), w.letters[0] > 0, A);
    for (size_t t = 1; t < w.letters.size(); ++t) {
        AInfBimodule next = artin_bimodule_hf(m, std::abs(w.letters[t]), w.letters[t] > 0, A);
        acc = reduced_tensor(acc, next);
    }
    return acc;
}

CheckReport verify_hf_homomorphism_identities(int m, int k) {
    CheckReport rep;
    auto A = bhf_raw(m);
    auto pair = pk_pair_hf_raw(m, k, A);
    AInfMorphism beta = beta_hf_raw(m, k, A);

    auto b110 = [&](const Chain& a, const Chain& x) { return beta.eval({1, 0}, {a, x}); };
    auto b011 = [&](const Chain& x, const Chain& a) { return beta.eval({0, 1}, {x, a}); };
    auto mult = [&](const Chain& a, const Chain& b) { return A->eval(2, {a, b}); };
    auto actL = [&](const Chain& a, const Chain& x) { return pair->eval({1, 0}, {a, x}); };
    auto actR = [&](const Chain& x, const Chain& a) { return pair->eval({0, 1}, {x, a}); };

    int da = A->space.dim(), dm = pair->space.dim();
    for (int a1 = 0; a1 < da; ++a1)
        for (int a2 = 0; a2 < da; ++a2)
            for (int x = 0; x < dm; ++x) {
                std::vector<std::string> tup{A->space.labels[a1], A->space.labels[a2],
                                             pair->space.labels[x]};
                Chain ca1{a1}, ca2{a2}, cx{x};
                Chain lhs1 = b110(mult(ca1, ca2), cx);
                chain_add_inplace(lhs1, b110(ca1, actL(ca2, cx)));
                chain_add_inplace(lhs1, mult(ca1, b110(ca2, cx)));
                if (!lhs1.empty()) rep.fail("identity (a1 a2, m)", tup);

                Chain lhs2 = b011(cx, mult(ca1, ca2));
                chain_add_inplace(lhs2, b011(actR(cx, ca1), ca2));
                chain_add_inplace(lhs2, mult(b011(cx, ca1), ca2));
                if (!lhs2.empty()) rep.fail("identity (m, a1 a2)", tup);

                Chain lhs3 = mult(ca1, b011(cx, ca2));
                chain_add_inplace(lhs3, b011(actL(ca1, cx), ca2));
                chain_add_inplace(lhs3, mult(b110(ca1, cx), ca2));
                chain_add_inplace(lhs3, b110(ca1, actR(cx, ca2)));
                if (!lhs3.empty()) rep.fail("identity (a1, m, a2)", tup);
                rep.instances += 3;
            }
    return rep;
}

LabelRename hf_to_kh_rename() {
    return [](const std::string& l) {
        std::string out = l;
        size_t pos = 0;
        while ((pos = out.find("rho[", pos)) != std::string::npos) {
            out.replace(pos, 4, "x[");
            pos += 2;
        }
        return out;
    };
}

}  // namespace bfk
