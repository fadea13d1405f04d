#include "bfk/transfer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace bfk {

namespace {

void expect_zero(CheckReport& rep, const F2Matrix& M, const GradedBasisSpace& names,
                 const std::string& what) {
    for (int c = 0; c < M.cols(); ++c)
        for (int r = 0; r < M.rows(); ++r)
            if (M.get(r, c)) {
                rep.fail(what, {names.labels[c]});
                return;
            }
}

F2Matrix madd(const F2Matrix& a, const F2Matrix& b) {
    F2Matrix out = a;
    for (int r = 0; r < out.rows(); ++r) out.xor_row(r, b, r);
    return out;
}

}  // namespace

CheckReport validate_splitting(const SplittingData& S) {
    CheckReport rep;
    int n = S.C.dim(), k = S.H.dim();
    if (S.d.rows() != n || S.d.cols() != n || S.iota.rows() != n || S.iota.cols() != k ||
        S.proj.rows() != k || S.proj.cols() != n || S.htpy.rows() != n || S.htpy.cols() != n) {
        rep.fail("splitting shapes", {}, "matrix dimensions do not match the spaces");
        return rep;
    }
    expect_zero(rep, S.d.multiply(S.d), S.C, "d^2 = 0");
    expect_zero(rep, S.d.multiply(S.iota), S.H, "d iota = 0");
    expect_zero(rep, S.proj.multiply(S.d), S.C, "proj d = 0");
    expect_zero(rep, madd(S.proj.multiply(S.iota), F2Matrix::identity(k)), S.H,
                "proj iota = Id");
    F2Matrix lhs = madd(S.iota.multiply(S.proj), F2Matrix::identity(n));
    F2Matrix rhs = madd(S.d.multiply(S.htpy), S.htpy.multiply(S.d));
    expect_zero(rep, madd(lhs, rhs), S.C, "iota proj = Id + d h + h d");
    expect_zero(rep, S.htpy.multiply(S.htpy), S.C, "h^2 = 0");
    expect_zero(rep, S.proj.multiply(S.htpy), S.C, "proj h = 0");
    expect_zero(rep, S.htpy.multiply(S.iota), S.H, "h iota = 0");
    return rep;
}

SplittingData split(const GradedBasisSpace& C, const F2Matrix& d) {
    int n = C.dim();
    auto rki = rank_kernel_image(d);
    int r = rki.rank;

    // representatives: kernel vectors independent from im(d)
    std::vector<Chain> reps;
    {
        F2Matrix span = rki.image;  // inside ker(d) since d^2 = 0
        span = row_echelon(span);
        for (int i = 0; i < rki.kernel.rows(); ++i) {
            Chain v = rki.kernel.row_chain(i);
            if (!subspace_contains(span, v)) {
                reps.push_back(v);
                span = subspace_sum(span, F2Matrix::from_rows({v}, n));
            }
        }
    }
    int k = static_cast<int>(reps.size());

    SplittingData S;
    S.C = C;
    S.d = d;
    for (int i = 0; i < k; ++i) {
        // name homology classes by their leading representative term
        Chain v = reps[i];
        std::string lbl = "[" + C.labels[v.front()] + "]";
        while (S.H.index.count(lbl)) lbl += "'";
        int li = C.left_idem[v.front()], ri = C.right_idem[v.front()];
        S.H.add(lbl, {}, 0, li, ri);
    }

    // change of basis: columns = [im(d) | reps | preimages]
    F2Matrix T(n, n);
    for (int i = 0; i < r; ++i)
        for (int c : rki.image.row_chain(i)) T.set(c, i);
    for (int i = 0; i < k; ++i)
        for (int c : reps[i]) T.set(c, r + i);
    for (int i = 0; i < r; ++i)
        for (int c : rki.preimage.row_chain(i)) T.set(c, r + k + i);
    auto Tinv = f2_inverse(T);
    if (!Tinv) throw std::logic_error("split: change of basis is singular");

    S.iota = F2Matrix(n, k);
    for (int i = 0; i < k; ++i)
        for (int c : reps[i]) S.iota.set(c, i);
    S.proj = F2Matrix(k, n);
    for (int i = 0; i < k; ++i)
        S.proj.set_row(i, Tinv->row_chain(r + i));
    // h: image-basis vector i  ->  its chosen preimage
    F2Matrix pre_cols(n, r);
    for (int i = 0; i < r; ++i)
        for (int c : rki.preimage.row_chain(i)) pre_cols.set(c, i);
    F2Matrix im_coords(r, n);
    for (int i = 0; i < r; ++i) im_coords.set_row(i, Tinv->row_chain(i));
    S.htpy = pre_cols.multiply(im_coords);

    CheckReport rep = validate_splitting(S);
    if (!rep.ok)
        throw std::logic_error("split: constructed splitting fails " +
                               rep.failures.front().relation);
    return S;
}

SplittingData split_prescribed(GradedBasisSpace C, F2Matrix d, GradedBasisSpace H,
                               F2Matrix iota, F2Matrix proj, F2Matrix htpy) {
    SplittingData S{std::move(C), std::move(d), std::move(H),
                    std::move(iota), std::move(proj), std::move(htpy)};
    CheckReport rep = validate_splitting(S);
    if (!rep.ok) {
        const auto& f = rep.failures.front();
        std::string at = f.tuple.empty() ? "" : " at " + f.tuple.front();
        throw std::invalid_argument("split_prescribed: identity '" + f.relation +
                                    "' fails" + at);
    }
    return S;
}

const std::vector<RootedTree>& rooted_trees(int leaves) {
    static std::map<int, std::vector<RootedTree>> cache;
    auto it = cache.find(leaves);
    if (it != cache.end()) return it->second;

    // a tree with n leaves: root of arity r >= 2 over subtrees-or-leaves
    std::function<std::vector<RootedTree>(int)> gen = [&](int n) -> std::vector<RootedTree> {
        std::vector<RootedTree> out;
        if (n == 1) {
            out.push_back(RootedTree{});
            return out;
        }
        // compositions n = n_1 + ... + n_r, r >= 2, n_i >= 1
        std::function<void(int, std::vector<std::vector<RootedTree>>&)> rec =
            [&](int rem, std::vector<std::vector<RootedTree>>& acc) {
                if (rem == 0) {
                    if (acc.size() < 2) return;
                    std::vector<size_t> pick(acc.size(), 0);
                    for (;;) {
                        RootedTree t;
                        for (size_t i = 0; i < acc.size(); ++i)
                            t.children.push_back(acc[i][pick[i]]);
                        out.push_back(std::move(t));
                        size_t j = 0;
                        while (j < acc.size() && ++pick[j] == acc[j].size()) pick[j++] = 0;
                        if (j == acc.size()) break;
                    }
                    return;
                }
                for (int take = 1; take <= rem; ++take) {
                    if (acc.empty() && take == rem) continue;  // needs >= 2 children
                    acc.push_back(gen(take));
                    rec(rem - take, acc);
                    acc.pop_back();
                }
            };
        std::vector<std::vector<RootedTree>> acc;
        rec(n, acc);
        return out;
    };
    return cache.emplace(leaves, gen(leaves)).first->second;
}

namespace {

Chain eval_tree(const AInfAlgebra& A, const SplittingData& S, const RootedTree& t,
                const std::vector<int>& inputs, int& cursor, bool is_root) {
    if (t.is_leaf()) {
        Chain h{inputs[cursor++]};
        return S.iota.apply(h);
    }
    std::vector<Chain> vals;
    vals.reserve(t.children.size());
    for (const auto& c : t.children)
        vals.push_back(eval_tree(A, S, c, inputs, cursor, false));
    Chain out = A.eval(static_cast<int>(t.children.size()), vals);
    if (!is_root) out = S.htpy.apply(out);
    return out;
}

void matched_h_tuples(const GradedBasisSpace& H, int n,
                      const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> key(n);
    std::function<void(int, int)> rec = [&](int pos, int left_of_next) {
        if (pos < 0) { fn(key); return; }
        for (int id = 0; id < H.dim(); ++id) {
            int ri = H.right_idem[id];
            if (left_of_next != -2 && ri != -1 && left_of_next != -1 && ri != left_of_next)
                continue;
            key[pos] = id;
            rec(pos - 1, H.left_idem[id]);
        }
    };
    rec(n - 1, -2);
}

}  // namespace

AInfAlgebra transfer_algebra(const AInfAlgebra& A, const SplittingData& S, int cap) {
    if (cap < 2) throw std::invalid_argument("transfer_algebra: cap must be >= 2");
    AInfAlgebra out;
    out.space = S.H;
    // unit and idempotents carry over when H-labels mark them; callers that
    // prescribe splittings set these up afterwards.
    for (int n = 2; n <= cap; ++n) {
        SparseOp op;
        const auto& trees = rooted_trees(n);
        matched_h_tuples(S.H, n, [&](const std::vector<int>& key) {
            Chain total;
            for (const auto& t : trees) {
                int cursor = 0;
                chain_add_inplace(total, eval_tree(A, S, t, key, cursor, true));
            }
            Chain res = S.proj.apply(total);
            if (!res.empty()) op.emplace(key, std::move(res));
        });
        if (!op.empty()) out.mult[n] = std::move(op);
    }
    return out;
}

namespace {

void require_dg(const AInfBimodule& M, const char* who) {
    for (const auto& [sig, op] : M.acts)
        if (sig.first + 1 + sig.second > 2 && !op.empty())
            throw std::invalid_argument(std::string(who) +
                                        ": module must be a dg (bi)module");
    if (!M.over->is_honest())
        throw std::invalid_argument(std::string(who) +
                                    ": underlying algebra must have m_2 only; restrict "
                                    "along a strict embedding first");
}

/// All interleavings of n1 left moves and n2 right moves; entries are true
/// for a left move.  Moves are applied innermost-first.
void interleavings(int n1, int n2, std::vector<std::vector<bool>>& out) {
    std::vector<bool> cur;
    std::function<void(int, int)> rec = [&](int l, int r) {
        if (l == 0 && r == 0) { out.push_back(cur); return; }
        if (l > 0) { cur.push_back(true); rec(l - 1, r); cur.pop_back(); }
        if (r > 0) { cur.push_back(false); rec(l, r - 1); cur.pop_back(); }
    };
    rec(n1, n2);
}

/// One plan applied to key = [a_1..a_n1, x, b_1..b_n2]: starting from
/// iota(x), consume left inputs from a_n1 inward-out and right inputs from
/// b_1 outward, with the homotopy between consecutive actions and proj last.
Chain eval_plan(const AInfBimodule& M, const SplittingData& S,
                const std::vector<bool>& plan, const std::vector<int>& key, int n1) {
    Chain state = S.iota.apply({key[n1]});
    int li = n1 - 1;            // next left input (innermost remaining)
    int ri = n1 + 1;            // next right input
    for (size_t step = 0; step < plan.size(); ++step) {
        if (step > 0) state = S.htpy.apply(state);
        if (state.empty()) return {};
        if (plan[step])
            state = M.eval({1, 0}, {{key[li--]}, state});
        else
            state = M.eval({0, 1}, {state, {key[ri++]}});
    }
    return state;
}

void matched_module_tuples(const GradedBasisSpace& A, const GradedBasisSpace& Mod,
                           int n1, int n2,
                           const std::function<void(const std::vector<int>&)>& fn) {
    for (int x = 0; x < Mod.dim(); ++x) {
        std::vector<int> lefts(n1), rights(n2);
        std::function<void(int, int)> recL = [&](int pos, int right_needed) {
            if (pos < 0) {
                std::function<void(int, int)> recR = [&](int p, int left_needed) {
                    if (p == n2) {
                        std::vector<int> key;
                        key.insert(key.end(), lefts.begin(), lefts.end());
                        key.push_back(x);
                        key.insert(key.end(), rights.begin(), rights.end());
                        fn(key);
                        return;
                    }
                    for (int id = 0; id < A.dim(); ++id) {
                        if (left_needed != -1 && A.left_idem[id] != -1 &&
                            A.left_idem[id] != left_needed)
                            continue;
                        rights[p] = id;
                        recR(p + 1, A.right_idem[id]);
                    }
                };
                recR(0, Mod.right_idem[x]);
                return;
            }
            for (int id = 0; id < A.dim(); ++id) {
                if (right_needed != -1 && A.right_idem[id] != -1 &&
                    A.right_idem[id] != right_needed)
                    continue;
                lefts[pos] = id;
                recL(pos - 1, A.left_idem[id]);
            }
        };
        recL(n1 - 1, Mod.left_idem[x]);
    }
}

}  // namespace

AInfBimodule transfer_bimodule(const AInfBimodule& M, const SplittingData& S, int cap) {
    require_dg(M, "transfer_bimodule");
    AInfBimodule out;
    out.over = M.over;
    out.space = S.H;
    bool left = M.acts.count({1, 0}), right = M.acts.count({0, 1});
    for (int n1 = 0; n1 <= cap - 1; ++n1) {
        for (int n2 = 0; n1 + 1 + n2 <= cap; ++n2) {
            if (n1 + n2 == 0) continue;  // transferred differential vanishes
            if ((n1 > 0 && !left) || (n2 > 0 && !right)) continue;
            std::vector<std::vector<bool>> plans;
            interleavings(n1, n2, plans);
            SparseOp op;
            matched_module_tuples(M.over->space, S.H, n1, n2, [&](const std::vector<int>& key) {
                Chain total;
                for (const auto& plan : plans)
                    chain_add_inplace(total, eval_plan(M, S, plan, key, n1));
                Chain res = S.proj.apply(total);
                if (!res.empty()) op.emplace(key, std::move(res));
            });
            if (!op.empty()) out.acts[{n1, n2}] = std::move(op);
        }
    }
    return out;
}

namespace {

/// Recursive components of the transferred inclusion H(M) -> M.
struct IotaBuilder {
    const AInfBimodule& M;
    const SplittingData& S;
    std::map<Sig, SparseOp> comps;

    Chain eval(Sig sig, const std::vector<int>& key) {
        auto it = comps.find(sig);
        if (it == comps.end()) return {};
        auto hit = it->second.find(key);
        return hit == it->second.end() ? Chain{} : hit->second;
    }

    void build(int cap) {
        // (0|1|0) = iota
        SparseOp base;
        for (int x = 0; x < S.H.dim(); ++x) {
            Chain v = S.iota.apply({x});
            if (!v.empty()) base.emplace(std::vector<int>{x}, std::move(v));
        }
        comps[{0, 0}] = std::move(base);
        bool left = M.acts.count({1, 0}), right = M.acts.count({0, 1});
        for (int total = 1; total < cap; ++total) {
            for (int n1 = 0; n1 <= total; ++n1) {
                int n2 = total - n1;
                if ((n1 > 0 && !left) || (n2 > 0 && !right)) continue;
                SparseOp op;
                matched_module_tuples(M.over->space, S.H, n1, n2,
                                      [&](const std::vector<int>& key) {
                    Chain acc;
                    if (n1 > 0) {
                        std::vector<int> sub(key.begin() + 1, key.end());
                        Chain inner = eval({n1 - 1, n2}, sub);
                        if (!inner.empty())
                            chain_add_inplace(acc, M.eval({1, 0}, {{key[0]}, inner}));
                    }
                    if (n2 > 0) {
                        std::vector<int> sub(key.begin(), key.end() - 1);
                        Chain inner = eval({n1, n2 - 1}, sub);
                        if (!inner.empty())
                            chain_add_inplace(acc, M.eval({0, 1}, {inner, {key.back()}}));
                    }
                    Chain res = S.htpy.apply(acc);
                    if (!res.empty()) op.emplace(key, std::move(res));
                });
                if (!op.empty()) comps[{n1, n2}] = std::move(op);
            }
        }
    }
};

/// Recursive components of the transferred projection M -> H(M).
struct ProjBuilder {
    const AInfBimodule& M;
    const SplittingData& S;
    std::map<Sig, SparseOp> comps;

    Chain eval(Sig sig, const std::vector<Chain>& in) {
        auto it = comps.find(sig);
        if (it == comps.end()) return {};
        for (const auto& c : in)
            if (c.empty()) return {};
        Chain out;
        std::vector<int> key(in.size());
        std::function<void(size_t)> rec = [&](size_t slot) {
            if (slot == in.size()) {
                auto hit = it->second.find(key);
                if (hit != it->second.end()) chain_add_inplace(out, hit->second);
                return;
            }
            for (int id : in[slot]) { key[slot] = id; rec(slot + 1); }
        };
        rec(0);
        return out;
    }

    void build(int cap) {
        SparseOp base;
        for (int x = 0; x < M.space.dim(); ++x) {
            Chain v = S.proj.apply({x});
            if (!v.empty()) base.emplace(std::vector<int>{x}, std::move(v));
        }
        comps[{0, 0}] = std::move(base);
        const AInfAlgebra& A = *M.over;
        bool left = M.acts.count({1, 0}), right = M.acts.count({0, 1});
        for (int total = 1; total < cap; ++total) {
            for (int n1 = 0; n1 <= total; ++n1) {
                int n2 = total - n1;
                if ((n1 > 0 && !left) || (n2 > 0 && !right)) continue;
                SparseOp op;
                matched_module_tuples(A.space, M.space, n1, n2,
                                      [&](const std::vector<int>& key) {
                    Chain hx = S.htpy.apply({key[n1]});
                    if (hx.empty()) return;
                    Chain acc;
                    // module action consuming the innermost algebra input
                    if (n1 > 0) {
                        Chain inner = M.eval({1, 0}, {{key[n1 - 1]}, hx});
                        if (!inner.empty()) {
                            std::vector<Chain> in;
                            for (int t = 0; t < n1 - 1; ++t) in.push_back({key[t]});
                            in.push_back(inner);
                            for (int t = n1 + 1; t < n1 + 1 + n2; ++t) in.push_back({key[t]});
                            chain_add_inplace(acc, eval({n1 - 1, n2}, in));
                        }
                    }
                    if (n2 > 0) {
                        Chain inner = M.eval({0, 1}, {hx, {key[n1 + 1]}});
                        if (!inner.empty()) {
                            std::vector<Chain> in;
                            for (int t = 0; t < n1; ++t) in.push_back({key[t]});
                            in.push_back(inner);
                            for (int t = n1 + 2; t < n1 + 1 + n2; ++t) in.push_back({key[t]});
                            chain_add_inplace(acc, eval({n1, n2 - 1}, in));
                        }
                    }
                    // algebra multiplications between adjacent inputs
                    for (int s = 0; s + 1 < n1; ++s) {
                        Chain prod = A.eval(2, {{key[s]}, {key[s + 1]}});
                        if (prod.empty()) continue;
                        std::vector<Chain> in;
                        for (int t = 0; t < s; ++t) in.push_back({key[t]});
                        in.push_back(prod);
                        for (int t = s + 2; t < n1; ++t) in.push_back({key[t]});
                        in.push_back(hx);
                        for (int t = n1 + 1; t < n1 + 1 + n2; ++t) in.push_back({key[t]});
                        chain_add_inplace(acc, eval({n1 - 1, n2}, in));
                    }
                    for (int s = n1 + 1; s + 1 < n1 + 1 + n2; ++s) {
                        Chain prod = A.eval(2, {{key[s]}, {key[s + 1]}});
                        if (prod.empty()) continue;
                        std::vector<Chain> in;
                        for (int t = 0; t < n1; ++t) in.push_back({key[t]});
                        in.push_back(hx);
                        for (int t = n1 + 1; t < s; ++t) in.push_back({key[t]});
                        in.push_back(prod);
                        for (int t = s + 2; t < n1 + 1 + n2; ++t) in.push_back({key[t]});
                        chain_add_inplace(acc, eval({n1, n2 - 1}, in));
                    }
                    if (!acc.empty()) op.emplace(key, std::move(acc));
                });
                if (!op.empty()) comps[{n1, n2}] = std::move(op);
            }
        }
    }
};

}  // namespace

AInfMorphism iota_infty(std::shared_ptr<const AInfBimodule> M,
                        std::shared_ptr<const AInfBimodule> HM,
                        const SplittingData& S, int cap) {
    require_dg(*M, "iota_infty");
    IotaBuilder b{*M, S, {}};
    b.build(cap);
    AInfMorphism f;
    f.src = std::move(HM);
    f.dst = std::move(M);
    f.comps = std::move(b.comps);
    return f;
}

AInfMorphism proj_infty(std::shared_ptr<const AInfBimodule> M,
                        std::shared_ptr<const AInfBimodule> HM,
                        const SplittingData& S, int cap) {
    require_dg(*M, "proj_infty");
    ProjBuilder b{*M, S, {}};
    b.build(cap);
    AInfMorphism f;
    f.src = std::move(M);
    f.dst = std::move(HM);
    f.comps = std::move(b.comps);
    return f;
}

AInfMorphism transfer_morphism(const AInfMorphism& F, const SplittingData& S_src,
                               const SplittingData& S_tgt,
                               std::shared_ptr<const AInfBimodule> H_src,
                               std::shared_ptr<const AInfBimodule> H_tgt, int cap) {
    if (!F.is_strict())
        throw std::invalid_argument("transfer_morphism: F must be strict");
    AInfMorphism inc = iota_infty(F.src, H_src, S_src, cap);
    AInfMorphism prj = proj_infty(F.dst, H_tgt, S_tgt, cap);

    AInfMorphism G;
    G.src = H_src;
    G.dst = H_tgt;
    const GradedBasisSpace& A = H_src->over->space;
    for (int n1 = 0; n1 + 1 <= cap; ++n1) {
        for (int n2 = 0; n1 + 1 + n2 <= cap; ++n2) {
            SparseOp op;
            std::function<void(const std::vector<int>&)> handle =
                [&](const std::vector<int>& key) {
                Chain total;
                for (int t = 0; t <= n1; ++t) {
                    for (int q = 0; q <= n2; ++q) {
                        // inner: iota_infty component (n1-t | 1 | n2-q)
                        std::vector<int> inner_key(key.begin() + t,
                                                   key.begin() + t + (n1 - t) + 1 + (n2 - q));
                        auto iti = inc.comps.find({n1 - t, n2 - q});
                        if (iti == inc.comps.end()) continue;
                        auto hit = iti->second.find(inner_key);
                        if (hit == iti->second.end() || hit->second.empty()) continue;
                        Chain mid = F.eval({0, 0}, {hit->second});
                        if (mid.empty()) continue;
                        std::vector<Chain> outer;
                        for (int s = 0; s < t; ++s) outer.push_back({key[s]});
                        outer.push_back(mid);
                        for (int s = n1 + 1 + (n2 - q); s < n1 + 1 + n2; ++s)
                            outer.push_back({key[s]});
                        // evaluate prj component (t|1|q) multilinearly
                        auto itp = prj.comps.find({t, q});
                        if (itp == prj.comps.end()) continue;
                        Chain res;
                        std::vector<int> k2(outer.size());
                        std::function<void(size_t)> rec = [&](size_t slot) {
                            if (slot == outer.size()) {
                                auto h2 = itp->second.find(k2);
                                if (h2 != itp->second.end()) chain_add_inplace(res, h2->second);
                                return;
                            }
                            for (int id : outer[slot]) { k2[slot] = id; rec(slot + 1); }
                        };
                        rec(0);
                        chain_add_inplace(total, res);
                    }
                }
                if (!total.empty()) op.emplace(key, std::move(total));
            };
            matched_module_tuples(A, H_src->space, n1, n2, handle);
            if (!op.empty()) G.comps[{n1, n2}] = std::move(op);
        }
    }
    return G;
}

FormalityCertificate check_formality_alg(const AInfAlgebra& A, const SplittingData& S) {
    FormalityCertificate cert;
    F2Matrix hi = S.htpy.multiply(S.iota);
    for (int c = 0; c < hi.cols(); ++c)
        for (int r = 0; r < hi.rows(); ++r)
            if (hi.get(r, c)) {
                cert.detail = "h iota != 0 at " + S.H.labels[c];
                return cert;
            }
    F2Matrix iota_span(S.H.dim(), S.C.dim());
    for (int c = 0; c < S.H.dim(); ++c) iota_span.set_row(c, S.iota.apply({c}));
    for (int x = 0; x < S.H.dim(); ++x)
        for (int y = 0; y < S.H.dim(); ++y) {
            Chain prod = A.eval(2, {S.iota.apply({x}), S.iota.apply({y})});
            if (!subspace_contains(iota_span, prod)) {
                cert.detail = "m_2(iota x iota) escapes iota(H) at (" + S.H.labels[x] +
                              ", " + S.H.labels[y] + ")";
                return cert;
            }
        }
    cert.formal = true;
    cert.which = "FormalCond";
    return cert;
}

FormalityCertificate check_formality_mod(const AInfBimodule& M, const SplittingData& S) {
    FormalityCertificate cert;
    F2Matrix ph = S.proj.multiply(S.htpy);
    for (int c = 0; c < ph.cols(); ++c)
        for (int r = 0; r < ph.rows(); ++r)
            if (ph.get(r, c)) {
                cert.detail = "proj h != 0 at " + S.C.labels[c];
                return cert;
            }
    int n = S.C.dim();
    F2Matrix him(0, n), dim_(0, n);
    {
        std::vector<Chain> hrows, drows;
        for (int c = 0; c < n; ++c) {
            hrows.push_back(S.htpy.apply({c}));
            drows.push_back(S.d.apply({c}));
        }
        him = row_echelon(F2Matrix::from_rows(hrows, n));
        dim_ = row_echelon(F2Matrix::from_rows(drows, n));
    }
    const AInfAlgebra& A = *M.over;
    auto closed = [&](const F2Matrix& span, Sig side) {
        for (int a = 0; a < A.space.dim(); ++a)
            for (int r = 0; r < span.rows(); ++r) {
                Chain v = span.row_chain(r);
                Chain out = side.first ? M.eval({1, 0}, {{a}, v}) : M.eval({0, 1}, {v, {a}});
                if (!subspace_contains(span, out)) return false;
            }
        return true;
    };
    bool left_ok = true, right_ok = true;
    if (M.acts.count({1, 0}))
        left_ok = closed(him, {1, 0}) && closed(dim_, {1, 0});
    if (M.acts.count({0, 1}))
        right_ok = closed(him, {0, 1}) && closed(dim_, {0, 1});
    if (!left_ok && !right_ok) {
        cert.detail = "Im(h)/Im(d) not submodules on either side";
        return cert;
    }
    cert.formal = true;
    if (left_ok && right_ok) cert.which = "FormalCond2";
    else cert.which = left_ok ? "FormalCond2(left)" : "FormalCond2(right)";
    return cert;
}

}  // namespace bfk
