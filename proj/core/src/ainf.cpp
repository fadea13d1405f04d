#include "bfk/ainf.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace bfk {

namespace {

/// Expand a multilinear map over chains occupying the input slots.
Chain eval_sparse(const SparseOp& op, const std::vector<Chain>& in) {
    for (const auto& c : in)
        if (c.empty()) return {};
    Chain out;
    std::vector<int> key(in.size());
    std::function<void(size_t)> rec = [&](size_t slot) {
        if (slot == in.size()) {
            auto it = op.find(key);
            if (it != op.end()) chain_add_inplace(out, it->second);
            return;
        }
        for (int id : in[slot]) {
            key[slot] = id;
            rec(slot + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<std::string> tuple_labels(const GradedBasisSpace& alg_space,
                                      const GradedBasisSpace* mod_space,
                                      const std::vector<int>& key, int n1) {
    std::vector<std::string> out;
    for (size_t i = 0; i < key.size(); ++i) {
        if (mod_space && static_cast<int>(i) == n1)
            out.push_back(mod_space->labels[key[i]]);
        else
            out.push_back(alg_space.labels[key[i]]);
    }
    return out;
}

}  // namespace

bool AInfAlgebra::is_honest() const {
    for (const auto& [n, op] : mult)
        if (n != 2 && !op.empty()) return false;
    return mult.count(2) != 0;
}

Chain AInfAlgebra::eval(int arity, const std::vector<Chain>& in) const {
    auto it = mult.find(arity);
    if (it == mult.end()) return {};
    return eval_sparse(it->second, in);
}

int AInfAlgebra::idem_for(int vertex) const {
    for (int id : idem_ids)
        if (space.left_idem[id] == vertex) return id;
    return -1;
}

bool AInfBimodule::has_left() const {
    for (const auto& [sig, op] : acts)
        if (sig.first > 0 && !op.empty()) return true;
    return false;
}

bool AInfBimodule::has_right() const {
    for (const auto& [sig, op] : acts)
        if (sig.second > 0 && !op.empty()) return true;
    return false;
}

Chain AInfBimodule::eval(Sig sig, const std::vector<Chain>& in) const {
    auto it = acts.find(sig);
    if (it == acts.end()) return {};
    return eval_sparse(it->second, in);
}

AInfBimodule AInfBimodule::regular(std::shared_ptr<const AInfAlgebra> A) {
    AInfBimodule M;
    M.over = A;
    M.space = A->space;
    for (const auto& [n, op] : A->mult) {
        if (n == 1) {
            M.acts[{0, 0}] = op;
        } else {
            // m_n contributes both as left action (n-1|1|0) and right (0|1|n-1);
            // identical key layout in both cases.
            M.acts[{n - 1, 0}] = op;
            M.acts[{0, n - 1}] = op;
        }
    }
    return M;
}

Chain AInfMorphism::eval(Sig sig, const std::vector<Chain>& in) const {
    auto it = comps.find(sig);
    if (it == comps.end()) return {};
    return eval_sparse(it->second, in);
}

bool AInfMorphism::is_strict() const {
    for (const auto& [sig, op] : comps)
        if (sig != Sig{0, 0} && !op.empty()) return false;
    return true;
}

void CheckReport::fail(std::string rel, std::vector<std::string> tup, std::string detail) {
    ok = false;
    failures.push_back({std::move(rel), std::move(tup), std::move(detail)});
}

void CheckReport::sort_failures() {
    std::sort(failures.begin(), failures.end(), [](const CheckFailure& a, const CheckFailure& b) {
        return std::tie(a.relation, a.tuple, a.detail) < std::tie(b.relation, b.tuple, b.detail);
    });
}

int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("BFK_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v < static_cast<long>(hw)) hw = static_cast<unsigned>(v);
    }
    return static_cast<int>(hw);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(worker_count(), n);
    if (workers <= 1 || n < 64) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

namespace {

/// Enumerate idempotent-matched algebra tuples (a_1..a_k) whose rightmost
/// element's right idempotent equals `attach` (or any, if attach == -2).
/// Calls fn(key).  When skip_idems, diagonal idempotent ids are excluded.
void enumerate_alg_tuples(const AInfAlgebra& A, int k, int attach_right,
                          bool skip_idems,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (k == 0) {
        std::vector<int> key;
        fn(key);
        return;
    }
    std::vector<bool> is_idem(A.space.dim(), false);
    for (int id : A.idem_ids) is_idem[id] = true;
    std::vector<int> key(k);
    std::function<void(int, int)> rec = [&](int pos, int right_needed) {
        if (pos < 0) {
            fn(key);
            return;
        }
        for (int id = 0; id < A.space.dim(); ++id) {
            if (skip_idems && is_idem[id]) continue;
            int li = A.space.left_idem[id], ri = A.space.right_idem[id];
            if (right_needed != -2 && ri != -1 && right_needed != -1 && ri != right_needed)
                continue;
            key[pos] = id;
            rec(pos - 1, li);
        }
    };
    rec(k - 1, attach_right);
}

struct DegreeCheck {
    const GradedBasisSpace* out_space;
    int first_delta;  // expected change on grading component 0
    // components beyond the first must be additive; checked up to 2 comps
};

void check_op_degrees(CheckReport& rep, const std::string& relname,
                      const GradedBasisSpace& alg_space,
                      const GradedBasisSpace* mod_space, int mod_slot,
                      const SparseOp& op, const DegreeCheck& dc) {
    for (const auto& [key, out] : op) {
        if (out.empty()) continue;
        std::vector<int> expect;
        bool have = true;
        for (size_t i = 0; i < key.size() && have; ++i) {
            const auto& g = (mod_space && static_cast<int>(i) == mod_slot)
                                ? mod_space->grading[key[i]]
                                : alg_space.grading[key[i]];
            if (g.empty()) { have = false; break; }
            if (expect.empty()) expect = g;
            else
                for (size_t c = 0; c < std::min(expect.size(), g.size()); ++c)
                    expect[c] += g[c];
        }
        if (!have || expect.empty()) continue;
        expect[0] += dc.first_delta;
        int ncomp = std::min<int>(2, static_cast<int>(expect.size()));
        for (int t : out) {
            const auto& g = dc.out_space->grading[t];
            for (int c = 0; c < std::min<int>(ncomp, static_cast<int>(g.size())); ++c) {
                if (g[c] != expect[c]) {
                    rep.fail(relname + " degree",
                             tuple_labels(alg_space, mod_space, key, mod_slot),
                             "output " + dc.out_space->labels[t] + " breaks homogeneity");
                    return;
                }
            }
        }
    }
}

}  // namespace

CheckReport check_algebra(const AInfAlgebra& A, const CheckOptions& opt) {
    CheckReport rep;
    // idempotent respect of stored constants
    for (const auto& [n, op] : A.mult) {
        for (const auto& [key, out] : op) {
            if (out.empty()) continue;
            int li = A.space.left_idem[key.front()];
            int ri = A.space.right_idem[key.back()];
            bool chained = true;
            for (size_t i = 0; i + 1 < key.size(); ++i)
                if (A.space.right_idem[key[i]] != A.space.left_idem[key[i + 1]])
                    chained = false;
            for (int t : out)
                if (A.space.left_idem[t] != li || A.space.right_idem[t] != ri) chained = false;
            if (!chained && li != -1)
                rep.fail("algebra idempotent bookkeeping",
                         tuple_labels(A.space, nullptr, key, -1), "m_" + std::to_string(n));
        }
        if (A.space.graded_ops && opt.check_degrees)
            check_op_degrees(rep, "m_" + std::to_string(n), A.space, nullptr, -1, op,
                             {&A.space, 2 - n});
    }

    std::mutex mu;
    for (int n = 1; n <= opt.cap; ++n) {
        std::vector<std::vector<int>> tuples;
        enumerate_alg_tuples(A, n, -2, !opt.include_idempotent_inputs,
                             [&](const std::vector<int>& key) { tuples.push_back(key); });
        rep.instances += static_cast<long long>(tuples.size());
        parallel_for(static_cast<int>(tuples.size()), [&](int ti) {
            const auto& key = tuples[ti];
            Chain total;
            for (int j = 1; j <= n; ++j) {
                if (!A.mult.count(j)) continue;
                for (int i = 0; i + j <= n; ++i) {
                    int outer_n = n - j + 1;
                    if (!A.mult.count(outer_n)) continue;
                    std::vector<int> window(key.begin() + i, key.begin() + i + j);
                    auto itj = A.mult.at(j).find(window);
                    if (itj == A.mult.at(j).end() || itj->second.empty()) continue;
                    std::vector<Chain> outer_in;
                    for (int t = 0; t < i; ++t) outer_in.push_back({key[t]});
                    outer_in.push_back(itj->second);
                    for (int t = i + j; t < n; ++t) outer_in.push_back({key[t]});
                    chain_add_inplace(total, A.eval(outer_n, outer_in));
                }
            }
            if (!total.empty()) {
                std::lock_guard<std::mutex> lk(mu);
                if (static_cast<int>(rep.failures.size()) < opt.max_failures)
                    rep.fail("algebra relation arity " + std::to_string(n),
                             tuple_labels(A.space, nullptr, key, -1),
                             "sum = " + A.space.chain_str(total));
                else
                    rep.ok = false;
            }
        });
    }
    rep.sort_failures();
    return rep;
}

namespace {

/// Left-hand side of the bimodule A-infinity relation for signature
/// (n1|1|n2), evaluated on basis tuple key = [a_1..a_n1, x, b_1..b_n2].
Chain bimodule_relation_sum(const AInfBimodule& M, int n1, int n2,
                            const std::vector<int>& key) {
    const AInfAlgebra& A = *M.over;
    Chain total;
    // inner module op, outer module op
    for (int i1 = 0; i1 <= n1; ++i1) {
        for (int i2 = 0; i2 <= n2; ++i2) {
            Sig inner_sig{n1 - i1, n2 - i2};
            auto itin = M.acts.find(inner_sig);
            if (itin == M.acts.end()) continue;
            std::vector<int> inner_key(key.begin() + i1,
                                       key.begin() + i1 + (n1 - i1) + 1 + (n2 - i2));
            auto hit = itin->second.find(inner_key);
            if (hit == itin->second.end() || hit->second.empty()) continue;
            std::vector<Chain> outer_in;
            for (int t = 0; t < i1; ++t) outer_in.push_back({key[t]});
            outer_in.push_back(hit->second);
            for (int t = n1 + 1 + (n2 - i2); t < n1 + 1 + n2; ++t)
                outer_in.push_back({key[t]});
            chain_add_inplace(total, M.eval({i1, i2}, outer_in));
        }
    }
    // algebra windows on the left inputs
    for (const auto& [j, mj] : A.mult) {
        for (int s = 0; s + j <= n1; ++s) {
            std::vector<int> window(key.begin() + s, key.begin() + s + j);
            auto hit = mj.find(window);
            if (hit == mj.end() || hit->second.empty()) continue;
            std::vector<Chain> outer_in;
            for (int t = 0; t < s; ++t) outer_in.push_back({key[t]});
            outer_in.push_back(hit->second);
            for (int t = s + j; t < n1 + 1 + n2; ++t) outer_in.push_back({key[t]});
            chain_add_inplace(total, M.eval({n1 - j + 1, n2}, outer_in));
        }
        // algebra windows on the right inputs
        for (int s = 0; s + j <= n2; ++s) {
            int off = n1 + 1;
            std::vector<int> window(key.begin() + off + s, key.begin() + off + s + j);
            auto hit = mj.find(window);
            if (hit == mj.end() || hit->second.empty()) continue;
            std::vector<Chain> outer_in;
            for (int t = 0; t < off + s; ++t) outer_in.push_back({key[t]});
            outer_in.push_back(hit->second);
            for (int t = off + s + j; t < n1 + 1 + n2; ++t) outer_in.push_back({key[t]});
            chain_add_inplace(total, M.eval({n1, n2 - j + 1}, outer_in));
        }
    }
    return total;
}

/// Morphism relation sum for f: M -> N at signature (n1|1|n2).
Chain morphism_relation_sum(const AInfMorphism& f, int n1, int n2,
                            const std::vector<int>& key) {
    const AInfBimodule& M = *f.src;
    const AInfBimodule& N = *f.dst;
    const AInfAlgebra& A = *M.over;
    Chain total;
    // f after inner module op of the source
    for (int i1 = 0; i1 <= n1; ++i1) {
        for (int i2 = 0; i2 <= n2; ++i2) {
            Sig inner_sig{n1 - i1, n2 - i2};
            auto itin = M.acts.find(inner_sig);
            if (itin == M.acts.end()) continue;
            std::vector<int> inner_key(key.begin() + i1,
                                       key.begin() + i1 + (n1 - i1) + 1 + (n2 - i2));
            auto hit = itin->second.find(inner_key);
            if (hit == itin->second.end() || hit->second.empty()) continue;
            std::vector<Chain> outer_in;
            for (int t = 0; t < i1; ++t) outer_in.push_back({key[t]});
            outer_in.push_back(hit->second);
            for (int t = n1 + 1 + (n2 - i2); t < n1 + 1 + n2; ++t)
                outer_in.push_back({key[t]});
            chain_add_inplace(total, f.eval({i1, i2}, outer_in));
        }
    }
    // f after algebra windows
    for (const auto& [j, mj] : A.mult) {
        for (int s = 0; s + j <= n1; ++s) {
            std::vector<int> window(key.begin() + s, key.begin() + s + j);
            auto hit = mj.find(window);
            if (hit == mj.end() || hit->second.empty()) continue;
            std::vector<Chain> outer_in;
            for (int t = 0; t < s; ++t) outer_in.push_back({key[t]});
            outer_in.push_back(hit->second);
            for (int t = s + j; t < n1 + 1 + n2; ++t) outer_in.push_back({key[t]});
            chain_add_inplace(total, f.eval({n1 - j + 1, n2}, outer_in));
        }
        for (int s = 0; s + j <= n2; ++s) {
            int off = n1 + 1;
            std::vector<int> window(key.begin() + off + s, key.begin() + off + s + j);
            auto hit = mj.find(window);
            if (hit == mj.end() || hit->second.empty()) continue;
            std::vector<Chain> outer_in;
            for (int t = 0; t < off + s; ++t) outer_in.push_back({key[t]});
            outer_in.push_back(hit->second);
            for (int t = off + s + j; t < n1 + 1 + n2; ++t) outer_in.push_back({key[t]});
            chain_add_inplace(total, f.eval({n1, n2 - j + 1}, outer_in));
        }
    }
    // target module op after f
    for (int i1 = 0; i1 <= n1; ++i1) {
        for (int i2 = 0; i2 <= n2; ++i2) {
            Sig fsig{n1 - i1, n2 - i2};
            auto itf = f.comps.find(fsig);
            if (itf == f.comps.end()) continue;
            std::vector<int> inner_key(key.begin() + i1,
                                       key.begin() + i1 + (n1 - i1) + 1 + (n2 - i2));
            auto hit = itf->second.find(inner_key);
            if (hit == itf->second.end() || hit->second.empty()) continue;
            std::vector<Chain> outer_in;
            for (int t = 0; t < i1; ++t) outer_in.push_back({key[t]});
            outer_in.push_back(hit->second);
            for (int t = n1 + 1 + (n2 - i2); t < n1 + 1 + n2; ++t)
                outer_in.push_back({key[t]});
            chain_add_inplace(total, N.eval({i1, i2}, outer_in));
        }
    }
    return total;
}

void enumerate_module_tuples(const AInfBimodule& M, int n1, int n2, bool skip_idems,
                             std::vector<std::vector<int>>& out) {
    const AInfAlgebra& A = *M.over;
    std::vector<bool> is_idem(A.space.dim(), false);
    for (int id : A.idem_ids) is_idem[id] = true;

    for (int x = 0; x < M.space.dim(); ++x) {
        int lx = M.space.left_idem[x], rx = M.space.right_idem[x];
        std::vector<std::vector<int>> lefts, rights;
        {
            std::vector<int> key(n1);
            std::function<void(int, int)> rec = [&](int pos, int right_needed) {
                if (pos < 0) { lefts.push_back(key); return; }
                for (int id = 0; id < A.space.dim(); ++id) {
                    if (skip_idems && is_idem[id]) continue;
                    int li = A.space.left_idem[id], ri = A.space.right_idem[id];
                    if (right_needed != -1 && ri != -1 && ri != right_needed) continue;
                    key[pos] = id;
                    rec(pos - 1, li);
                }
            };
            if (n1 == 0) lefts.push_back({});
            else rec(n1 - 1, lx);
        }
        {
            std::vector<int> key(n2);
            std::function<void(int, int)> rec = [&](int pos, int left_needed) {
                if (pos == n2) { rights.push_back(key); return; }
                for (int id = 0; id < A.space.dim(); ++id) {
                    if (skip_idems && is_idem[id]) continue;
                    int li = A.space.left_idem[id], ri = A.space.right_idem[id];
                    if (left_needed != -1 && li != -1 && li != left_needed) continue;
                    key[pos] = id;
                    rec(pos + 1, ri);
                }
            };
            if (n2 == 0) rights.push_back({});
            else rec(0, rx);
        }
        for (const auto& L : lefts)
            for (const auto& R : rights) {
                std::vector<int> key;
                key.reserve(n1 + 1 + n2);
                key.insert(key.end(), L.begin(), L.end());
                key.push_back(x);
                key.insert(key.end(), R.begin(), R.end());
                out.push_back(std::move(key));
            }
    }
}

}  // namespace

CheckReport check_bimodule(const AInfBimodule& M, const CheckOptions& opt) {
    CheckReport rep;
    if (!M.over) {
        rep.fail("bimodule", {}, "no underlying algebra");
        return rep;
    }
    if (M.space.graded_ops && opt.check_degrees) {
        for (const auto& [sig, op] : M.acts)
            check_op_degrees(rep,
                             "m_(" + std::to_string(sig.first) + "|1|" +
                                 std::to_string(sig.second) + ")",
                             M.over->space, &M.space, sig.first, op,
                             {&M.space, 2 - (sig.first + 1 + sig.second)});
    }
    std::mutex mu;
    bool right_used = M.has_right(), left_used = M.has_left();
    for (int n1 = 0; n1 <= opt.cap - 1; ++n1) {
        for (int n2 = 0; n1 + 1 + n2 <= opt.cap; ++n2) {
            if (n1 > 0 && !left_used) continue;
            if (n2 > 0 && !right_used) continue;
            std::vector<std::vector<int>> tuples;
            enumerate_module_tuples(M, n1, n2, !opt.include_idempotent_inputs, tuples);
            rep.instances += static_cast<long long>(tuples.size());
            parallel_for(static_cast<int>(tuples.size()), [&](int ti) {
                Chain total = bimodule_relation_sum(M, n1, n2, tuples[ti]);
                if (!total.empty()) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (static_cast<int>(rep.failures.size()) < opt.max_failures)
                        rep.fail("bimodule relation (" + std::to_string(n1) + "|1|" +
                                     std::to_string(n2) + ")",
                                 tuple_labels(M.over->space, &M.space, tuples[ti], n1),
                                 "sum = " + M.space.chain_str(total));
                    else
                        rep.ok = false;
                }
            });
        }
    }
    rep.sort_failures();
    return rep;
}

CheckReport check_morphism(const AInfMorphism& f, const CheckOptions& opt) {
    CheckReport rep;
    if (!f.src || !f.dst || f.src->over != f.dst->over) {
        // allow equal-content algebras behind distinct pointers
        if (!f.src || !f.dst || !f.src->over || !f.dst->over ||
            f.src->over->space.labels != f.dst->over->space.labels) {
            rep.fail("morphism", {}, "source and target not over the same algebra");
            return rep;
        }
    }
    std::mutex mu;
    for (int n1 = 0; n1 <= opt.cap - 1; ++n1) {
        for (int n2 = 0; n1 + 1 + n2 <= opt.cap; ++n2) {
            std::vector<std::vector<int>> tuples;
            enumerate_module_tuples(*f.src, n1, n2, !opt.include_idempotent_inputs, tuples);
            rep.instances += static_cast<long long>(tuples.size());
            parallel_for(static_cast<int>(tuples.size()), [&](int ti) {
                Chain total = morphism_relation_sum(f, n1, n2, tuples[ti]);
                if (!total.empty()) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (static_cast<int>(rep.failures.size()) < opt.max_failures)
                        rep.fail("morphism relation (" + std::to_string(n1) + "|1|" +
                                     std::to_string(n2) + ")",
                                 tuple_labels(f.src->over->space, &f.src->space, tuples[ti], n1),
                                 "sum = " + f.dst->space.chain_str(total));
                    else
                        rep.ok = false;
                }
            });
        }
    }
    rep.sort_failures();
    return rep;
}

CheckReport check_strict_unitality(const AInfAlgebra& A) {
    CheckReport rep;
    if (A.idem_ids.empty()) return rep;
    std::vector<bool> is_idem(A.space.dim(), false);
    for (int id : A.idem_ids) is_idem[id] = true;
    // m_2 against every basis element
    for (int e : A.idem_ids) {
        int v = A.space.left_idem[e];
        for (int x = 0; x < A.space.dim(); ++x) {
            Chain lhs = A.eval(2, {{e}, {x}});
            Chain expect = (A.space.left_idem[x] == v) ? Chain{x} : Chain{};
            if (lhs != expect)
                rep.fail("strict unit (left)", {A.space.labels[e], A.space.labels[x]});
            Chain rhs = A.eval(2, {{x}, {e}});
            expect = (A.space.right_idem[x] == v) ? Chain{x} : Chain{};
            if (rhs != expect)
                rep.fail("strict unit (right)", {A.space.labels[x], A.space.labels[e]});
        }
    }
    // no other structure map touches an idempotent input
    for (const auto& [n, op] : A.mult) {
        if (n == 2) continue;
        for (const auto& [key, out] : op) {
            if (out.empty()) continue;
            for (int id : key)
                if (is_idem[id])
                    rep.fail("strict unit (m_" + std::to_string(n) + ")",
                             tuple_labels(A.space, nullptr, key, -1));
        }
    }
    return rep;
}

CheckReport check_unital_actions(const AInfBimodule& M) {
    CheckReport rep;
    const AInfAlgebra& A = *M.over;
    if (A.idem_ids.empty()) return rep;
    std::vector<bool> is_idem(A.space.dim(), false);
    for (int id : A.idem_ids) is_idem[id] = true;
    for (int e : A.idem_ids) {
        int v = A.space.left_idem[e];
        for (int x = 0; x < M.space.dim(); ++x) {
            if (M.has_left()) {
                Chain lhs = M.eval({1, 0}, {{e}, {x}});
                Chain expect = (M.space.left_idem[x] == v) ? Chain{x} : Chain{};
                if (lhs != expect)
                    rep.fail("unital action (left)", {A.space.labels[e], M.space.labels[x]});
            }
            if (M.has_right()) {
                Chain rhs = M.eval({0, 1}, {{x}, {e}});
                Chain expect = (M.space.right_idem[x] == v) ? Chain{x} : Chain{};
                if (rhs != expect)
                    rep.fail("unital action (right)", {M.space.labels[x], A.space.labels[e]});
            }
        }
    }
    for (const auto& [sig, op] : M.acts) {
        if (sig.first + 1 + sig.second <= 2) continue;
        for (const auto& [key, out] : op) {
            if (out.empty()) continue;
            for (size_t i = 0; i < key.size(); ++i) {
                if (static_cast<int>(i) == sig.first) continue;  // module slot
                if (is_idem[key[i]])
                    rep.fail("unital action (higher op)",
                             tuple_labels(A.space, &M.space, key, sig.first));
            }
        }
    }
    return rep;
}

namespace {

void check_filtered_op(CheckReport& rep, const std::string& relname,
                       const GradedBasisSpace& alg_space,
                       const GradedBasisSpace* mod_space, int mod_slot,
                       const GradedBasisSpace& out_space, const SparseOp& op) {
    for (const auto& [key, out] : op) {
        int in_level = 0;
        for (size_t i = 0; i < key.size(); ++i)
            in_level += (mod_space && static_cast<int>(i) == mod_slot)
                            ? mod_space->level[key[i]]
                            : alg_space.level[key[i]];
        for (int t : out)
            if (out_space.level[t] > in_level)
                rep.fail(relname, tuple_labels(alg_space, mod_space, key, mod_slot),
                         "raises filtration level: " + out_space.labels[t]);
    }
}

}  // namespace

CheckReport check_filtered_algebra(const AInfAlgebra& A) {
    CheckReport rep;
    for (const auto& [n, op] : A.mult)
        check_filtered_op(rep, "filtered m_" + std::to_string(n), A.space, nullptr, -1,
                          A.space, op);
    return rep;
}

CheckReport check_filtered_bimodule(const AInfBimodule& M) {
    CheckReport rep;
    for (const auto& [sig, op] : M.acts)
        check_filtered_op(rep,
                          "filtered m_(" + std::to_string(sig.first) + "|1|" +
                              std::to_string(sig.second) + ")",
                          M.over->space, &M.space, sig.first, M.space, op);
    return rep;
}

CheckReport check_filtered_morphism(const AInfMorphism& f) {
    CheckReport rep;
    for (const auto& [sig, op] : f.comps)
        check_filtered_op(rep,
                          "filtered f_(" + std::to_string(sig.first) + "|1|" +
                              std::to_string(sig.second) + ")",
                          f.src->over->space, &f.src->space, sig.first, f.dst->space, op);
    return rep;
}

AInfBimodule pair_bimodule(const AInfBimodule& left_mod, const AInfBimodule& right_mod) {
    const AInfBimodule& L = left_mod;
    const AInfBimodule& R = right_mod;
    AInfBimodule M;
    M.over = L.over;
    M.space.graded_ops = L.space.graded_ops && R.space.graded_ops;
    M.space.filtered = L.space.filtered && R.space.filtered;
    int dr = R.space.dim();
    auto pid = [&](int a, int b) { return a * dr + b; };
    for (int a = 0; a < L.space.dim(); ++a)
        for (int b = 0; b < dr; ++b) {
            std::vector<int> g = L.space.grading[a];
            for (size_t t = 0; t < g.size() && t < R.space.grading[b].size(); ++t)
                g[t] += R.space.grading[b][t];
            M.space.add(L.space.labels[a] + "(x)" + R.space.labels[b], g,
                        L.space.level[a] + R.space.level[b], L.space.left_idem[a],
                        R.space.right_idem[b]);
        }
    // differentials act on either factor
    auto dl = L.acts.count(Sig{0, 0}) ? &L.acts.at({0, 0}) : nullptr;
    auto dr_op = R.acts.count(Sig{0, 0}) ? &R.acts.at({0, 0}) : nullptr;
    if (dl || dr_op) {
        SparseOp d;
        for (int a = 0; a < L.space.dim(); ++a)
            for (int b = 0; b < dr; ++b) {
                Chain out;
                if (dl) {
                    auto it = dl->find({a});
                    if (it != dl->end())
                        for (int t : it->second) chain_add_inplace(out, {pid(t, b)});
                }
                if (dr_op) {
                    auto it = dr_op->find({b});
                    if (it != dr_op->end())
                        for (int t : it->second) chain_add_inplace(out, {pid(a, t)});
                }
                if (!out.empty()) d.emplace(std::vector<int>{pid(a, b)}, std::move(out));
            }
        if (!d.empty()) M.acts[{0, 0}] = std::move(d);
    }
    if (L.acts.count({1, 0})) {
        SparseOp act;
        for (const auto& [key, out] : L.acts.at({1, 0}))
            for (int b = 0; b < dr; ++b) {
                Chain o;
                for (int t : out) chain_add_inplace(o, {pid(t, b)});
                act.emplace(std::vector<int>{key[0], pid(key[1], b)}, std::move(o));
            }
        M.acts[{1, 0}] = std::move(act);
    }
    if (R.acts.count({0, 1})) {
        SparseOp act;
        for (const auto& [key, out] : R.acts.at({0, 1}))
            for (int a = 0; a < L.space.dim(); ++a) {
                Chain o;
                for (int t : out) chain_add_inplace(o, {pid(a, t)});
                act.emplace(std::vector<int>{pid(a, key[0]), key[1]}, std::move(o));
            }
        M.acts[{0, 1}] = std::move(act);
    }
    return M;
}

AInfBimodule mapping_cone(const AInfMorphism& f, const CheckOptions& opt) {

    CheckReport morph = check_morphism(f, opt);
    if (!morph.ok)
        throw std::invalid_argument("mapping_cone: morphism fails the A-infinity relations (" +
                                    morph.failures.front().relation + ")");
    const AInfBimodule& M = *f.src;
    const AInfBimodule& N = *f.dst;

    AInfBimodule C;
    C.over = M.over;
    C.space.graded_ops = M.space.graded_ops && N.space.graded_ops;
    C.space.filtered = M.space.filtered && N.space.filtered;
    int dm = M.space.dim();
    for (int i = 0; i < dm; ++i)
        C.space.add("s:" + M.space.labels[i], M.space.grading[i], M.space.level[i],
                    M.space.left_idem[i], M.space.right_idem[i]);
    for (int i = 0; i < N.space.dim(); ++i) {
        auto g = N.space.grading[i];
        if (!g.empty()) g[0] += 1;  // N[1]
        C.space.add("t:" + N.space.labels[i], g, N.space.level[i],
                    N.space.left_idem[i], N.space.right_idem[i]);
    }

    auto reindex = [&](const Chain& c, int offset) {
        Chain out;
        out.reserve(c.size());
        for (int t : c) out.push_back(t + offset);
        return out;
    };

    std::map<Sig, SparseOp> ops;
    for (const auto& [sig, op] : M.acts)
        for (const auto& [key, out] : op)
            chain_add_inplace(ops[sig][key], out);
    for (const auto& [sig, op] : N.acts)
        for (const auto& [key, out] : op) {
            auto k = key;
            k[sig.first] += dm;
            chain_add_inplace(ops[sig][k], reindex(out, dm));
        }
    for (const auto& [sig, op] : f.comps)
        for (const auto& [key, out] : op) {
            chain_add_inplace(ops[sig][key], reindex(out, dm));
        }
    for (auto& [sig, op] : ops) {
        for (auto it = op.begin(); it != op.end();) {
            if (it->second.empty()) it = op.erase(it);
            else ++it;
        }
        if (!op.empty()) C.acts[sig] = std::move(op);
    }
    return C;
}

namespace {

SparseOp graded_part(const GradedBasisSpace& alg_space, const GradedBasisSpace* mod_space,
                     int mod_slot, const GradedBasisSpace& out_space, const SparseOp& op,
                     const std::string& what) {
    SparseOp kept;
    for (const auto& [key, out] : op) {
        int in_level = 0;
        for (size_t i = 0; i < key.size(); ++i)
            in_level += (mod_space && static_cast<int>(i) == mod_slot)
                            ? mod_space->level[key[i]]
                            : alg_space.level[key[i]];
        Chain keep;
        for (int t : out) {
            int lt = out_space.level[t];
            if (lt > in_level)
                throw std::invalid_argument("associated_graded: " + what +
                                            " raises filtration level on " +
                                            out_space.labels[t]);
            if (lt == in_level) keep.push_back(t);
        }
        std::sort(keep.begin(), keep.end());
        if (!keep.empty()) kept.emplace(key, std::move(keep));
    }
    return kept;
}

}  // namespace

AInfAlgebra associated_graded(const AInfAlgebra& A) {
    AInfAlgebra G;
    G.space = A.space;
    G.idem_ids = A.idem_ids;
    G.unit = A.unit;
    for (const auto& [n, op] : A.mult) {
        SparseOp kept = graded_part(A.space, nullptr, -1, A.space, op, "m_" + std::to_string(n));
        if (!kept.empty()) G.mult[n] = std::move(kept);
    }
    return G;
}

AInfBimodule associated_graded(const AInfBimodule& M,
                               std::shared_ptr<const AInfAlgebra> grA) {
    AInfBimodule G;
    G.over = std::move(grA);
    G.space = M.space;
    for (const auto& [sig, op] : M.acts) {
        SparseOp kept = graded_part(M.over->space, &M.space, sig.first, M.space, op,
                                    "m_(" + std::to_string(sig.first) + "|1|" +
                                        std::to_string(sig.second) + ")");
        if (!kept.empty()) G.acts[sig] = std::move(kept);
    }
    return G;
}

namespace {

std::string rename_label(const LabelRename& rename, const std::string& l) {
    return rename ? rename(l) : l;
}

/// Canonical (sorted, renamed) view of one structure map for comparison.
std::map<std::vector<std::string>, std::vector<std::string>> canonical_op(
    const GradedBasisSpace& alg_space, const GradedBasisSpace* mod_space, int mod_slot,
    const GradedBasisSpace& out_space, const SparseOp& op, const LabelRename& rename) {
    std::map<std::vector<std::string>, std::vector<std::string>> out;
    for (const auto& [key, val] : op) {
        if (val.empty()) continue;
        std::vector<std::string> k;
        for (size_t i = 0; i < key.size(); ++i) {
            const auto& sp = (mod_space && static_cast<int>(i) == mod_slot) ? *mod_space : alg_space;
            k.push_back(rename_label(rename, sp.labels[key[i]]));
        }
        std::vector<std::string> v;
        for (int t : val) v.push_back(rename_label(rename, out_space.labels[t]));
        std::sort(v.begin(), v.end());
        out.emplace(std::move(k), std::move(v));
    }
    return out;
}

template <typename OpsA, typename OpsB, typename CanonA, typename CanonB>
StructureDiff compare_ops(const OpsA& a, const OpsB& b, CanonA canon_a, CanonB canon_b) {
    StructureDiff d;
    auto ita = a.begin();
    auto itb = b.begin();
    auto describe = [](const auto& sig) {
        std::ostringstream os;
        if constexpr (std::is_same_v<std::decay_t<decltype(sig)>, int>)
            os << "m_" << sig;
        else
            os << "(" << sig.first << "|1|" << sig.second << ")";
        return os.str();
    };
    while (ita != a.end() || itb != b.end()) {
        bool a_only = itb == b.end() || (ita != a.end() && ita->first < itb->first);
        bool b_only = ita == a.end() || (itb != b.end() && itb->first < ita->first);
        if (a_only || b_only) {
            const auto& sig = a_only ? ita->first : itb->first;
            const auto& op = a_only ? ita->second : itb->second;
            auto canon = a_only ? canon_a(sig, op) : canon_b(sig, op);
            if (!canon.empty()) {
                d.equal = false;
                d.detail = "signature " + describe(sig) + " present on one side only: " +
                           canon.begin()->first.front();
                return d;
            }
            if (a_only) ++ita; else ++itb;
            continue;
        }
        auto ca = canon_a(ita->first, ita->second);
        auto cb = canon_b(itb->first, itb->second);
        if (ca != cb) {
            d.equal = false;
            // locate first difference
            for (const auto& [k, v] : ca) {
                auto f = cb.find(k);
                if (f == cb.end() || f->second != v) {
                    std::string tup;
                    for (const auto& s : k) tup += s + " ";
                    d.detail = describe(ita->first) + " differs at [" + tup + "]";
                    return d;
                }
            }
            for (const auto& [k, v] : cb) {
                if (!ca.count(k)) {
                    std::string tup;
                    for (const auto& s : k) tup += s + " ";
                    d.detail = describe(ita->first) + " differs at [" + tup + "]";
                    return d;
                }
            }
        }
        ++ita; ++itb;
    }
    return d;
}

}  // namespace

StructureDiff compare_algebras(const AInfAlgebra& a, const AInfAlgebra& b,
                               const LabelRename& rename) {
    {
        std::vector<std::string> la, lb;
        for (const auto& l : a.space.labels) la.push_back(rename_label(rename, l));
        lb = b.space.labels;
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (la != lb) return {false, "basis label sets differ"};
    }
    return compare_ops(
        a.mult, b.mult,
        [&](int, const SparseOp& op) {
            return canonical_op(a.space, nullptr, -1, a.space, op, rename);
        },
        [&](int, const SparseOp& op) {
            return canonical_op(b.space, nullptr, -1, b.space, op, nullptr);
        });
}

StructureDiff compare_bimodules(const AInfBimodule& a, const AInfBimodule& b,
                                const LabelRename& rename) {
    {
        std::vector<std::string> la, lb;
        for (const auto& l : a.space.labels) la.push_back(rename_label(rename, l));
        lb = b.space.labels;
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (la != lb) return {false, "basis label sets differ"};
    }
    return compare_ops(
        a.acts, b.acts,
        [&](Sig sig, const SparseOp& op) {
            return canonical_op(a.over->space, &a.space, sig.first, a.space, op, rename);
        },
        [&](Sig sig, const SparseOp& op) {
            return canonical_op(b.over->space, &b.space, sig.first, b.space, op, nullptr);
        });
}

StructureDiff compare_morphisms(const AInfMorphism& a, const AInfMorphism& b,
                                const LabelRename& rename) {
    return compare_ops(
        a.comps, b.comps,
        [&](Sig sig, const SparseOp& op) {
            return canonical_op(a.src->over->space, &a.src->space, sig.first, a.dst->space, op,
                                rename);
        },
        [&](Sig sig, const SparseOp& op) {
            return canonical_op(b.src->over->space, &b.src->space, sig.first, b.dst->space, op,
                                nullptr);
        });
}

namespace {

nlohmann::json basis_json(const GradedBasisSpace& s) {
    nlohmann::json basis = nlohmann::json::array();
    for (int i = 0; i < s.dim(); ++i) {
        nlohmann::json b;
        b["label"] = s.labels[i];
        b["grading"] = s.grading[i];
        if (s.filtered) b["level"] = s.level[i];
        b["idem"] = {s.left_idem[i], s.right_idem[i]};
        basis.push_back(b);
    }
    return basis;
}

template <typename Ops>
nlohmann::json ops_json(const GradedBasisSpace& alg_space, const GradedBasisSpace* mod_space,
                        const GradedBasisSpace& out_space, const Ops& ops) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [sig, op] : ops) {
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rows;
        int mod_slot = -1;
        nlohmann::json sig_json;
        if constexpr (std::is_same_v<std::decay_t<decltype(sig)>, int>) {
            sig_json = nlohmann::json::array({sig});
        } else {
            sig_json = nlohmann::json::array({sig.first, 1, sig.second});
            mod_slot = sig.first;
        }
        for (const auto& [key, val] : op) {
            if (val.empty()) continue;
            std::vector<std::string> in, out;
            for (size_t i = 0; i < key.size(); ++i) {
                const auto& sp =
                    (mod_space && static_cast<int>(i) == mod_slot) ? *mod_space : alg_space;
                in.push_back(sp.labels[key[i]]);
            }
            for (int t : val) out.push_back(out_space.labels[t]);
            rows.emplace_back(std::move(in), std::move(out));
        }
        std::sort(rows.begin(), rows.end());
        for (auto& [in, out] : rows) {
            nlohmann::json row;
            row["sig"] = sig_json;
            row["in"] = in;
            row["out"] = out;
            arr.push_back(row);
        }
    }
    return arr;
}

}  // namespace

std::string to_json(const AInfAlgebra& A) {
    nlohmann::json j;
    j["basis"] = basis_json(A.space);
    j["ops"] = ops_json(A.space, nullptr, A.space, A.mult);
    return j.dump(2);
}

std::string to_json(const AInfBimodule& M) {
    nlohmann::json j;
    j["basis"] = basis_json(M.space);
    j["ops"] = ops_json(M.over->space, &M.space, M.space, M.acts);
    return j.dump(2);
}

std::string to_json(const AInfMorphism& f) {
    nlohmann::json j;
    j["basis"] = basis_json(f.src->space);
    j["comps"] = ops_json(f.src->over->space, &f.src->space, f.dst->space, f.comps);
    return j.dump(2);
}

}  // namespace bfk
