#include "bfk/toy.hpp"

#include <stdexcept>

#include "bfk/specseq.hpp"

namespace bfk {

void ToyReport::line(bool pass, const std::string& what) {
    ok = ok && pass;
    lines.push_back(std::string(pass ? "[PASS] " : "[FAIL] ") + what);
}

ToyComplex build_toy() {
    ToyComplex T;

    // raw cochain basis
    T.raw.graded_ops = true;
    int a = T.raw.add("a*", {0}, 0, 0, 0);
    int b = T.raw.add("b*", {0}, 0, 0, 0);
    int A = T.raw.add("A*", {1}, 0, 0, 0);
    int B = T.raw.add("B*", {1}, 0, 0, 0);

    // coboundary of the two-cell circle: both edges run from a to b
    T.delta = F2Matrix(4, 4);
    T.delta.set(A, a); T.delta.set(B, a);
    T.delta.set(A, b); T.delta.set(B, b);
    // involution swaps the two edges and fixes the vertices
    T.dtau = F2Matrix(4, 4);
    T.dtau.set(A, A); T.dtau.set(B, A);
    T.dtau.set(A, B); T.dtau.set(B, B);

    auto put = [&](int x, int y, int z) {
        T.cup.emplace(std::vector<int>{x, y}, Chain{z});
    };
    put(a, a, a);
    put(a, A, A);
    put(a, B, B);
    put(b, b, b);
    put(A, b, A);
    put(B, b, B);

    // (C, delta) with the cup product, on the raw basis
    T.graded = std::make_shared<AInfAlgebra>();
    T.graded->space = T.raw;
    {
        SparseOp d;
        for (int c = 0; c < 4; ++c) {
            Chain out;
            for (int r = 0; r < 4; ++r)
                if (T.delta.get(r, c)) out.push_back(r);
            if (!out.empty()) d.emplace(std::vector<int>{c}, std::move(out));
        }
        if (!d.empty()) T.graded->mult[1] = std::move(d);
        T.graded->mult[2] = T.cup;
        T.graded->unit = {a, b};
    }

    // (C, delta + dtau) on the adapted basis a*, b*, A*+B*, A*
    T.space.filtered = true;
    int a2 = T.space.add("a*", {0}, 0, 0, 0);
    int b2 = T.space.add("b*", {0}, 0, 0, 0);
    int AB = T.space.add("A*+B*", {1}, 0, 0, 0);
    int A2 = T.space.add("A*", {1}, 1, 0, 0);

    T.total = std::make_shared<AInfAlgebra>();
    T.total->space = T.space;
    {
        SparseOp d;
        d.emplace(std::vector<int>{a2}, Chain{AB});
        d.emplace(std::vector<int>{b2}, Chain{AB});
        d.emplace(std::vector<int>{A2}, Chain{AB});
        T.total->mult[1] = std::move(d);
        // cup product rewritten on the adapted basis
        SparseOp m2;
        auto put2 = [&](int x, int y, Chain z) {
            m2.emplace(std::vector<int>{x, y}, std::move(z));
        };
        put2(a2, a2, {a2});
        put2(a2, AB, {AB});
        put2(a2, A2, {A2});
        put2(b2, b2, {b2});
        put2(AB, b2, {AB});
        put2(A2, b2, {A2});
        T.total->mult[2] = std::move(m2);
        T.total->unit = {a2, b2};
    }
    return T;
}

SplittingData toy_split_delta(const ToyComplex& T) {
    GradedBasisSpace H;
    H.graded_ops = true;
    H.add("1", {0}, 0, 0, 0);
    H.add("x", {1}, 0, 0, 0);
    int a = 0, b = 1, A = 2, B = 3;
    F2Matrix iota(4, 2), proj(2, 4), h(4, 4);
    iota.set(a, 0); iota.set(b, 0);   // 1 -> a* + b*
    iota.set(A, 1);                   // x -> A*
    proj.set(0, a);                   // a* -> 1
    proj.set(1, A); proj.set(1, B);   // A*, B* -> x
    h.set(b, B);                      // h(B*) = b*
    return split_prescribed(T.raw, T.delta, H, iota, proj, h);
}

SplittingData toy_split_total(const ToyComplex& T) {
    GradedBasisSpace H;
    H.add("rho", {}, 0, 0, 0);
    H.add("sig", {}, 0, 0, 0);
    int a = 0, b = 1, AB = 2, A = 3;
    // iota(rho) = a* + A*, iota(sig) = b* + A*; p(a*) = rho, p(b*) = sig;
    // h(B*) = A*, i.e. h(A*+B*) = A* on the adapted basis.
    F2Matrix iota(4, 2), proj(2, 4), h(4, 4);
    iota.set(a, 0); iota.set(A, 0);
    iota.set(b, 1); iota.set(A, 1);
    proj.set(0, a);
    proj.set(1, b);
    h.set(A, AB);
    F2Matrix d(4, 4);
    if (T.total->mult.count(1))
        for (const auto& [key, out] : T.total->mult.at(1))
            for (int t : out) d.set(t, key[0]);
    return split_prescribed(T.space, d, H, iota, proj, h);
}

std::shared_ptr<AInfAlgebra> toy_h_total_filtered() {
    auto A = std::make_shared<AInfAlgebra>();
    A->space.filtered = true;
    int one = A->space.add("1", {}, 0, 0, 0);
    int rho = A->space.add("rho", {}, 1, 0, 0);
    A->idem_ids = {one};
    A->unit = {one};
    SparseOp m2;
    m2.emplace(std::vector<int>{one, one}, Chain{one});
    m2.emplace(std::vector<int>{one, rho}, Chain{rho});
    m2.emplace(std::vector<int>{rho, one}, Chain{rho});
    m2.emplace(std::vector<int>{rho, rho}, Chain{rho});
    A->mult[2] = std::move(m2);
    return A;
}

namespace {

int rank_of(const F2Matrix& M) { return rank_kernel_image(M).rank; }

}  // namespace

ToyReport toy_verify() {
    ToyReport rep;
    ToyComplex T = build_toy();
    int a = 0, b = 1, A = 2, B = 3;

    // cup table, unit, differentials
    {
        bool table = true;
        auto cup = [&](int x, int y) { return T.graded->eval(2, {{x}, {y}}); };
        table &= cup(a, a) == Chain{a} && cup(a, b).empty() && cup(a, A) == Chain{A} &&
                 cup(a, B) == Chain{B};
        table &= cup(b, a).empty() && cup(b, b) == Chain{b} && cup(b, A).empty() &&
                 cup(b, B).empty();
        table &= cup(A, a).empty() && cup(A, b) == Chain{A} && cup(A, A).empty() &&
                 cup(A, B).empty();
        table &= cup(B, a).empty() && cup(B, b) == Chain{B} && cup(B, A).empty() &&
                 cup(B, B).empty();
        rep.line(table, "cup product table matches the cochain-level products");

        bool leib = true;
        for (int x = 0; x < 4 && leib; ++x)
            for (int y = 0; y < 4 && leib; ++y)
                for (const F2Matrix* D : {&T.delta, &T.dtau}) {
                    Chain lhs = D->apply(T.graded->eval(2, {{x}, {y}}));
                    Chain rhs = T.graded->eval(2, {D->apply({x}), {y}});
                    chain_add_inplace(rhs, T.graded->eval(2, {{x}, D->apply({y})}));
                    if (lhs != rhs) leib = false;
                }
        rep.line(leib, "delta and d_tau satisfy the Leibniz rule");
        rep.line(rank_of(T.delta.multiply(T.delta)) == 0 &&
                     rank_of(T.dtau.multiply(T.dtau)) == 0,
                 "delta^2 = d_tau^2 = 0");
        F2Matrix comm = T.delta.multiply(T.dtau);
        F2Matrix comm2 = T.dtau.multiply(T.delta);
        bool commute = true;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (comm.get(r, c) != comm2.get(r, c)) commute = false;
        rep.line(commute, "delta and d_tau commute");
    }

    // graded homology: dims (1,1), transferred square zero, formal
    try {
        SplittingData S = toy_split_delta(T);
        rep.line(true, "prescribed splitting for (C, delta) accepted");
        AInfAlgebra H = transfer_algebra(*T.graded, S, 4);
        int one = S.H.find("1"), x = S.H.find("x");
        bool prod = H.eval(2, {{x}, {x}}).empty() && H.eval(2, {{one}, {x}}) == Chain{x};
        rep.line(prod, "graded homology is F[x]/(x^2): x*x = 0");
        bool higher = !H.mult.count(3) && !H.mult.count(4);
        rep.line(higher, "graded homology has no transferred operations above m_2");
        FormalityCertificate c = check_formality_alg(*T.graded, S);
        rep.line(c.formal, "formality certificate for (C, delta): " + c.which);
    } catch (const std::exception& e) {
        rep.line(false, std::string("(C, delta) splitting: ") + e.what());
    }

    // total homology: two orthogonal idempotents, formal
    try {
        SplittingData S = toy_split_total(T);
        rep.line(true, "prescribed splitting for (C, delta + d_tau) accepted");
        AInfAlgebra H = transfer_algebra(*T.total, S, 4);
        int r = S.H.find("rho"), s = S.H.find("sig");
        bool prod = H.eval(2, {{r}, {r}}) == Chain{r} && H.eval(2, {{s}, {s}}) == Chain{s} &&
                    H.eval(2, {{r}, {s}}).empty() && H.eval(2, {{s}, {r}}).empty();
        rep.line(prod, "total homology is Span<rho, sig> with rho sig = sig rho = 0");
        bool higher = !H.mult.count(3) && !H.mult.count(4);
        rep.line(higher, "total homology has no transferred operations above m_2");
        FormalityCertificate c = check_formality_alg(*T.total, S);
        rep.line(c.formal, "formality certificate for (C, delta + d_tau): " + c.which);
        rep.line(S.H.dim() == 2, "total homology dimension 2");
    } catch (const std::exception& e) {
        rep.line(false, std::string("(C, delta + d_tau) splitting: ") + e.what());
    }

    // filtration: the adapted total complex is a filtered differential algebra
    rep.line(check_filtered_algebra(*T.total).ok,
             "filtration 0 <= ker(d_tau) <= C respects the product");

    // gr of the filtered total homology reproduces F[x]/(x^2)
    {
        auto Hfilt = toy_h_total_filtered();
        AInfAlgebra gr = associated_graded(*Hfilt);
        bool match = gr.eval(2, {{1}, {1}}).empty() &&
                     gr.eval(2, {{0}, {1}}) == Chain{1} && gr.eval(2, {{0}, {0}}) == Chain{0};
        rep.line(match, "gr of the filtered total homology is F[x]/(x^2) under rho -> x");
    }

    // spectral sequence of the filtered total complex
    {
        F2Matrix d(4, 4);
        for (const auto& [key, out] : T.total->mult.at(1))
            for (int t : out) d.set(t, key[0]);
        SpectralSequence ss = spectral_sequence(T.space, d);
        bool e1 = ss.pages.size() > 1 && ss.pages[1].total_dim == 2;
        bool d1 = ss.pages.size() > 1 && ss.pages[1].total_d_rank == 0;
        bool einf = ss.einf().total_dim == 2;
        rep.line(e1, "spectral sequence page 1 has total dimension 2");
        rep.line(d1, "page-1 differential vanishes");
        rep.line(einf, "limit page has total dimension 2");
    }
    return rep;
}

}  // namespace bfk
