#pragma once

#include <memory>

#include "bfk/ainf.hpp"
#include "bfk/quiver.hpp"

namespace bfk {

/// Bounded complex of elementary projective modules over the zigzag algebra.
/// Each term is the projective at one vertex, placed at its cohomological
/// degree; the differential between consecutive terms multiplies by a fixed
/// connecting path (on the right for left modules, on the left for right
/// modules).
struct ProjectiveComplex {
    enum class Side { Left, Right };
    struct Term {
        int vertex;
        int coh;       // cohomological degree of this term
        int internal;  // internal grading shift
    };
    Side side = Side::Left;
    std::vector<Term> terms;
    std::vector<Path> steps;  // steps[t] connects terms[t] -> terms[t+1]
};

/// The staircase complex P_0 -> P_1 -> ... -> P_j with steps (i|i+1).
ProjectiveComplex build_Q(int m, int j);
/// The one-term complex P_k placed at cohomological degree k.
ProjectiveComplex build_P_single(int m, int k);

/// Hom complex between two bounded complexes of projective left modules,
/// realized on its tensor model: the basis is one generator per (source
/// term, target term, connecting path) triple.
struct HomComplex {
    std::shared_ptr<const ZigzagAlgebra> alg;
    GradedBasisSpace space;   // labels "r,c:(path)"
    SparseOp differential;
    // per-generator bookkeeping
    std::vector<int> row, col;     // source/target term positions
    std::vector<int> path_id;      // basis id in the zigzag algebra
};

HomComplex hom_complex(const ZigzagAlgebra& alg, const ProjectiveComplex& R,
                       const ProjectiveComplex& S);

std::string complex_to_json(const HomComplex& H);

/// The Hom dg algebra of the full staircase collection: one block
/// Hom(Q_i, Q_j) per pair (i,j), multiplication by composition (path
/// multiplication in the middle), differential a degree-(1,0) derivation.
/// Basis labels are "i,j:r,c:(path)"; the block indices double as the
/// left/right idempotent bookkeeping.
AInfAlgebra build_B(int m);

/// Column complexes Hom(Q_i, P_k) assembled into a left dg module over
/// build_B(m), and Hom(P_k, Q_j) into a right dg module.
AInfBimodule build_Ptilde(int m, int k, std::shared_ptr<const AInfAlgebra> B);
AInfBimodule build_kPtilde(int m, int k, std::shared_ptr<const AInfAlgebra> B);

/// The tensor (over F) of the two one-sided modules, as a dg bimodule.
AInfBimodule ptilde_pair(const AInfBimodule& Pt, const AInfBimodule& kPt);

/// Strict dg-bimodule morphisms between ptilde_pair and the regular
/// bimodule: beta multiplies the two connecting paths through the middle,
/// gamma inserts the canonical rank-one element.
AInfMorphism beta_tilde(int m, int k, std::shared_ptr<const AInfBimodule> pair,
                        std::shared_ptr<const AInfBimodule> Breg);
AInfMorphism gamma_tilde(int m, int k, std::shared_ptr<const AInfBimodule> Breg,
                         std::shared_ptr<const AInfBimodule> pair_shifted);

/// Target of gamma_tilde: ptilde_pair with the internal grading lowered.
AInfBimodule ptilde_pair_shifted(const AInfBimodule& pair);

}  // namespace bfk
