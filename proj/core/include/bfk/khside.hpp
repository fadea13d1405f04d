#pragma once

#include "bfk/ainf.hpp"
#include "bfk/braid.hpp"
#include "bfk/transfer.hpp"

namespace bfk {

/// Homology of the Hom dg algebra, hardcoded: basis 1[i,j] (i >= j) and
/// x[i,j] (i > j), trigraded, with x * x = 0.
std::shared_ptr<AInfAlgebra> bkh(int m);

/// The rank-two module sides u*,v* resp. u,v with their action tables.
AInfBimodule pk_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A);
AInfBimodule kp_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A);
/// Their tensor (over F) as a bimodule: generators u*(x)u, ..., v*(x)v.
std::shared_ptr<AInfBimodule> pk_pair_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A);

/// The positive-generator morphism: components (1|1|0) and (0|1|1) only.
AInfMorphism beta_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A);
/// The negative-generator morphism: strict, into the pair with internal
/// grading lowered by one.
AInfMorphism gamma_kh(int m, int k, std::shared_ptr<const AInfAlgebra> A);

/// Mapping cone attached to one Artin generator (positive: cone of beta,
/// negative: cone of gamma).
AInfBimodule artin_bimodule_kh(int m, int k, bool positive,
                               std::shared_ptr<const AInfAlgebra> A);

/// Iterated reduced tensor product over the braid word; the empty word
/// gives the algebra as a bimodule over itself.
AInfBimodule braid_bimodule_kh(int m, const BraidWord& w,
                               std::shared_ptr<const AInfAlgebra> A);

/// Prescribed splittings used to re-derive the hardcoded tables through
/// homotopy transfer (the regression oracle for this module).
SplittingData bkh_prescribed_splitting(const AInfAlgebra& B, int m);
SplittingData pk_prescribed_splitting(const AInfBimodule& Ptilde, int m, int k);
SplittingData kp_prescribed_splitting(const AInfBimodule& kPtilde, int m, int k);
/// Tensor of two splittings: h = h (x) 1 + iota proj (x) h'.
SplittingData pair_splitting(const SplittingData& L, const SplittingData& R,
                             const GradedBasisSpace& pair_C, const GradedBasisSpace& pair_H);

/// Restrict a dg module over the Hom dg algebra to a module over its
/// homology along the strict embedding iota (an algebra map).
AInfBimodule restrict_along_iota(const AInfBimodule& M, const SplittingData& S,
                                 std::shared_ptr<const AInfAlgebra> small);

}  // namespace bfk
