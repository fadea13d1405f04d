#pragma once

#include "bfk/ainf.hpp"
#include "bfk/braid.hpp"

namespace bfk {

/// The strands-side algebra in its defining basis: diagonal idempotents
/// 1[i,i] and two flavors rho[i,j], sig[i,j] for each i > j, with rho*rho =
/// rho, sig*sig = sig and mixed products zero.  Used for the homomorphism
/// identity checks, where the two flavors must stay separate.
std::shared_ptr<AInfAlgebra> bhf_raw(int m);

/// The same algebra on its filtration-adapted basis {1[i,j] = rho+sig at
/// level 0, rho[i,j] at level 1}; its associated graded reproduces bkh(m)
/// under rho <-> x.
std::shared_ptr<AInfAlgebra> bhf(int m);

/// Rank-two module sides with the strands action tables and the two-step
/// filtrations (v* and u at level 0, u* and v at level 1).
AInfBimodule pk_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A);
AInfBimodule kp_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A);
std::shared_ptr<AInfBimodule> pk_pair_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A);
/// Raw-basis counterparts over bhf_raw.
AInfBimodule pk_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A);
AInfBimodule kp_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A);
std::shared_ptr<AInfBimodule> pk_pair_hf_raw(int m, int k,
                                             std::shared_ptr<const AInfAlgebra> A);

/// The positive/negative Artin morphisms.  beta has exactly the (1|1|0) and
/// (0|1|1) components; gamma is strict into the pair with filtration
/// lowered by one.  Both are filtered.
AInfMorphism beta_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A);
AInfMorphism gamma_hf(int m, int k, std::shared_ptr<const AInfAlgebra> A);
AInfMorphism beta_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A);
AInfMorphism gamma_hf_raw(int m, int k, std::shared_ptr<const AInfAlgebra> A);

AInfBimodule artin_bimodule_hf(int m, int k, bool positive,
                               std::shared_ptr<const AInfAlgebra> A);
AInfBimodule braid_bimodule_hf(int m, const BraidWord& w,
                               std::shared_ptr<const AInfAlgebra> A);

/// The three displayed homomorphism identities for beta, checked
/// exhaustively over all raw basis pairs (a1, a2) and module generators.
CheckReport verify_hf_homomorphism_identities(int m, int k);

/// Label translation gr(strands side) -> quiver side: rho[i,j] -> x[i,j],
/// applied as a substring rewrite so it reaches into cone and bar-word
/// labels.
LabelRename hf_to_kh_rename();

}  // namespace bfk
