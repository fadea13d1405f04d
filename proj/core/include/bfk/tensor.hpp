#pragma once

#include "bfk/ainf.hpp"

namespace bfk {

/// Idempotent-reduced A-infinity tensor product of two dg bimodules over the
/// same honest algebra.  The underlying space is spanned by tuples
/// (x | a_1 | ... | a_n | y) with the a_i non-idempotent basis elements of
/// the algebra and matching idempotents throughout; bar words are finite
/// because the non-idempotent part is strictly index-lowering.  Mixed
/// actions m_(p|1|q) with p,q >= 1 vanish.
AInfBimodule reduced_tensor(const AInfBimodule& M, const AInfBimodule& N);

/// Unreduced counterpart: bar letters also range over the diagonal
/// idempotents, truncated at bar words of length <= cutoff.  Only used as a
/// sanity check against the reduced model's homology.
AInfBimodule full_bar_tensor(const AInfBimodule& M, const AInfBimodule& N, int cutoff);

/// Homology of the unreduced bar model that is stable under raising the
/// cutoff: the image of H(truncation at cutoff) inside H(truncation at
/// cutoff+2), per idempotent pair.  The truncated complex splits off a
/// degenerate summand whose homology clusters at the cutoff boundary and
/// dies under enlargement, so the stable part is the truncation-independent
/// content and must equal the reduced model's homology.
std::map<std::pair<int, int>, int> full_bar_stable_homology(const AInfBimodule& M,
                                                            const AInfBimodule& N,
                                                            int cutoff);

/// Verifies gr(M) (x) gr(N) = gr(M (x) N) constant-for-constant via the
/// identity bijection on bar-word labels.
StructureDiff gr_commutes_with_tensor(const AInfBimodule& M, const AInfBimodule& N);

}  // namespace bfk
