#pragma once

#include <string>

#include "bfk/ainf.hpp"
#include "bfk/transfer.hpp"

namespace bfk {

/// The equivariant circle cochain complex: basis a*, b* (degree 0) and
/// A*, B* (degree 1), cup product, the simplicial coboundary delta, the
/// involution differential d_tau = 1 + tau, and the two-step filtration
/// 0 <= ker(d_tau) <= C.
struct ToyComplex {
    GradedBasisSpace space;   // adapted basis a*, b*, A*+B*, A*
    GradedBasisSpace raw;     // a*, b*, A*, B*
    F2Matrix delta, dtau;     // on the raw basis
    SparseOp cup;             // on the raw basis
    std::shared_ptr<AInfAlgebra> total;     // (C, delta + dtau) with cup, adapted+filtered
    std::shared_ptr<AInfAlgebra> graded;    // (C, delta) with cup, raw basis
};

ToyComplex build_toy();

/// Everything the toy model is expected to exhibit, in one report:
/// homology of both differentials with their transferred products,
/// acceptance of the prescribed splittings, formality certificates, the
/// filtration collapse, and the two-page spectral sequence.
struct ToyReport {
    bool ok = true;
    std::vector<std::string> lines;
    void line(bool pass, const std::string& what);
};

ToyReport toy_verify();

/// The four-generator splittings written out in the construction.
SplittingData toy_split_delta(const ToyComplex& T);
SplittingData toy_split_total(const ToyComplex& T);

/// H of the total complex as a filtered algebra: idempotents rho, sigma
/// with the adapted basis {rho+sigma at level 0, rho at level 1}.
std::shared_ptr<AInfAlgebra> toy_h_total_filtered();

}  // namespace bfk
