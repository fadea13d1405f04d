#pragma once

#include <map>

#include "bfk/ainf.hpp"

namespace bfk {

/// Differential of a bimodule as a dense matrix (columns index the basis).
F2Matrix differential_matrix(const AInfBimodule& M);

/// Total homology dimension of (space, d) with d^2 = 0.
int homology_dim(const GradedBasisSpace& space, const F2Matrix& d);

/// Homology dimensions per (left,right) idempotent pair.  The differential
/// must preserve the pairs (it does for every complex built here).
std::map<std::pair<int, int>, int> homology_dims_by_idem(const AInfBimodule& M);
std::map<std::pair<int, int>, int> dims_by_idem(const GradedBasisSpace& space);

/// One page of the spectral sequence of a bounded filtration.
struct SpectralPage {
    int r = 0;
    std::map<int, int> dim_by_level;
    std::map<int, int> d_rank_by_level;  // rank of d_r out of each level
    int total_dim = 0;
    int total_d_rank = 0;
};

struct SpectralSequence {
    std::vector<SpectralPage> pages;  // E^0, E^1, ...
    int collapse_page = 0;            // first r with E^r = E^infinity
    const SpectralPage& einf() const { return pages.back(); }
};

/// Pages of the filtration spectral sequence of (space, d) where the
/// filtration is read off the adapted-basis levels.  Only m_(0|1|0) of a
/// filtered object enters.  Terminates because the filtration is bounded.
SpectralSequence spectral_sequence(const GradedBasisSpace& space, const F2Matrix& d);
SpectralSequence spectral_sequence(const AInfBimodule& M);

/// Spectral sequence restricted to one idempotent block.
std::map<std::pair<int, int>, SpectralSequence> spectral_sequence_by_idem(const AInfBimodule& M);

}  // namespace bfk
