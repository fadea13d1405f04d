#pragma once

#include "bfk/ainf.hpp"

namespace bfk {

/// Splitting (iota, proj, htpy) of a complex onto its homology, satisfying
///   proj iota = Id,   iota proj = Id + d h + h d,   h^2 = 0,
/// and the side conditions  proj h = 0,  h iota = 0.
struct SplittingData {
    GradedBasisSpace C;
    F2Matrix d;      // dim(C) x dim(C)
    GradedBasisSpace H;
    F2Matrix iota;   // dim(C) x dim(H)
    F2Matrix proj;   // dim(H) x dim(C)
    F2Matrix htpy;   // dim(C) x dim(C)

    Chain iota_chain(const Chain& h) const { return iota.apply(h); }
    Chain proj_chain(const Chain& c) const { return proj.apply(c); }
    Chain htpy_chain(const Chain& c) const { return htpy.apply(c); }
};

/// All splitting identities, failures named by basis element.
CheckReport validate_splitting(const SplittingData& S);

/// Construct a splitting from scratch: homology representatives are chosen
/// inside ker(d) complementary to im(d), and h inverts d from im(d) onto a
/// fixed complement, so the side conditions hold by construction.
SplittingData split(const GradedBasisSpace& C, const F2Matrix& d);

/// Wrap user-supplied maps; throws std::invalid_argument naming the first
/// failing identity and basis element.
SplittingData split_prescribed(GradedBasisSpace C, F2Matrix d, GradedBasisSpace H,
                               F2Matrix iota, F2Matrix proj, F2Matrix htpy);

/// Planar rooted trees with every internal vertex of arity >= 2; the tree
/// count per leaf number follows the bracketing (super-Catalan) sequence
/// 1, 3, 11, 45, ...
struct RootedTree {
    std::vector<RootedTree> children;  // empty = leaf
    bool is_leaf() const { return children.empty(); }
};
const std::vector<RootedTree>& rooted_trees(int leaves);

/// Minimal-model transfer of a dg algebra along a splitting: m_1 = 0, m_2
/// induced, higher operations as sums over decorated planar rooted trees
/// (leaves iota, interior edges htpy, vertices the algebra operations,
/// root proj).  Non-trivalent trees contribute only when the input has
/// operations of arity >= 3.
AInfAlgebra transfer_algebra(const AInfAlgebra& A, const SplittingData& S, int cap);

/// Transfer of a dg (bi)module over an honest algebra, the algebra kept
/// fixed.  Trees degenerate to interleavings of one-input actions with the
/// homotopy spliced between consecutive actions.
AInfBimodule transfer_bimodule(const AInfBimodule& M, const SplittingData& S, int cap);

/// The transferred quasi-isomorphisms H(M) -> M and M -> H(M) as
/// A-infinity morphisms over the fixed algebra, built by the one-input
/// recursions and validated against the morphism relations by the tests.
AInfMorphism iota_infty(std::shared_ptr<const AInfBimodule> M,
                        std::shared_ptr<const AInfBimodule> HM,
                        const SplittingData& S, int cap);
AInfMorphism proj_infty(std::shared_ptr<const AInfBimodule> M,
                        std::shared_ptr<const AInfBimodule> HM,
                        const SplittingData& S, int cap);

/// Transfer of a strict morphism F: M -> N of dg bimodules to homology:
/// proj_infty(N) after F after iota_infty(M), truncated at total arity cap.
AInfMorphism transfer_morphism(const AInfMorphism& F, const SplittingData& S_src,
                               const SplittingData& S_tgt,
                               std::shared_ptr<const AInfBimodule> H_src,
                               std::shared_ptr<const AInfBimodule> H_tgt, int cap);

/// Formality certificates.  `which` records the hypothesis set that holds.
struct FormalityCertificate {
    bool formal = false;
    std::string which;   // "FormalCond", "FormalCond2(left)", ...
    std::string detail;  // failing condition when !formal
};

/// h iota = 0 and m_2(iota x iota) inside iota(H)  =>  formal.
FormalityCertificate check_formality_alg(const AInfAlgebra& A, const SplittingData& S);
/// proj h = 0 and Im(h), Im(d) submodules  =>  formal (per available side).
FormalityCertificate check_formality_mod(const AInfBimodule& M, const SplittingData& S);

}  // namespace bfk
