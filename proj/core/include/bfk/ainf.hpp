#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bfk/graded.hpp"

namespace bfk {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Finitely supported multilinear map on basis tuples.  Keys are tuples of
/// basis indices, values the GF(2) chains they map to.  Absent key = zero.
using SparseOp = std::unordered_map<std::vector<int>, Chain, VecHash>;

using Sig = std::pair<int, int>;  // (n1, n2) of an m_(n1|1|n2) or f_(n1|1|n2)

struct AInfAlgebra {
    GradedBasisSpace space;
    std::map<int, SparseOp> mult;  // arity -> structure map
    std::vector<int> idem_ids;     // diagonal idempotent basis ids (may be empty)
    Chain unit;

    bool is_honest() const;  // m_2 only: an associative algebra
    Chain eval(int arity, const std::vector<Chain>& in) const;
    int idem_for(int vertex) const;
};

struct AInfBimodule {
    std::shared_ptr<const AInfAlgebra> over;
    GradedBasisSpace space;
    std::map<Sig, SparseOp> acts;

    bool has_left() const;
    bool has_right() const;
    Chain eval(Sig sig, const std::vector<Chain>& in) const;  // in = [a.., x, b..]
    /// The algebra viewed as a bimodule over itself.
    static AInfBimodule regular(std::shared_ptr<const AInfAlgebra> A);
};

struct AInfMorphism {
    std::shared_ptr<const AInfBimodule> src, dst;
    std::map<Sig, SparseOp> comps;

    Chain eval(Sig sig, const std::vector<Chain>& in) const;
    bool is_strict() const;
};

/// Failure report from a relation checker: which relation, on which tuple.
struct CheckFailure {
    std::string relation;
    std::vector<std::string> tuple;
    std::string detail;
};

struct CheckReport {
    bool ok = true;
    std::vector<CheckFailure> failures;
    long long instances = 0;

    void fail(std::string rel, std::vector<std::string> tup, std::string detail = {});
    void sort_failures();
};

struct CheckOptions {
    int cap = 4;
    bool include_idempotent_inputs = true;  // relations with strict-unit inputs
    bool check_degrees = true;              // when graded_ops is set
    int max_failures = 8;
};

CheckReport check_algebra(const AInfAlgebra& A, const CheckOptions& opt = {});
CheckReport check_bimodule(const AInfBimodule& M, const CheckOptions& opt = {});
CheckReport check_morphism(const AInfMorphism& f, const CheckOptions& opt = {});

/// Strict unitality: diagonal idempotents act by identity/zero through m_2
/// and annihilate every other structure map.  Scans stored constants, so it
/// stays exhaustive even when the relation checkers skip idempotent inputs.
CheckReport check_strict_unitality(const AInfAlgebra& A);
CheckReport check_unital_actions(const AInfBimodule& M);

/// Filtration checks per Defn of filtered structures: every structure
/// constant satisfies sum(level(inputs)) >= level(output term).
CheckReport check_filtered_algebra(const AInfAlgebra& A);
CheckReport check_filtered_bimodule(const AInfBimodule& M);
CheckReport check_filtered_morphism(const AInfMorphism& f);

/// Tensor over F of a left module and a right module, as a bimodule with
/// the componentwise actions.  Labels are "<left>(x)<right>"; gradings and
/// filtration levels add.
AInfBimodule pair_bimodule(const AInfBimodule& left_mod, const AInfBimodule& right_mod);

/// Mapping cone M (+) N[1] of a morphism.  Labels get "s:"/"t:" prefixes.
/// Structure maps are lower triangular with f in the corner; filtration is
/// levelwise.  Throws if f fails check_morphism.
AInfBimodule mapping_cone(const AInfMorphism& f, const CheckOptions& opt = {});

/// Associated graded: keeps exactly the level-preserving components of the
/// structure maps; throws if any component raises total level.
AInfAlgebra associated_graded(const AInfAlgebra& A);
AInfBimodule associated_graded(const AInfBimodule& M,
                               std::shared_ptr<const AInfAlgebra> grA);

/// Structure-constant equality under a label translation applied to the
/// left operand's labels (tensor labels nest algebra labels, so this is a
/// free string transformation).  Compares ops only (ungraded comparison).
struct StructureDiff {
    bool equal = true;
    std::string detail;
};
using LabelRename = std::function<std::string(const std::string&)>;
StructureDiff compare_algebras(const AInfAlgebra& a, const AInfAlgebra& b,
                               const LabelRename& rename = {});
StructureDiff compare_bimodules(const AInfBimodule& a, const AInfBimodule& b,
                                const LabelRename& rename = {});
StructureDiff compare_morphisms(const AInfMorphism& a, const AInfMorphism& b,
                                const LabelRename& rename = {});

/// JSON emitters (schema: basis/ops, morphisms use comps).
std::string to_json(const AInfAlgebra& A);
std::string to_json(const AInfBimodule& M);
std::string to_json(const AInfMorphism& f);

/// Simple deterministic parallel for; worker count capped by BFK_THREADS.
void parallel_for(int n, const std::function<void(int)>& fn);
int worker_count();

}  // namespace bfk
