#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbident/matrix.hpp"
#include "rbident/model.hpp"
#include "rbident/rewrite.hpp"
#include "rbident/term.hpp"

namespace rbident {

// Which quotient of the free magma algebra a basis spans.
enum class BasisSymmetry { None, Comm, Anticomm, RcomReduced };

NormalMode modeFor(BasisSymmetry sym);

struct MonomialBasis {
    int degree = 0;
    BasisSymmetry symmetry = BasisSymmetry::None;
    std::vector<TermId> monomials;       // canonical column order
    std::map<TermId, int> index;
    int size() const { return static_cast<int>(monomials.size()); }
};

// All multilinear product trees on the variable set `vars` (each exactly
// once), ordered by left-subset enumeration.
std::vector<TermId> genTrees(const std::vector<int>& vars);

// Canonical bases: None sorts all trees shape-then-leaves; Comm/Anticomm keep
// one representative per orbit; RcomReduced (degree 4 only) sorts the
// right-commutative normal forms by an explicit shape-rank table.
MonomialBasis enumerateBasis(int degree, BasisSymmetry sym);

// Normal form, then coordinates. Throws if a normalized term falls outside
// the basis.
RatVec vectorize(const FreePoly& p, const MonomialBasis& basis);

FreePoly polyFromVector(const RatVec& v, const MonomialBasis& basis);

// Coordinate extraction for evaluation rows: a fixed component (0-based) of a
// Seq/Basis value, or every coordinate (all components; for Poly, one row per
// exponent appearing across the sample's evaluations).
struct CoordSelector {
    int component = -1;  // -1 = all
};

// One block of matrix rows per sample: basis monomials evaluated in the
// model, one column each.
RatMat evalRows(const MonomialBasis& basis, const Model& m,
                const std::vector<std::vector<ModelValue>>& samples, CoordSelector coords,
                WordFlavor flavor);

struct SampleOptions {
    unsigned long long seed = 42;
    int bound = 3;       // random components drawn from [-bound, bound]
    int batch = 5;       // assignments per stabilization step
    int stableBatches = 3;
    int maxSamples = 400;
    // Checked first, before any generated assignment (reference tables).
    std::vector<std::vector<ModelValue>> seedAssignments;
};

struct IdentitySpace {
    int basisSize = 0;
    int rank = 0;
    CanonicalKernel kernel;
    long long samplesUsed = 0;
};

// Evaluation-kernel computation with rank stabilization: seed assignments
// first, then model-appropriate samples (random vectors for Seq, the default
// grid for Poly, basis tuples for Basis) until the rank is unchanged for
// `stableBatches` consecutive batches or the source is exhausted.
IdentitySpace solveIdentitySpace(const MonomialBasis& basis, const Model& m, CoordSelector coords,
                                 WordFlavor flavor, const SampleOptions& opts);

// Expresses each dependent coordinate over the free parameters:
// result[j][p] is the coefficient of coordinate p (a free parameter) in the
// relation for dependent coordinate j. Indices 0-based.
std::map<int, RatVec> dependentRelations(const CanonicalKernel& k, int ncols);

// One-step degree lifts of a multilinear p of degree d, in order:
// w*p, p*w, then per-slot substitutions x_s -> x_s * x_d (w = x_d fresh).
std::vector<FreePoly> liftGens(const FreePoly& p);

// All permutation instances of p (S_arity, lexicographic).
std::vector<FreePoly> allPermInstances(const FreePoly& p);

// Rank of the span of the vectorized polynomials.
int spanRank(const std::vector<FreePoly>& polys, const MonomialBasis& basis);

// True when adding the vectorized polynomials does not grow the row space.
bool spanInside(const RatMat& space, const std::vector<FreePoly>& polys,
                const MonomialBasis& basis);

// ---- decomposition over a labeled span --------------------------------------------
struct SpanElem {
    std::string label;
    RatVec vec;
};
struct DecompTerm {
    Rat coef;
    std::string label;
};

// Exact combinations of at most `maxSubset` span elements, searched in span
// order (singletons, then pairs).
std::optional<std::vector<DecompTerm>> decomposeSubset(const RatVec& target,
                                                       const std::vector<SpanElem>& span,
                                                       int maxSubset = 2);

// Solve over the full span; with kernelContext, kernel rows join the
// generator set (equality modulo the kernel) but are omitted from the result.
std::optional<std::vector<DecompTerm>> decomposeFull(const RatVec& target,
                                                     const std::vector<SpanElem>& span,
                                                     const RatMat* kernelContext);

// Subset search first, then the full solve.
std::optional<std::vector<DecompTerm>> decompose(const RatVec& target,
                                                 const std::vector<SpanElem>& span,
                                                 const RatMat* kernelContext = nullptr);

}  // namespace rbident
