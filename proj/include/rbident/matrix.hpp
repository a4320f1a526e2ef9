#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rbident/rat.hpp"

namespace rbident {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// Canonical reduced row echelon form: zero rows dropped, each pivot 1 with
// zeros above and below, pivot columns strictly increasing. RREF is unique
// for a given row space, so results are independent of row presentation
// order up to that space.
struct RrefResult {
    RatMat rows;
    std::vector<int> pivots;
};

// Forward pass is fraction-free (Bareiss-style two-term updates with exact
// division by the previous pivot, after clearing row denominators); the back
// pass normalizes to the canonical reduced form.
RrefResult rref(RatMat m);

int rankOf(const RatMat& m);

// Nullspace basis read off an RREF: one vector per free column f (ascending),
// with v[f] = 1 and v[pivot_r] = -R[r][f].
RatMat kernelBasis(const RrefResult& r, int ncols);

// RREF of the kernel basis. `freeParams` are its pivot columns: the
// coordinates that parametrize the solution space canonically.
struct CanonicalKernel {
    RatMat rows;
    std::vector<int> freeParams;
};
CanonicalKernel canonicalKernel(const RatMat& m, int ncols);

// Incremental rank tracker: keeps one normalized row per pivot column and
// reduces each candidate against them in ascending pivot order.
class Echelon {
  public:
    // Returns true when v was independent of the rows seen so far.
    bool add(RatVec v);
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, RatVec>& rows() const { return rows_; }
    // Rows as a matrix, ascending pivot order.
    RatMat matrix() const;

  private:
    std::map<int, RatVec> rows_;
};

// Exact solve of sum_k c_k * gens[k] = target via the augmented RREF, free
// coefficients set to 0, followed by full recomputation of the combination.
// nullopt when inconsistent.
std::optional<RatVec> solveExact(const RatMat& gens, const RatVec& target);

}  // namespace rbident
