#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rbident/model.hpp"
#include "rbident/term.hpp"

namespace rbident {

// ---- sampling plans --------------------------------------------------------------
// All plans enumerate deterministically given their parameters.

// Every exponent tuple (i_1..i_d), minExp <= i_v <= maxExp, ascending
// lexicographically with the LAST variable varying fastest; assigns x^{i_v}.
struct MonomialGrid {
    int maxExp = 6;
    int minExp = 0;
};

// `count` assignments of small-integer sequence vectors, components uniform in
// [-bound, bound] drawn from mt19937_64(seed).
struct RandomVectors {
    int count = 200;
    unsigned long long seed = 42;
    int bound = 3;
};

// All tuples over the basis vectors e_1..e_m, last variable fastest.
struct BasisTuples {};

struct ExplicitList {
    std::vector<std::vector<ModelValue>> assignments;
};

using SamplingPlan = std::variant<MonomialGrid, RandomVectors, BasisTuples, ExplicitList>;

// The default plan for a model's carrier: MonomialGrid(6) for Poly (respecting
// the model's minimum exponent), RandomVectors(200, seed, 3) for Seq,
// BasisTuples for Basis.
SamplingPlan defaultPlan(const Model& m, unsigned long long seed = 42);

// Materializes the plan for an identity of the given arity.
std::vector<std::vector<ModelValue>> planAssignments(const SamplingPlan& plan, const Model& m,
                                                     int arity);

std::string planEcho(const SamplingPlan& plan);

// ---- verdicts --------------------------------------------------------------------
struct Verdict {
    bool holds = true;
    // Holds: number of assignments checked. Fails: how many assignments held
    // before the witness (= the witness's 0-based plan position).
    long long samples = 0;
    std::string plan;
    // Holds counts as proof-grade when the plan covers the model's evidence
    // bound for the polynomial (closed-form Poly selectors only).
    bool proofGrade = false;
    std::optional<std::vector<ModelValue>> witness;
    std::optional<ModelValue> value;

    // {"status","samples","witness","value"}; witness keyed by variable name.
    std::string toJson() const;
};

// ---- operations ------------------------------------------------------------------

// Evaluates p at every planned assignment. Fails with the plan-order-first
// nonzero witness regardless of execution order.
Verdict checkIdentity(const FreePoly& p, const Model& m, const SamplingPlan& plan,
                      WordFlavor flavor = WordFlavor::Plain);

// Grid points first (Poly carrier), then pseudorandom samples, up to `budget`
// evaluations; first violation found, or nullopt.
std::optional<std::pair<std::vector<ModelValue>, ModelValue>> findCounterexample(
    const FreePoly& p, const Model& m, long long budget, unsigned long long seed);

// Per-variable grid bound B(d, nu, w) = 1 + (d-1)*nu + 2^(d-1)*w: vanishing of
// a degree-d multilinear polynomial on MonomialGrid(B) implies the
// exponent-indexed coefficient function is identically zero for closed-form
// selectors. Zero polynomial gives 0; models without closed-form parameters
// give nullopt (heuristic sampling only).
std::optional<int> evidenceBound(const FreePoly& p, const Model& m);

// Checks R(a)R(b) - R(aR(b) + R(a)b + weight*ab) = 0 over the model's
// underlying product for all sampled pairs.
Verdict rboLawCheck(const Model& m, const std::vector<std::pair<ModelValue, ModelValue>>& pairs);

// Parallelism cap: RBIDENT_THREADS when set, else hardware concurrency.
int threadCount();

// Runs fn(i) for i in [0, n) across threads; fn must be thread-safe.
void parallelFor(long long n, const std::function<void(long long)>& fn);

}  // namespace rbident
