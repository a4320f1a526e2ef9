#include "rbident/idspace.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "rbident/verify.hpp"

namespace rbident {

NormalMode modeFor(BasisSymmetry sym) {
    switch (sym) {
        case BasisSymmetry::None:
            return NormalMode::None;
        case BasisSymmetry::Comm:
            return NormalMode::Comm;
        case BasisSymmetry::Anticomm:
            return NormalMode::Anticomm;
        case BasisSymmetry::RcomReduced:
        default:
            return NormalMode::Rcom;
    }
}

namespace {

// Enumerates size-k subsets of `vars` (which is sorted) in lexicographic
// order, calling fn(subset, complement).
void forEachSplit(const std::vector<int>& vars, size_t k,
                  const std::function<void(const std::vector<int>&, const std::vector<int>&)>& fn) {
    const size_t n = vars.size();
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::vector<int> left, right;
        left.reserve(k);
        right.reserve(n - k);
        size_t pos = 0;
        for (size_t i = 0; i < n; ++i) {
            if (pos < k && idx[pos] == i) {
                left.push_back(vars[i]);
                ++pos;
            } else {
                right.push_back(vars[i]);
            }
        }
        fn(left, right);
        // advance combination
        size_t j = k;
        while (j-- > 0) {
            if (idx[j] != j + n - k) {
                ++idx[j];
                for (size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
                break;
            }
            if (j == 0) return;
        }
        if (k == 0) return;
    }
}

std::string shapeSig(TermId t) {
    const TermNode& nd = termNode(t);
    if (nd.var >= 0) return ".";
    return "(" + shapeSig(nd.left) + shapeSig(nd.right) + ")";
}

// Explicit shape-rank table for the degree-4 right-commutative basis.
int rcomShapeRank4(TermId t) {
    static const std::vector<std::string> kShapes = {
        "(((..).).)",  // ((xx)x)x
        "(.((..).))",  // x((xx)x)
        "((..)(..))",  // (xx)(xx)
        "(.(.(..)))",  // x(x(xx))
    };
    std::string sig = shapeSig(t);
    for (size_t i = 0; i < kShapes.size(); ++i)
        if (kShapes[i] == sig) return static_cast<int>(i);
    throw std::logic_error("unexpected degree-4 shape " + sig);
}

bool leafSeqLess(TermId a, TermId b) { return leafSeq(a) < leafSeq(b); }

}  // namespace

std::vector<TermId> genTrees(const std::vector<int>& vars) {
    if (vars.size() == 1) return {mkVar(vars[0])};
    std::vector<TermId> out;
    for (size_t lsize = 1; lsize < vars.size(); ++lsize) {
        forEachSplit(vars, lsize, [&](const std::vector<int>& lset, const std::vector<int>& rset) {
            std::vector<TermId> lts = genTrees(lset);
            std::vector<TermId> rts = genTrees(rset);
            for (TermId lt : lts)
                for (TermId rt : rts) out.push_back(mkMul(lt, rt));
        });
    }
    return out;
}

MonomialBasis enumerateBasis(int degree, BasisSymmetry sym) {
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    std::vector<int> vars(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) vars[static_cast<size_t>(i)] = i;
    std::vector<TermId> trees = genTrees(vars);

    MonomialBasis basis;
    basis.degree = degree;
    basis.symmetry = sym;

    switch (sym) {
        case BasisSymmetry::None: {
            basis.monomials = trees;
            std::sort(basis.monomials.begin(), basis.monomials.end(),
                      [](TermId a, TermId b) { return basisOrderCmp(a, b) < 0; });
            break;
        }
        case BasisSymmetry::Comm: {
            std::set<TermId> reps;
            for (TermId t : trees) reps.insert(commSort(t));
            basis.monomials.assign(reps.begin(), reps.end());
            std::sort(basis.monomials.begin(), basis.monomials.end(),
                      [](TermId a, TermId b) { return basisOrderCmp(a, b) < 0; });
            break;
        }
        case BasisSymmetry::Anticomm: {
            std::set<TermId> reps;
            for (TermId t : trees) reps.insert(anticommSort(t).second);
            basis.monomials.assign(reps.begin(), reps.end());
            std::sort(basis.monomials.begin(), basis.monomials.end(),
                      [](TermId a, TermId b) { return basisOrderCmp(a, b) < 0; });
            break;
        }
        case BasisSymmetry::RcomReduced: {
            if (degree != 4)
                throw std::invalid_argument(
                    "the right-commutative reduced basis is defined for degree 4");
            std::set<TermId> reps;
            for (TermId t : trees) reps.insert(rcomSort(t));
            basis.monomials.assign(reps.begin(), reps.end());
            std::sort(basis.monomials.begin(), basis.monomials.end(), [](TermId a, TermId b) {
                int ra = rcomShapeRank4(a), rb = rcomShapeRank4(b);
                if (ra != rb) return ra < rb;
                return leafSeqLess(a, b);
            });
            break;
        }
    }
    for (int i = 0; i < basis.size(); ++i) basis.index.emplace(basis.monomials[static_cast<size_t>(i)], i);
    return basis;
}

RatVec vectorize(const FreePoly& p, const MonomialBasis& basis) {
    FreePoly q = normalForm(p, modeFor(basis.symmetry));
    RatVec v(static_cast<size_t>(basis.size()), Rat(0));
    for (const auto& [t, c] : q.terms) {
        auto it = basis.index.find(t);
        if (it == basis.index.end())
            throw std::invalid_argument("term outside basis: " + termToString(t));
        v[static_cast<size_t>(it->second)] += c;
    }
    return v;
}

FreePoly polyFromVector(const RatVec& v, const MonomialBasis& basis) {
    if (static_cast<int>(v.size()) != basis.size())
        throw std::invalid_argument("vector length does not match basis");
    FreePoly p(basis.degree);
    for (size_t i = 0; i < v.size(); ++i) p.add(basis.monomials[i], v[i]);
    return p;
}

RatMat evalRows(const MonomialBasis& basis, const Model& m,
                const std::vector<std::vector<ModelValue>>& samples, CoordSelector coords,
                WordFlavor flavor) {
    RatMat rows;
    const size_t ncols = static_cast<size_t>(basis.size());
    for (const auto& sample : samples) {
        std::unordered_map<TermId, ModelValue> cache;
        std::vector<ModelValue> vals;
        vals.reserve(ncols);
        for (TermId t : basis.monomials)
            vals.push_back(evalTermValue(t, m, sample, flavor, cache));

        if (m.carrier == Carrier::Poly) {
            std::set<long> exps;
            for (const ModelValue& v : vals)
                for (const auto& [e, c] : std::get<QPoly>(v).coeffs()) exps.insert(e);
            for (long e : exps) {
                RatVec row(ncols, Rat(0));
                for (size_t j = 0; j < ncols; ++j) row[j] = std::get<QPoly>(vals[j]).coeff(e);
                rows.push_back(std::move(row));
            }
        } else {
            auto compAt = [&](const ModelValue& v, int k) -> const Rat& {
                if (m.carrier == Carrier::Seq) return std::get<SeqVal>(v).v[static_cast<size_t>(k)];
                return std::get<BasisVal>(v).v[static_cast<size_t>(k)];
            };
            if (coords.component >= 0) {
                RatVec row(ncols, Rat(0));
                for (size_t j = 0; j < ncols; ++j) row[j] = compAt(vals[j], coords.component);
                rows.push_back(std::move(row));
            } else {
                for (int k = 0; k < m.dim; ++k) {
                    RatVec row(ncols, Rat(0));
                    for (size_t j = 0; j < ncols; ++j) row[j] = compAt(vals[j], k);
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

IdentitySpace solveIdentitySpace(const MonomialBasis& basis, const Model& m, CoordSelector coords,
                                 WordFlavor flavor, const SampleOptions& opts) {
    Echelon ech;
    long long used = 0;
    auto addSample = [&](const std::vector<ModelValue>& a) {
        for (auto& row : evalRows(basis, m, {a}, coords, flavor)) ech.add(std::move(row));
        ++used;
    };

    for (const auto& a : opts.seedAssignments) addSample(a);

    if (m.carrier == Carrier::Seq) {
        std::mt19937_64 rng(opts.seed);
        auto draw = [&]() {
            std::vector<ModelValue> a;
            a.reserve(static_cast<size_t>(basis.degree));
            for (int v = 0; v < basis.degree; ++v) {
                SeqVal s;
                s.v.reserve(static_cast<size_t>(m.dim));
                for (int k = 0; k < m.dim; ++k)
                    s.v.emplace_back(
                        static_cast<long long>(rng() % static_cast<unsigned long long>(
                                                   2 * opts.bound + 1)) -
                        opts.bound);
                a.emplace_back(std::move(s));
            }
            return a;
        };
        int stable = 0;
        while (stable < opts.stableBatches && used < opts.maxSamples) {
            int before = ech.rank();
            for (int i = 0; i < opts.batch && used < opts.maxSamples; ++i) addSample(draw());
            stable = ech.rank() == before ? stable + 1 : 0;
        }
    } else {
        auto assignments = planAssignments(defaultPlan(m, opts.seed), m, basis.degree);
        int stable = 0;
        size_t pos = 0;
        while (pos < assignments.size() && stable < opts.stableBatches) {
            int before = ech.rank();
            for (int i = 0; i < opts.batch && pos < assignments.size(); ++i)
                addSample(assignments[pos++]);
            stable = ech.rank() == before ? stable + 1 : 0;
        }
    }

    IdentitySpace out;
    out.basisSize = basis.size();
    out.rank = ech.rank();
    out.kernel = canonicalKernel(ech.matrix(), basis.size());
    out.samplesUsed = used;
    return out;
}

std::map<int, RatVec> dependentRelations(const CanonicalKernel& k, int ncols) {
    std::vector<bool> isFree(static_cast<size_t>(ncols), false);
    for (int p : k.freeParams) isFree[static_cast<size_t>(p)] = true;
    std::map<int, RatVec> rel;
    for (int j = 0; j < ncols; ++j) {
        if (isFree[static_cast<size_t>(j)]) continue;
        RatVec coef(static_cast<size_t>(ncols), Rat(0));
        for (size_t r = 0; r < k.rows.size(); ++r)
            coef[static_cast<size_t>(k.freeParams[r])] = k.rows[r][static_cast<size_t>(j)];
        rel.emplace(j, std::move(coef));
    }
    return rel;
}

std::vector<FreePoly> liftGens(const FreePoly& p) {
    const int d = p.arity;
    FreePoly w = FreePoly::variable(d, d + 1);
    std::vector<FreePoly> gens;
    gens.push_back(w.mul(p));
    gens.push_back(p.mul(w));
    for (int slot = 0; slot < d; ++slot) {
        FreePoly sub(d + 1);
        TermId repl = mkMul(mkVar(slot), mkVar(d));
        for (const auto& [t, c] : p.terms) sub.add(substVar(t, slot, repl), c);
        gens.push_back(std::move(sub));
    }
    return gens;
}

std::vector<FreePoly> allPermInstances(const FreePoly& p) {
    std::vector<int> sigma(static_cast<size_t>(p.arity));
    for (int i = 0; i < p.arity; ++i) sigma[static_cast<size_t>(i)] = i;
    std::vector<FreePoly> out;
    do {
        out.push_back(p.permuted(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

int spanRank(const std::vector<FreePoly>& polys, const MonomialBasis& basis) {
    Echelon ech;
    for (const FreePoly& p : polys) ech.add(vectorize(p, basis));
    return ech.rank();
}

bool spanInside(const RatMat& space, const std::vector<FreePoly>& polys,
                const MonomialBasis& basis) {
    Echelon ech;
    for (const RatVec& r : space) ech.add(r);
    int base = ech.rank();
    for (const FreePoly& p : polys)
        if (ech.add(vectorize(p, basis))) return false;
    return ech.rank() == base;
}

namespace {

bool allZero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

std::optional<std::vector<DecompTerm>> decomposeSubset(const RatVec& target,
                                                       const std::vector<SpanElem>& span,
                                                       int maxSubset) {
    if (allZero(target)) return std::vector<DecompTerm>{};
    if (maxSubset >= 1) {
        for (const SpanElem& e : span) {
            auto sol = solveExact({e.vec}, target);
            if (sol) return std::vector<DecompTerm>{{(*sol)[0], e.label}};
        }
    }
    if (maxSubset >= 2) {
        for (size_t i = 0; i < span.size(); ++i) {
            for (size_t j = i + 1; j < span.size(); ++j) {
                auto sol = solveExact({span[i].vec, span[j].vec}, target);
                if (sol)
                    return std::vector<DecompTerm>{{(*sol)[0], span[i].label},
                                                   {(*sol)[1], span[j].label}};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<DecompTerm>> decomposeFull(const RatVec& target,
                                                     const std::vector<SpanElem>& span,
                                                     const RatMat* kernelContext) {
    RatMat gens;
    gens.reserve(span.size() + (kernelContext ? kernelContext->size() : 0));
    for (const SpanElem& e : span) gens.push_back(e.vec);
    if (kernelContext)
        for (const RatVec& r : *kernelContext) gens.push_back(r);
    auto sol = solveExact(gens, target);
    if (!sol) return std::nullopt;
    std::vector<DecompTerm> terms;
    for (size_t i = 0; i < span.size(); ++i)
        if ((*sol)[i] != 0) terms.push_back({(*sol)[i], span[i].label});
    return terms;
}

std::optional<std::vector<DecompTerm>> decompose(const RatVec& target,
                                                 const std::vector<SpanElem>& span,
                                                 const RatMat* kernelContext) {
    if (auto sub = decomposeSubset(target, span, 2)) return sub;
    return decomposeFull(target, span, kernelContext);
}

}  // namespace rbident
