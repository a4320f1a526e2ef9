#include "rbident/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace rbident {

namespace {

// Appends, for each variable slot, the value x^{exps[v]} (Poly) to out.
std::vector<ModelValue> gridAssignment(const std::vector<int>& exps) {
    std::vector<ModelValue> vals;
    vals.reserve(exps.size());
    for (int e : exps) vals.emplace_back(QPoly::monomial(e));
    return vals;
}

// Enumerates exponent tuples minExp..maxExp per slot, last slot fastest.
template <typename Fn>
void forEachTuple(int arity, int lo, int hi, Fn&& fn) {
    std::vector<int> t(static_cast<size_t>(arity), lo);
    if (arity == 0) {
        fn(t);
        return;
    }
    while (true) {
        fn(t);
        int pos = arity - 1;
        while (pos >= 0 && t[static_cast<size_t>(pos)] == hi) {
            t[static_cast<size_t>(pos)] = lo;
            --pos;
        }
        if (pos < 0) break;
        ++t[static_cast<size_t>(pos)];
    }
}

long long randInt(std::mt19937_64& rng, int bound) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(2 * bound + 1)) - bound;
}

SeqVal randomSeq(std::mt19937_64& rng, int dim, int bound) {
    SeqVal v;
    v.v.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) v.v.emplace_back(randInt(rng, bound));
    return v;
}

BasisVal randomBasisVec(std::mt19937_64& rng, int dim, int bound) {
    BasisVal v;
    v.v.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) v.v.emplace_back(randInt(rng, bound));
    return v;
}

QPoly randomPoly(std::mt19937_64& rng, int minExp, int bound) {
    QPoly p;
    int nterms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < nterms; ++t) {
        int exp = minExp + static_cast<int>(rng() % 7);
        long long c = randInt(rng, bound);
        if (c == 0) c = 1;
        p = p + QPoly::monomial(exp, Rat(c));
    }
    return p;
}

ModelValue randomValue(std::mt19937_64& rng, const Model& m, int bound) {
    switch (m.carrier) {
        case Carrier::Seq:
            return ModelValue(randomSeq(rng, m.dim, bound));
        case Carrier::Basis:
            return ModelValue(randomBasisVec(rng, m.dim, bound));
        case Carrier::Poly:
        default:
            return ModelValue(randomPoly(rng, m.gridMinExp, bound > 0 ? bound : 4));
    }
}

std::string varName(int i) {
    const std::string& names = defaultVarNames();
    if (i >= 0 && static_cast<size_t>(i) < names.size()) return std::string(1, names[static_cast<size_t>(i)]);
    return "x" + std::to_string(i);
}

}  // namespace

SamplingPlan defaultPlan(const Model& m, unsigned long long seed) {
    switch (m.carrier) {
        case Carrier::Poly:
            return MonomialGrid{6, m.gridMinExp};
        case Carrier::Seq:
            return RandomVectors{200, seed, 3};
        case Carrier::Basis:
        default:
            return BasisTuples{};
    }
}

std::vector<std::vector<ModelValue>> planAssignments(const SamplingPlan& plan, const Model& m,
                                                     int arity) {
    std::vector<std::vector<ModelValue>> out;
    if (std::holds_alternative<MonomialGrid>(plan)) {
        const auto& g = std::get<MonomialGrid>(plan);
        if (m.carrier != Carrier::Poly)
            throw std::invalid_argument("MonomialGrid requires a polynomial-carrier model");
        int lo = std::max(g.minExp, m.gridMinExp);
        forEachTuple(arity, lo, g.maxExp,
                     [&](const std::vector<int>& t) { out.push_back(gridAssignment(t)); });
    } else if (std::holds_alternative<RandomVectors>(plan)) {
        const auto& r = std::get<RandomVectors>(plan);
        std::mt19937_64 rng(r.seed);
        out.reserve(static_cast<size_t>(r.count));
        for (int s = 0; s < r.count; ++s) {
            std::vector<ModelValue> vals;
            vals.reserve(static_cast<size_t>(arity));
            for (int v = 0; v < arity; ++v) vals.push_back(randomValue(rng, m, r.bound));
            out.push_back(std::move(vals));
        }
    } else if (std::holds_alternative<BasisTuples>(plan)) {
        std::vector<ModelValue> units;
        for (int i = 0; i < m.dim; ++i) {
            switch (m.carrier) {
                case Carrier::Basis: {
                    BasisVal e;
                    e.v.assign(static_cast<size_t>(m.dim), Rat(0));
                    e.v[static_cast<size_t>(i)] = Rat(1);
                    units.emplace_back(std::move(e));
                    break;
                }
                case Carrier::Seq: {
                    SeqVal e;
                    e.v.assign(static_cast<size_t>(m.dim), Rat(0));
                    e.v[static_cast<size_t>(i)] = Rat(1);
                    units.emplace_back(std::move(e));
                    break;
                }
                case Carrier::Poly:
                default:
                    units.emplace_back(QPoly::monomial(m.gridMinExp + i));
                    break;
            }
        }
        forEachTuple(arity, 0, m.dim - 1, [&](const std::vector<int>& t) {
            std::vector<ModelValue> vals;
            vals.reserve(static_cast<size_t>(arity));
            for (int ix : t) vals.push_back(units[static_cast<size_t>(ix)]);
            out.push_back(std::move(vals));
        });
    } else {
        out = std::get<ExplicitList>(plan).assignments;
    }
    return out;
}

std::string planEcho(const SamplingPlan& plan) {
    std::ostringstream os;
    if (std::holds_alternative<MonomialGrid>(plan)) {
        const auto& g = std::get<MonomialGrid>(plan);
        os << "grid(maxExp=" << g.maxExp << ",minExp=" << g.minExp << ")";
    } else if (std::holds_alternative<RandomVectors>(plan)) {
        const auto& r = std::get<RandomVectors>(plan);
        os << "random(count=" << r.count << ",seed=" << r.seed << ",bound=" << r.bound << ")";
    } else if (std::holds_alternative<BasisTuples>(plan)) {
        os << "basis";
    } else {
        os << "explicit(n=" << std::get<ExplicitList>(plan).assignments.size() << ")";
    }
    return os.str();
}

std::string Verdict::toJson() const {
    nlohmann::ordered_json j;
    j["status"] = holds ? "holds" : "fails";
    j["samples"] = samples;
    if (witness) {
        nlohmann::ordered_json w = nlohmann::ordered_json::object();
        for (size_t i = 0; i < witness->size(); ++i) w[varName(static_cast<int>(i))] = valueToString((*witness)[i]);
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["value"] = value ? nlohmann::ordered_json(valueToString(*value)) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

int threadCount() {
    if (const char* env = std::getenv("RBIDENT_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallelFor(long long n, const std::function<void(long long)>& fn) {
    int nt = threadCount();
    if (n <= 1 || nt <= 1) {
        for (long long i = 0; i < n; ++i) fn(i);
        return;
    }
    nt = static_cast<int>(std::min<long long>(nt, n));
    std::atomic<long long> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(nt));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) {
        workers.emplace_back([&, t]() {
            try {
                while (true) {
                    long long i = next.fetch_add(1);
                    if (i >= n) break;
                    fn(i);
                }
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

Verdict checkIdentity(const FreePoly& p, const Model& m, const SamplingPlan& plan,
                      WordFlavor flavor) {
    auto assignments = planAssignments(plan, m, p.arity);
    long long n = static_cast<long long>(assignments.size());
    std::atomic<long long> firstFail{n};
    std::mutex failMu;
    std::map<long long, ModelValue> failValues;

    parallelFor(n, [&](long long i) {
        if (i > firstFail.load(std::memory_order_relaxed)) return;
        ModelValue v = evalPoly(p, m, assignments[static_cast<size_t>(i)], flavor);
        if (!isZeroValue(v)) {
            long long cur = firstFail.load();
            while (i < cur && !firstFail.compare_exchange_weak(cur, i)) {
            }
            std::lock_guard<std::mutex> lock(failMu);
            failValues.emplace(i, std::move(v));
        }
    });

    Verdict verdict;
    verdict.plan = planEcho(plan);
    long long fi = firstFail.load();
    if (fi < n) {
        verdict.holds = false;
        verdict.samples = fi;
        verdict.witness = assignments[static_cast<size_t>(fi)];
        verdict.value = failValues.at(fi);
        return verdict;
    }
    verdict.holds = true;
    verdict.samples = n;
    if (std::holds_alternative<MonomialGrid>(plan)) {
        const auto& g = std::get<MonomialGrid>(plan);
        auto bound = evidenceBound(p, m);
        int width = g.maxExp - std::max(g.minExp, m.gridMinExp) + 1;
        verdict.proofGrade = bound.has_value() && width >= *bound;
    }
    return verdict;
}

std::optional<int> evidenceBound(const FreePoly& p, const Model& m) {
    if (p.terms.empty()) return 0;
    if (!m.evidence) return std::nullopt;
    long d = p.degree();
    if (d < 1) return std::nullopt;
    long long pw = 1;
    for (long i = 1; i < d; ++i) pw *= 2;
    long long b = 1 + static_cast<long long>(d - 1) * m.evidence->nu + pw * m.evidence->w;
    return static_cast<int>(b);
}

std::optional<std::pair<std::vector<ModelValue>, ModelValue>> findCounterexample(
    const FreePoly& p, const Model& m, long long budget, unsigned long long seed) {
    long long used = 0;
    // Phase 1: structured assignments (grid for Poly, basis tuples for Basis).
    if (m.carrier == Carrier::Poly || m.carrier == Carrier::Basis) {
        SamplingPlan structured = m.carrier == Carrier::Poly
                                      ? SamplingPlan(MonomialGrid{6, m.gridMinExp})
                                      : SamplingPlan(BasisTuples{});
        auto assignments = planAssignments(structured, m, p.arity);
        for (auto& a : assignments) {
            if (used >= budget) return std::nullopt;
            ++used;
            ModelValue v = evalPoly(p, m, a, WordFlavor::Plain);
            if (!isZeroValue(v)) return std::make_pair(a, std::move(v));
        }
    }
    // Phase 2: pseudorandom assignments.
    std::mt19937_64 rng(seed);
    while (used < budget) {
        std::vector<ModelValue> a;
        a.reserve(static_cast<size_t>(p.arity));
        for (int v = 0; v < p.arity; ++v) a.push_back(randomValue(rng, m, 3));
        ++used;
        ModelValue v = evalPoly(p, m, a, WordFlavor::Plain);
        if (!isZeroValue(v)) return std::make_pair(a, std::move(v));
    }
    return std::nullopt;
}

Verdict rboLawCheck(const Model& m, const std::vector<std::pair<ModelValue, ModelValue>>& pairs) {
    if (!m.rbo || !m.base)
        throw std::invalid_argument("rboLawCheck requires a model with an explicit operator and base product");
    Verdict verdict;
    verdict.plan = "explicit(n=" + std::to_string(pairs.size()) + ")";
    long long i = 0;
    for (const auto& [a, b] : pairs) {
        ModelValue ra = m.rbo(a);
        ModelValue rb = m.rbo(b);
        ModelValue lhs = m.base(ra, rb);
        ModelValue inner = addValues(addValues(m.base(a, rb), m.base(ra, b)),
                                     scaleValue(m.weight, m.base(a, b)));
        ModelValue diff = addValues(lhs, scaleValue(Rat(-1), m.rbo(inner)));
        if (!isZeroValue(diff)) {
            verdict.holds = false;
            verdict.samples = i;
            verdict.witness = std::vector<ModelValue>{a, b};
            verdict.value = std::move(diff);
            return verdict;
        }
        ++i;
    }
    verdict.holds = true;
    verdict.samples = i;
    return verdict;
}

}  // namespace rbident
