#include "rbident/model.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rbident {

namespace {

const SeqVal& asSeq(const ModelValue& v) {
    if (const auto* s = std::get_if<SeqVal>(&v)) return *s;
    throw std::invalid_argument("expected a sequence value");
}

const QPoly& asPoly(const ModelValue& v) {
    if (const auto* p = std::get_if<QPoly>(&v)) return *p;
    throw std::invalid_argument("expected a polynomial value");
}

const BasisVal& asBasis(const ModelValue& v) {
    if (const auto* b = std::get_if<BasisVal>(&v)) return *b;
    throw std::invalid_argument("expected a basis-coordinate value");
}

std::string vecToString(const std::vector<Rat>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += ratToString(v[i]);
    }
    return out + ")";
}

}  // namespace

bool isZeroValue(const ModelValue& v) {
    if (const auto* s = std::get_if<SeqVal>(&v)) {
        for (const Rat& x : s->v) {
            if (x != 0) return false;
        }
        return true;
    }
    if (const auto* p = std::get_if<QPoly>(&v)) return p->isZero();
    for (const Rat& x : std::get<BasisVal>(v).v) {
        if (x != 0) return false;
    }
    return true;
}

bool valuesEqual(const ModelValue& a, const ModelValue& b) {
    return a == b;
}

ModelValue addValues(const ModelValue& a, const ModelValue& b) {
    if (const auto* s = std::get_if<SeqVal>(&a)) {
        const SeqVal& t = asSeq(b);
        if (s->v.size() != t.v.size()) throw std::invalid_argument("sequence length mismatch");
        SeqVal out = *s;
        for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += t.v[i];
        return out;
    }
    if (const auto* p = std::get_if<QPoly>(&a)) return *p + asPoly(b);
    const BasisVal& x = std::get<BasisVal>(a);
    const BasisVal& y = asBasis(b);
    if (x.v.size() != y.v.size()) throw std::invalid_argument("basis dimension mismatch");
    BasisVal out = x;
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += y.v[i];
    return out;
}

ModelValue scaleValue(const Rat& k, const ModelValue& v) {
    if (const auto* s = std::get_if<SeqVal>(&v)) {
        SeqVal out = *s;
        for (Rat& x : out.v) x *= k;
        return out;
    }
    if (const auto* p = std::get_if<QPoly>(&v)) return p->scaled(k);
    BasisVal out = std::get<BasisVal>(v);
    for (Rat& x : out.v) x *= k;
    return out;
}

std::string valueToString(const ModelValue& v) {
    if (const auto* s = std::get_if<SeqVal>(&v)) return vecToString(s->v);
    if (const auto* p = std::get_if<QPoly>(&v)) return p->toString();
    return vecToString(std::get<BasisVal>(v).v);
}

Model seqModel(int n) {
    if (n < 1) throw std::invalid_argument("sequence length must be >= 1");
    Model m;
    m.carrier = Carrier::Seq;
    m.dim = n;
    m.spec = "seq:N=" + std::to_string(n);
    m.base = [n](const ModelValue& a, const ModelValue& b) -> ModelValue {
        const SeqVal& x = asSeq(a);
        const SeqVal& y = asSeq(b);
        SeqVal out;
        out.v.resize(n);
        for (int i = 0; i < n; ++i) out.v[i] = x.v[i] * y.v[i];
        return out;
    };
    m.rbo = [n](const ModelValue& a) -> ModelValue {
        const SeqVal& x = asSeq(a);
        SeqVal out;
        out.v.resize(n);
        Rat acc = 0;
        for (int i = 0; i < n; ++i) {
            acc += x.v[i];
            out.v[i] = acc;
        }
        return out;
    };
    m.weight = Rat(-1);
    m.productDerivedFromRbo = true;
    auto base = m.base;
    auto rbo = m.rbo;
    m.product = [base, rbo](const ModelValue& a, const ModelValue& b) {
        return base(a, rbo(b));
    };
    return m;
}

Model polyModel(const PolyMulSpec& spec) {
    using S = PolyMulSpec::Selector;
    Model m;
    m.carrier = Carrier::Poly;
    auto mul = [](const QPoly& a, const QPoly& b) { return a * b; };
    switch (spec.sel) {
        case S::CircInt:
            m.spec = "poly:mul=circint";
            m.product = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                return asPoly(a) * asPoly(b).integrate(1);
            };
            m.base = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                return asPoly(a) * asPoly(b);
            };
            m.rbo = [](const ModelValue& a) -> ModelValue { return asPoly(a).integrate(1); };
            m.weight = Rat(0);
            m.productDerivedFromRbo = true;
            m.evidence = EvidenceParams{0, 1};
            break;
        case S::StarKN: {
            if (spec.k < 0 || spec.n < 0) throw std::invalid_argument("star needs k,n >= 0");
            int k = spec.k, n = spec.n;
            m.spec = "poly:mul=star,k=" + std::to_string(k) + ",n=" + std::to_string(n);
            m.product = [k, n, mul](const ModelValue& a, const ModelValue& b) -> ModelValue {
                const QPoly& x = asPoly(a);
                const QPoly& y = asPoly(b);
                QPoly out;
                for (int i = 0; i <= n; ++i) {
                    out += mul(x.integrate(i), y.integrate(n - i + k)).scaled(binomial(n, i));
                }
                return out;
            };
            m.evidence = EvidenceParams{n, n + k};
            break;
        }
        case S::BracketN: {
            if (spec.n < 1) throw std::invalid_argument("bracket needs n >= 1");
            int n = spec.n;
            m.spec = "poly:mul=bracket,n=" + std::to_string(n);
            m.product = [n, mul](const ModelValue& a, const ModelValue& b) -> ModelValue {
                const QPoly& x = asPoly(a);
                const QPoly& y = asPoly(b);
                QPoly out;
                for (int i = 0; i <= n; ++i) {
                    Rat coef = binomial(n, i) * (Rat(1) - Rat(2 * i) / n);
                    out += mul(x.integrate(i), y.integrate(n - i)).scaled(coef);
                }
                return out;
            };
            m.evidence = EvidenceParams{n, n};
            break;
        }
        case S::MEps: {
            Rat eps = spec.eps;
            m.spec = "poly:mul=meps,eps=" + ratToString(eps);
            m.product = [eps](const ModelValue& a, const ModelValue& b) -> ModelValue {
                const QPoly& x = asPoly(a);
                const QPoly& y = asPoly(b);
                return x * y.integrate(2) + (x.integrate(1) * y.integrate(1)).scaled(eps);
            };
            m.evidence = EvidenceParams{1, 2};
            break;
        }
        case S::DoubleProduct:
            m.spec = "poly:mul=double";
            m.product = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                return asPoly(a).integrate(1) * asPoly(b).integrate(1);
            };
            m.base = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                return asPoly(a) * asPoly(b);
            };
            m.rbo = [](const ModelValue& a) -> ModelValue { return asPoly(a).integrate(1); };
            m.weight = Rat(0);
            m.evidence = EvidenceParams{0, 2};
            break;
        case S::Deformed: {
            Rat eps = spec.eps;
            m.spec = "poly:mul=deformed,eps=" + ratToString(eps);
            m.product = [eps](const ModelValue& a, const ModelValue& b) -> ModelValue {
                const QPoly& x = asPoly(a);
                const QPoly& y = asPoly(b);
                return x.integrate(1) * y.integrate(1) + (x * y.integrate(2)).scaled(eps);
            };
            m.base = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                return asPoly(a) * asPoly(b);
            };
            m.rbo = [](const ModelValue& a) -> ModelValue { return asPoly(a).integrate(1); };
            m.weight = Rat(0);
            m.evidence = EvidenceParams{1, 2};
            break;
        }
        case S::Diamond:
            m.spec = "poly:mul=diamond";
            m.product = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                return asPoly(a).derivative() * asPoly(b).integrate(1);
            };
            m.evidence = EvidenceParams{1, 0};
            break;
        case S::NovikovSub:
            m.spec = "poly:mul=novsub";
            m.product = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                const QPoly& x = asPoly(a);
                const QPoly& y = asPoly(b);
                return x * y - x.derivative() * y.integrate(1);
            };
            m.evidence = EvidenceParams{1, 0};
            m.gridMinExp = 1;  // the product's source algebra excludes constant terms
            break;
        case S::PlainProduct:
            m.spec = "poly:mul=plain";
            m.product = [](const ModelValue& a, const ModelValue& b) -> ModelValue {
                return asPoly(a) * asPoly(b);
            };
            m.evidence = EvidenceParams{0, 0};
            break;
    }
    return m;
}

Model epsModel(const EpsSpec& spec) {
    if (spec.m < 2) throw std::invalid_argument("eps model needs m >= 2");
    if (static_cast<int>(spec.eps.size()) != spec.m - 1) {
        throw std::invalid_argument("eps model needs m-1 parameters");
    }
    Model m;
    m.carrier = Carrier::Basis;
    m.dim = spec.m;
    m.spec = "eps:m=" + std::to_string(spec.m);
    int n = spec.m;
    std::vector<Rat> eps = spec.eps;
    m.product = [n, eps](const ModelValue& a, const ModelValue& b) -> ModelValue {
        const BasisVal& x = asBasis(a);
        const BasisVal& y = asBasis(b);
        BasisVal out;
        out.v.assign(n, Rat(0));
        for (int i = 0; i < n; ++i) {
            if (x.v[i] == 0) continue;
            Rat acc = 0;
            for (int j = 0; j < i; ++j) {
                if (y.v[j] != 0) acc += y.v[j] * eps[j];
            }
            out.v[i] = x.v[i] * acc;
        }
        return out;
    };
    return m;
}

EpsSpec epsSpecFromSeed(int m, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    EpsSpec spec;
    spec.m = m;
    for (int i = 0; i < m - 1; ++i) {
        long long num = static_cast<long long>(rng() % 9) + 1;
        long long den = static_cast<long long>(rng() % 9) + 1;
        spec.eps.emplace_back(Rat(num) / den);
    }
    return spec;
}

Model rescaleRbo(const Model& m, const Rat& eps) {
    if (!m.rbo) throw std::invalid_argument("model has no Rota-Baxter operator");
    if (!m.productDerivedFromRbo) {
        throw std::invalid_argument("model product is not derived from its operator");
    }
    if (m.weight == 0) throw std::invalid_argument("rescaling requires nonzero weight");
    if (eps == 0) throw std::invalid_argument("rescaling factor must be nonzero");
    Model out = m;
    out.spec = m.spec + ",rescaled=" + ratToString(eps);
    auto oldRbo = m.rbo;
    out.rbo = [oldRbo, eps](const ModelValue& a) { return scaleValue(eps, oldRbo(a)); };
    out.weight = m.weight * eps;
    auto base = out.base;
    auto rbo = out.rbo;
    out.product = [base, rbo](const ModelValue& a, const ModelValue& b) {
        return base(a, rbo(b));
    };
    return out;
}

namespace {

std::unordered_map<std::string, std::string> parseKeyValues(const std::string& text) {
    std::unordered_map<std::string, std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = piece.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("model spec expects key=value pairs, got '" + piece + "'");
        }
        std::string key = piece.substr(0, eq);
        if (out.count(key)) throw std::invalid_argument("duplicate model key '" + key + "'");
        out[key] = piece.substr(eq + 1);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int parseIntStrict(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer for " + what + ": '" + s + "'");
    }
}

void rejectUnknownKeys(const std::unordered_map<std::string, std::string>& kv,
                       std::initializer_list<const char*> allowed) {
    for (const auto& [k, v] : kv) {
        bool ok = false;
        for (const char* a : allowed) {
            if (k == a) ok = true;
        }
        if (!ok) throw std::invalid_argument("unknown model key '" + k + "'");
    }
}

}  // namespace

Model parseModelSpec(const std::string& spec) {
    std::size_t colon = spec.find(':');
    std::string kind = colon == std::string::npos ? spec : spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto kv = parseKeyValues(rest);
    if (kind == "seq") {
        rejectUnknownKeys(kv, {"N"});
        int n = kv.count("N") ? parseIntStrict(kv.at("N"), "N") : 6;
        return seqModel(n);
    }
    if (kind == "eps") {
        rejectUnknownKeys(kv, {"m", "seed"});
        int m = kv.count("m") ? parseIntStrict(kv.at("m"), "m") : 6;
        int seed = kv.count("seed") ? parseIntStrict(kv.at("seed"), "seed") : 7;
        return epsModel(epsSpecFromSeed(m, static_cast<unsigned long long>(seed)));
    }
    if (kind != "poly") {
        throw std::invalid_argument("unknown model kind '" + kind + "' (seq, poly, eps)");
    }
    if (!kv.count("mul")) throw std::invalid_argument("poly model needs mul=<selector>");
    std::string mul = kv.at("mul");
    PolyMulSpec ps;
    using S = PolyMulSpec::Selector;
    if (mul == "circint") {
        rejectUnknownKeys(kv, {"mul"});
        ps.sel = S::CircInt;
    } else if (mul == "star") {
        rejectUnknownKeys(kv, {"mul", "k", "n"});
        ps.sel = S::StarKN;
        ps.k = kv.count("k") ? parseIntStrict(kv.at("k"), "k") : 0;
        ps.n = kv.count("n") ? parseIntStrict(kv.at("n"), "n") : 0;
    } else if (mul == "bracket") {
        rejectUnknownKeys(kv, {"mul", "n"});
        ps.sel = S::BracketN;
        ps.n = kv.count("n") ? parseIntStrict(kv.at("n"), "n") : 1;
    } else if (mul == "meps") {
        rejectUnknownKeys(kv, {"mul", "eps"});
        ps.sel = S::MEps;
        ps.eps = kv.count("eps") ? ratFromString(kv.at("eps")) : Rat(1);
    } else if (mul == "double") {
        rejectUnknownKeys(kv, {"mul"});
        ps.sel = S::DoubleProduct;
    } else if (mul == "deformed") {
        rejectUnknownKeys(kv, {"mul", "eps"});
        ps.sel = S::Deformed;
        ps.eps = kv.count("eps") ? ratFromString(kv.at("eps")) : Rat(1);
    } else if (mul == "diamond") {
        rejectUnknownKeys(kv, {"mul"});
        ps.sel = S::Diamond;
    } else if (mul == "novsub") {
        rejectUnknownKeys(kv, {"mul"});
        ps.sel = S::NovikovSub;
    } else if (mul == "plain") {
        rejectUnknownKeys(kv, {"mul"});
        ps.sel = S::PlainProduct;
    } else {
        throw std::invalid_argument("unknown poly selector '" + mul + "'");
    }
    return polyModel(ps);
}

std::vector<std::string> modelCatalog() {
    return {
        "seq:N=<len>            partial-sum sequences; product a*R(b), R = prefix sums, weight -1",
        "poly:mul=circint       a*int(b); weight-0 operator int attached",
        "poly:mul=star,k=,n=    sum_i C(n,i) int_i(a)*int_{n-i+k}(b)",
        "poly:mul=bracket,n=    sum_i C(n,i)(1-2i/n) int_i(a)*int_{n-i}(b), n >= 1",
        "poly:mul=meps,eps=     a*int_2(b) + eps*int(a)*int(b)",
        "poly:mul=double        int(a)*int(b); weight-0 operator int attached",
        "poly:mul=deformed,eps= int(a)*int(b) + eps*a*int_2(b); weight-0 operator int attached",
        "poly:mul=diamond       d/dx(a)*int(b)",
        "poly:mul=novsub        a*b - d/dx(a)*int(b); grid sampling starts at exponent 1",
        "poly:mul=plain         a*b",
        "eps:m=<dim>,seed=<s>   triangular basis algebra e_i o e_j = eps_j e_i (i > j)",
    };
}

ModelValue evalTermValue(TermId t, const Model& m, const std::vector<ModelValue>& assignment,
                         WordFlavor flavor, std::unordered_map<TermId, ModelValue>& cache) {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    const TermNode& nd = termNode(t);
    ModelValue val;
    if (nd.var >= 0) {
        if (nd.var >= static_cast<int>(assignment.size())) {
            throw std::invalid_argument("assignment does not cover variable " +
                                        std::to_string(nd.var));
        }
        val = assignment[nd.var];
    } else {
        ModelValue l = evalTermValue(nd.left, m, assignment, flavor, cache);
        ModelValue r = evalTermValue(nd.right, m, assignment, flavor, cache);
        switch (flavor) {
            case WordFlavor::Plain:
                val = m.product(l, r);
                break;
            case WordFlavor::LieWord:
                val = addValues(m.product(l, r), scaleValue(Rat(-1), m.product(r, l)));
                break;
            case WordFlavor::JordanWord:
                val = addValues(m.product(l, r), m.product(r, l));
                break;
        }
    }
    return cache.emplace(t, std::move(val)).first->second;
}

ModelValue evalPoly(const FreePoly& p, const Model& m,
                    const std::vector<ModelValue>& assignment, WordFlavor flavor) {
    std::unordered_map<TermId, ModelValue> cache;
    ModelValue acc;
    bool have = false;
    for (const auto& [t, c] : p.terms) {
        ModelValue v = scaleValue(c, evalTermValue(t, m, assignment, flavor, cache));
        acc = have ? addValues(acc, v) : std::move(v);
        have = true;
    }
    if (have) return acc;
    // zero polynomial: a zero of the right carrier type
    switch (m.carrier) {
        case Carrier::Seq: {
            SeqVal z;
            z.v.assign(m.dim, Rat(0));
            return z;
        }
        case Carrier::Poly:
            return QPoly();
        case Carrier::Basis: {
            BasisVal z;
            z.v.assign(m.dim, Rat(0));
            return z;
        }
    }
    return QPoly();
}

}  // namespace rbident
