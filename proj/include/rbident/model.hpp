#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "rbident/qpoly.hpp"
#include "rbident/term.hpp"

namespace rbident {

// Value of a model's carrier: fixed-length sequence, univariate polynomial, or
// coordinate vector over a finite basis e_1..e_m.
struct SeqVal {
    std::vector<Rat> v;
    bool operator==(const SeqVal& o) const { return v == o.v; }
};
struct BasisVal {
    std::vector<Rat> v;
    bool operator==(const BasisVal& o) const { return v == o.v; }
};
using ModelValue = std::variant<SeqVal, QPoly, BasisVal>;

bool isZeroValue(const ModelValue& v);
bool valuesEqual(const ModelValue& a, const ModelValue& b);
ModelValue addValues(const ModelValue& a, const ModelValue& b);
ModelValue scaleValue(const Rat& k, const ModelValue& v);
// Seq/Basis as "(c1,c2,...)", Poly via QPoly::toString.
std::string valueToString(const ModelValue& v);

enum class Carrier { Seq, Poly, Basis };

// Grid-bound parameters of a closed-form polynomial multiplication: nu bounds
// the exponent-polynomial degree a single product contributes per variable,
// w bounds the integration shift (see evidenceBound in verify).
struct EvidenceParams {
    int nu = 0;
    int w = 0;
};

// An algebra to check identities in. `product` is the algebra's own
// multiplication (the one monomials of an identity are evaluated with).
// When the algebra is derived from a Rota-Baxter operator, `rbo`, `weight`
// and the underlying commutative `base` product are carried alongside so the
// operator law itself can be checked and rescaled.
struct Model {
    Carrier carrier = Carrier::Poly;
    int dim = 0;  // Seq length or Basis dimension; unused for Poly
    std::string spec;

    std::function<ModelValue(const ModelValue&, const ModelValue&)> product;
    std::function<ModelValue(const ModelValue&, const ModelValue&)> base;
    std::function<ModelValue(const ModelValue&)> rbo;
    Rat weight = Rat(0);
    // product(a,b) == base(a, rbo(b)); required by rescaleRbo
    bool productDerivedFromRbo = false;

    std::optional<EvidenceParams> evidence;  // Poly selectors with closed forms
    int gridMinExp = 0;  // sampling floor (products needing zero constant term)
};

// Partial-sum sequences: componentwise base product, R = prefix sums
// (weight -1), algebra product a*R(b).
Model seqModel(int n);

// The K[x] family.
struct PolyMulSpec {
    enum class Selector {
        CircInt,       // a * integrate(b)
        StarKN,        // sum_i C(n,i) integrate_i(a) * integrate_{n-i+k}(b)
        BracketN,      // sum_i C(n,i) (1 - 2i/n) integrate_i(a) * integrate_{n-i}(b)
        MEps,          // a*integrate_2(b) + eps*integrate(a)*integrate(b)
        DoubleProduct, // integrate(a) * integrate(b)
        Deformed,      // integrate(a)*integrate(b) + eps*a*integrate_2(b)
        Diamond,       // derivative(a) * integrate(b)
        NovikovSub,    // a*b - derivative(a)*integrate(b)
        PlainProduct,  // a*b
    };
    Selector sel = Selector::PlainProduct;
    int k = 0;
    int n = 0;
    Rat eps = Rat(0);
};
Model polyModel(const PolyMulSpec& spec);

// Finite-dimensional triangular algebra on e_1..e_m:
// e_i o e_j = eps_j * e_i when i > j, else 0.
struct EpsSpec {
    int m = 0;
    std::vector<Rat> eps;  // eps[j-1] is the parameter attached to e_j, j = 1..m-1
};
Model epsModel(const EpsSpec& spec);

// Deterministic parameter vector for "eps:m=..,seed=..": m-1 nonzero small
// rationals drawn from mt19937_64(seed).
EpsSpec epsSpecFromSeed(int m, unsigned long long seed);

// R' = eps*R; weight eps*lambda; product rebuilt as base(a, R'(b)).
// Requires a derived product, nonzero weight and nonzero eps.
Model rescaleRbo(const Model& m, const Rat& eps);

// Parses CLI model spec strings: "seq:N=6", "poly:mul=star,k=2,n=0",
// "poly:mul=bracket,n=3", "poly:mul=meps,eps=1", "poly:mul=double",
// "poly:mul=deformed,eps=1", "poly:mul=diamond", "poly:mul=novsub",
// "poly:mul=circint", "poly:mul=plain", "eps:m=6,seed=7".
// Unknown keys or selectors throw std::invalid_argument.
Model parseModelSpec(const std::string& spec);

// One line per selector with its parameter schema (for the `models` command).
std::vector<std::string> modelCatalog();

// How a word monomial's internal nodes are interpreted during evaluation.
enum class WordFlavor {
    Plain,       // node = model product
    LieWord,     // node = product(l,r) - product(r,l)
    JordanWord,  // node = product(l,r) + product(r,l)
};

// Evaluates a FreePoly: assignment[i] substitutes variable i. Values are
// combined with the model product under the chosen flavor and the exact
// rational coefficients.
// Evaluates one product tree; `cache` memoizes subtrees and may be shared
// across trees evaluated at the same assignment.
ModelValue evalTermValue(TermId t, const Model& m, const std::vector<ModelValue>& assignment,
                         WordFlavor flavor, std::unordered_map<TermId, ModelValue>& cache);

ModelValue evalPoly(const FreePoly& p, const Model& m,
                    const std::vector<ModelValue>& assignment,
                    WordFlavor flavor = WordFlavor::Plain);

}  // namespace rbident
