#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbident/term.hpp"

namespace rbident {

// Expression tree produced by the DSL parser; expansion rewrites every derived
// operation into plain products.
struct MacroExpr;
using MacroPtr = std::shared_ptr<const MacroExpr>;

struct MacroExpr {
    enum class Kind {
        Var,     // variable index
        Mul,     // kids[0] * kids[1]
        Lie,     // [kids[0], kids[1]]
        Jordan,  // {kids[0], kids[1]}
        Assoc,   // (a,b,c) = a(bc) - (ab)c
        JAssoc,  // Jordan associator over {.,.}
        Jac,     // [[a,b],c] + [[b,c],a] + [[c,a],b]
        Call,    // named macro applied to kids
        Scale,   // coef * kids[0]
        Sum,     // kids[0] + ... + kids[n-1]
    };
    Kind kind;
    int var = -1;
    Rat coef = Rat(0);
    std::string callee;
    std::vector<MacroPtr> kids;
};

MacroPtr mkMacroVar(int v);
MacroPtr mkMacroNode(MacroExpr::Kind k, std::vector<MacroPtr> kids);
MacroPtr mkMacroCall(std::string name, std::vector<MacroPtr> args);
MacroPtr mkMacroScale(Rat coef, MacroPtr kid);

// A named multilinear prototype on variables 0..arity-1 (plain products).
struct MacroDef {
    std::string name;
    int arity = 0;
    FreePoly proto;
};

// Name -> definition table. Starts from the builtin identities; DSL files add
// their own definitions on top (in order, so later defs may call earlier ones).
class MacroTable {
  public:
    static const MacroTable& builtins();

    const MacroDef* find(const std::string& name) const;
    void define(MacroDef def);  // throws on redefinition
    const std::vector<std::string>& definitionOrder() const { return order_; }

  private:
    std::map<std::string, MacroDef> defs_;
    std::vector<std::string> order_;
};

// Expands every macro/bracket into plain Mul terms. `arity` is the variable
// count of the enclosing definition (result FreePoly arity).
FreePoly expand(const MacroExpr& e, const MacroTable& table, int arity);

// Substitutes args into the leaves of every monomial of a prototype
// (multilinear substitution).
FreePoly instantiate(const FreePoly& proto, const std::vector<FreePoly>& args);

// ---- plain-product combinators ------------------------------------------------
FreePoly lieOf(const FreePoly& p, const FreePoly& q);
FreePoly jorOf(const FreePoly& p, const FreePoly& q);
FreePoly assocOf(const FreePoly& a, const FreePoly& b, const FreePoly& c);
FreePoly jassocOf(const FreePoly& a, const FreePoly& b, const FreePoly& c);
FreePoly jacOf(const FreePoly& a, const FreePoly& b, const FreePoly& c);

// ---- word-level builders --------------------------------------------------------
// Here tree nodes stand for an (anti)commutative word product and are NOT
// expanded; evaluation later interprets each node as a bracket.
FreePoly wordJassoc(const FreePoly& a, const FreePoly& b, const FreePoly& c);
FreePoly wordJac(const FreePoly& a, const FreePoly& b, const FreePoly& c);
FreePoly wordTortkara(const FreePoly& a, const FreePoly& u, const FreePoly& b,
                      const FreePoly& v);
FreePoly wordF5(const FreePoly& t1, const FreePoly& t2, const FreePoly& t3,
                const FreePoly& t4, const FreePoly& t5);

// Rewrites every word node into the corresponding bracket over the plain
// product: node -> l*r - r*l (jordan=false) or l*r + r*l (jordan=true).
FreePoly expandWords(const FreePoly& w, bool jordan);

// ---- builtin prototypes ---------------------------------------------------------
// Plain-product prototypes on canonical variables (indices 0..arity-1).
FreePoly rcomProto();      // (ab)c - (ac)b
FreePoly f4Proto();        // a([b,c]d) - (a,b,cd) + (a,c,bd)
FreePoly f4pProto();       // (a,b,[c,d]) + (a,c,[d,b]) + (a,d,[b,c])
FreePoly f5Proto();        // alternating nested associators, arity 5
FreePoly f5plusProto();    // same shape over Jordan associators
FreePoly tortkaraProto();  // Lie-expanded tortkara combination
FreePoly s13Proto();       // sum over signed permutations of b,c,d in left combs
FreePoly stdskew5Proto();  // signed left combs, first slot fixed
FreePoly rsymProto();      // (a,b,c) - (a,c,b)
FreePoly s13altProto();    // (a[b,c])d + (a[c,d])b + (a[d,b])c
FreePoly novsub4Proto();   // 28-term degree-4 combination
FreePoly prop5diaProto();  // 12-term degree-5 combination

// Word-level prototypes for the published generator families (decoded from the
// embedded tables; indices are 1-based as published).
FreePoly gLie4Word(int i);   // 1..3, anticommutative words of degree 4
FreePoly gRcom4Plain(int i); // 1..12, plain products of degree 4
FreePoly gJor5Word(int i);   // 1..20, commutative words of degree 5

}  // namespace rbident
