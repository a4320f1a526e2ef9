#pragma once
// Free nonassociative monomials (binary trees over variables) interned in a
// global arena, and multilinear rational combinations of them.
//
// Terms are value handles (TermId); structural equality is handle equality.
// The arena is append-only: storage is a deque so existing nodes never move,
// and reads need no lock once a handle has been published.
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "rbident/rat.hpp"

namespace rbident {

using TermId = std::int32_t;

struct TermNode {
    TermId left = -1;   // -1 for variables
    TermId right = -1;
    int var = -1;       // >= 0 for variables
    int degree = 1;     // number of leaves
    int leftmost = 0;   // variable index of the leftmost leaf
};

class TermArena {
  public:
    static TermArena& instance();

    TermId var(int v);
    TermId mul(TermId l, TermId r);
    const TermNode& node(TermId t) const { return nodes_[t]; }

  private:
    TermArena() = default;
    std::mutex mu_;
    std::deque<TermNode> nodes_;
    std::unordered_map<std::uint64_t, TermId> muls_;
    std::vector<TermId> vars_;
};

inline const TermNode& termNode(TermId t) { return TermArena::instance().node(t); }
inline bool isVar(TermId t) { return termNode(t).var >= 0; }
inline int termDeg(TermId t) { return termNode(t).degree; }
TermId mkVar(int v);
TermId mkMul(TermId l, TermId r);

// Total term order: by degree, then leftmost-leaf variable, then recursively
// on the left and right children. Returns <0, 0, >0.
int termCmp(TermId a, TermId b);

// Shape-major basis order: shapes compare leaf-first, then by the degree of
// the right subtree, then recursively; equal shapes compare by the
// left-to-right leaf sequence.
int shapeCmp(TermId a, TermId b);
int basisOrderCmp(TermId a, TermId b);  // (shape, leaf sequence)

std::vector<int> leafSeq(TermId t);

// Relabels variables: every leaf v becomes sigma[v].
TermId permuteTerm(TermId t, const std::vector<int>& sigma);
// Replaces every leaf equal to `var` by `repl`.
TermId substVar(TermId t, int var, TermId repl);

// Variable-name alphabet used by the defaults below ("abcdeuvwxyz").
const std::string& defaultVarNames();

// Postfix codec: a letter of `names` pushes a leaf, '.' pops two subtrees and
// pushes their product (left popped second).
TermId termFromPostfix(const std::string& code, const std::string& names = "abcdeuvwxyz");
std::string termToPostfix(TermId t, const std::string& names = "abcdeuvwxyz");

// Fully parenthesized rendering, e.g. "((a*b)*c)*d" (outer parens dropped).
std::string termToString(TermId t, const std::string& names = "abcdeuvwxyz");

struct TermOrder {
    bool operator()(TermId a, TermId b) const { return termCmp(a, b) < 0; }
};

// A finite rational combination of monomials over variables 0..arity-1.
// Multilinearity (each variable exactly once per monomial) is testable, not
// an invariant: expansion intermediates may be non-multilinear.
class FreePoly {
  public:
    int arity = 0;
    std::map<TermId, Rat, TermOrder> terms;

    FreePoly() = default;
    explicit FreePoly(int arity_) : arity(arity_) {}
    static FreePoly variable(int v, int arity);
    static FreePoly fromTerm(TermId t, int arity, const Rat& c = Rat(1));

    bool isZero() const { return terms.empty(); }
    void add(TermId t, const Rat& c);

    FreePoly operator+(const FreePoly& o) const;
    FreePoly operator-(const FreePoly& o) const;
    FreePoly scaled(const Rat& k) const;
    // The bilinear free product: every monomial of *this times every
    // monomial of o.
    FreePoly mul(const FreePoly& o) const;

    FreePoly permuted(const std::vector<int>& sigma) const;
    bool isMultilinear() const;
    int degree() const;  // common monomial degree; -1 when empty or mixed

    bool operator==(const FreePoly& o) const { return terms == o.terms; }

    // Sum of "c*((a*b)*c)" style terms in term order; "" coefficient 1/-1
    // rendered without the "1*".
    std::string toString(const std::string& names = "abcdeuvwxyz") const;
};

}  // namespace rbident
