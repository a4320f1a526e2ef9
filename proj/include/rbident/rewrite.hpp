#pragma once

#include <utility>
#include <vector>

#include "rbident/term.hpp"

namespace rbident {

// Normal forms over the free magma, used to work modulo an (anti)symmetry of
// the product or modulo right-argument commutativity.
enum class NormalMode {
    None,      // terms kept as-is
    Comm,      // product treated as commutative
    Anticomm,  // product treated as anticommutative (sign-tracking)
    Rcom,      // right arguments of nested left products commute
};

// Commutative representative: at every node the larger-degree child goes left;
// equal degrees put the term-order-smaller child left.
TermId commSort(TermId t);

// Anticommutative representative with the accumulated sign (+1 or -1).
std::pair<int, TermId> anticommSort(TermId t);

// Representative modulo (a*b)*c = (a*c)*b: each left spine is rebuilt with its
// (recursively normalized) factors sorted by term order.
TermId rcomSort(TermId t);

// Applies the chosen normal form to every term of a polynomial, combining
// coefficients of coinciding representatives.
FreePoly normalForm(const FreePoly& p, NormalMode mode);

// A small rewriting system of four explicit ordering rules on products of
// generators (leaf patterns only):
//   1.  y*x          -> x*y            when var(x) < var(y)
//   2.  (i*j)*(s*k)  -> (s*k)*(i*j)    when i > s, i < j, s < k   (all leaves)
//   3.  (x*(y*z))*(u*v)     -> ((y*z)*x)*(u*v)                    (all leaves)
//   4.  ((x*(y*z))*u)*v     -> (((y*z)*x)*u)*v                    (all leaves)
// Each rule is a single commSort step, so the system is sound for the
// commutative quotient but covers only the listed shapes.

// All one-step rewrites of t: each entry is t with one rule applied at one
// position.
std::vector<TermId> orderingRuleSteps(TermId t);

// Fixpoint of repeatedly applying the first available step.
TermId orderingRulesFixpoint(TermId t);

}  // namespace rbident
