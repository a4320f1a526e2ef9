#include "rbident/rewrite.hpp"

#include <algorithm>

namespace rbident {

TermId commSort(TermId t) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) return t;
    TermId l = commSort(n.left);
    TermId r = commSort(n.right);
    if (termDeg(l) < termDeg(r) || (termDeg(l) == termDeg(r) && termCmp(l, r) > 0)) {
        std::swap(l, r);
    }
    return mkMul(l, r);
}

std::pair<int, TermId> anticommSort(TermId t) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) return {1, t};
    auto [sl, l] = anticommSort(n.left);
    auto [sr, r] = anticommSort(n.right);
    int s = sl * sr;
    if (termDeg(l) < termDeg(r) || (termDeg(l) == termDeg(r) && termCmp(l, r) > 0)) {
        std::swap(l, r);
        s = -s;
    }
    return {s, mkMul(l, r)};
}

TermId rcomSort(TermId t) {
    if (isVar(t)) return t;
    std::vector<TermId> factors;
    TermId h = t;
    while (!isVar(h)) {
        factors.push_back(termNode(h).right);
        h = termNode(h).left;
    }
    std::reverse(factors.begin(), factors.end());
    for (TermId& f : factors) f = rcomSort(f);
    std::stable_sort(factors.begin(), factors.end(),
                     [](TermId a, TermId b) { return termCmp(a, b) < 0; });
    TermId out = h;
    for (TermId f : factors) out = mkMul(out, f);
    return out;
}

FreePoly normalForm(const FreePoly& p, NormalMode mode) {
    FreePoly out(p.arity);
    for (const auto& [t, c] : p.terms) {
        switch (mode) {
            case NormalMode::None:
                out.add(t, c);
                break;
            case NormalMode::Comm:
                out.add(commSort(t), c);
                break;
            case NormalMode::Anticomm: {
                auto [s, u] = anticommSort(t);
                out.add(u, s > 0 ? c : -c);
                break;
            }
            case NormalMode::Rcom:
                out.add(rcomSort(t), c);
                break;
        }
    }
    return out;
}

namespace {

bool isLeafPair(TermId t) {
    const TermNode& n = termNode(t);
    return n.var < 0 && isVar(n.left) && isVar(n.right);
}

// matches x*(y*z) with all leaves; result is (y*z)*x
bool isLeafLeftOfPair(TermId t) {
    const TermNode& n = termNode(t);
    return n.var < 0 && isVar(n.left) && isLeafPair(n.right);
}

// root-level matches only; returns rewritten roots
void rootSteps(TermId t, std::vector<TermId>& out) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) return;
    TermId l = n.left, r = n.right;
    // rule 1
    if (isVar(l) && isVar(r) && termNode(r).var < termNode(l).var) {
        out.push_back(mkMul(r, l));
    }
    // rule 2
    if (isLeafPair(l) && isLeafPair(r)) {
        int i = termNode(termNode(l).left).var, j = termNode(termNode(l).right).var;
        int s = termNode(termNode(r).left).var, k = termNode(termNode(r).right).var;
        if (i > s && i < j && s < k) out.push_back(mkMul(r, l));
    }
    // rule 3
    if (isLeafLeftOfPair(l) && isLeafPair(r)) {
        const TermNode& ln = termNode(l);
        out.push_back(mkMul(mkMul(ln.right, ln.left), r));
    }
    // rule 4
    if (isVar(r) && !isVar(l)) {
        const TermNode& ln = termNode(l);
        if (isVar(ln.right) && isLeafLeftOfPair(ln.left)) {
            const TermNode& lln = termNode(ln.left);
            out.push_back(mkMul(mkMul(mkMul(lln.right, lln.left), ln.right), r));
        }
    }
}

}  // namespace

std::vector<TermId> orderingRuleSteps(TermId t) {
    std::vector<TermId> out;
    const TermNode& n = termNode(t);
    if (n.var >= 0) return out;
    rootSteps(t, out);
    for (TermId l2 : orderingRuleSteps(n.left)) out.push_back(mkMul(l2, n.right));
    for (TermId r2 : orderingRuleSteps(n.right)) out.push_back(mkMul(n.left, r2));
    return out;
}

TermId orderingRulesFixpoint(TermId t) {
    for (;;) {
        std::vector<TermId> steps = orderingRuleSteps(t);
        if (steps.empty()) return t;
        t = steps.front();
    }
}

}  // namespace rbident
