#include "rbident/term.hpp"

#include <stdexcept>

namespace rbident {

const std::string& defaultVarNames() {
    static const std::string names = "abcdeuvwxyz";
    return names;
}

TermArena& TermArena::instance() {
    static TermArena arena;
    return arena;
}

TermId TermArena::var(int v) {
    if (v < 0) throw std::invalid_argument("negative variable index");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(vars_.size()) <= v) {
        int idx = static_cast<int>(vars_.size());
        TermNode n;
        n.var = idx;
        n.degree = 1;
        n.leftmost = idx;
        nodes_.push_back(n);
        vars_.push_back(static_cast<TermId>(nodes_.size() - 1));
    }
    return vars_[v];
}

TermId TermArena::mul(TermId l, TermId r) {
    std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(l)) << 32) |
                        static_cast<std::uint32_t>(r);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = muls_.find(key);
    if (it != muls_.end()) return it->second;
    TermNode n;
    n.left = l;
    n.right = r;
    n.degree = nodes_[l].degree + nodes_[r].degree;
    n.leftmost = nodes_[l].leftmost;
    nodes_.push_back(n);
    TermId id = static_cast<TermId>(nodes_.size() - 1);
    muls_.emplace(key, id);
    return id;
}

TermId mkVar(int v) { return TermArena::instance().var(v); }
TermId mkMul(TermId l, TermId r) { return TermArena::instance().mul(l, r); }

int termCmp(TermId a, TermId b) {
    if (a == b) return 0;
    const TermNode& na = termNode(a);
    const TermNode& nb = termNode(b);
    if (na.degree != nb.degree) return na.degree < nb.degree ? -1 : 1;
    if (na.var >= 0) return na.var < nb.var ? -1 : 1;  // equal-degree leaves
    if (na.leftmost != nb.leftmost) return na.leftmost < nb.leftmost ? -1 : 1;
    if (int c = termCmp(na.left, nb.left)) return c;
    return termCmp(na.right, nb.right);
}

int shapeCmp(TermId a, TermId b) {
    const TermNode& na = termNode(a);
    const TermNode& nb = termNode(b);
    bool la = na.var >= 0, lb = nb.var >= 0;
    if (la || lb) return la == lb ? 0 : (la ? -1 : 1);  // leaf shape first
    int da = termNode(na.right).degree, db = termNode(nb.right).degree;
    if (da != db) return da < db ? -1 : 1;
    if (int c = shapeCmp(na.left, nb.left)) return c;
    return shapeCmp(na.right, nb.right);
}

int basisOrderCmp(TermId a, TermId b) {
    if (int c = shapeCmp(a, b)) return c;
    std::vector<int> sa = leafSeq(a), sb = leafSeq(b);
    if (sa != sb) return sa < sb ? -1 : 1;
    return 0;
}

std::vector<int> leafSeq(TermId t) {
    std::vector<int> out;
    out.reserve(termDeg(t));
    auto walk = [&](auto&& self, TermId u) -> void {
        const TermNode& n = termNode(u);
        if (n.var >= 0) {
            out.push_back(n.var);
        } else {
            self(self, n.left);
            self(self, n.right);
        }
    };
    walk(walk, t);
    return out;
}

TermId permuteTerm(TermId t, const std::vector<int>& sigma) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) {
        if (n.var >= static_cast<int>(sigma.size())) {
            throw std::invalid_argument("permutation too short for term");
        }
        return mkVar(sigma[n.var]);
    }
    return mkMul(permuteTerm(n.left, sigma), permuteTerm(n.right, sigma));
}

TermId substVar(TermId t, int var, TermId repl) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) return n.var == var ? repl : t;
    return mkMul(substVar(n.left, var, repl), substVar(n.right, var, repl));
}

TermId termFromPostfix(const std::string& code, const std::string& names) {
    std::vector<TermId> stack;
    for (char c : code) {
        if (c == '.') {
            if (stack.size() < 2) throw std::invalid_argument("postfix underflow");
            TermId r = stack.back();
            stack.pop_back();
            TermId l = stack.back();
            stack.pop_back();
            stack.push_back(mkMul(l, r));
        } else {
            std::size_t v = names.find(c);
            if (v == std::string::npos) {
                throw std::invalid_argument(std::string("unknown postfix letter '") + c + "'");
            }
            stack.push_back(mkVar(static_cast<int>(v)));
        }
    }
    if (stack.size() != 1) throw std::invalid_argument("malformed postfix term");
    return stack[0];
}

std::string termToPostfix(TermId t, const std::string& names) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) {
        if (n.var >= static_cast<int>(names.size())) {
            throw std::invalid_argument("variable index out of naming range");
        }
        return std::string(1, names[n.var]);
    }
    return termToPostfix(n.left, names) + termToPostfix(n.right, names) + ".";
}

namespace {
std::string renderTerm(TermId t, const std::string& names, bool outer) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) return std::string(1, names.at(n.var));
    std::string s = renderTerm(n.left, names, false) + "*" + renderTerm(n.right, names, false);
    return outer ? s : "(" + s + ")";
}
}  // namespace

std::string termToString(TermId t, const std::string& names) {
    return renderTerm(t, names, true);
}

FreePoly FreePoly::variable(int v, int arity) {
    return fromTerm(mkVar(v), arity);
}

FreePoly FreePoly::fromTerm(TermId t, int arity, const Rat& c) {
    FreePoly p(arity);
    p.add(t, c);
    return p;
}

void FreePoly::add(TermId t, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

FreePoly FreePoly::operator+(const FreePoly& o) const {
    FreePoly out = *this;
    out.arity = std::max(arity, o.arity);
    for (const auto& [t, c] : o.terms) out.add(t, c);
    return out;
}

FreePoly FreePoly::operator-(const FreePoly& o) const {
    return *this + o.scaled(Rat(-1));
}

FreePoly FreePoly::scaled(const Rat& k) const {
    FreePoly out(arity);
    if (k == 0) return out;
    for (const auto& [t, c] : terms) out.terms.emplace(t, c * k);
    return out;
}

FreePoly FreePoly::mul(const FreePoly& o) const {
    FreePoly out(std::max(arity, o.arity));
    for (const auto& [t1, c1] : terms) {
        for (const auto& [t2, c2] : o.terms) {
            out.add(mkMul(t1, t2), c1 * c2);
        }
    }
    return out;
}

FreePoly FreePoly::permuted(const std::vector<int>& sigma) const {
    if (static_cast<int>(sigma.size()) != arity) {
        throw std::invalid_argument("permutation arity mismatch");
    }
    FreePoly out(arity);
    for (const auto& [t, c] : terms) out.add(permuteTerm(t, sigma), c);
    return out;
}

bool FreePoly::isMultilinear() const {
    for (const auto& [t, c] : terms) {
        std::vector<int> seq = leafSeq(t);
        if (static_cast<int>(seq.size()) != arity) return false;
        std::vector<bool> seen(arity, false);
        for (int v : seq) {
            if (v < 0 || v >= arity || seen[v]) return false;
            seen[v] = true;
        }
    }
    return true;
}

int FreePoly::degree() const {
    int d = -1;
    for (const auto& [t, c] : terms) {
        int td = termDeg(t);
        if (d == -1) {
            d = td;
        } else if (d != td) {
            return -1;
        }
    }
    return d;
}

std::string FreePoly::toString(const std::string& names) const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms) {
        Rat a = c;
        if (first) {
            first = false;
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else if (a < 0) {
            out += " - ";
            a = -a;
        } else {
            out += " + ";
        }
        if (a != 1) out += ratToString(a) + "*";
        std::string body = termToString(t, names);
        if (a != 1 && !isVar(t)) {
            out += "(" + body + ")";
        } else {
            out += body;
        }
    }
    return out;
}

}  // namespace rbident
