#include "rbident/macro.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "rbident/builtins_data.hpp"

namespace rbident {

MacroPtr mkMacroVar(int v) {
    auto e = std::make_shared<MacroExpr>();
    e->kind = MacroExpr::Kind::Var;
    e->var = v;
    return e;
}

MacroPtr mkMacroNode(MacroExpr::Kind k, std::vector<MacroPtr> kids) {
    auto e = std::make_shared<MacroExpr>();
    e->kind = k;
    e->kids = std::move(kids);
    return e;
}

MacroPtr mkMacroCall(std::string name, std::vector<MacroPtr> args) {
    auto e = std::make_shared<MacroExpr>();
    e->kind = MacroExpr::Kind::Call;
    e->callee = std::move(name);
    e->kids = std::move(args);
    return e;
}

MacroPtr mkMacroScale(Rat coef, MacroPtr kid) {
    auto e = std::make_shared<MacroExpr>();
    e->kind = MacroExpr::Kind::Scale;
    e->coef = std::move(coef);
    e->kids = {std::move(kid)};
    return e;
}

// ---- combinators -----------------------------------------------------------------

FreePoly lieOf(const FreePoly& p, const FreePoly& q) { return p.mul(q) - q.mul(p); }
FreePoly jorOf(const FreePoly& p, const FreePoly& q) { return p.mul(q) + q.mul(p); }

FreePoly assocOf(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
    return a.mul(b.mul(c)) - a.mul(b).mul(c);
}

FreePoly jassocOf(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
    return jorOf(a, jorOf(b, c)) - jorOf(jorOf(a, b), c);
}

FreePoly jacOf(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
    return lieOf(lieOf(a, b), c) + lieOf(lieOf(b, c), a) + lieOf(lieOf(c, a), b);
}

FreePoly wordJassoc(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
    return a.mul(b.mul(c)) - a.mul(b).mul(c);
}

FreePoly wordJac(const FreePoly& a, const FreePoly& b, const FreePoly& c) {
    return a.mul(b).mul(c) + b.mul(c).mul(a) + c.mul(a).mul(b);
}

FreePoly wordTortkara(const FreePoly& a, const FreePoly& u, const FreePoly& b,
                      const FreePoly& v) {
    return a.mul(u).mul(b.mul(v)) + a.mul(v).mul(b.mul(u)) -
           wordJac(a, u, b).mul(v) - wordJac(a, v, b).mul(u);
}

FreePoly wordF5(const FreePoly& t1, const FreePoly& t2, const FreePoly& t3,
                const FreePoly& t4, const FreePoly& t5) {
    return wordJassoc(t1, t4, wordJassoc(t2, t5, t3)) -
           wordJassoc(t1, t5, wordJassoc(t2, t4, t3)) +
           wordJassoc(t2, t4, wordJassoc(t1, t5, t3)) -
           wordJassoc(t2, t5, wordJassoc(t1, t4, t3));
}

namespace {

FreePoly expandWordTerm(TermId t, bool jordan) {
    const TermNode& n = termNode(t);
    if (n.var >= 0) return FreePoly::fromTerm(t, n.var + 1);
    FreePoly l = expandWordTerm(n.left, jordan);
    FreePoly r = expandWordTerm(n.right, jordan);
    return jordan ? jorOf(l, r) : lieOf(l, r);
}

}  // namespace

FreePoly expandWords(const FreePoly& w, bool jordan) {
    FreePoly out(w.arity);
    for (const auto& [t, c] : w.terms) {
        out = out + expandWordTerm(t, jordan).scaled(c);
    }
    out.arity = w.arity;
    return out;
}

// ---- builtin prototypes ------------------------------------------------------------

namespace {

FreePoly v(int i, int arity) { return FreePoly::variable(i, arity); }

int permSign(std::vector<int> p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            s = -s;
        }
    }
    return s;
}

std::vector<std::vector<int>> allPerms(int n) {
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

FreePoly wordPolyFromData(const std::vector<data::SignedWord>& words, int arity) {
    FreePoly out(arity);
    for (const auto& w : words) {
        out.add(termFromPostfix(w.postfix), Rat(w.coef));
    }
    return out;
}

}  // namespace

FreePoly rcomProto() {
    FreePoly a = v(0, 3), b = v(1, 3), c = v(2, 3);
    return a.mul(b).mul(c) - a.mul(c).mul(b);
}

FreePoly f4Proto() {
    FreePoly a = v(0, 4), b = v(1, 4), c = v(2, 4), d = v(3, 4);
    return a.mul(lieOf(b, c).mul(d)) - assocOf(a, b, c.mul(d)) + assocOf(a, c, b.mul(d));
}

FreePoly f4pProto() {
    FreePoly a = v(0, 4), b = v(1, 4), c = v(2, 4), d = v(3, 4);
    return assocOf(a, b, lieOf(c, d)) + assocOf(a, c, lieOf(d, b)) +
           assocOf(a, d, lieOf(b, c));
}

FreePoly f5Proto() {
    FreePoly t1 = v(0, 5), t2 = v(1, 5), t3 = v(2, 5), t4 = v(3, 5), t5 = v(4, 5);
    return assocOf(t1, t4, assocOf(t2, t5, t3)) - assocOf(t1, t5, assocOf(t2, t4, t3)) +
           assocOf(t2, t4, assocOf(t1, t5, t3)) - assocOf(t2, t5, assocOf(t1, t4, t3));
}

FreePoly f5plusProto() {
    FreePoly t1 = v(0, 5), t2 = v(1, 5), t3 = v(2, 5), t4 = v(3, 5), t5 = v(4, 5);
    return jassocOf(t1, t4, jassocOf(t2, t5, t3)) - jassocOf(t1, t5, jassocOf(t2, t4, t3)) +
           jassocOf(t2, t4, jassocOf(t1, t5, t3)) - jassocOf(t2, t5, jassocOf(t1, t4, t3));
}

FreePoly tortkaraProto() {
    FreePoly a = v(0, 4), u = v(1, 4), b = v(2, 4), vv = v(3, 4);
    return lieOf(lieOf(a, u), lieOf(b, vv)) + lieOf(lieOf(a, vv), lieOf(b, u)) -
           lieOf(jacOf(a, u, b), vv) - lieOf(jacOf(a, vv, b), u);
}

FreePoly s13Proto() {
    FreePoly a = v(0, 4);
    std::array<FreePoly, 3> rest = {v(1, 4), v(2, 4), v(3, 4)};
    FreePoly out(4);
    for (const auto& p : allPerms(3)) {
        FreePoly t = a.mul(rest[p[0]]).mul(rest[p[1]]).mul(rest[p[2]]);
        out = out + t.scaled(Rat(permSign(p)));
    }
    return out;
}

FreePoly stdskew5Proto() {
    FreePoly a = v(0, 5);
    std::array<FreePoly, 4> rest = {v(1, 5), v(2, 5), v(3, 5), v(4, 5)};
    FreePoly out(5);
    for (const auto& p : allPerms(4)) {
        FreePoly t = a;
        for (int ix : p) t = t.mul(rest[ix]);
        out = out + t.scaled(Rat(permSign(p)));
    }
    return out;
}

FreePoly rsymProto() {
    FreePoly a = v(0, 3), b = v(1, 3), c = v(2, 3);
    return assocOf(a, b, c) - assocOf(a, c, b);
}

FreePoly s13altProto() {
    FreePoly a = v(0, 4), b = v(1, 4), c = v(2, 4), d = v(3, 4);
    return a.mul(lieOf(b, c)).mul(d) + a.mul(lieOf(c, d)).mul(b) +
           a.mul(lieOf(d, b)).mul(c);
}

FreePoly novsub4Proto() {
    FreePoly a = v(0, 4), b = v(1, 4), c = v(2, 4), d = v(3, 4);
    struct Entry {
        int k;
        FreePoly p;
    };
    std::vector<Entry> terms;
    auto J = [](const FreePoly& x, const FreePoly& y) { return jorOf(x, y); };
    terms.push_back({-2, J(a, c).mul(b.mul(d))});
    terms.push_back({2, J(a, d).mul(b.mul(c))});
    terms.push_back({2, J(b, c).mul(a.mul(d))});
    terms.push_back({-2, J(b, d).mul(a.mul(c))});
    terms.push_back({-2, a.mul(b.mul(c)).mul(d)});
    terms.push_back({2, a.mul(b.mul(d)).mul(c)});
    terms.push_back({2, b.mul(a.mul(c)).mul(d)});
    terms.push_back({-2, b.mul(a.mul(d)).mul(c)});
    terms.push_back({-2, c.mul(a.mul(d)).mul(b)});
    terms.push_back({2, c.mul(b.mul(d)).mul(a)});
    terms.push_back({2, d.mul(a.mul(c)).mul(b)});
    terms.push_back({-2, d.mul(b.mul(c)).mul(a)});
    terms.push_back({2, a.mul(c).mul(d).mul(b)});
    terms.push_back({-2, a.mul(d).mul(c).mul(b)});
    terms.push_back({-2, b.mul(c).mul(d).mul(a)});
    terms.push_back({2, b.mul(d).mul(c).mul(a)});
    terms.push_back({-1, a.mul(b).mul(c).mul(d)});
    terms.push_back({1, a.mul(b).mul(d).mul(c)});
    terms.push_back({-1, a.mul(c).mul(b).mul(d)});
    terms.push_back({1, a.mul(d).mul(b).mul(c)});
    terms.push_back({1, b.mul(a).mul(c).mul(d)});
    terms.push_back({-1, b.mul(a).mul(d).mul(c)});
    terms.push_back({1, b.mul(c).mul(a).mul(d)});
    terms.push_back({-1, b.mul(d).mul(a).mul(c)});
    terms.push_back({1, c.mul(a).mul(b).mul(d)});
    terms.push_back({-1, c.mul(b).mul(a).mul(d)});
    terms.push_back({-1, d.mul(a).mul(b).mul(c)});
    terms.push_back({1, d.mul(b).mul(a).mul(c)});
    FreePoly out(4);
    for (const auto& e : terms) out = out + e.p.scaled(Rat(e.k));
    return out;
}

FreePoly prop5diaProto() {
    FreePoly a = v(0, 5), b = v(1, 5), c = v(2, 5), d = v(3, 5), e = v(4, 5);
    struct Entry {
        int k;
        FreePoly p;
    };
    std::vector<Entry> terms;
    terms.push_back({1, a.mul(b.mul(c)).mul(lieOf(d, e))});
    terms.push_back({-1, b.mul(a.mul(lieOf(d, e)).mul(c))});
    terms.push_back({1, b.mul(d.mul(lieOf(c, a.mul(e))))});
    terms.push_back({1, b.mul(a.mul(e).mul(lieOf(c, d)))});
    terms.push_back({1, b.mul(lieOf(d, a.mul(e)).mul(c))});
    terms.push_back({-1, b.mul(a.mul(d).mul(lieOf(c, e)))});
    terms.push_back({-1, b.mul(e.mul(lieOf(c, a.mul(d))))});
    terms.push_back({-1, b.mul(lieOf(e, a.mul(d)).mul(c))});
    terms.push_back({1, d.mul(lieOf(a.mul(e), b.mul(c)))});
    terms.push_back({-1, e.mul(lieOf(a.mul(d), b.mul(c)))});
    terms.push_back({1, a.mul(lieOf(e, b.mul(c))).mul(d)});
    terms.push_back({-1, a.mul(lieOf(d, b.mul(c))).mul(e)});
    FreePoly out(5);
    for (const auto& ent : terms) out = out + ent.p.scaled(Rat(ent.k));
    return out;
}

FreePoly gLie4Word(int i) {
    const auto& defs = data::gLie4Defs();
    if (i < 1 || i > static_cast<int>(defs.size())) {
        throw std::out_of_range("gLie4Word index");
    }
    return wordPolyFromData(defs[i - 1], 4);
}

FreePoly gRcom4Plain(int i) {
    const auto& defs = data::gRcom4Defs();
    if (i < 1 || i > static_cast<int>(defs.size())) {
        throw std::out_of_range("gRcom4Plain index");
    }
    return wordPolyFromData(defs[i - 1], 4);
}

FreePoly gJor5Word(int i) {
    const auto& defs = data::gJor5Defs();
    if (i < 1 || i > static_cast<int>(defs.size())) {
        throw std::out_of_range("gJor5Word index");
    }
    return wordPolyFromData(defs[i - 1], 5);
}

// ---- table and expansion -------------------------------------------------------

const MacroTable& MacroTable::builtins() {
    static const MacroTable table = [] {
        MacroTable t;
        t.define({"rcom", 3, rcomProto()});
        t.define({"f4", 4, f4Proto()});
        t.define({"f4p", 4, f4pProto()});
        t.define({"f5", 5, f5Proto()});
        t.define({"f5plus", 5, f5plusProto()});
        t.define({"tortkara", 4, tortkaraProto()});
        t.define({"s13", 4, s13Proto()});
        t.define({"stdskew5", 5, stdskew5Proto()});
        t.define({"rsym", 3, rsymProto()});
        t.define({"s13alt", 4, s13altProto()});
        t.define({"novsub4", 4, novsub4Proto()});
        t.define({"prop5dia", 5, prop5diaProto()});
        for (int i = 1; i <= 3; ++i) {
            t.define({"g_lie4_" + std::to_string(i), 4,
                      expandWords(gLie4Word(i), /*jordan=*/false)});
        }
        for (int i = 1; i <= 12; ++i) {
            t.define({"g_rcom4_" + std::to_string(i), 4, gRcom4Plain(i)});
        }
        for (int i = 1; i <= 20; ++i) {
            t.define({"g_jor5_" + std::to_string(i), 5,
                      expandWords(gJor5Word(i), /*jordan=*/true)});
        }
        return t;
    }();
    return table;
}

const MacroDef* MacroTable::find(const std::string& name) const {
    auto it = defs_.find(name);
    return it == defs_.end() ? nullptr : &it->second;
}

void MacroTable::define(MacroDef def) {
    if (defs_.count(def.name)) {
        throw std::invalid_argument("macro '" + def.name + "' already defined");
    }
    order_.push_back(def.name);
    defs_.emplace(def.name, std::move(def));
}

FreePoly instantiate(const FreePoly& proto, const std::vector<FreePoly>& args) {
    int arity = 0;
    for (const auto& a : args) arity = std::max(arity, a.arity);
    FreePoly out(arity);
    auto evalTerm = [&](auto&& self, TermId t) -> FreePoly {
        const TermNode& n = termNode(t);
        if (n.var >= 0) {
            if (n.var >= static_cast<int>(args.size())) {
                throw std::invalid_argument("macro argument missing");
            }
            return args[n.var];
        }
        return self(self, n.left).mul(self(self, n.right));
    };
    for (const auto& [t, c] : proto.terms) {
        out = out + evalTerm(evalTerm, t).scaled(c);
    }
    out.arity = arity;
    return out;
}

FreePoly expand(const MacroExpr& e, const MacroTable& table, int arity) {
    switch (e.kind) {
        case MacroExpr::Kind::Var:
            return FreePoly::variable(e.var, arity);
        case MacroExpr::Kind::Mul:
            return expand(*e.kids[0], table, arity).mul(expand(*e.kids[1], table, arity));
        case MacroExpr::Kind::Lie:
            return lieOf(expand(*e.kids[0], table, arity), expand(*e.kids[1], table, arity));
        case MacroExpr::Kind::Jordan:
            return jorOf(expand(*e.kids[0], table, arity), expand(*e.kids[1], table, arity));
        case MacroExpr::Kind::Assoc:
            return assocOf(expand(*e.kids[0], table, arity), expand(*e.kids[1], table, arity),
                           expand(*e.kids[2], table, arity));
        case MacroExpr::Kind::JAssoc:
            return jassocOf(expand(*e.kids[0], table, arity), expand(*e.kids[1], table, arity),
                            expand(*e.kids[2], table, arity));
        case MacroExpr::Kind::Jac:
            return jacOf(expand(*e.kids[0], table, arity), expand(*e.kids[1], table, arity),
                         expand(*e.kids[2], table, arity));
        case MacroExpr::Kind::Scale:
            return expand(*e.kids[0], table, arity).scaled(e.coef);
        case MacroExpr::Kind::Sum: {
            FreePoly out(arity);
            for (const auto& k : e.kids) out = out + expand(*k, table, arity);
            out.arity = arity;
            return out;
        }
        case MacroExpr::Kind::Call: {
            const MacroDef* def = table.find(e.callee);
            if (!def) throw std::invalid_argument("unbound macro name '" + e.callee + "'");
            if (def->arity != static_cast<int>(e.kids.size())) {
                throw std::invalid_argument(
                    "macro '" + e.callee + "' expects " + std::to_string(def->arity) +
                    " arguments, got " + std::to_string(e.kids.size()));
            }
            std::vector<FreePoly> args;
            args.reserve(e.kids.size());
            for (const auto& k : e.kids) args.push_back(expand(*k, table, arity));
            FreePoly out = instantiate(def->proto, args);
            out.arity = arity;
            return out;
        }
    }
    throw std::logic_error("unhandled macro kind");
}

}  // namespace rbident
