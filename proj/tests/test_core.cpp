#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbident/macro.hpp"
#include "rbident/matrix.hpp"
#include "rbident/model.hpp"
#include "rbident/parse.hpp"
#include "rbident/qpoly.hpp"
#include "rbident/rat.hpp"
#include "rbident/rewrite.hpp"
#include "rbident/term.hpp"
#include "rbident/verify.hpp"

#include "frozen.hpp"

using namespace rbident;

static TermId T(const std::string& postfix) { return termFromPostfix(postfix); }

TEST_CASE("rational serialization and binomials") {
    CHECK(ratToString(Rat(-7, 3)) == "-7/3");
    CHECK(ratToString(Rat(5)) == "5");
    CHECK(ratFromString("22/7") == Rat(22, 7));
    CHECK(ratFromString("-4") == Rat(-4));
    CHECK_THROWS_AS(ratFromString("1/0"), std::invalid_argument);
    CHECK(binomial(10, 3) == Rat(120));
    CHECK(binomial(4, 5) == Rat(0));
    CHECK(binomial(0, 0) == Rat(1));
}

TEST_CASE("univariate polynomial arithmetic and formatting") {
    QPoly p = QPoly::monomial(12, Rat(1, 88704));
    CHECK(p.toString() == "1/88704*x^12");
    QPoly q = QPoly::monomial(18, Rat(-4537, 6107270400LL));
    CHECK(q.toString() == "-4537/6107270400*x^18");
    CHECK(QPoly().toString() == "0");
    CHECK(QPoly::fromString("1/88704*x^12") == p);

    QPoly a = QPoly::monomial(1, Rat(2)) + QPoly::constant(Rat(3));
    QPoly b = QPoly::monomial(2);
    CHECK((a * b).toString() == "3*x^2 + 2*x^3");
    CHECK(a.derivative().toString() == "2");
    CHECK(b.integrate(2).toString() == "1/12*x^4");
    CHECK((a - a).isZero());
}

TEST_CASE("term interning, codec and ordering") {
    TermId ab = T("ab.");
    CHECK(ab == T("ab."));  // interned
    CHECK(termToPostfix(ab) == "ab.");
    CHECK(termToString(T("ab.c.")) == "(a*b)*c");
    CHECK(termToString(T("abc..")) == "a*(b*c)");
    CHECK(termDeg(T("ab.cd..")) == 4);

    // degree dominates; equal-degree leaves compare by variable
    CHECK(termCmp(T("a"), T("ab.")) < 0);
    CHECK(termCmp(T("a"), T("b")) < 0);
    CHECK(termCmp(T("ab."), T("ba.")) < 0);
}

TEST_CASE("free polynomials are multilinear-aware") {
    FreePoly rc = rcomProto();
    CHECK(rc.arity == 3);
    CHECK(rc.degree() == 3);
    CHECK(rc.isMultilinear());
    CHECK(rc.toString() == "(a*b)*c - (a*c)*b");

    FreePoly sw = rc.permuted({0, 2, 1});  // swap b and c
    CHECK(sw == rc.scaled(Rat(-1)));

    FreePoly notml = FreePoly::fromTerm(T("aa."), 2);
    CHECK_FALSE(notml.isMultilinear());
}

TEST_CASE("commutative and anticommutative normal forms") {
    // ba -> ab under the commutative sort
    CHECK(commSort(T("ba.")) == T("ab."));
    // lighter factors bubble left: (c)(ab) -> (ab)c? degree(l)=1 < degree(r)=2 swaps
    CHECK(commSort(T("cab..")) == T("ab.c."));

    auto [sign, t] = anticommSort(T("ba."));
    CHECK(sign == -1);
    CHECK(t == T("ab."));

    FreePoly w = FreePoly::fromTerm(T("ba."), 2);
    FreePoly nf = normalForm(w, NormalMode::Anticomm);
    CHECK(nf == FreePoly::fromTerm(T("ab."), 2, Rat(-1)));

    // right-comb association is preserved by the sort, only factor order moves
    CHECK(rcomSort(T("ac.b.")) == T("ab.c."));
    CHECK(rcomSort(T("ab.c.")) == T("ab.c."));
}

TEST_CASE("ordering rewrite rules reach the sorted form") {
    // Rule 1 at the root
    auto steps = orderingRuleSteps(T("ba."));
    REQUIRE(steps.size() >= 1);
    CHECK(steps[0] == T("ab."));
    // Fixpoint of the rules agrees with the one-shot sort on leaf products
    CHECK(orderingRulesFixpoint(T("ba.")) == commSort(T("ba.")));
    CHECK(orderingRulesFixpoint(T("cb.a.")) == orderingRulesFixpoint(T("bc.a.")));
}

TEST_CASE("builtin identity shapes") {
    CHECK(f4Proto().arity == 4);
    CHECK(f4Proto().degree() == 4);
    CHECK(f4pProto().arity == 4);
    CHECK(f5Proto().arity == 5);
    CHECK(f5plusProto().arity == 5);
    CHECK(tortkaraProto().arity == 4);
    CHECK(rsymProto().toString() == "a*(b*c) - a*(c*b) - (a*b)*c + (a*c)*b");
    CHECK(s13Proto().terms.size() == 6);
    CHECK(stdskew5Proto().terms.size() == 24);
    // 28 table lines, the first four carrying a two-term symmetrized factor
    CHECK(novsub4Proto().terms.size() == 32);
    // 12 table lines, each with one bracket
    CHECK(prop5diaProto().terms.size() == 24);
    for (const auto& p : {f4Proto(), f4pProto(), tortkaraProto(), s13Proto(), novsub4Proto()})
        CHECK(p.isMultilinear());
}

TEST_CASE("expression parsing matches builders") {
    CHECK(compileExpr("(a*b)*c - (a*c)*b") == rcomProto());
    CHECK(compileExpr("[a,b]") ==
          lieOf(FreePoly::variable(0, 2), FreePoly::variable(1, 2)));
    CHECK(compileExpr("assoc(a,b,c) - assoc(a,c,b)") == rsymProto());
    CHECK(compileExpr("2*(a*b) - (a*b) - a*b").isZero());
    CHECK_THROWS_AS(compileExpr("a*b*c"), ParseError);
    CHECK_THROWS_AS(compileExpr("f4(a,b,c)"), ParseError);  // arity mismatch

    CompiledFile f = compileFile(
        "# right-commutativity\n"
        "myrc(a,b,c) := (a*b)*c - (a*c)*b;\n"
        "doubled(a,b,c) := 2*myrc(a,b,c);\n");
    CHECK(f.targetName == "doubled");
    CHECK(f.target == rcomProto().scaled(Rat(2)));
}

TEST_CASE("exact elimination, kernels and solving") {
    RatMat m = {{Rat(2), Rat(4), Rat(2)}, {Rat(1), Rat(2), Rat(3)}};
    RrefResult r = rref(m);
    REQUIRE(r.pivots == std::vector<int>{0, 2});
    CHECK(r.rows[0] == RatVec{Rat(1), Rat(2), Rat(0)});
    CHECK(r.rows[1] == RatVec{Rat(0), Rat(0), Rat(1)});

    RatMat ker = kernelBasis(r, 3);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0] == RatVec{Rat(-2), Rat(1), Rat(0)});

    CanonicalKernel ck = canonicalKernel(m, 3);
    REQUIRE(ck.rows.size() == 1);
    CHECK(ck.rows[0] == RatVec{Rat(1), Rat(-1, 2), Rat(0)});
    CHECK(ck.freeParams == std::vector<int>{0});

    Echelon ech;
    CHECK(ech.add({Rat(1), Rat(1), Rat(0)}));
    CHECK(ech.add({Rat(0), Rat(1), Rat(1)}));
    CHECK_FALSE(ech.add({Rat(1), Rat(2), Rat(1)}));
    CHECK(ech.rank() == 2);

    auto sol = solveExact({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}}, {Rat(3), Rat(2)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rat(1));
    CHECK((*sol)[1] == Rat(2));
    CHECK_FALSE(solveExact({{Rat(1), Rat(0)}}, {Rat(0), Rat(1)}).has_value());
}

static SeqVal seq(std::initializer_list<int> xs) {
    SeqVal v;
    for (int x : xs) v.v.emplace_back(x);
    return v;
}

TEST_CASE("sequence model: base, operator and derived product") {
    Model m = seqModel(4);
    CHECK(m.weight == Rat(-1));
    ModelValue zb = m.base(seq({0, 1, 0, 1}), seq({1, 0, 1, 0}));
    CHECK(isZeroValue(zb));
    ModelValue rp = m.rbo(seq({1, 0, 1, 0}));
    CHECK(std::get<SeqVal>(rp) == seq({1, 1, 2, 2}));
    ModelValue pr = m.product(seq({0, 1, 0, 1}), seq({1, 0, 1, 0}));
    CHECK(std::get<SeqVal>(pr) == seq({0, 1, 0, 2}));

    // operator law at weight -1, also after rescaling
    std::vector<std::pair<ModelValue, ModelValue>> pairs = {
        {seq({1, 2, 3, 4}), seq({0, 1, 0, 1})},
        {seq({-1, 0, 2, -3}), seq({2, 2, 1, 1})},
    };
    CHECK(rboLawCheck(m, pairs).holds);
    Model m2 = rescaleRbo(m, Rat(2));
    CHECK(m2.weight == Rat(-2));
    CHECK(rboLawCheck(m2, pairs).holds);
}

TEST_CASE("polynomial model closed forms on monomials") {
    Model s01 = parseModelSpec("poly:mul=star,k=0,n=1");
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
            ModelValue v = s01.product(QPoly::monomial(i), QPoly::monomial(j));
            QPoly want = QPoly::monomial(i + j + 1, Rat(i + j + 2) / Rat((i + 1) * (j + 1)));
            CHECK(std::get<QPoly>(v) == want);
        }

    Model b1 = parseModelSpec("poly:mul=bracket,n=1");
    Model b2 = parseModelSpec("poly:mul=bracket,n=2");
    Model b3 = parseModelSpec("poly:mul=bracket,n=3");
    auto x = [](int e) { return ModelValue(QPoly::monomial(e)); };
    CHECK(valueToString(b1.product(x(3), x(4))) == frozen::kBracket1X3X4);
    CHECK(valueToString(b2.product(x(3), x(4))) == frozen::kBracket2X3X4);
    CHECK(valueToString(b3.product(x(3), x(4))) == frozen::kBracket3X3X4);

    // brackets are antisymmetric
    CHECK(isZeroValue(addValues(b2.product(x(5), x(2)), b2.product(x(2), x(5)))));

    Model ci = parseModelSpec("poly:mul=circint");
    CHECK(rboLawCheck(ci, {{x(0), x(1)}, {x(2), x(3)}, {x(1), x(4)}}).holds);
}

TEST_CASE("triangular basis model") {
    EpsSpec es;
    es.m = 3;
    es.eps = {Rat(2), Rat(3)};
    Model m = epsModel(es);
    BasisVal e2{{Rat(0), Rat(1), Rat(0)}};
    BasisVal e1{{Rat(1), Rat(0), Rat(0)}};
    ModelValue p = m.product(e2, e1);
    CHECK(std::get<BasisVal>(p).v == std::vector<Rat>{Rat(0), Rat(2), Rat(0)});
    CHECK(isZeroValue(m.product(e1, e2)));
    EpsSpec seeded = epsSpecFromSeed(6, 7);
    CHECK(seeded.eps.size() == 5);
    for (const Rat& e : seeded.eps) CHECK(e != 0);
}

TEST_CASE("identity checking over models") {
    Model sq = seqModel(6);
    Verdict v = checkIdentity(rcomProto(), sq, RandomVectors{30, 42, 3});
    CHECK(v.holds);
    CHECK(v.samples == 30);

    Model s20 = parseModelSpec("poly:mul=star,k=2,n=0");
    Verdict vf4 = checkIdentity(f4Proto(), s20, MonomialGrid{4, 0});
    REQUIRE_FALSE(vf4.holds);
    CHECK(valueToString(*vf4.value) == frozen::kF4FirstViolationValue);
    REQUIRE(vf4.witness.has_value());
    for (size_t i = 0; i < vf4.witness->size(); ++i) {
        auto d = std::get<QPoly>((*vf4.witness)[i]).degree();
        REQUIRE(d.has_value());
        CHECK(*d == frozen::kF4FirstViolation[i]);
    }

    Verdict vplus = checkIdentity(f5plusProto(), s20, MonomialGrid{4, 0});
    REQUIRE_FALSE(vplus.holds);
    CHECK(vplus.samples == frozen::kF5PlusZeroBefore);
    CHECK(valueToString(*vplus.value) == frozen::kF5PlusFirstViolationValue);

    // headline value at (1, x, x^2, x^3, x^4)
    std::vector<ModelValue> assign;
    for (int e = 0; e <= 4; ++e) assign.emplace_back(QPoly::monomial(e));
    ModelValue head = evalPoly(f5plusProto(), s20, assign);
    CHECK(valueToString(head) == frozen::kF5PlusValue);

    auto cx = findCounterexample(f4Proto(), s20, 10000, 42);
    REQUIRE(cx.has_value());
    CHECK(valueToString(cx->second) == frozen::kF4FirstViolationValue);
}

TEST_CASE("evidence bounds") {
    Model s01 = parseModelSpec("poly:mul=star,k=0,n=1");
    auto b3 = evidenceBound(rsymProto(), s01);
    REQUIRE(b3.has_value());
    CHECK(*b3 == frozen::kEvidenceBoundDeg3Star01);

    Model plain = parseModelSpec("poly:mul=plain");
    auto b4 = evidenceBound(f4Proto(), plain);
    REQUIRE(b4.has_value());
    CHECK(*b4 == frozen::kEvidenceBoundDeg4Plain);

    CHECK(evidenceBound(FreePoly{}, s01) == 0);
    CHECK_FALSE(evidenceBound(rsymProto(), seqModel(4)).has_value());

    // a proof-grade holds: rsym over the zinbiel-family grid
    Verdict v = checkIdentity(rsymProto(), s01, MonomialGrid{6, 0});
    CHECK(v.holds);
    CHECK(v.proofGrade);
}

TEST_CASE("model catalog and spec strings") {
    CHECK_THROWS_AS(parseModelSpec("poly:mul=quux"), std::invalid_argument);
    CHECK_THROWS_AS(parseModelSpec("seq:N=6,bogus=1"), std::invalid_argument);
    CHECK(parseModelSpec("seq:N=6").dim == 6);
    CHECK(parseModelSpec("eps:m=6,seed=7").dim == 6);
    CHECK(modelCatalog().size() >= 9);
}
