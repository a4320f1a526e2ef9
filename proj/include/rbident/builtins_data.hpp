#pragma once
// Embedded data tables: builtin identity definitions, the reference sample
// matrix rows, published combination lists, and canonical basis orderings.
// Generated file -- do not edit by hand.
#include <string>
#include <vector>

namespace rbident::data {

// A signed free monomial in postfix encoding: a letter in "abcde" pushes a
// leaf, '.' pops two subtrees and pushes their product (left then right).
struct SignedWord {
    int coef;
    const char* postfix;
};

// One term of a published combination: integer coefficient and the argument
// letters (in "abcde") fed to the generating identity.
struct ComboTerm {
    int coef;
    const char* args;
};

struct Decomp {
    int mult;                       // target multiplier: mult * g == combo
    std::vector<ComboTerm> terms;
};

struct TableRow {
    int b[4];
    int c[4];
    int d[4];
    int coeffs[15];                 // expected fourth-component coefficients
};

struct Relation {
    int lambda;                     // 1-based dependent coordinate index
    int coef[15];                   // expressed over the free coordinates
};

const std::vector<std::vector<SignedWord>>& gLie4Defs();     // 3 generators
const std::vector<std::vector<SignedWord>>& gRcom4Defs();    // 12 generators
const std::vector<std::vector<SignedWord>>& gJor5Defs();     // 20 generators

const std::vector<std::vector<ComboTerm>>& gLie4PrintedCombos();   // tortkara args
const std::vector<std::vector<ComboTerm>>& gRcom4PrintedCombos();  // f4 args
const std::vector<Decomp>& gJor5PrintedDecomps();                  // f5 args

extern const int kTable1A[4];                      // fixed first sample vector
const std::vector<TableRow>& table1Rows();         // 12 rows
extern const int kComp3Row1[15];                   // third-component row 1
const std::vector<Relation>& deg4Relations();      // 12 dependent coordinates

const std::vector<std::string>& basisAnticomm4();  // 15 canonical Lie words
const std::vector<std::string>& basisRcom4();      // 64 canonical monomials
const std::vector<std::string>& basisComm5();      // 105 canonical Jordan words

}  // namespace rbident::data
