#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rbident/macro.hpp"
#include "rbident/term.hpp"

namespace rbident {

// Syntax/semantic error in DSL text, with 1-based position.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line(line),
          col(col) {}
    // Semantic error with no usable source position (e.g. raised during
    // macro expansion).
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), line(0), col(0) {}
    int line;
    int col;
};

// One parsed definition: NAME(vars) := expr
struct ParsedDef {
    std::string name;
    std::vector<std::string> vars;
    MacroPtr body;
};

// Parses a whole DSL source: one or more definitions, each optionally
// terminated by ';'.
std::vector<ParsedDef> parseDefs(const std::string& text);

// Parses a bare expression; variable names get indices in first-appearance
// order and are reported through varNamesOut.
MacroPtr parseExpr(const std::string& text, std::vector<std::string>& varNamesOut);

// A compiled DSL source: every definition expanded on top of the builtins.
struct CompiledFile {
    MacroTable table;              // builtins + file definitions
    std::string targetName;        // last definition
    std::vector<std::string> targetVars;
    FreePoly target;
};

CompiledFile compileFile(const std::string& text);

// Expands an inline expression against the builtin table.
FreePoly compileExpr(const std::string& text, std::vector<std::string>* varNamesOut = nullptr);

}  // namespace rbident
