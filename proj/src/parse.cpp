#include "rbident/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <utility>

namespace rbident {

namespace {

struct Token {
    enum class Kind { Ident, Number, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { next(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        next();
        return t;
    }

  private:
    void next() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        tok_ = Token{Token::Kind::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        tok_.line = line_;
        tok_.col = col_;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Kind::Ident;
            tok_.text = src_.substr(start, pos_ - start);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Token::Kind::Number;
            tok_.text = src_.substr(start, pos_ - start);
        } else {
            tok_.kind = Token::Kind::Punct;
            tok_.text = std::string(1, c);
            ++pos_;
            ++col_;
        }
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.col);
}

// Variable scope: either a fixed declared list (definitions) or an
// first-appearance-ordered accumulator (inline expressions).
struct VarScope {
    std::vector<std::string> names;
    bool open = false;  // accumulate unseen names?

    std::optional<int> lookup(const std::string& n) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == n) return static_cast<int>(i);
        }
        if (!open) return std::nullopt;
        names.push_back(n);
        return static_cast<int>(names.size()) - 1;
    }
};

class Parser {
  public:
    Parser(Lexer& lx, VarScope& scope) : lx_(lx), scope_(scope) {}

    MacroPtr parseExpression() {
        std::vector<MacroPtr> parts;
        bool negate = false;
        if (isPunct("+")) {
            lx_.take();
        } else if (isPunct("-")) {
            lx_.take();
            negate = true;
        }
        parts.push_back(signedProd(negate));
        while (isPunct("+") || isPunct("-")) {
            bool minus = lx_.take().text == "-";
            parts.push_back(signedProd(minus));
        }
        if (parts.size() == 1) return parts[0];
        return mkMacroNode(MacroExpr::Kind::Sum, std::move(parts));
    }

  private:
    bool isPunct(const char* p) const {
        return lx_.peek().kind == Token::Kind::Punct && lx_.peek().text == p;
    }

    void expectPunct(const char* p, const std::string& what) {
        if (!isPunct(p)) fail(lx_.peek(), "expected '" + std::string(p) + "' " + what);
        lx_.take();
    }

    MacroPtr signedProd(bool negate) {
        MacroPtr p = parseProd();
        return negate ? mkMacroScale(Rat(-1), std::move(p)) : p;
    }

    MacroPtr parseProd() {
        std::optional<Rat> coef;
        if (lx_.peek().kind == Token::Kind::Number) {
            Token num = lx_.take();
            Rat c = ratFromString(num.text);
            if (isPunct("/")) {
                lx_.take();
                if (lx_.peek().kind != Token::Kind::Number) {
                    fail(lx_.peek(), "expected denominator");
                }
                Rat den = ratFromString(lx_.take().text);
                if (den == 0) fail(num, "zero denominator");
                c /= den;
            }
            coef = c;
            if (isPunct("*")) lx_.take();  // optional '*' after a coefficient
        }
        MacroPtr p = parseAtom();
        if (isPunct("*")) {
            lx_.take();
            MacroPtr q = parseAtom();
            p = mkMacroNode(MacroExpr::Kind::Mul, {std::move(p), std::move(q)});
            if (isPunct("*")) {
                fail(lx_.peek(),
                     "product is non-associative; parenthesize chains like (a*b)*c");
            }
        }
        if (coef) return mkMacroScale(*coef, std::move(p));
        return p;
    }

    std::vector<MacroPtr> parseArgs(std::size_t n, const std::string& what) {
        expectPunct("(", "after " + what);
        std::vector<MacroPtr> args;
        if (!isPunct(")")) {
            args.push_back(parseExpression());
            while (isPunct(",")) {
                lx_.take();
                args.push_back(parseExpression());
            }
        }
        expectPunct(")", "to close " + what);
        if (n != 0 && args.size() != n) {
            fail(lx_.peek(), what + " expects " + std::to_string(n) + " arguments, got " +
                                 std::to_string(args.size()));
        }
        return args;
    }

    MacroPtr parseAtom() {
        const Token& t = lx_.peek();
        if (t.kind == Token::Kind::Punct) {
            if (t.text == "(") {
                lx_.take();
                MacroPtr e = parseExpression();
                expectPunct(")", "to close group");
                return e;
            }
            if (t.text == "[") {
                lx_.take();
                MacroPtr a = parseExpression();
                expectPunct(",", "in bracket");
                MacroPtr b = parseExpression();
                expectPunct("]", "to close bracket");
                return mkMacroNode(MacroExpr::Kind::Lie, {std::move(a), std::move(b)});
            }
            if (t.text == "{") {
                lx_.take();
                MacroPtr a = parseExpression();
                expectPunct(",", "in brace product");
                MacroPtr b = parseExpression();
                expectPunct("}", "to close brace product");
                return mkMacroNode(MacroExpr::Kind::Jordan, {std::move(a), std::move(b)});
            }
            fail(t, "unexpected '" + t.text + "'");
        }
        if (t.kind == Token::Kind::Ident) {
            Token name = lx_.take();
            bool isCall = isPunct("(");
            if (name.text == "assoc" && isCall) {
                return mkMacroNode(MacroExpr::Kind::Assoc, parseArgs(3, "assoc"));
            }
            if (name.text == "jassoc" && isCall) {
                return mkMacroNode(MacroExpr::Kind::JAssoc, parseArgs(3, "jassoc"));
            }
            if (name.text == "jac" && isCall) {
                return mkMacroNode(MacroExpr::Kind::Jac, parseArgs(3, "jac"));
            }
            if (isCall) {
                return mkMacroCall(name.text, parseArgs(0, name.text));
            }
            std::optional<int> idx = scope_.lookup(name.text);
            if (!idx) fail(name, "unknown variable '" + name.text + "'");
            return mkMacroVar(*idx);
        }
        fail(t, "unexpected token '" + t.text + "'");
    }

    Lexer& lx_;
    VarScope& scope_;
};

ParsedDef parseOneDef(Lexer& lx) {
    if (lx.peek().kind != Token::Kind::Ident) {
        fail(lx.peek(), "expected definition name");
    }
    Token name = lx.take();
    if (!(lx.peek().kind == Token::Kind::Punct && lx.peek().text == "(")) {
        fail(lx.peek(), "expected '(' after definition name");
    }
    lx.take();
    VarScope scope;
    for (;;) {
        if (lx.peek().kind != Token::Kind::Ident) {
            fail(lx.peek(), "expected variable name");
        }
        Token var = lx.take();
        if (scope.lookup(var.text)) fail(var, "duplicate variable '" + var.text + "'");
        scope.names.push_back(var.text);
        if (lx.peek().kind == Token::Kind::Punct && lx.peek().text == ",") {
            lx.take();
            continue;
        }
        break;
    }
    if (!(lx.peek().kind == Token::Kind::Punct && lx.peek().text == ")")) {
        fail(lx.peek(), "expected ')' after variable list");
    }
    lx.take();
    if (!(lx.peek().kind == Token::Kind::Punct && lx.peek().text == ":")) {
        fail(lx.peek(), "expected ':=' in definition");
    }
    lx.take();
    if (!(lx.peek().kind == Token::Kind::Punct && lx.peek().text == "=")) {
        fail(lx.peek(), "expected ':=' in definition");
    }
    lx.take();
    Parser parser(lx, scope);
    MacroPtr body = parser.parseExpression();
    if (lx.peek().kind == Token::Kind::Punct && lx.peek().text == ";") lx.take();
    return ParsedDef{name.text, scope.names, std::move(body)};
}

}  // namespace

std::vector<ParsedDef> parseDefs(const std::string& text) {
    Lexer lx(text);
    std::vector<ParsedDef> defs;
    while (lx.peek().kind != Token::Kind::End) {
        defs.push_back(parseOneDef(lx));
    }
    if (defs.empty()) {
        throw ParseError("empty DSL source", 1, 1);
    }
    return defs;
}

MacroPtr parseExpr(const std::string& text, std::vector<std::string>& varNamesOut) {
    Lexer lx(text);
    VarScope scope;
    scope.open = true;
    Parser parser(lx, scope);
    MacroPtr e = parser.parseExpression();
    if (lx.peek().kind != Token::Kind::End) {
        fail(lx.peek(), "unexpected trailing input");
    }
    varNamesOut = scope.names;
    return e;
}

namespace {

// Macro expansion throws invalid_argument for semantic errors (unknown macro,
// arity mismatch); surface those as ParseError so callers have one exception
// type for bad source text.
FreePoly expandOrFail(const MacroExpr& e, const MacroTable& table, int arity) {
    try {
        return expand(e, table, arity);
    } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
    }
}

}  // namespace

CompiledFile compileFile(const std::string& text) {
    std::vector<ParsedDef> defs = parseDefs(text);
    CompiledFile out;
    out.table = MacroTable::builtins();
    for (const ParsedDef& def : defs) {
        int arity = static_cast<int>(def.vars.size());
        FreePoly p = expandOrFail(*def.body, out.table, arity);
        out.table.define({def.name, arity, p});
        out.targetName = def.name;
        out.targetVars = def.vars;
        out.target = p;
    }
    return out;
}

FreePoly compileExpr(const std::string& text, std::vector<std::string>* varNamesOut) {
    std::vector<std::string> names;
    MacroPtr e = parseExpr(text, names);
    FreePoly p = expandOrFail(*e, MacroTable::builtins(), static_cast<int>(names.size()));
    if (varNamesOut) *varNamesOut = names;
    return p;
}

}  // namespace rbident
