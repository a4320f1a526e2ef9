#include "rbident/qpoly.hpp"

#include <cctype>
#include <stdexcept>

namespace rbident {

void QPoly::set(long exp, Rat v) {
    if (v == 0) {
        c_.erase(exp);
    } else {
        c_[exp] = std::move(v);
    }
}

QPoly QPoly::monomial(long exp, const Rat& coef) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    QPoly p;
    p.set(exp, coef);
    return p;
}

std::optional<long> QPoly::degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.rbegin()->first;
}

Rat QPoly::coeff(long exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, c] : o.c_) {
        set(e, coeff(e) + c);
    }
    return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly out = *this;
    out += o;
    return out;
}

QPoly QPoly::operator-(const QPoly& o) const {
    return *this + o.scaled(Rat(-1));
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly out;
    for (const auto& [e1, c1] : c_) {
        for (const auto& [e2, c2] : o.c_) {
            out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
        }
    }
    return out;
}

QPoly QPoly::scaled(const Rat& k) const {
    QPoly out;
    if (k == 0) return out;
    for (const auto& [e, c] : c_) {
        out.c_[e] = c * k;
    }
    return out;
}

QPoly QPoly::derivative() const {
    QPoly out;
    for (const auto& [e, c] : c_) {
        if (e >= 1) out.c_[e - 1] = c * e;
    }
    return out;
}

QPoly QPoly::integrate(int k) const {
    if (k < 0) throw std::invalid_argument("negative integration count");
    QPoly out = *this;
    for (int step = 0; step < k; ++step) {
        QPoly next;
        for (const auto& [e, c] : out.c_) {
            next.c_[e + 1] = c / (e + 1);
        }
        out = std::move(next);
    }
    return out;
}

std::string QPoly::toString() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : c_) {
        Rat a = c;
        if (first) {
            first = false;
        } else if (a < 0) {
            out += " - ";
            a = -a;
        } else {
            out += " + ";
        }
        out += ratToString(a);
        if (e == 1) {
            out += "*x";
        } else if (e > 1) {
            out += "*x^" + std::to_string(e);
        }
    }
    return out;
}

namespace {

// One term of the serialized form: [coef ['*']] ['x' ['^' exp]].
struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}
    void skipWs() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skipWs();
        return i >= s.size();
    }
    char peek() {
        skipWs();
        return i < s.size() ? s[i] : '\0';
    }
    std::string number() {
        skipWs();
        std::size_t b = i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        while (i < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) {
            ++i;
        }
        if (b == i) throw std::invalid_argument("expected number in polynomial");
        return s.substr(b, i - b);
    }
};

}  // namespace

QPoly QPoly::fromString(const std::string& text) {
    PolyLexer lx(text);
    QPoly out;
    bool first = true;
    while (!lx.done()) {
        Rat sign(1);
        if (!first || lx.peek() == '+' || lx.peek() == '-') {
            char c = lx.peek();
            if (c == '+') {
                ++lx.i;
            } else if (c == '-') {
                sign = -1;
                ++lx.i;
            } else if (!first) {
                throw std::invalid_argument("expected '+' or '-' between terms");
            }
        }
        first = false;
        Rat coef(1);
        bool sawCoef = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek())) || lx.peek() == '-' ||
            lx.peek() == '+') {
            coef = ratFromString(lx.number());
            sawCoef = true;
        }
        long exp = 0;
        if (lx.peek() == '*' || lx.peek() == 'x') {
            if (lx.peek() == '*') {
                ++lx.i;
            }
            if (lx.peek() != 'x') throw std::invalid_argument("expected 'x'");
            ++lx.i;
            exp = 1;
            if (lx.peek() == '^') {
                ++lx.i;
                exp = std::stol(lx.number());
            }
        } else if (!sawCoef) {
            throw std::invalid_argument("expected term in polynomial");
        }
        out.set(exp, out.coeff(exp) + sign * coef);
    }
    return out;
}

}  // namespace rbident
