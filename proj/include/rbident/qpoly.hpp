#pragma once
// Sparse exact univariate polynomials over the rationals, with the formal
// derivative and iterated antiderivative (integration constants fixed at 0).
#include <map>
#include <optional>
#include <string>

#include "rbident/rat.hpp"

namespace rbident {

class QPoly {
  public:
    QPoly() = default;

    static QPoly monomial(long exp, const Rat& coef = Rat(1));
    static QPoly constant(const Rat& c) { return monomial(0, c); }

    bool isZero() const { return c_.empty(); }
    // Degree of the zero polynomial is "none".
    std::optional<long> degree() const;
    Rat coeff(long exp) const;
    const std::map<long, Rat>& coeffs() const { return c_; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const Rat& k) const;
    QPoly& operator+=(const QPoly& o);

    QPoly derivative() const;
    // k-fold antiderivative with all integration constants 0; k == 0 is the
    // identity. Result has zero constant term whenever k >= 1.
    QPoly integrate(int k = 1) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    // "0", or terms in ascending exponent: "1/2", "3*x", "-4537/61*x^18",
    // joined with " + " / " - " (the sign folded into the separator).
    std::string toString() const;
    // Accepts the toString format (leading sign, '+'/'-' separators, terms
    // "c", "c*x", "c*x^k", also bare "x^k"/"x"). Throws std::invalid_argument.
    static QPoly fromString(const std::string& text);

  private:
    std::map<long, Rat> c_;  // exponent -> nonzero coefficient

    void set(long exp, Rat v);
};

}  // namespace rbident
