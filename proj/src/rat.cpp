#include "rbident/rat.hpp"

#include <stdexcept>

namespace rbident {

std::string ratToString(const Rat& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += "/" + denominator(r).str();
    }
    return out;
}

Rat ratFromString(const std::string& text) {
    std::size_t b = text.find_first_not_of(" \t");
    std::size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty rational");
    std::string s = text.substr(b, e - b + 1);
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rat(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& ex) {
        throw std::invalid_argument("malformed rational '" + s + "': " + ex.what());
    }
}

Rat binomial(long long n, long long k) {
    if (k < 0 || k > n) return Rat(0);
    if (k > n - k) k = n - k;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return Rat(num / den);  // exact: binomials are integers
}

}  // namespace rbident
