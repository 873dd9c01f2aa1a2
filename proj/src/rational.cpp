#include "chorddse/rational.hpp"

#include <stdexcept>

namespace chorddse {

Rational gen_binomial(const Rational& a, int k) {
    if (k < 0) throw std::invalid_argument("gen_binomial: negative k");
    Rational result(1);
    for (int t = 0; t < k; ++t) {
        result *= a - t;
        result /= t + 1;
    }
    return result;
}

Rational factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Rational result(1);
    for (int t = 2; t <= n; ++t) result *= t;
    return result;
}

Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    return gen_binomial(Rational(n), k);
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace chorddse
