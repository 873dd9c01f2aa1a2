#ifndef CHORDDSE_SYMBOLIC_HPP
#define CHORDDSE_SYMBOLIC_HPP

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorddse/rational.hpp"

namespace chorddse {

// The indeterminate a[k,i]: k is the decoration (loop order of the
// primitive), i the expansion index of its regularized integral.
struct Symbol {
    int k = 1;
    int i = 0;
    auto operator<=>(const Symbol&) const = default;
};

// Product of symbols with positive integer exponents; the empty product is 1.
class SymbolMonomial {
public:
    SymbolMonomial() = default;

    static SymbolMonomial one() { return SymbolMonomial(); }
    static SymbolMonomial var(Symbol s, int exponent = 1);

    SymbolMonomial& operator*=(const SymbolMonomial& other);
    friend SymbolMonomial operator*(SymbolMonomial a, const SymbolMonomial& b) {
        a *= b;
        return a;
    }

    bool is_one() const { return exps_.empty(); }
    // Total number of symbol factors counted with multiplicity.
    int factor_count() const;
    const std::vector<std::pair<Symbol, int>>& exponents() const { return exps_; }

    auto operator<=>(const SymbolMonomial&) const = default;

    std::string to_string() const;

private:
    std::vector<std::pair<Symbol, int>> exps_;  // sorted by symbol, exponents >= 1
};

// Multivariate polynomial in the a[k,i] with exact rational coefficients.
class SymbolicPolynomial {
public:
    SymbolicPolynomial() = default;
    SymbolicPolynomial(const Rational& constant);
    SymbolicPolynomial(int constant) : SymbolicPolynomial(Rational(constant)) {}

    static SymbolicPolynomial variable(Symbol s);
    static SymbolicPolynomial monomial(const SymbolMonomial& m, const Rational& coeff);

    SymbolicPolynomial& operator+=(const SymbolicPolynomial& other);
    SymbolicPolynomial& operator-=(const SymbolicPolynomial& other);
    SymbolicPolynomial& operator*=(const SymbolicPolynomial& other);
    SymbolicPolynomial& operator*=(const Rational& scalar);

    friend SymbolicPolynomial operator+(SymbolicPolynomial a, const SymbolicPolynomial& b) {
        a += b;
        return a;
    }
    friend SymbolicPolynomial operator-(SymbolicPolynomial a, const SymbolicPolynomial& b) {
        a -= b;
        return a;
    }
    friend SymbolicPolynomial operator*(SymbolicPolynomial a, const SymbolicPolynomial& b) {
        a *= b;
        return a;
    }
    friend SymbolicPolynomial operator*(SymbolicPolynomial a, const Rational& s) {
        a *= s;
        return a;
    }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const SymbolicPolynomial&) const = default;

    const std::map<SymbolMonomial, Rational>& terms() const { return terms_; }

    // Substitutes a value for every symbol.
    Rational evaluate(const std::function<Rational(Symbol)>& value_of) const;
    // Substitutes values for some symbols; others stay symbolic.
    SymbolicPolynomial substituted(
        const std::function<std::optional<Rational>(Symbol)>& value_of) const;
    // Requires the polynomial to be constant.
    Rational constant_value() const;

    std::string to_string() const;

private:
    std::map<SymbolMonomial, Rational> terms_;  // no zero coefficients stored
};

}  // namespace chorddse

#endif
