#include "chorddse/symbolic.hpp"

#include <sstream>
#include <stdexcept>

namespace chorddse {

SymbolMonomial SymbolMonomial::var(Symbol s, int exponent) {
    if (exponent < 1) throw std::invalid_argument("SymbolMonomial::var: exponent < 1");
    SymbolMonomial m;
    m.exps_.emplace_back(s, exponent);
    return m;
}

SymbolMonomial& SymbolMonomial::operator*=(const SymbolMonomial& other) {
    std::vector<std::pair<Symbol, int>> merged;
    merged.reserve(exps_.size() + other.exps_.size());
    auto a = exps_.begin();
    auto b = other.exps_.begin();
    while (a != exps_.end() && b != other.exps_.end()) {
        if (a->first < b->first) {
            merged.push_back(*a++);
        } else if (b->first < a->first) {
            merged.push_back(*b++);
        } else {
            merged.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), a, exps_.end());
    merged.insert(merged.end(), b, other.exps_.end());
    exps_ = std::move(merged);
    return *this;
}

int SymbolMonomial::factor_count() const {
    int total = 0;
    for (const auto& [sym, e] : exps_) total += e;
    return total;
}

std::string SymbolMonomial::to_string() const {
    if (exps_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [sym, e] : exps_) {
        if (!first) out << "*";
        first = false;
        out << "a[" << sym.k << "," << sym.i << "]";
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

SymbolicPolynomial::SymbolicPolynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(SymbolMonomial::one(), constant);
}

SymbolicPolynomial SymbolicPolynomial::variable(Symbol s) {
    return monomial(SymbolMonomial::var(s), Rational(1));
}

SymbolicPolynomial SymbolicPolynomial::monomial(const SymbolMonomial& m, const Rational& coeff) {
    SymbolicPolynomial p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

SymbolicPolynomial& SymbolicPolynomial::operator+=(const SymbolicPolynomial& other) {
    for (const auto& [mono, coeff] : other.terms_) {
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator-=(const SymbolicPolynomial& other) {
    for (const auto& [mono, coeff] : other.terms_) {
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, -coeff);
        } else {
            it->second -= coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator*=(const SymbolicPolynomial& other) {
    std::map<SymbolMonomial, Rational> product;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            SymbolMonomial m = ma * mb;
            Rational c = ca * cb;
            auto it = product.find(m);
            if (it == product.end()) {
                product.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second == 0) product.erase(it);
            }
        }
    }
    terms_ = std::move(product);
    return *this;
}

SymbolicPolynomial& SymbolicPolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= scalar;
    return *this;
}

Rational SymbolicPolynomial::evaluate(const std::function<Rational(Symbol)>& value_of) const {
    Rational total(0);
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (const auto& [sym, e] : mono.exponents()) {
            Rational v = value_of(sym);
            for (int t = 0; t < e; ++t) term *= v;
        }
        total += term;
    }
    return total;
}

SymbolicPolynomial SymbolicPolynomial::substituted(
    const std::function<std::optional<Rational>(Symbol)>& value_of) const {
    SymbolicPolynomial out;
    for (const auto& [mono, coeff] : terms_) {
        Rational c = coeff;
        SymbolMonomial rest;
        for (const auto& [sym, e] : mono.exponents()) {
            std::optional<Rational> v = value_of(sym);
            if (!v) {
                rest *= SymbolMonomial::var(sym, e);
                continue;
            }
            for (int t = 0; t < e; ++t) c *= *v;
        }
        out += SymbolicPolynomial::monomial(rest, c);
    }
    return out;
}

Rational SymbolicPolynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
    throw std::logic_error("constant_value: polynomial is not constant: " + to_string());
}

std::string SymbolicPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (mono.is_one()) {
            out << rational_to_string(coeff);
        } else if (coeff == 1) {
            out << mono.to_string();
        } else {
            out << rational_to_string(coeff) << "*" << mono.to_string();
        }
    }
    return out.str();
}

}  // namespace chorddse
