#include <doctest.h>

#include <stdexcept>

#include <random>

#include "chorddse/rational.hpp"
#include "chorddse/series.hpp"
#include "chorddse/symbolic.hpp"

using namespace chorddse;

namespace {

const Symbol a00{1, 0};
const Symbol a01{1, 1};
const Symbol a20{2, 0};

SymbolicPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> expo(1, 2);
    SymbolicPolynomial p;
    for (int t = 0; t < 4; ++t) {
        SymbolMonomial m;
        for (int f = 0; f < pick(rng); ++f) {
            Symbol s{pick(rng) + 1, pick(rng)};
            m *= SymbolMonomial::var(s, expo(rng));
        }
        p += SymbolicPolynomial::monomial(m, Rational(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_SUITE_BEGIN("algebra");

TEST_CASE("generalized binomial values") {
    CHECK(gen_binomial(Rational(7, 3), 0) == Rational(1));
    CHECK(gen_binomial(Rational(-1), 2) == Rational(1));
    CHECK(gen_binomial(Rational(-1), 3) == Rational(-1));
    // s=2, d=1, nu=3
    CHECK(gen_binomial(Rational(3), 3) == Rational(1));
    CHECK(gen_binomial(Rational(1, 2), 2) == Rational(-1, 8));
}

TEST_CASE("pascal recurrence for rational arguments") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int trial = 0; trial < 25; ++trial) {
        Rational a(num(rng), den(rng));
        for (int k = 1; k <= 12; ++k) {
            CHECK(gen_binomial(a, k) == gen_binomial(a - 1, k - 1) + gen_binomial(a - 1, k));
        }
    }
}

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_from_string("5/2") == Rational(5, 2));
    CHECK(rational_from_string("-3") == Rational(-3));
    CHECK(rational_to_string(Rational(6, 4)) == "3/2");
    CHECK(rational_to_string(Rational(4)) == "4");
    CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("polynomial ring laws") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        SymbolicPolynomial a = random_poly(rng);
        SymbolicPolynomial b = random_poly(rng);
        SymbolicPolynomial c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("parallel polynomial reduction is schedule independent") {
    std::mt19937 rng(3);
    std::vector<SymbolicPolynomial> parts;
    for (int t = 0; t < 64; ++t) parts.push_back(random_poly(rng));
    SymbolicPolynomial serial;
    for (const auto& p : parts) serial += p;
    // Two-block partition, then reversed merge order.
    SymbolicPolynomial lo, hi;
    for (int t = 0; t < 32; ++t) lo += parts[t];
    for (int t = 32; t < 64; ++t) hi += parts[t];
    CHECK(serial == lo + hi);
    CHECK(serial == hi + lo);
}

TEST_CASE("evaluate and substitute") {
    SymbolicPolynomial p = SymbolicPolynomial::variable(a00) * SymbolicPolynomial::variable(a01) +
                           SymbolicPolynomial(Rational(1, 2));
    Rational v = p.evaluate([](Symbol) { return Rational(3); });
    CHECK(v == Rational(19, 2));
    SymbolicPolynomial q = p.substituted([](Symbol s) -> std::optional<Rational> {
        if (s == a00) return Rational(2);
        return std::nullopt;
    });
    CHECK(q == SymbolicPolynomial::variable(a01) * SymbolicPolynomial(2) +
                   SymbolicPolynomial(Rational(1, 2)));
    CHECK_THROWS(p.constant_value());
}

TEST_CASE("geometric inverse of 1 + x") {
    BiSeries g(3, 0);
    g.set(0, 0, SymbolicPolynomial(1));
    g.set(1, 0, SymbolicPolynomial(1));
    BiSeries inv = g.pow(Rational(-1));
    CHECK(inv.at(0, 0) == SymbolicPolynomial(1));
    CHECK(inv.at(1, 0) == SymbolicPolynomial(-1));
    CHECK(inv.at(2, 0) == SymbolicPolynomial(1));
    CHECK(inv.at(3, 0) == SymbolicPolynomial(-1));
}

TEST_CASE("power 1-sk at s=2, k=1 is the reciprocal of G = 1 - xLa") {
    BiSeries g(2, 2);
    g.set(0, 0, SymbolicPolynomial(1));
    g.set(1, 1, SymbolicPolynomial::variable(a00) * Rational(-1));
    BiSeries p = g.pow(Rational(1) - Rational(2) * 1);
    SymbolicPolynomial a = SymbolicPolynomial::variable(a00);
    CHECK(p.at(0, 0) == SymbolicPolynomial(1));
    CHECK(p.at(1, 1) == a);
    CHECK(p.at(2, 2) == a * a);
}

TEST_CASE("pow(G,p) * pow(G,-p) = 1") {
    BiSeries g(3, 2);
    g.set(0, 0, SymbolicPolynomial(1));
    g.set(1, 0, SymbolicPolynomial::variable(a00) + SymbolicPolynomial(1));
    g.set(1, 1, SymbolicPolynomial(2));
    g.set(2, 1, SymbolicPolynomial::variable(a20));
    Rational p(5, 2);
    BiSeries product = g.pow(p) * g.pow(-p);
    CHECK(product == BiSeries::one(3, 2));
}

TEST_CASE("pow rejects series without unit constant term") {
    BiSeries g(2, 1);
    CHECK_THROWS_AS(g.pow(Rational(-1)), std::domain_error);
    BiSeries h = BiSeries::one(2, 1);
    h.set(0, 1, SymbolicPolynomial(1));
    CHECK_THROWS_AS(h.pow(Rational(2)), std::domain_error);
}

namespace {

// (e^{-L rho} - 1) * (a00/rho + a01 + ...) assembled by hand.
RhoSeries cancelled_pole_series(int x_order, int l_order) {
    RhoSeries expm1(1, l_order + 1, x_order, l_order);
    Rational fact(1);
    for (int j = 1; j <= l_order + 1; ++j) {
        fact *= j;
        BiSeries c(x_order, l_order);
        if (j <= l_order) {
            Rational v = Rational(1) / fact;
            if (j % 2 == 1) v = -v;
            c.set(0, j, SymbolicPolynomial(v));
        }
        expm1.set(j, c);
    }
    RhoSeries f(-1, l_order, x_order, l_order);
    for (int e = -1; e <= l_order; ++e) {
        BiSeries c(x_order, l_order);
        c.set(0, 0, SymbolicPolynomial::variable({1, e + 1}));
        f.set(e, c);
    }
    return expm1 * f;
}

}  // namespace

TEST_CASE("derivative operator with trivial H picks the rho^0 value") {
    RhoSeries f = cancelled_pole_series(2, 3);
    BiSeries h = BiSeries::one(2, 3);
    BiSeries out = apply_derivative_operator(h, f);
    // (e^{-L rho}-1) F(rho) at rho=0 is -L a[1,0].
    BiSeries expected(2, 3);
    expected.set(0, 1, SymbolicPolynomial::variable(a00) * Rational(-1));
    CHECK(out == expected);
}

TEST_CASE("single derivative of e^{-L rho} gives L") {
    const int X = 1, L = 3;
    RhoSeries f(0, 3, X, L);
    Rational fact(1);
    for (int j = 0; j <= 3; ++j) {
        if (j > 0) fact *= j;
        BiSeries c(X, L);
        Rational v = Rational(1) / fact;
        if (j % 2 == 1) v = -v;
        if (j <= L) c.set(0, j, SymbolicPolynomial(v));
        f.set(j, c);
    }
    BiSeries h(X, L);
    h.set(0, 1, SymbolicPolynomial(1));  // H = L
    BiSeries out = apply_derivative_operator(h, f);
    BiSeries expected(X, L);
    expected.set(0, 1, SymbolicPolynomial(1));
    CHECK(out == expected);
}

TEST_CASE("derivative operator is linear in both arguments") {
    RhoSeries f = cancelled_pole_series(2, 3);
    BiSeries h1 = BiSeries::one(2, 3);
    BiSeries h2(2, 3);
    h2.set(1, 1, SymbolicPolynomial::variable(a20));
    h2.set(0, 2, SymbolicPolynomial(Rational(1, 3)));
    CHECK(apply_derivative_operator(h1 + h2, f) ==
          apply_derivative_operator(h1, f) + apply_derivative_operator(h2, f));

    RhoSeries f2 = cancelled_pole_series(2, 3);
    RhoSeries sum(0, 3, 2, 3);
    for (int e = 0; e <= 3; ++e) sum.set(e, f.at(e) + f2.at(e));
    CHECK(apply_derivative_operator(h2, sum) ==
          apply_derivative_operator(h2, f) + apply_derivative_operator(h2, f2));
}

TEST_CASE("derivative operator rejects an uncancelled pole") {
    RhoSeries f(-1, 2, 1, 1);
    BiSeries c(1, 1);
    c.set(0, 0, SymbolicPolynomial(1));
    f.set(-1, c);
    CHECK_THROWS_AS(apply_derivative_operator(BiSeries::one(1, 1), f), std::domain_error);
}

TEST_CASE("derivative operator needs enough rho coefficients") {
    RhoSeries f(0, 1, 1, 3);
    BiSeries h(1, 3);
    h.set(0, 3, SymbolicPolynomial(1));
    CHECK_THROWS_AS(apply_derivative_operator(h, f), std::domain_error);
}

TEST_CASE("coefficient access beyond the truncation is an error") {
    XSeries a(2);
    CHECK_THROWS_AS(a.at(3), std::out_of_range);
    BiSeries g(2, 1);
    CHECK_THROWS_AS(g.at(0, 2), std::out_of_range);
    CHECK_THROWS_AS(g.l_coefficient(2), std::out_of_range);
}

TEST_CASE("x-series arithmetic") {
    XSeries a(3), b(3);
    a.set(1, SymbolicPolynomial::variable(a00));
    a.set(0, SymbolicPolynomial(1));
    b.set(2, SymbolicPolynomial(3));
    XSeries prod = a * b;
    CHECK(prod.at(2) == SymbolicPolynomial(3));
    CHECK(prod.at(3) == SymbolicPolynomial::variable(a00) * Rational(3));
    XSeries euler = a.scaled_euler_minus_one(Rational(2));
    CHECK(euler.at(0) == SymbolicPolynomial(-1));
    CHECK(euler.at(1) == SymbolicPolynomial::variable(a00));
    CHECK(a.shifted(2).at(3) == SymbolicPolynomial::variable(a00));
}

TEST_SUITE_END();
