#ifndef CHORDDSE_SERIES_HPP
#define CHORDDSE_SERIES_HPP

#include <string>
#include <vector>

#include "chorddse/symbolic.hpp"

namespace chorddse {

// Truncated power series in x with SymbolicPolynomial coefficients,
// exact up to and including x^order.
class XSeries {
public:
    explicit XSeries(int order);

    int order() const { return order_; }
    const SymbolicPolynomial& at(int m) const;
    void set(int m, SymbolicPolynomial value);
    void add(int m, const SymbolicPolynomial& value);

    XSeries& operator+=(const XSeries& other);
    XSeries& operator-=(const XSeries& other);
    friend XSeries operator+(XSeries a, const XSeries& b) { a += b; return a; }
    friend XSeries operator-(XSeries a, const XSeries& b) { a -= b; return a; }
    friend XSeries operator*(const XSeries& a, const XSeries& b);

    // s*x*d/dx - 1 applied termwise.
    XSeries scaled_euler_minus_one(const Rational& s) const;

    XSeries scaled(const Rational& s) const;
    // Multiplication by x^k; coefficients beyond the truncation are dropped.
    XSeries shifted(int k) const;

    bool operator==(const XSeries&) const = default;
    std::string to_string() const;

private:
    int order_;
    std::vector<SymbolicPolynomial> coeff_;
};

// Truncated bivariate power series in x (0..x_order) and L (0..l_order).
class BiSeries {
public:
    BiSeries(int x_order, int l_order);
    static BiSeries one(int x_order, int l_order);

    int x_order() const { return x_order_; }
    int l_order() const { return l_order_; }

    const SymbolicPolynomial& at(int m, int j) const;
    void set(int m, int j, SymbolicPolynomial value);
    void add(int m, int j, const SymbolicPolynomial& value);

    BiSeries& operator+=(const BiSeries& other);
    BiSeries& operator-=(const BiSeries& other);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { a += b; return a; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { a -= b; return a; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    BiSeries scaled(const Rational& s) const;
    // Multiplication by x^k; coefficients beyond the truncation are dropped.
    BiSeries shifted_x(int k) const;
    // Generalized binomial power; requires constant term 1 and no other
    // x^0 coefficients.
    BiSeries pow(const Rational& exponent) const;
    // Substitutes L -> -L.
    BiSeries negated_l() const;

    // Copies the window shared with the requested truncation; new cells are
    // zero.
    BiSeries truncated_to(int x_order, int l_order) const;

    // Coefficient series of L^j.
    XSeries l_coefficient(int j) const;

    bool operator==(const BiSeries&) const = default;
    std::string to_string() const;

private:
    int x_order_;
    int l_order_;
    std::vector<SymbolicPolynomial> table_;  // (m, j) -> table_[m * (l_order_+1) + j]
};

// Truncated Laurent series in rho with BiSeries coefficients.  Pole order
// is at most one (lowest exponent >= -1).
class RhoSeries {
public:
    // Coefficients for rho^lo .. rho^hi, all initialized to zero series of
    // shape (x_order, l_order).
    RhoSeries(int lo, int hi, int x_order, int l_order);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const BiSeries& at(int e) const;
    void set(int e, BiSeries value);

    friend RhoSeries operator*(const RhoSeries& a, const RhoSeries& b);

    bool has_pole() const;

private:
    int lo_;
    int hi_;
    std::vector<BiSeries> coeff_;
};

// Substitutes L^j in h by (-d/drho)^j, applies the operator to f and
// evaluates at rho = 0.  Requires the pole of f to be cancelled and f to
// carry at least l_order(h) rho-coefficients.
BiSeries apply_derivative_operator(const BiSeries& h, const RhoSeries& f);

}  // namespace chorddse

#endif
