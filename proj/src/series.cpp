#include "chorddse/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chorddse {

XSeries::XSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("XSeries: negative order");
    coeff_.resize(order + 1);
}

const SymbolicPolynomial& XSeries::at(int m) const {
    if (m < 0 || m > order_) throw std::out_of_range("XSeries::at: index beyond truncation");
    return coeff_[m];
}

void XSeries::set(int m, SymbolicPolynomial value) {
    if (m < 0 || m > order_) throw std::out_of_range("XSeries::set: index beyond truncation");
    coeff_[m] = std::move(value);
}

void XSeries::add(int m, const SymbolicPolynomial& value) {
    if (m < 0 || m > order_) throw std::out_of_range("XSeries::add: index beyond truncation");
    coeff_[m] += value;
}

XSeries& XSeries::operator+=(const XSeries& other) {
    if (other.order_ != order_) throw std::invalid_argument("XSeries: order mismatch");
    for (int m = 0; m <= order_; ++m) coeff_[m] += other.coeff_[m];
    return *this;
}

XSeries& XSeries::operator-=(const XSeries& other) {
    if (other.order_ != order_) throw std::invalid_argument("XSeries: order mismatch");
    for (int m = 0; m <= order_; ++m) coeff_[m] -= other.coeff_[m];
    return *this;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("XSeries: order mismatch");
    XSeries out(a.order_);
    for (int m = 0; m <= a.order_; ++m) {
        if (a.coeff_[m].is_zero()) continue;
        for (int t = 0; m + t <= a.order_; ++t) {
            if (b.coeff_[t].is_zero()) continue;
            out.coeff_[m + t] += a.coeff_[m] * b.coeff_[t];
        }
    }
    return out;
}

XSeries XSeries::scaled_euler_minus_one(const Rational& s) const {
    XSeries out(order_);
    for (int m = 0; m <= order_; ++m) {
        out.coeff_[m] = coeff_[m] * (s * m - 1);
    }
    return out;
}

XSeries XSeries::scaled(const Rational& s) const {
    XSeries out(order_);
    for (int m = 0; m <= order_; ++m) out.coeff_[m] = coeff_[m] * s;
    return out;
}

XSeries XSeries::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("XSeries::shifted: negative shift");
    XSeries out(order_);
    for (int m = 0; m + k <= order_; ++m) out.coeff_[m + k] = coeff_[m];
    return out;
}

std::string XSeries::to_string() const {
    std::ostringstream out;
    for (int m = 0; m <= order_; ++m) {
        if (coeff_[m].is_zero()) continue;
        out << "x^" << m << ": " << coeff_[m].to_string() << "\n";
    }
    return out.str();
}

BiSeries::BiSeries(int x_order, int l_order) : x_order_(x_order), l_order_(l_order) {
    if (x_order < 0 || l_order < 0) throw std::invalid_argument("BiSeries: negative order");
    table_.resize(static_cast<size_t>(x_order + 1) * (l_order + 1));
}

BiSeries BiSeries::one(int x_order, int l_order) {
    BiSeries s(x_order, l_order);
    s.set(0, 0, SymbolicPolynomial(1));
    return s;
}

const SymbolicPolynomial& BiSeries::at(int m, int j) const {
    if (m < 0 || m > x_order_ || j < 0 || j > l_order_)
        throw std::out_of_range("BiSeries::at: index beyond truncation");
    return table_[static_cast<size_t>(m) * (l_order_ + 1) + j];
}

void BiSeries::set(int m, int j, SymbolicPolynomial value) {
    if (m < 0 || m > x_order_ || j < 0 || j > l_order_)
        throw std::out_of_range("BiSeries::set: index beyond truncation");
    table_[static_cast<size_t>(m) * (l_order_ + 1) + j] = std::move(value);
}

void BiSeries::add(int m, int j, const SymbolicPolynomial& value) {
    if (m < 0 || m > x_order_ || j < 0 || j > l_order_)
        throw std::out_of_range("BiSeries::add: index beyond truncation");
    table_[static_cast<size_t>(m) * (l_order_ + 1) + j] += value;
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
    if (other.x_order_ != x_order_ || other.l_order_ != l_order_)
        throw std::invalid_argument("BiSeries: order mismatch");
    for (size_t t = 0; t < table_.size(); ++t) table_[t] += other.table_[t];
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
    if (other.x_order_ != x_order_ || other.l_order_ != l_order_)
        throw std::invalid_argument("BiSeries: order mismatch");
    for (size_t t = 0; t < table_.size(); ++t) table_[t] -= other.table_[t];
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    if (a.x_order_ != b.x_order_ || a.l_order_ != b.l_order_)
        throw std::invalid_argument("BiSeries: order mismatch");
    BiSeries out(a.x_order_, a.l_order_);
    for (int m = 0; m <= a.x_order_; ++m) {
        for (int j = 0; j <= a.l_order_; ++j) {
            const SymbolicPolynomial& ca = a.at(m, j);
            if (ca.is_zero()) continue;
            for (int mm = 0; m + mm <= a.x_order_; ++mm) {
                for (int jj = 0; j + jj <= a.l_order_; ++jj) {
                    const SymbolicPolynomial& cb = b.at(mm, jj);
                    if (cb.is_zero()) continue;
                    out.add(m + mm, j + jj, ca * cb);
                }
            }
        }
    }
    return out;
}

BiSeries BiSeries::scaled(const Rational& s) const {
    BiSeries out(x_order_, l_order_);
    for (int m = 0; m <= x_order_; ++m)
        for (int j = 0; j <= l_order_; ++j) out.set(m, j, at(m, j) * s);
    return out;
}

BiSeries BiSeries::shifted_x(int k) const {
    if (k < 0) throw std::invalid_argument("shifted_x: negative shift");
    BiSeries out(x_order_, l_order_);
    for (int m = 0; m + k <= x_order_; ++m)
        for (int j = 0; j <= l_order_; ++j) out.set(m + k, j, at(m, j));
    return out;
}

BiSeries BiSeries::pow(const Rational& exponent) const {
    if (!(at(0, 0) == SymbolicPolynomial(1)))
        throw std::domain_error("BiSeries::pow: constant term must be 1");
    for (int j = 1; j <= l_order_; ++j)
        if (!at(0, j).is_zero())
            throw std::domain_error("BiSeries::pow: nonzero x^0 L^j coefficient");
    // (1+u)^e with u = *this - 1; u has no x^0 part, so the binomial series
    // terminates at the x truncation order.
    BiSeries u = *this;
    u.add(0, 0, SymbolicPolynomial(-1));
    BiSeries result = BiSeries::one(x_order_, l_order_);
    BiSeries upow = BiSeries::one(x_order_, l_order_);
    for (int t = 1; t <= x_order_; ++t) {
        upow = upow * u;
        result += upow.scaled(gen_binomial(exponent, t));
    }
    return result;
}

BiSeries BiSeries::negated_l() const {
    BiSeries out(x_order_, l_order_);
    for (int m = 0; m <= x_order_; ++m)
        for (int j = 0; j <= l_order_; ++j)
            out.set(m, j, (j % 2 == 0) ? at(m, j) : at(m, j) * Rational(-1));
    return out;
}

BiSeries BiSeries::truncated_to(int x_order, int l_order) const {
    BiSeries out(x_order, l_order);
    for (int m = 0; m <= std::min(x_order, x_order_); ++m)
        for (int j = 0; j <= std::min(l_order, l_order_); ++j) out.set(m, j, at(m, j));
    return out;
}

XSeries BiSeries::l_coefficient(int j) const {
    if (j < 0 || j > l_order_) throw std::out_of_range("l_coefficient: beyond truncation");
    XSeries out(x_order_);
    for (int m = 0; m <= x_order_; ++m) out.set(m, at(m, j));
    return out;
}

std::string BiSeries::to_string() const {
    std::ostringstream out;
    for (int m = 0; m <= x_order_; ++m) {
        for (int j = 0; j <= l_order_; ++j) {
            if (at(m, j).is_zero()) continue;
            out << "x^" << m << " L^" << j << ": " << at(m, j).to_string() << "\n";
        }
    }
    return out.str();
}

RhoSeries::RhoSeries(int lo, int hi, int x_order, int l_order) : lo_(lo), hi_(hi) {
    if (lo < -1) throw std::invalid_argument("RhoSeries: pole order above one");
    if (hi < lo) throw std::invalid_argument("RhoSeries: empty exponent range");
    coeff_.assign(hi - lo + 1, BiSeries(x_order, l_order));
}

const BiSeries& RhoSeries::at(int e) const {
    if (e < lo_ || e > hi_) throw std::out_of_range("RhoSeries::at: exponent out of range");
    return coeff_[e - lo_];
}

void RhoSeries::set(int e, BiSeries value) {
    if (e < lo_ || e > hi_) throw std::out_of_range("RhoSeries::set: exponent out of range");
    coeff_[e - lo_] = std::move(value);
}

RhoSeries operator*(const RhoSeries& a, const RhoSeries& b) {
    int lo = a.lo_ + b.lo_;
    if (lo < -1) throw std::domain_error("RhoSeries: product pole order above one");
    // The product is exact only up to the weaker of the two truncations.
    int hi = std::min(a.lo_ + b.hi_, a.hi_ + b.lo_);
    const BiSeries& probe = a.coeff_.front();
    RhoSeries out(lo, hi, probe.x_order(), probe.l_order());
    for (int ea = a.lo_; ea <= a.hi_; ++ea) {
        for (int eb = b.lo_; eb <= b.hi_; ++eb) {
            int e = ea + eb;
            if (e < lo || e > hi) continue;
            BiSeries sum = out.at(e);
            sum += a.at(ea) * b.at(eb);
            out.set(e, std::move(sum));
        }
    }
    return out;
}

bool RhoSeries::has_pole() const {
    for (int e = lo_; e < 0; ++e) {
        if (!(at(e) == BiSeries(at(e).x_order(), at(e).l_order()))) return true;
    }
    return false;
}

BiSeries apply_derivative_operator(const BiSeries& h, const RhoSeries& f) {
    if (f.has_pole())
        throw std::domain_error("apply_derivative_operator: pole of f not cancelled");
    BiSeries out(h.x_order(), h.l_order());
    for (int m = 0; m <= h.x_order(); ++m) {
        for (int j = 0; j <= h.l_order(); ++j) {
            const SymbolicPolynomial& c = h.at(m, j);
            if (c.is_zero()) continue;
            if (j > f.hi())
                throw std::domain_error(
                    "apply_derivative_operator: insufficient rho truncation");
            if (j < f.lo()) continue;
            // (-d/drho)^j f at 0 is (-1)^j j! [rho^j] f.
            Rational scale = factorial(j);
            if (j % 2 == 1) scale = -scale;
            BiSeries term = f.at(j).scaled(scale);
            // Multiply by the polynomial coefficient of x^m L^j and shift by x^m;
            // anything beyond the truncation is dropped.
            for (int mm = 0; m + mm <= h.x_order(); ++mm) {
                for (int jj = 0; jj <= h.l_order(); ++jj) {
                    const SymbolicPolynomial& tc = term.at(mm, jj);
                    if (tc.is_zero()) continue;
                    out.add(m + mm, jj, c * tc);
                }
            }
        }
    }
    return out;
}

}  // namespace chorddse
