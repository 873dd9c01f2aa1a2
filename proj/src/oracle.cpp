#include "chorddse/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace chorddse {

DseSpec yukawa_bk_preset(int x_order, int l_order) {
    DseSpec spec;
    spec.s = Rational(2);
    Primitive p;
    p.loop_order = 1;
    p.symbolic = false;
    p.coeffs.assign(x_order + l_order + 2, Rational(1));
    spec.primitives.push_back(p);
    spec.x_order = x_order;
    spec.l_order = l_order;
    return spec;
}

namespace {

SymbolicPolynomial primitive_coefficient(const Primitive& p, int i) {
    if (p.symbolic) return SymbolicPolynomial::variable({p.loop_order, i});
    if (i < static_cast<int>(p.coeffs.size())) return SymbolicPolynomial(p.coeffs[i]);
    return SymbolicPolynomial();
}

// (e^{-L rho} - 1) F_k(rho), truncated at rho^l_order; the simple pole of
// F_k is cancelled by the leading rho of the exponential.
RhoSeries integrand(const Primitive& p, int x_order, int l_order) {
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
        expm1.set(j, std::move(c));
    }
    RhoSeries f(-1, l_order, x_order, l_order);
    for (int e = -1; e <= l_order; ++e) {
        BiSeries c(x_order, l_order);
        c.set(0, 0, primitive_coefficient(p, e + 1));
        f.set(e, std::move(c));
    }
    return expm1 * f;
}

}  // namespace

BiSeries dse_step(const DseSpec& spec, const BiSeries& g, RhoSign sign) {
    const int X = spec.x_order;
    const int L = spec.l_order;
    BiSeries next = BiSeries::one(X, L);
    for (const Primitive& p : spec.primitives) {
        if (p.loop_order < 1) throw std::invalid_argument("dse_step: loop order < 1");
        int k = p.loop_order;
        if (k > X) continue;
        BiSeries h = g.pow(Rational(1) - spec.s * k);
        if (sign == RhoSign::plus_drho) h = h.negated_l();
        BiSeries applied = apply_derivative_operator(h, integrand(p, X, L));
        next -= applied.shifted_x(k);
    }
    return next;
}

BiSeries solve_dse(const DseSpec& spec, RhoSign sign) {
    // Derivative orders up to the x truncation act during the iteration, so
    // L is carried internally to at least that depth and the result is cut
    // down to the requested window afterwards.
    DseSpec wide = spec;
    wide.l_order = std::max(spec.l_order, spec.x_order);
    BiSeries g = BiSeries::one(wide.x_order, wide.l_order);
    // Every term on the right carries x^k with k >= 1, so x_order iterations
    // reach the fixed point below the truncation.
    for (int it = 0; it < wide.x_order; ++it) g = dse_step(wide, g, sign);
    return g.truncated_to(spec.x_order, spec.l_order);
}

XSeries g_dif_rge(int k, const XSeries& g1, const Rational& s) {
    if (k < 1) throw std::invalid_argument("g_dif_rge: k must be positive");
    XSeries gamma = g1;
    for (int j = 2; j <= k; ++j) {
        // (1 - s x d/dx) = -(s x d/dx - 1)
        XSeries rhs = g1 * gamma.scaled_euler_minus_one(s);
        gamma = rhs.scaled(Rational(-1) / j);
    }
    return gamma;
}

std::vector<CoefficientDiff> compare(const BiSeries& lhs, const BiSeries& rhs) {
    if (lhs.x_order() != rhs.x_order() || lhs.l_order() != rhs.l_order())
        throw std::invalid_argument("compare: truncation order mismatch");
    std::vector<CoefficientDiff> diffs;
    for (int m = 0; m <= lhs.x_order(); ++m) {
        for (int j = 0; j <= lhs.l_order(); ++j) {
            SymbolicPolynomial d = lhs.at(m, j) - rhs.at(m, j);
            if (!d.is_zero()) diffs.push_back({m, j, std::move(d)});
        }
    }
    return diffs;
}

}  // namespace chorddse
