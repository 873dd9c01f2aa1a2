#ifndef CHORDDSE_ORACLE_HPP
#define CHORDDSE_ORACLE_HPP

#include <string>
#include <vector>

#include "chorddse/series.hpp"

namespace chorddse {

// One primitive F_k(rho) = sum_{i>=0} a[k,i] rho^(i-1).  Either fully
// symbolic or with explicit rational coefficients (missing entries are zero).
struct Primitive {
    int loop_order = 1;  // k
    bool symbolic = true;
    std::vector<Rational> coeffs;
};

struct DseSpec {
    Rational s = Rational(2);
    std::vector<Primitive> primitives;
    int x_order = 5;
    int l_order = 5;
};

// s = 2 with one primitive whose expansion coefficients are all 1, i.e.
// F(rho) = 1/(rho (1 - rho)).
DseSpec yukawa_bk_preset(int x_order, int l_order);

enum class RhoSign {
    minus_drho,  // L^j -> (-d/drho)^j, the working convention
    plus_drho,   // deliberately flipped, for negative controls
};

// Solves G = 1 - sum_k x^k G(x, d_{-rho})^{1-sk} (e^{-L rho} - 1) F_k(rho) |_{rho=0}
// by x-adic fixed-point iteration.
BiSeries solve_dse(const DseSpec& spec, RhoSign sign = RhoSign::minus_drho);

// One application of the right-hand side to g.
BiSeries dse_step(const DseSpec& spec, const BiSeries& g, RhoSign sign = RhoSign::minus_drho);

// One step of the renormalization group recursion for the L-coefficients
// gamma_k(x) = [L^k] G: gamma_k = (1/k) gamma_1 (1 - s x d/dx) gamma_{k-1}.
// Returns gamma_k given gamma_1; k = 1 returns g1 unchanged.
XSeries g_dif_rge(int k, const XSeries& g1, const Rational& s);

struct CoefficientDiff {
    int m = 0;
    int j = 0;
    SymbolicPolynomial delta;
};

// All (m, j) with differing coefficients; empty means equal.  Requires
// matching truncation orders.
std::vector<CoefficientDiff> compare(const BiSeries& lhs, const BiSeries& rhs);

}  // namespace chorddse

#endif
