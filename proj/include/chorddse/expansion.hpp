#ifndef CHORDDSE_EXPANSION_HPP
#define CHORDDSE_EXPANSION_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "chorddse/diagram.hpp"
#include "chorddse/series.hpp"
#include "chorddse/tree.hpp"

namespace chorddse {

// Per-diagram data entering the expansion.
struct ChordStats {
    int norm = 0;
    TerminalData terminal;
    std::vector<int> nu;  // branch-left vector by label
    Rational weight;      // product over all chords
    Rational weight_hat;  // without the base-chord factor
    SymbolMonomial ahat;  // |C| - 1 symbol factors
};

// Product over terminal chords t_1..t_m of a[d(t_c), t_c - t_{c-1}] times
// a[d(k), 0] over non-terminal chords; the base chord contributes nothing.
SymbolMonomial monomial_ahat(const ChordDiagram& c);

Rational weight(const ChordDiagram& c, const Rational& s);
Rational weight_hat(const ChordDiagram& c, const Rational& s);
// Weight of a tree with marker leaves; markers contribute no factor.
// decoration_of maps a leaf label to its decoration.
Rational tree_weight(const LabeledTree& t, const Rational& s,
                     const std::vector<int>& decoration_by_label);

ChordStats chord_stats(const ChordDiagram& c, const Rational& s);

// Sums of omega_C * ahat_C grouped by (norm, base label, base decoration);
// shared by every g_k.
class ExpansionClasses {
public:
    ExpansionClasses(int x_order, const Rational& s, int max_decoration, unsigned threads = 1);

    int x_order() const { return x_order_; }
    const Rational& s() const { return s_; }
    int max_decoration() const { return max_decoration_; }

    // g_k(x) = sum over b(C) >= k of x^||C|| omega ahat a[d(b), b-k].
    XSeries g_comb(int k) const;
    // G(x,L) = 1 - sum_k (-L)^k/k! g_k(x), truncated.
    BiSeries green_function(int l_order) const;

private:
    int x_order_;
    Rational s_;
    int max_decoration_;
    std::map<std::tuple<int, int, int>, SymbolicPolynomial> classes_;
};

XSeries g_comb(int k, int x_order, const Rational& s, int max_decoration, unsigned threads = 1);
BiSeries g_comb_green(int x_order, int l_order, const Rational& s, int max_decoration,
                      unsigned threads = 1);

struct IdentityReport {
    std::string identity;
    int bound = 0;
    long instances = 0;
    bool holds = false;
    std::string counterexample;  // empty when holds
};

const std::vector<std::string>& identity_names();

// Checks one registered identity exactly on all instances up to the norm
// bound, with decorations capped at max_decoration.  Throws on unknown names.
IdentityReport verify_identity(const std::string& name, int bound, const Rational& s,
                               int max_decoration);

}  // namespace chorddse

#endif
