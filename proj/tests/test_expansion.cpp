#include <doctest.h>

#include <set>
#include <stdexcept>

#include "chorddse/compose.hpp"
#include "chorddse/expansion.hpp"

using namespace chorddse;

namespace {

ChordDiagram diagram(std::vector<PointPair> pairs, std::vector<int> dec = {}) {
    return ChordDiagram::create(std::move(pairs), std::move(dec));
}

SymbolicPolynomial var(int k, int i) { return SymbolicPolynomial::variable({k, i}); }

}  // namespace

TEST_SUITE_BEGIN("expansion");

TEST_CASE("ahat of small diagrams") {
    CHECK(monomial_ahat(diagram({{1, 2}})).is_one());
    // wheel with decorations (1,1,2): a[1,0]^2
    SymbolMonomial wheel = monomial_ahat(diagram({{1, 4}, {2, 5}, {3, 6}}, {1, 1, 2}));
    CHECK(wheel == SymbolMonomial::var({1, 0}, 2));
}

TEST_CASE("the four-chord example monomial and weight") {
    // ter = {3,4}, b = 3, tree (2,((1,4),3)); with decorations d1..d4 the
    // hat-weighted monomial is (d4 s - 1) a[d4,1] a[d1,0] a[d2,0].
    std::vector<int> d = {3, 4, 1, 2};  // d1..d4 by label
    ChordDiagram c = diagram({{1, 6}, {2, 4}, {3, 8}, {5, 7}}, d);
    Rational s(7, 3);
    ChordStats st = chord_stats(c, s);
    CHECK(st.terminal.ter == std::vector<int>{3, 4});
    CHECK(st.terminal.base == 3);
    CHECK(st.weight_hat == Rational(2) * s - 1);  // d4 = 2
    SymbolMonomial expected = SymbolMonomial::var({2, 1}) * SymbolMonomial::var({3, 0}) *
                              SymbolMonomial::var({4, 0});
    CHECK(st.ahat == expected);
    CHECK(st.ahat.factor_count() == c.size() - 1);
}

TEST_CASE("weights of the two-chord diagrams") {
    Rational s(2);
    for (int d1 = 1; d1 <= 4; ++d1) {
        ChordDiagram c = diagram({{1, 3}, {2, 4}}, {1, d1});
        CHECK(weight(c, s) == Rational(d1) * s - 1);
    }
    CHECK(weight(diagram({{1, 2}}), Rational(5, 2)) == Rational(1));
}

TEST_CASE("weights under insertion match the printed products") {
    for (const Rational& s : {Rational(2), Rational(5, 2), Rational(3)}) {
        for (int d1 = 1; d1 <= 3; ++d1) {
            for (int d2 = 1; d2 <= 3; ++d2) {
                ChordDiagram cp = diagram({{1, 3}, {2, 4}}, {1, d1});
                ChordDiagram cpp = diagram({{1, 3}, {2, 4}}, {1, d2});
                Rational w1 = weight(insert(cp, cpp, 1), s);
                Rational w2 = weight(insert(cp, cpp, 2), s);
                Rational w3 = weight(insert(cp, cpp, 3), s);
                CHECK(w1 == gen_binomial(Rational(d2) * s, 2) * (Rational(d1) * s - 1));
                CHECK(w3 == w1);
                CHECK(w2 == (Rational(d1) * s - 1) * (Rational(d2) * s - 1) * (s - 1));
                CHECK(w1 + w2 + w3 == weight(cp, s) * weight(cpp, s) *
                                          (s * (d2 + 1) - 1));
            }
        }
    }
}

TEST_CASE("first coefficients of g_1") {
    ExpansionClasses cls(3, Rational(2), 1);
    XSeries g1 = cls.g_comb(1);
    CHECK(g1.at(0).is_zero());
    CHECK(g1.at(1) == var(1, 0));
}

TEST_CASE("yukawa counts to order five") {
    ExpansionClasses cls(5, Rational(2), 1);
    XSeries g1 = cls.g_comb(1);
    std::vector<long> expected = {1, 1, 4, 27, 248};
    for (int n = 1; n <= 5; ++n) {
        Rational v = g1.at(n).evaluate([](Symbol) { return Rational(1); });
        CHECK(v == Rational(expected[n - 1]));
    }
}

TEST_CASE("green function structure") {
    BiSeries g = g_comb_green(4, 4, Rational(2), 1);
    CHECK(g.at(0, 0) == SymbolicPolynomial(1));
    CHECK(g.at(1, 1) == var(1, 0));
    for (int m = 0; m <= 4; ++m)
        for (int j = m + 1; j <= 4; ++j) CHECK(g.at(m, j).is_zero());
}

TEST_CASE("g_k starts at order k and keeps the index non-negative") {
    ExpansionClasses cls(4, Rational(2), 2);
    for (int k = 1; k <= 4; ++k) {
        XSeries gk = cls.g_comb(k);
        for (int m = 0; m < k; ++m) CHECK(gk.at(m).is_zero());
        for (int m = 0; m <= 4; ++m) {
            for (const auto& [mono, coeff] : gk.at(m).terms()) {
                for (const auto& [sym, e] : mono.exponents()) CHECK(sym.i >= 0);
            }
        }
    }
}

TEST_CASE("restricted sum over norm four, base two") {
    // Full-index version of the displayed pattern
    //   (s-1)^2 a1^2 a0 + (2s^2-3s+1) a2 a0^2 + (4s-3) a0 a1 + 3 a0.
    Rational s(2);
    SymbolicPolynomial sum;
    for (const ChordDiagram& c : enumerate_decorated(4, 3)) {
        ChordStats st = chord_stats(c, s);
        if (st.terminal.base != 2) continue;
        sum += SymbolicPolynomial::monomial(st.ahat, st.weight_hat);
    }
    SymbolicPolynomial expected;
    expected += var(1, 1) * var(1, 1) * var(1, 0) * ((s - 1) * (s - 1));
    expected += var(1, 2) * var(1, 0) * var(1, 0) * (2 * s * s - 3 * s + 1);
    expected += var(1, 1) * var(2, 0) * (s - 1);
    expected += var(1, 1) * var(1, 0) * (s - 1);
    expected += var(2, 1) * var(1, 0) * (2 * s - 1);
    expected += var(1, 0) + var(2, 0) + var(3, 0);
    CHECK(sum == expected);
}

TEST_CASE("ahat has one factor per non-base chord, indices from the diagram") {
    for (int total = 1; total <= 4; ++total) {
        for (const ChordDiagram& c : enumerate_decorated(total, 3)) {
            SymbolMonomial ahat = monomial_ahat(c);
            CHECK(ahat.factor_count() == c.size() - 1);
            std::set<int> present(c.decorations().begin(), c.decorations().end());
            for (const auto& [sym, e] : ahat.exponents()) CHECK(present.count(sym.k) == 1);
        }
    }
}

TEST_CASE("monomial reconstruction on the decorated wheel") {
    // ahat(C) a[d(b), b-l] = ahat(C1) a[d1, b1-1] ahat(C2) a[d2, b2-l+1]
    ChordDiagram wheel = diagram({{1, 4}, {2, 5}, {3, 6}}, {1, 1, 2});
    RootShareDecomposition rsd = root_share_decompose(wheel);
    int b = terminal_data(wheel).base;
    REQUIRE(b == 3);
    for (int l = 2; l < b; ++l) {
        SymbolMonomial lhs =
            monomial_ahat(wheel) * SymbolMonomial::var({wheel.decoration(b), b - l});
        int b1 = terminal_data(rsd.outer).base;
        int b2 = terminal_data(rsd.inner).base;
        SymbolMonomial rhs = monomial_ahat(rsd.outer) *
                             SymbolMonomial::var({rsd.outer.decoration(b1), b1 - 1}) *
                             monomial_ahat(rsd.inner) *
                             SymbolMonomial::var({rsd.inner.decoration(b2), b2 - l + 1});
        CHECK(lhs == rhs);
        // both sides are a[1,0]^2 a[2,3-l]
        CHECK(lhs == SymbolMonomial::var({1, 0}, 2) * SymbolMonomial::var({2, 3 - l}));
    }
}

TEST_CASE("identity registry names and unknown identities") {
    CHECK(identity_names().size() == 12);
    CHECK_THROWS_AS(verify_identity("nosuch", 3, Rational(2), 3), std::invalid_argument);
}

TEST_CASE("identity sweep at a small bound") {
    for (const std::string& name : identity_names()) {
        for (const Rational& s : {Rational(2), Rational(5, 2)}) {
            IdentityReport r = verify_identity(name, 4, s, 4);
            INFO(name, " s=", rational_to_string(s), " -> ", r.counterexample);
            CHECK(r.holds);
            CHECK(r.instances > 0);
        }
    }
}

TEST_SUITE_END();
