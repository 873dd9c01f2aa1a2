#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "chorddse/diagram.hpp"

using namespace chorddse;

namespace {

// Independent oracle: all fixed-point-free involutions on 2n points as
// partner arrays, connectivity decided by DFS on a freshly built crossing
// graph.  Deliberately separate from the library's enumeration path.
void all_involutions(std::vector<int>& partner, int points,
                     const std::function<void(const std::vector<int>&)>& fn) {
    int first = 0;
    for (int p = 1; p <= points && first == 0; ++p)
        if (partner[p] == 0) first = p;
    if (first == 0) {
        fn(partner);
        return;
    }
    for (int q = first + 1; q <= points; ++q) {
        if (partner[q] != 0) continue;
        partner[first] = q;
        partner[q] = first;
        all_involutions(partner, points, fn);
        partner[first] = 0;
        partner[q] = 0;
    }
}

bool oracle_connected(const std::vector<PointPair>& pairs) {
    const int n = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            bool cross = pairs[a].first < pairs[b].first && pairs[b].first < pairs[a].second &&
                         pairs[a].second < pairs[b].second;
            if (cross) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return reached == n;
}

std::set<std::vector<PointPair>> oracle_connected_set(int n) {
    std::set<std::vector<PointPair>> out;
    std::vector<int> partner(2 * n + 1, 0);
    all_involutions(partner, 2 * n, [&](const std::vector<int>& match) {
        std::vector<PointPair> pairs;
        for (int p = 1; p <= 2 * n; ++p)
            if (p < match[p]) pairs.emplace_back(p, match[p]);
        if (oracle_connected(pairs)) out.insert(pairs);
    });
    return out;
}

ChordDiagram diagram(std::vector<PointPair> pairs, std::vector<int> dec = {}) {
    return ChordDiagram::create(std::move(pairs), std::move(dec));
}

}  // namespace

TEST_SUITE_BEGIN("diagram");

TEST_CASE("validation accepts the worked examples") {
    ChordDiagram c = diagram({{1, 4}, {2, 6}, {3, 5}});
    CHECK(c.size() == 3);
    CHECK(diagram({{1, 2}}).size() == 1);
}

TEST_CASE("validation rejects broken input") {
    CHECK_THROWS_AS((diagram({{1, 3}, {2, 3}})), std::invalid_argument);   // repeated point
    CHECK_THROWS_AS((diagram({{1, 2}, {3, 5}})), std::invalid_argument);   // out of range
    CHECK_THROWS_AS((diagram({{1, 1}})), std::invalid_argument);           // fixed point
    CHECK_THROWS_AS((diagram({{1, 3}, {2, 5}, {4, 7}})), std::invalid_argument);
    CHECK_THROWS_AS((diagram({{1, 3}, {2, 4}}, {1})), std::invalid_argument);
    CHECK_THROWS_AS((diagram({{1, 3}, {2, 4}}, {1, 0})), std::invalid_argument);
}

TEST_CASE("crossings") {
    CHECK(crossings(diagram({{1, 3}, {2, 4}})).edges ==
          std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(crossings(diagram({{1, 2}, {3, 4}})).edges.empty());
}

TEST_CASE("crossing graph of the five-chord example") {
    // (1,5)(2,10)(3,9)(4,7)(6,8) with intersection-order labels.
    IntersectionGraph g = crossings(diagram({{1, 5}, {2, 10}, {3, 9}, {4, 7}, {6, 8}}));
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {4, 5}});
}

TEST_CASE("connectivity") {
    CHECK(is_connected(diagram({{1, 3}, {2, 4}})));
    CHECK_FALSE(is_connected(diagram({{1, 2}, {3, 4}})));
}

TEST_CASE("exactly 4 of the 15 involutions on 6 points are connected") {
    long total = 0;
    std::vector<int> partner(7, 0);
    all_involutions(partner, 6, [&](const std::vector<int>&) { ++total; });
    CHECK(total == 15);
    CHECK(oracle_connected_set(3).size() == 4);
}

TEST_CASE("intersection order basics") {
    CHECK(intersection_order({{1, 2}}) == std::vector<int>{1});
    // wheel with three spokes: labels in first-endpoint order
    CHECK(intersection_order({{1, 4}, {2, 5}, {3, 6}}) == std::vector<int>{1, 2, 3});
    CHECK(intersection_order({{1, 3}, {2, 5}, {4, 6}}) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS((intersection_order({{1, 2}, {3, 4}})), std::invalid_argument);
}

TEST_CASE("intersection order of a nine-chord diagram") {
    // Components are visited by smallest endpoint; sub-roots hold the
    // smallest point of their component.
    ChordDiagram c = diagram(
        {{1, 5}, {2, 12}, {3, 15}, {4, 7}, {6, 9}, {8, 10}, {11, 13}, {14, 17}, {16, 18}});
    std::vector<std::pair<PointPair, int>> expected = {
        {{1, 5}, 1},  {{2, 12}, 2}, {{3, 15}, 3}, {{14, 17}, 4}, {{16, 18}, 5},
        {{11, 13}, 6}, {{4, 7}, 7},  {{6, 9}, 8},  {{8, 10}, 9}};
    for (const auto& [pair, label] : expected) CHECK(c.chord_of_label(label) == pair);
}

TEST_CASE("intersection order is stable under relabeling") {
    for (const ChordDiagram& c : enumerate_connected(4)) {
        std::vector<int> labels = intersection_order(c.pairs());
        // chord containing point 1 gets label 1
        CHECK(labels[0] == 1);
        CHECK(intersection_order(c.pairs()) == labels);
    }
}

TEST_CASE("terminal data") {
    TerminalData single = terminal_data(diagram({{1, 2}}));
    CHECK(single.ter == std::vector<int>{1});
    CHECK(single.base == 1);

    TerminalData two = terminal_data(diagram({{1, 3}, {2, 4}}));
    CHECK(two.ter == std::vector<int>{2});
    CHECK(two.base == 2);

    TerminalData wheel = terminal_data(diagram({{1, 4}, {2, 5}, {3, 6}}));
    CHECK(wheel.ter == std::vector<int>{3});
    CHECK(wheel.base == 3);
}

TEST_CASE("highest label is always terminal; involution is fixed point free") {
    for (int n = 1; n <= 5; ++n) {
        for (const ChordDiagram& c : enumerate_connected(n)) {
            TerminalData td = terminal_data(c);
            CHECK(td.ter.back() == n);
            for (int p = 1; p <= 2 * n; ++p) {
                CHECK(c.partner(p) != p);
                CHECK(c.partner(c.partner(p)) == p);
            }
        }
    }
}

TEST_CASE("connected enumeration matches the independent oracle") {
    std::vector<long> expected = {1, 1, 4, 27, 248};
    for (int n = 1; n <= 5; ++n) {
        std::vector<ChordDiagram> mine = enumerate_connected(n);
        CHECK(static_cast<long>(mine.size()) == expected[n - 1]);
        std::set<std::vector<PointPair>> oracle = oracle_connected_set(n);
        CHECK(oracle.size() == mine.size());
        for (const ChordDiagram& c : mine) CHECK(oracle.count(c.pairs()) == 1);
    }
    CHECK(enumerate_connected(2).front().pairs() ==
          std::vector<PointPair>{{1, 3}, {2, 4}});
}

TEST_CASE("decorated enumeration") {
    CHECK(enumerate_decorated(1, 1).size() == 1);

    // total=3 with decorations capped at 1: exactly R_3, all ones
    std::vector<ChordDiagram> r3 = enumerate_decorated(3, 1);
    CHECK(r3.size() == 4);
    for (const ChordDiagram& c : r3)
        CHECK(c.decorations() == std::vector<int>{1, 1, 1});

    // total=4, unbounded: the decoration tuples with at least two chords are
    // the seven compositions of four into >= 2 parts
    std::set<std::vector<int>> comps;
    int singles = 0;
    for (const ChordDiagram& c : enumerate_decorated(4, 4)) {
        CHECK(c.norm() == 4);
        if (c.size() == 1)
            ++singles;
        else
            comps.insert(c.decorations());
    }
    std::set<std::vector<int>> expected = {{1, 1, 1, 1}, {2, 1, 1}, {1, 2, 1}, {1, 1, 2},
                                           {2, 2},       {1, 3},    {3, 1}};
    CHECK(comps == expected);
    CHECK(singles == 1);  // the single chord decorated 4
}

TEST_SUITE_END();
