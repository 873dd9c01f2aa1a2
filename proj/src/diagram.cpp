#include "chorddse/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chorddse {

namespace {

bool chords_cross(const PointPair& a, const PointPair& b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

}  // namespace

std::vector<std::vector<int>> crossing_components(const std::vector<PointPair>& pairs,
                                                  const std::vector<int>& subset) {
    std::vector<int> comp(subset.size());
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (comp[v] != v) v = comp[v] = comp[comp[v]];
        return v;
    };
    for (size_t a = 0; a < subset.size(); ++a)
        for (size_t b = a + 1; b < subset.size(); ++b)
            if (chords_cross(pairs[subset[a]], pairs[subset[b]])) comp[find(a)] = find(b);

    std::vector<std::vector<int>> groups;
    std::vector<int> root_to_group(subset.size(), -1);
    for (size_t a = 0; a < subset.size(); ++a) {
        int r = find(a);
        if (root_to_group[r] < 0) {
            root_to_group[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[root_to_group[r]].push_back(subset[a]);
    }
    std::sort(groups.begin(), groups.end(), [&](const auto& g1, const auto& g2) {
        return pairs[g1.front()].first < pairs[g2.front()].first;
    });
    return groups;
}

namespace {

void order_recurse(const std::vector<PointPair>& pairs, const std::vector<int>& subset,
                   int& next_label, std::vector<int>& labels) {
    // The root of the current sub-diagram is the chord holding its smallest
    // endpoint; `subset` is kept sorted by first endpoint, so that is the
    // front element.
    int root = subset.front();
    labels[root] = next_label++;
    if (subset.size() == 1) return;
    std::vector<int> rest(subset.begin() + 1, subset.end());
    for (const auto& component : crossing_components(pairs, rest))
        order_recurse(pairs, component, next_label, labels);
}

}  // namespace

bool IntersectionGraph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

bool IntersectionGraph::connected() const {
    if (size <= 1) return true;
    std::vector<std::vector<int>> adj(size + 1);
    for (const auto& [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<bool> seen(size + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return reached == size;
}

ChordDiagram ChordDiagram::create(std::vector<PointPair> pairs, std::vector<int> decorations) {
    if (pairs.empty()) throw std::invalid_argument("diagram: no chords");
    const int n = static_cast<int>(pairs.size());
    std::vector<int> partner(2 * n + 1, 0);
    for (auto& [x, y] : pairs) {
        if (x == y) throw std::invalid_argument("diagram: fixed point " + std::to_string(x));
        if (x > y) std::swap(x, y);
        for (int p : {x, y}) {
            if (p < 1 || p > 2 * n)
                throw std::invalid_argument("diagram: point out of range " + std::to_string(p));
            if (partner[p] != 0)
                throw std::invalid_argument("diagram: point repeated " + std::to_string(p));
        }
        partner[x] = y;
        partner[y] = x;
    }
    for (int p = 1; p <= 2 * n; ++p)
        if (partner[p] == 0)
            throw std::invalid_argument("diagram: point missing " + std::to_string(p));
    std::sort(pairs.begin(), pairs.end());

    ChordDiagram c;
    c.pairs_ = std::move(pairs);
    c.partner_ = std::move(partner);

    bool conn = true;
    if (n > 1) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        conn = crossing_components(c.pairs_, all).size() == 1;
    }
    if (conn) {
        c.label_of_pair_ = intersection_order(c.pairs_);
    }

    if (decorations.empty()) {
        c.decorations_.assign(n, 1);
    } else {
        if (static_cast<int>(decorations.size()) != n)
            throw std::invalid_argument("diagram: decoration count mismatch");
        for (int d : decorations)
            if (d < 1) throw std::invalid_argument("diagram: decoration < 1");
        if (!conn)
            throw std::invalid_argument(
                "diagram: decorations are indexed by intersection order and need a "
                "connected diagram");
        c.decorations_ = std::move(decorations);
    }
    return c;
}

int ChordDiagram::norm() const {
    int total = 0;
    for (int d : decorations_) total += d;
    return total;
}

int ChordDiagram::partner(int point) const {
    if (point < 1 || point >= static_cast<int>(partner_.size()))
        throw std::out_of_range("partner: point out of range");
    return partner_[point];
}

int ChordDiagram::label_of_pair(int pair_index) const {
    if (label_of_pair_.empty()) throw std::logic_error("label_of_pair: diagram not connected");
    return label_of_pair_.at(pair_index);
}

PointPair ChordDiagram::chord_of_label(int label) const {
    if (label_of_pair_.empty()) throw std::logic_error("chord_of_label: diagram not connected");
    for (size_t t = 0; t < label_of_pair_.size(); ++t)
        if (label_of_pair_[t] == label) return pairs_[t];
    throw std::out_of_range("chord_of_label: no such label");
}

bool ChordDiagram::operator<(const ChordDiagram& other) const {
    if (pairs_ != other.pairs_) return pairs_ < other.pairs_;
    return decorations_ < other.decorations_;
}

std::string ChordDiagram::to_string() const {
    std::ostringstream out;
    for (const auto& [x, y] : pairs_) out << "(" << x << "," << y << ")";
    bool plain = true;
    for (int d : decorations_) plain = plain && d == 1;
    if (!plain) {
        out << " d=(";
        for (size_t t = 0; t < decorations_.size(); ++t)
            out << (t ? "," : "") << decorations_[t];
        out << ")";
    }
    return out.str();
}

IntersectionGraph crossings(const ChordDiagram& c) {
    IntersectionGraph g;
    g.size = c.size();
    const auto& pairs = c.pairs();
    // Uses intersection-order labels for connected diagrams; falls back to
    // first-endpoint order otherwise so connectivity is still decidable.
    std::vector<int> label(pairs.size());
    if (c.connected()) {
        for (size_t t = 0; t < pairs.size(); ++t) label[t] = c.label_of_pair(static_cast<int>(t));
    } else {
        std::iota(label.begin(), label.end(), 1);
    }
    for (size_t a = 0; a < pairs.size(); ++a) {
        for (size_t b = a + 1; b < pairs.size(); ++b) {
            if (chords_cross(pairs[a], pairs[b])) {
                int i = label[a], j = label[b];
                if (i > j) std::swap(i, j);
                g.edges.emplace_back(i, j);
            }
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

bool is_connected(const ChordDiagram& c) { return c.connected(); }

std::vector<int> intersection_order(const std::vector<PointPair>& pairs) {
    std::vector<int> subset(pairs.size());
    std::iota(subset.begin(), subset.end(), 0);
    if (pairs.size() > 1 && crossing_components(pairs, subset).size() != 1)
        throw std::invalid_argument("intersection_order: diagram not connected");
    std::vector<int> labels(pairs.size(), 0);
    int next = 1;
    order_recurse(pairs, subset, next, labels);
    return labels;
}

TerminalData terminal_data(const ChordDiagram& c) {
    if (!c.connected()) throw std::invalid_argument("terminal_data: diagram not connected");
    IntersectionGraph g = crossings(c);
    TerminalData t;
    for (int i = 1; i <= c.size(); ++i) {
        bool crosses_higher = false;
        for (int j = i + 1; j <= c.size() && !crosses_higher; ++j)
            crosses_higher = g.adjacent(i, j);
        if (!crosses_higher) t.ter.push_back(i);
    }
    t.base = t.ter.front();
    return t;
}

namespace {

void enumerate_pairings(std::vector<int>& partner, int points,
                        const std::function<void(const std::vector<int>&)>& fn) {
    int first = 0;
    for (int p = 1; p <= points; ++p) {
        if (partner[p] == 0) {
            first = p;
            break;
        }
    }
    if (first == 0) {
        fn(partner);
        return;
    }
    for (int q = first + 1; q <= points; ++q) {
        if (partner[q] != 0) continue;
        partner[first] = q;
        partner[q] = first;
        enumerate_pairings(partner, points, fn);
        partner[first] = 0;
        partner[q] = 0;
    }
}

}  // namespace

void enumerate_connected(int n, const std::function<void(const ChordDiagram&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumerate_connected: n must be positive");
    std::vector<int> partner(2 * n + 1, 0);
    enumerate_pairings(partner, 2 * n, [&](const std::vector<int>& match) {
        std::vector<PointPair> pairs;
        pairs.reserve(n);
        for (int p = 1; p <= 2 * n; ++p)
            if (p < match[p]) pairs.emplace_back(p, match[p]);
        ChordDiagram c = ChordDiagram::create(std::move(pairs));
        if (c.connected()) fn(c);
    });
}

std::vector<ChordDiagram> enumerate_connected(int n) {
    std::vector<ChordDiagram> out;
    enumerate_connected(n, [&](const ChordDiagram& c) { out.push_back(c); });
    return out;
}

namespace {

void enumerate_compositions(int total, int parts, int max_part, std::vector<int>& acc,
                            const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        if (total >= 1 && total <= max_part) {
            acc.push_back(total);
            fn(acc);
            acc.pop_back();
        }
        return;
    }
    int cap = std::min(max_part, total - (parts - 1));
    for (int d = 1; d <= cap; ++d) {
        acc.push_back(d);
        enumerate_compositions(total - d, parts - 1, max_part, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void enumerate_decorated(int total, int max_decoration,
                         const std::function<void(const ChordDiagram&)>& fn) {
    if (total < 1) throw std::invalid_argument("enumerate_decorated: total must be positive");
    if (max_decoration < 1)
        throw std::invalid_argument("enumerate_decorated: max_decoration must be positive");
    for (int n = 1; n <= total; ++n) {
        if (n > total) break;
        std::vector<ChordDiagram> shapes = enumerate_connected(n);
        std::vector<int> acc;
        for (const ChordDiagram& shape : shapes) {
            enumerate_compositions(total, n, max_decoration, acc,
                                   [&](const std::vector<int>& d) {
                                       fn(ChordDiagram::create(shape.pairs(), d));
                                   });
        }
    }
}

std::vector<ChordDiagram> enumerate_decorated(int total, int max_decoration) {
    std::vector<ChordDiagram> out;
    enumerate_decorated(total, max_decoration, [&](const ChordDiagram& c) { out.push_back(c); });
    return out;
}

}  // namespace chorddse
