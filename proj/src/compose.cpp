#include "chorddse/compose.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chorddse {

std::vector<PointPair> normalize_pairs(std::vector<PointPair> pairs) {
    std::vector<int> points;
    for (const auto& [x, y] : pairs) {
        points.push_back(x);
        points.push_back(y);
    }
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        throw std::invalid_argument("normalize: duplicate endpoint");
    std::map<int, int> rank;
    for (size_t t = 0; t < points.size(); ++t) rank[points[t]] = static_cast<int>(t) + 1;
    for (auto& [x, y] : pairs) {
        x = rank[x];
        y = rank[y];
    }
    return pairs;
}

namespace {

// Rebuilds a diagram from pairs plus per-chord decorations given by point
// membership, re-indexing the decorations by the new intersection order.
ChordDiagram assemble(std::vector<PointPair> pairs, const std::map<PointPair, int>& dec_of_pair) {
    ChordDiagram plain = ChordDiagram::create(std::move(pairs));
    std::vector<int> dec(plain.size(), 1);
    for (int t = 0; t < plain.size(); ++t)
        dec[plain.label_of_pair(t) - 1] = dec_of_pair.at(plain.pairs()[t]);
    return ChordDiagram::create(plain.pairs(), dec);
}

}  // namespace

ChordDiagram insert(const ChordDiagram& c, const ChordDiagram& d, int k) {
    const int n = c.size();
    const int m = d.size();
    if (k < 1 || k > 2 * m - 1)
        throw std::out_of_range("insert: k must lie in 1..2|D|-1");
    if (!c.connected() || !d.connected())
        throw std::invalid_argument("insert: operands must be connected");

    std::vector<PointPair> pairs;
    std::map<PointPair, int> dec;
    pairs.reserve(n + m);
    for (int t = 0; t < n; ++t) {
        auto [x, y] = c.pairs()[t];
        PointPair placed = (x == 1) ? PointPair{1, y + k} : PointPair{x + k, y + k};
        pairs.push_back(placed);
        dec[placed] = c.decoration(c.label_of_pair(t));
    }
    auto shift = [&](int p) { return p <= k ? p + 1 : p + 2 * n; };
    for (int t = 0; t < m; ++t) {
        auto [x, y] = d.pairs()[t];
        PointPair placed{shift(x), shift(y)};
        pairs.push_back(placed);
        dec[placed] = d.decoration(d.label_of_pair(t));
    }
    return assemble(std::move(pairs), dec);
}

RootShareDecomposition root_share_decompose(const ChordDiagram& c) {
    if (c.size() <= 1)
        throw std::invalid_argument("root_share_decompose: single chord has no decomposition");
    if (!c.connected())
        throw std::invalid_argument("root_share_decompose: diagram not connected");

    std::vector<int> rest(c.size() - 1);
    std::iota(rest.begin(), rest.end(), 1);
    auto components = crossing_components(c.pairs(), rest);
    const std::vector<int>& first = components.front();

    std::vector<bool> in_first(c.size(), false);
    for (int t : first) in_first[t] = true;

    auto part = [&](bool pick_first, std::vector<int>& labels_in_c) {
        std::vector<PointPair> raw;
        std::vector<int> source_dec;
        std::vector<int> source_label;
        for (int t = 0; t < c.size(); ++t) {
            bool belongs = (t == 0) ? !pick_first : (in_first[t] == pick_first);
            if (!belongs) continue;
            raw.push_back(c.pairs()[t]);
            source_label.push_back(c.label_of_pair(t));
            source_dec.push_back(c.decoration(source_label.back()));
        }
        std::vector<PointPair> norm = normalize_pairs(raw);
        std::map<PointPair, int> dec;
        std::map<PointPair, int> src;
        for (size_t t = 0; t < norm.size(); ++t) {
            dec[norm[t]] = source_dec[t];
            src[norm[t]] = source_label[t];
        }
        ChordDiagram d = assemble(norm, dec);
        labels_in_c.assign(d.size(), 0);
        for (int t = 0; t < d.size(); ++t)
            labels_in_c[d.label_of_pair(t) - 1] = src.at(d.pairs()[t]);
        return d;
    };

    RootShareDecomposition out;
    out.inner = part(true, out.inner_labels);
    out.outer = part(false, out.outer_labels);

    // The non-root chords of C' sit in one contiguous block of points, the
    // k-th interval of C''; the block starts right after the first k+1 points.
    int block_min = 2 * c.size() + 1;
    for (int t = 1; t < c.size(); ++t) {
        if (in_first[t]) continue;
        block_min = std::min(block_min, c.pairs()[t].first);
    }
    block_min = std::min(block_min, c.pairs()[0].second);  // root's far endpoint
    out.index = block_min - 2;

    if (!(insert(out.outer, out.inner, out.index) == c))
        throw std::logic_error("root_share_decompose: reconstruction failed for " + c.to_string());
    return out;
}

}  // namespace chorddse
