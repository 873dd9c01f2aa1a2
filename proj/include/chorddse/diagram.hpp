#ifndef CHORDDSE_DIAGRAM_HPP
#define CHORDDSE_DIAGRAM_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace chorddse {

using PointPair = std::pair<int, int>;

// Crossing graph on intersection-order labels 1..n.
struct IntersectionGraph {
    int size = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted

    bool adjacent(int i, int j) const;
    bool connected() const;
};

struct TerminalData {
    std::vector<int> ter;  // sorted terminal labels
    int base = 0;          // b(C) = min(ter)
};

// A rooted chord diagram: a fixed-point-free involution of {1..2n} given as
// pairs (x_i, y_i) with x_1 < ... < x_n and x_i < y_i, carrying one positive
// integer decoration per chord.  Decorations are indexed by the chord's
// intersection-order label, so decorated construction requires a connected
// diagram.
class ChordDiagram {
public:
    ChordDiagram() = default;

    // Validates and canonicalizes; throws std::invalid_argument on duplicate,
    // missing or out-of-range points, fixed points, decoration count mismatch
    // or decorations < 1.  An empty decoration list means all ones.
    static ChordDiagram create(std::vector<PointPair> pairs,
                               std::vector<int> decorations = {});

    int size() const { return static_cast<int>(pairs_.size()); }
    int norm() const;  // sum of decorations

    const std::vector<PointPair>& pairs() const { return pairs_; }
    int partner(int point) const;
    bool connected() const { return !label_of_pair_.empty() || size() <= 1; }

    const std::vector<int>& decorations() const { return decorations_; }
    int decoration(int label) const { return decorations_.at(label - 1); }

    // Intersection-order label of pairs()[pair_index] (connected diagrams).
    int label_of_pair(int pair_index) const;
    // Chord (as a point pair) with the given intersection-order label.
    PointPair chord_of_label(int label) const;

    bool operator==(const ChordDiagram&) const = default;
    bool operator<(const ChordDiagram& other) const;

    std::string to_string() const;

private:
    std::vector<PointPair> pairs_;
    std::vector<int> partner_;        // 1-based; partner_[p] = involution image
    std::vector<int> decorations_;    // by intersection-order label
    std::vector<int> label_of_pair_;  // by pair index; empty if disconnected
};

IntersectionGraph crossings(const ChordDiagram& c);
bool is_connected(const ChordDiagram& c);

// Connected components (by crossings) of the chords at the given pair
// indices.  Components are sorted internally by first endpoint and ordered
// by their smallest endpoint.
std::vector<std::vector<int>> crossing_components(const std::vector<PointPair>& pairs,
                                                  const std::vector<int>& subset);

// The recursive labeling: the root chord gets the next label, then the
// connected components of the remainder are visited in the order of their
// smallest endpoint; the root of a component is its chord with the smallest
// endpoint.  Returns the label of each chord indexed like `pairs`.
// Throws on disconnected input.
std::vector<int> intersection_order(const std::vector<PointPair>& pairs);

TerminalData terminal_data(const ChordDiagram& c);

// All rooted connected diagrams with n chords (all-ones decorations), in
// lexicographic order of the partner assignment.
void enumerate_connected(int n, const std::function<void(const ChordDiagram&)>& fn);
std::vector<ChordDiagram> enumerate_connected(int n);

// All decorated rooted connected diagrams with ||C|| = total and every
// decoration in 1..max_decoration; sizes range over 1..total.
void enumerate_decorated(int total, int max_decoration,
                         const std::function<void(const ChordDiagram&)>& fn);
std::vector<ChordDiagram> enumerate_decorated(int total, int max_decoration);

}  // namespace chorddse

#endif
