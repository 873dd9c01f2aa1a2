#ifndef CHORDDSE_COMPOSE_HPP
#define CHORDDSE_COMPOSE_HPP

#include <vector>

#include "chorddse/diagram.hpp"

namespace chorddse {

// Order-preserving relabeling of a partial pairing onto {1..2m}; endpoints
// must be distinct.  Pair order is preserved.
std::vector<PointPair> normalize_pairs(std::vector<PointPair> pairs);

// The insertion C o_k D for 1 <= k <= 2|D|-1: the root of C is placed
// immediately before the root of D and the remaining endpoints of C go into
// the k-th interval between the endpoints of D.  Decorations are carried
// along the chords.
ChordDiagram insert(const ChordDiagram& c, const ChordDiagram& d, int k);

struct RootShareDecomposition {
    ChordDiagram outer;  // C' = norm(C \ C1); contains the root of C
    ChordDiagram inner;  // C'' = norm(C1), the first component of C minus the root
    int index = 0;       // the unique i with C = outer o_i inner
    // Induced labeling: entry [l-1] is the label in C of the part's chord l.
    std::vector<int> outer_labels;
    std::vector<int> inner_labels;
};

// Requires |C| > 1 and C connected.  Exact inverse of `insert`.
RootShareDecomposition root_share_decompose(const ChordDiagram& c);

}  // namespace chorddse

#endif
