#ifndef CHORDDSE_TREE_HPP
#define CHORDDSE_TREE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chorddse/compose.hpp"
#include "chorddse/diagram.hpp"

namespace chorddse {

// Rooted plane binary tree with integer leaf labels.  Immutable; copies are
// cheap (shared structure).  Label 0 is reserved for virtual-insertion
// marker leaves.
class LabeledTree {
public:
    LabeledTree() = default;

    static LabeledTree leaf(int label);
    static LabeledTree branch(LabeledTree left, LabeledTree right);

    bool empty() const { return node_ == nullptr; }
    bool is_leaf() const;
    int label() const;  // leaves only
    LabeledTree left() const;
    LabeledTree right() const;

    int leaf_count() const;
    // Number of edges including the virtual edge above the root.
    int edge_count() const { return 2 * leaf_count() - 1; }

    std::vector<int> leaf_labels_plane() const;   // left to right
    std::vector<int> leaf_labels_sorted() const;  // ascending
    int min_label() const;
    // Label at the end of the fully right branch.
    int fully_right_leaf_label() const;

    bool operator==(const LabeledTree& other) const;
    bool operator<(const LabeledTree& other) const;

    std::string to_string() const;  // nested parentheses, e.g. "((1,2),3)"

private:
    struct Node;
    explicit LabeledTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Position of a subtree: steps from the root, false = left, true = right.
// The empty path denotes the whole tree.
using TreePath = std::vector<bool>;

// Insertion T o_k U: edges of U are numbered with the virtual edge as 1 and
// the rest in pre-order; a new vertex in the middle of edge k takes T as its
// left subtree and the subtree below the edge as its right subtree.
LabeledTree tree_insert(const LabeledTree& t, const LabeledTree& u, int k);

// The insertion tree T(C), built recursively from the root share
// decomposition; leaves carry the intersection-order labels of C.
LabeledTree insertion_tree(const ChordDiagram& c);

// nu indexed by leaf label (entry [l-1] for label l): the length of the
// maximal upward chain of right-child edges starting at the leaf.
std::vector<int> branch_left_vector(const LabeledTree& t);
std::vector<int> branch_left_vector(const ChordDiagram& c);

// Adds a marker left-leaf (label 0) in the middle of edge k; used to compute
// weight increments.  Same edge numbering as tree_insert.
LabeledTree virtual_insert(const LabeledTree& t, int k);

LabeledTree subtree_at(const LabeledTree& t, const TreePath& path);
// Removes a proper subtree and contracts the dangling edge.
LabeledTree remove_subtree(const LabeledTree& t, const TreePath& path);

// Smallest subtree containing the minimal label whose removal preserves P1;
// the left side of the root share decomposition on trees.
std::optional<TreePath> smallest_removable_subtree(const LabeledTree& t);

// The instree-shape conditions P1 and P2, checked recursively; true exactly
// for trees of the form T(C).
bool is_admissible(const LabeledTree& t);

// Shuffles of the ordered alphabets {under 1..k} and {over 1..m}: every
// interleaving preserving both internal orders.  Entries are +i for under i
// and -i for over i.
std::vector<std::vector<int>> shuffle_sequences(int under_count, int over_count);

// All admissible labelings of the tree grafting h1 (left) and h2 (right) at
// a new root, where h1 = T(D1), h2 = T(D2) carry their own labels 1..|Di|
// and b2 = b(D2).  One output per prefix length k = 1..b(D1) and per shuffle
// of {under 1..k} with {over 1..b2} ending in the top over-label; results are
// sorted and pairwise distinct.
std::vector<LabeledTree> admissible_labelings(const LabeledTree& h1, const LabeledTree& h2,
                                              int b2);

// Inverse of insertion_tree: the unique connected diagram whose insertion
// tree equals t (labels 1..n, all-ones decorations).  Throws if t is not
// admissible.
ChordDiagram diagram_of_tree(const LabeledTree& t);

// Splits T(C) at the root: left and right subtrees turned back into
// decorated diagrams via the tree bijection.
std::pair<ChordDiagram, ChordDiagram> diamond_split(const ChordDiagram& c);

enum class ThreewayCase { root, left_subtree, right_subtree };

struct ThreewayResult {
    ThreewayCase tag = ThreewayCase::root;
    ChordDiagram composed;  // C = C' o_k C2
    ChordDiagram d1;        // diamond pieces of C after reassociation
    ChordDiagram d2;
};

// Reassociates C' o_k (C'' diamond C''') according to where edge k lands in
// the tree of C2 = C'' diamond C''' and checks that both routes rebuild the
// same diagram.
ThreewayResult threeway_cases(const ChordDiagram& c_prime, const ChordDiagram& c2, int k);

const char* to_string(ThreewayCase c);

}  // namespace chorddse

#endif
