#include "chorddse/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chorddse {

struct LabeledTree::Node {
    int label = 0;
    std::shared_ptr<const Node> l, r;
    int leaves = 1;
};

LabeledTree LabeledTree::leaf(int label) {
    auto n = std::make_shared<Node>();
    n->label = label;
    return LabeledTree(std::move(n));
}

LabeledTree LabeledTree::branch(LabeledTree left, LabeledTree right) {
    if (left.empty() || right.empty()) throw std::invalid_argument("branch: empty child");
    auto n = std::make_shared<Node>();
    n->l = left.node_;
    n->r = right.node_;
    n->leaves = left.leaf_count() + right.leaf_count();
    return LabeledTree(std::move(n));
}

bool LabeledTree::is_leaf() const {
    if (empty()) throw std::logic_error("is_leaf: empty tree");
    return node_->l == nullptr;
}

int LabeledTree::label() const {
    if (!is_leaf()) throw std::logic_error("label: not a leaf");
    return node_->label;
}

LabeledTree LabeledTree::left() const {
    if (is_leaf()) throw std::logic_error("left: leaf has no children");
    return LabeledTree(node_->l);
}

LabeledTree LabeledTree::right() const {
    if (is_leaf()) throw std::logic_error("right: leaf has no children");
    return LabeledTree(node_->r);
}

int LabeledTree::leaf_count() const {
    if (empty()) return 0;
    return node_->leaves;
}

namespace {

void collect_plane(const LabeledTree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.label());
        return;
    }
    collect_plane(t.left(), out);
    collect_plane(t.right(), out);
}

}  // namespace

std::vector<int> LabeledTree::leaf_labels_plane() const {
    std::vector<int> out;
    collect_plane(*this, out);
    return out;
}

std::vector<int> LabeledTree::leaf_labels_sorted() const {
    std::vector<int> out = leaf_labels_plane();
    std::sort(out.begin(), out.end());
    return out;
}

int LabeledTree::min_label() const {
    std::vector<int> labels = leaf_labels_plane();
    return *std::min_element(labels.begin(), labels.end());
}

int LabeledTree::fully_right_leaf_label() const {
    LabeledTree t = *this;
    while (!t.is_leaf()) t = t.right();
    return t.label();
}

bool LabeledTree::operator==(const LabeledTree& other) const {
    if (empty() || other.empty()) return empty() == other.empty();
    if (node_ == other.node_) return true;
    if (is_leaf() != other.is_leaf()) return false;
    if (is_leaf()) return label() == other.label();
    return left() == other.left() && right() == other.right();
}

bool LabeledTree::operator<(const LabeledTree& other) const {
    return to_string() < other.to_string();
}

std::string LabeledTree::to_string() const {
    if (empty()) return "()";
    if (is_leaf()) return std::to_string(label());
    return "(" + left().to_string() + "," + right().to_string() + ")";
}

namespace {

// Insertion at an internal (non-virtual) edge; edges numbered in pre-order
// starting at 1 for the edge from the root to its left child.
LabeledTree insert_internal(const LabeledTree& t, const LabeledTree& u, int e) {
    if (u.is_leaf()) throw std::out_of_range("tree_insert: edge index out of range");
    int left_edges = u.left().edge_count() - 1;  // internal edges of the left subtree
    if (e == 1) return LabeledTree::branch(LabeledTree::branch(t, u.left()), u.right());
    if (e <= 1 + left_edges)
        return LabeledTree::branch(insert_internal(t, u.left(), e - 1), u.right());
    if (e == left_edges + 2)
        return LabeledTree::branch(u.left(), LabeledTree::branch(t, u.right()));
    return LabeledTree::branch(u.left(), insert_internal(t, u.right(), e - left_edges - 2));
}

}  // namespace

LabeledTree tree_insert(const LabeledTree& t, const LabeledTree& u, int k) {
    if (k < 1 || k > u.edge_count())
        throw std::out_of_range("tree_insert: edge index out of range");
    if (k == 1) return LabeledTree::branch(t, u);
    return insert_internal(t, u, k - 1);
}

namespace {

LabeledTree insertion_tree_impl(const ChordDiagram& c, const std::vector<int>& global_label) {
    if (c.size() == 1) return LabeledTree::leaf(global_label[0]);
    RootShareDecomposition rsd = root_share_decompose(c);
    auto compose_labels = [&](const std::vector<int>& local) {
        std::vector<int> out(local.size());
        for (size_t t = 0; t < local.size(); ++t) out[t] = global_label[local[t] - 1];
        return out;
    };
    LabeledTree outer = insertion_tree_impl(rsd.outer, compose_labels(rsd.outer_labels));
    LabeledTree inner = insertion_tree_impl(rsd.inner, compose_labels(rsd.inner_labels));
    return tree_insert(outer, inner, rsd.index);
}

}  // namespace

LabeledTree insertion_tree(const ChordDiagram& c) {
    if (!c.connected()) throw std::invalid_argument("insertion_tree: diagram not connected");
    std::vector<int> identity(c.size());
    for (int t = 0; t < c.size(); ++t) identity[t] = t + 1;
    return insertion_tree_impl(c, identity);
}

namespace {

void branch_left_walk(const LabeledTree& t, int right_chain, std::map<int, int>& nu) {
    if (t.is_leaf()) {
        if (t.label() > 0) nu[t.label()] = right_chain;
        return;
    }
    branch_left_walk(t.left(), 0, nu);
    branch_left_walk(t.right(), right_chain + 1, nu);
}

}  // namespace

std::vector<int> branch_left_vector(const LabeledTree& t) {
    std::map<int, int> nu;
    branch_left_walk(t, 0, nu);
    std::vector<int> out;
    out.reserve(nu.size());
    int expect = 1;
    for (const auto& [label, v] : nu) {
        if (label != expect++)
            throw std::invalid_argument("branch_left_vector: labels are not 1..n");
        out.push_back(v);
    }
    return out;
}

std::vector<int> branch_left_vector(const ChordDiagram& c) {
    return branch_left_vector(insertion_tree(c));
}

LabeledTree virtual_insert(const LabeledTree& t, int k) {
    return tree_insert(LabeledTree::leaf(0), t, k);
}

LabeledTree subtree_at(const LabeledTree& t, const TreePath& path) {
    LabeledTree cur = t;
    for (bool step : path) cur = step ? cur.right() : cur.left();
    return cur;
}

namespace {

LabeledTree remove_impl(const LabeledTree& t, const TreePath& path, size_t depth) {
    if (t.is_leaf()) throw std::invalid_argument("remove_subtree: path leaves the tree");
    bool step = path[depth];
    if (depth + 1 == path.size()) {
        // Contract: the parent is replaced by the kept sibling.
        return step ? t.left() : t.right();
    }
    if (step) return LabeledTree::branch(t.left(), remove_impl(t.right(), path, depth + 1));
    return LabeledTree::branch(remove_impl(t.left(), path, depth + 1), t.right());
}

}  // namespace

LabeledTree remove_subtree(const LabeledTree& t, const TreePath& path) {
    if (path.empty()) throw std::invalid_argument("remove_subtree: cannot remove the whole tree");
    return remove_impl(t, path, 0);
}

namespace {

// P1 at one vertex, existential form: some label in the left subtree is
// smaller than the label at the end of the fully right branch of the right
// subtree.  Marker leaves (label 0) never witness the comparison.
bool p1_at(const LabeledTree& node) {
    int bound = node.right().fully_right_leaf_label();
    for (int l : node.left().leaf_labels_plane())
        if (l > 0 && l < bound) return true;
    return false;
}

bool p1_everywhere(const LabeledTree& t) {
    if (t.is_leaf()) return true;
    return p1_at(t) && p1_everywhere(t.left()) && p1_everywhere(t.right());
}

TreePath path_to_min_label(const LabeledTree& t) {
    TreePath path;
    LabeledTree cur = t;
    while (!cur.is_leaf()) {
        int target = cur.min_label();
        std::vector<int> left_labels = cur.left().leaf_labels_plane();
        bool go_right =
            std::find(left_labels.begin(), left_labels.end(), target) == left_labels.end();
        path.push_back(go_right);
        cur = go_right ? cur.right() : cur.left();
    }
    return path;
}

LabeledTree renormalized(const LabeledTree& t) {
    std::vector<int> sorted = t.leaf_labels_sorted();
    std::map<int, int> rank;
    for (size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<int>(i) + 1;
    std::function<LabeledTree(const LabeledTree&)> rebuild = [&](const LabeledTree& n) {
        if (n.is_leaf()) return LabeledTree::leaf(rank.at(n.label()));
        return LabeledTree::branch(rebuild(n.left()), rebuild(n.right()));
    };
    return rebuild(t);
}

}  // namespace

std::optional<TreePath> smallest_removable_subtree(const LabeledTree& t) {
    if (t.leaf_count() < 2)
        throw std::invalid_argument("smallest_removable_subtree: need at least two leaves");
    TreePath chain = path_to_min_label(t);
    // Candidates along the ancestor chain of the minimal leaf, smallest first.
    for (size_t len = chain.size(); len >= 1; --len) {
        TreePath candidate(chain.begin(), chain.begin() + len);
        if (p1_everywhere(remove_subtree(t, candidate))) return candidate;
    }
    return std::nullopt;
}

namespace {

bool admissible_normalized(const LabeledTree& t) {
    if (t.is_leaf()) return true;
    if (!p1_everywhere(t)) return false;
    auto h_path = smallest_removable_subtree(t);
    if (!h_path) return false;
    LabeledTree h = subtree_at(t, *h_path);
    const int n = t.leaf_count();
    const int hn = h.leaf_count();
    // P2: the removable part holds exactly {1} and the top hn-1 labels.
    std::vector<int> expected{1};
    for (int l = n - hn + 2; l <= n; ++l) expected.push_back(l);
    if (h.leaf_labels_sorted() != expected) return false;
    return admissible_normalized(renormalized(h)) &&
           admissible_normalized(renormalized(remove_subtree(t, *h_path)));
}

}  // namespace

bool is_admissible(const LabeledTree& t) {
    std::vector<int> labels = t.leaf_labels_sorted();
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != static_cast<int>(i) + 1) return false;
    return admissible_normalized(t);
}

// ---------------------------------------------------------------------------
// Admissible labelings via shuffles and the recursive labeling procedure.
// ---------------------------------------------------------------------------

namespace {

enum class Alphabet { final_, under, over };

struct PreLabel {
    Alphabet a = Alphabet::final_;
    int v = 0;
    auto operator<=>(const PreLabel&) const = default;
};

// Assigned finals are smaller than everything pending; pending labels compare
// only within their own alphabet.
bool less_than(const PreLabel& x, const PreLabel& y) {
    if (x.a == Alphabet::final_ && y.a == Alphabet::final_) return x.v < y.v;
    if (x.a == Alphabet::final_) return true;
    if (y.a == Alphabet::final_) return false;
    return x.a == y.a && x.v < y.v;
}

struct PTree {
    PreLabel lab;
    std::shared_ptr<const PTree> l, r;
    bool leaf() const { return l == nullptr; }
};

using PTreePtr = std::shared_ptr<const PTree>;

PTreePtr pleaf(PreLabel lab) {
    auto n = std::make_shared<PTree>();
    n->lab = lab;
    return n;
}

PTreePtr pbranch(PTreePtr l, PTreePtr r) {
    auto n = std::make_shared<PTree>();
    n->l = std::move(l);
    n->r = std::move(r);
    return n;
}

PTreePtr from_labeled(const LabeledTree& t, Alphabet a) {
    if (t.is_leaf()) return pleaf({a, t.label()});
    return pbranch(from_labeled(t.left(), a), from_labeled(t.right(), a));
}

void pcollect(const PTreePtr& t, std::vector<PreLabel>& out) {
    if (t->leaf()) {
        out.push_back(t->lab);
        return;
    }
    pcollect(t->l, out);
    pcollect(t->r, out);
}

PreLabel fully_right(const PTreePtr& t) {
    const PTree* cur = t.get();
    while (!cur->leaf()) cur = cur->r.get();
    return cur->lab;
}

bool p1_at_pre(const PTreePtr& node) {
    PreLabel bound = fully_right(node->r);
    std::vector<PreLabel> left;
    pcollect(node->l, left);
    for (const PreLabel& l : left)
        if (less_than(l, bound)) return true;
    return false;
}

bool p1_everywhere_pre(const PTreePtr& t) {
    if (t->leaf()) return true;
    return p1_at_pre(t) && p1_everywhere_pre(t->l) && p1_everywhere_pre(t->r);
}

PTreePtr substituted(const PTreePtr& t, const PreLabel& from, int final_value) {
    if (t->leaf()) {
        if (t->lab == from) return pleaf({Alphabet::final_, final_value});
        return t;
    }
    return pbranch(substituted(t->l, from, final_value), substituted(t->r, from, final_value));
}

PTreePtr premove(const PTreePtr& t, const std::vector<bool>& path, size_t depth) {
    bool step = path[depth];
    if (depth + 1 == path.size()) return step ? t->l : t->r;
    if (step) return pbranch(t->l, premove(t->r, path, depth + 1));
    return pbranch(premove(t->l, path, depth + 1), t->r);
}

// Recursive labeling: assigns the remaining pre-labels of t the next final
// values, advancing `next`.  Assignments are recorded in `out`.
void label_pass(const PTreePtr& t, int& next, std::vector<std::pair<PreLabel, int>>& out) {
    std::vector<PreLabel> labels;
    pcollect(t, labels);
    std::vector<PreLabel> under, over;
    bool has_final = false;
    PreLabel min_final{Alphabet::final_, 0};
    bool min_set = false;
    for (const PreLabel& l : labels) {
        if (l.a == Alphabet::under) under.push_back(l);
        if (l.a == Alphabet::over) over.push_back(l);
        if (l.a == Alphabet::final_) {
            has_final = true;
            if (!min_set || l.v < min_final.v) {
                min_final = l;
                min_set = true;
            }
        }
    }
    if (under.empty() && over.empty()) return;

    if (under.empty() || over.empty()) {
        // One alphabet left: its relative order is forced, assign in order.
        std::vector<PreLabel>& pending = under.empty() ? over : under;
        std::sort(pending.begin(), pending.end(),
                  [](const PreLabel& a, const PreLabel& b) { return a.v < b.v; });
        for (const PreLabel& p : pending) out.emplace_back(p, ++next);
        return;
    }

    if (!has_final)
        throw std::logic_error("label: mixed alphabets without an assigned label");

    // Root share decomposition on the tree level: split off the smallest
    // removable subtree containing the minimal assigned label.
    std::vector<bool> chain;
    {
        const PTree* cur = t.get();
        while (!cur->leaf()) {
            std::vector<PreLabel> ll;
            pcollect(cur->l, ll);
            bool in_left = std::find(ll.begin(), ll.end(), min_final) != ll.end();
            chain.push_back(!in_left);
            cur = in_left ? cur->l.get() : cur->r.get();
        }
    }
    PTreePtr t_prime, t_rest;
    for (size_t len = chain.size(); len >= 1; --len) {
        std::vector<bool> candidate(chain.begin(), chain.begin() + len);
        PTreePtr rest = premove(t, candidate, 0);
        if (p1_everywhere_pre(rest)) {
            const PTree* cur = t.get();
            for (bool step : candidate) cur = step ? cur->r.get() : cur->l.get();
            t_prime = std::shared_ptr<const PTree>(t, cur);
            t_rest = rest;
            break;
        }
    }
    if (!t_prime) throw std::logic_error("label: no removable subtree found");

    // The rest is labeled first, the removed part gets the top block.
    size_t before = out.size();
    label_pass(t_rest, next, out);
    PTreePtr t_prime_updated = t_prime;
    for (size_t a = before; a < out.size(); ++a)
        t_prime_updated = substituted(t_prime_updated, out[a].first, out[a].second);
    label_pass(t_prime_updated, next, out);
}

void shuffles_rec(int k, int m, std::vector<PreLabel>& acc, int next_under, int next_over,
                  std::vector<std::vector<PreLabel>>& out) {
    if (next_under > k && next_over > m) {
        out.push_back(acc);
        return;
    }
    if (next_under <= k) {
        acc.push_back({Alphabet::under, next_under});
        shuffles_rec(k, m, acc, next_under + 1, next_over, out);
        acc.pop_back();
    }
    if (next_over <= m) {
        acc.push_back({Alphabet::over, next_over});
        shuffles_rec(k, m, acc, next_under, next_over + 1, out);
        acc.pop_back();
    }
}

LabeledTree finalize(const PTreePtr& t) {
    if (t->leaf()) {
        if (t->lab.a != Alphabet::final_)
            throw std::logic_error("label: pre-label survived the labeling");
        return LabeledTree::leaf(t->lab.v);
    }
    return LabeledTree::branch(finalize(t->l), finalize(t->r));
}

}  // namespace

std::vector<std::vector<int>> shuffle_sequences(int under_count, int over_count) {
    std::vector<std::vector<PreLabel>> raw;
    std::vector<PreLabel> acc;
    shuffles_rec(under_count, over_count, acc, 1, 1, raw);
    std::vector<std::vector<int>> out;
    out.reserve(raw.size());
    for (const auto& w : raw) {
        std::vector<int> seq;
        seq.reserve(w.size());
        for (const PreLabel& p : w) seq.push_back(p.a == Alphabet::under ? p.v : -p.v);
        out.push_back(std::move(seq));
    }
    return out;
}

std::vector<LabeledTree> admissible_labelings(const LabeledTree& h1, const LabeledTree& h2,
                                              int b2) {
    if (!is_admissible(h1) || !is_admissible(h2))
        throw std::invalid_argument("admissible_labelings: inputs must be admissible");
    if (b2 != h2.fully_right_leaf_label())
        throw std::invalid_argument("admissible_labelings: b2 must be the base of h2");
    const int b1 = h1.fully_right_leaf_label();
    const int m = b2;

    std::vector<LabeledTree> results;
    for (int k = 1; k <= b1; ++k) {
        // Shuffles of {under 1..k} with {over 1..m} that end with over m.
        std::vector<std::vector<PreLabel>> prefixes;
        std::vector<PreLabel> acc;
        shuffles_rec(k, m - 1, acc, 1, 1, prefixes);
        for (auto& w : prefixes) {
            w.push_back({Alphabet::over, m});
            PTreePtr t = pbranch(from_labeled(h1, Alphabet::under),
                                 from_labeled(h2, Alphabet::over));
            for (size_t pos = 0; pos < w.size(); ++pos)
                t = substituted(t, w[pos], static_cast<int>(pos) + 1);
            int next = static_cast<int>(w.size());
            std::vector<std::pair<PreLabel, int>> assignment;
            label_pass(t, next, assignment);
            for (const auto& [pre, fin] : assignment) t = substituted(t, pre, fin);
            LabeledTree labeled = finalize(t);
            if (!is_admissible(labeled))
                throw std::logic_error("admissible_labelings: produced inadmissible tree " +
                                       labeled.to_string());
            results.push_back(labeled);
        }
    }
    std::sort(results.begin(), results.end());
    for (size_t t = 1; t < results.size(); ++t)
        if (results[t] == results[t - 1])
            throw std::logic_error("admissible_labelings: duplicate labeling");
    return results;
}

namespace {

// Edge index (virtual edge = 1, then pre-order) of the edge ending at the
// node reached by `path`.
int edge_index_above(const LabeledTree& t, const TreePath& path) {
    int idx = 1;
    LabeledTree cur = t;
    for (bool step : path) {
        if (!step) {
            idx += 1;
            cur = cur.left();
        } else {
            idx += 2 * cur.left().leaf_count();
            cur = cur.right();
        }
    }
    return idx;
}

ChordDiagram diagram_of_normalized_tree(const LabeledTree& t) {
    if (t.is_leaf()) return ChordDiagram::create({{1, 2}});
    auto h_path = smallest_removable_subtree(t);
    if (!h_path) throw std::invalid_argument("diagram_of_tree: tree is not admissible");
    LabeledTree h = subtree_at(t, *h_path);
    LabeledTree rest = remove_subtree(t, *h_path);
    // The removed part sat in the middle of the edge above the spot where its
    // sibling now lives.
    TreePath anchor(h_path->begin(), h_path->end() - 1);
    int r = edge_index_above(rest, anchor);
    ChordDiagram outer = diagram_of_normalized_tree(renormalized(h));
    ChordDiagram inner = diagram_of_normalized_tree(renormalized(rest));
    return insert(outer, inner, r);
}

}  // namespace

ChordDiagram diagram_of_tree(const LabeledTree& t) {
    if (!is_admissible(t))
        throw std::invalid_argument("diagram_of_tree: tree is not admissible: " + t.to_string());
    return diagram_of_normalized_tree(t);
}

std::pair<ChordDiagram, ChordDiagram> diamond_split(const ChordDiagram& c) {
    if (c.size() < 2) throw std::invalid_argument("diamond_split: need at least two chords");
    LabeledTree t = insertion_tree(c);
    auto build = [&](const LabeledTree& sub) {
        std::vector<int> sorted = sub.leaf_labels_sorted();
        ChordDiagram plain = diagram_of_tree(renormalized(sub));
        std::vector<int> dec(plain.size());
        for (int l = 1; l <= plain.size(); ++l) dec[l - 1] = c.decoration(sorted[l - 1]);
        return ChordDiagram::create(plain.pairs(), dec);
    };
    return {build(t.left()), build(t.right())};
}

const char* to_string(ThreewayCase c) {
    switch (c) {
        case ThreewayCase::root: return "root";
        case ThreewayCase::left_subtree: return "left-subtree";
        case ThreewayCase::right_subtree: return "right-subtree";
    }
    return "?";
}

ThreewayResult threeway_cases(const ChordDiagram& c_prime, const ChordDiagram& c2, int k) {
    if (c2.size() < 2)
        throw std::invalid_argument("threeway_cases: C2 must split under the diamond");
    if (c_prime.size() + c2.size() < 3)
        throw std::invalid_argument("threeway_cases: composed diagram too small");
    ThreewayResult out;
    out.composed = insert(c_prime, c2, k);
    auto [c2_left, c2_right] = diamond_split(c2);
    const int a = c2_left.size();
    if (k == 1) {
        out.tag = ThreewayCase::root;
        out.d1 = c_prime;
        out.d2 = c2;
    } else if (k <= 2 * a) {
        out.tag = ThreewayCase::left_subtree;
        out.d1 = insert(c_prime, c2_left, k - 1);
        out.d2 = c2_right;
    } else {
        out.tag = ThreewayCase::right_subtree;
        out.d1 = c2_left;
        out.d2 = insert(c_prime, c2_right, k - 2 * a);
    }
    auto [d1, d2] = diamond_split(out.composed);
    if (!(d1 == out.d1) || !(d2 == out.d2))
        throw std::logic_error("threeway_cases: reassociation mismatch for " +
                               out.composed.to_string());
    return out;
}

}  // namespace chorddse
