#include "quandleforge/tree_pair.hpp"

#include <algorithm>
#include <stdexcept>

namespace qf {

BinTree BinTree::node(BinTree left, BinTree right) {
  auto n = std::make_shared<Node>();
  n->leaves = left.leaf_count() + right.leaf_count();
  n->l = std::move(left);
  n->r = std::move(right);
  BinTree t;
  t.n_ = std::move(n);
  return t;
}

const BinTree& BinTree::left() const {
  if (!n_) throw std::logic_error("left() on a leaf");
  return n_->l;
}

const BinTree& BinTree::right() const {
  if (!n_) throw std::logic_error("right() on a leaf");
  return n_->r;
}

bool BinTree::operator==(const BinTree& o) const {
  if (n_ == o.n_) return true;
  if (!n_ || !o.n_) return false;
  if (n_->leaves != o.n_->leaves) return false;
  return n_->l == o.n_->l && n_->r == o.n_->r;
}

std::string BinTree::str() const {
  if (is_leaf()) return ".";
  return "(" + left().str() + "," + right().str() + ")";
}

namespace {

BinTree parse_tree(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw std::invalid_argument("tree text ended early");
  if (text[pos] == '.') {
    ++pos;
    return BinTree::leaf();
  }
  if (text[pos] != '(') throw std::invalid_argument("expected '.' or '('");
  ++pos;
  BinTree l = parse_tree(text, pos);
  if (pos >= text.size() || text[pos] != ',')
    throw std::invalid_argument("expected ','");
  ++pos;
  BinTree r = parse_tree(text, pos);
  if (pos >= text.size() || text[pos] != ')')
    throw std::invalid_argument("expected ')'");
  ++pos;
  return BinTree::node(std::move(l), std::move(r));
}

}  // namespace

BinTree BinTree::parse(std::string_view text) {
  std::size_t pos = 0;
  BinTree t = parse_tree(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("trailing input after tree");
  return t;
}

BinTree common_refinement(const BinTree& a, const BinTree& b) {
  if (a.is_leaf()) return b;
  if (b.is_leaf()) return a;
  return BinTree::node(common_refinement(a.left(), b.left()),
                       common_refinement(a.right(), b.right()));
}

// ---------------------------------------------------------------------------
// reduction

namespace {

// Leaf indices (left to right) of carets whose children are both leaves.
void caret_positions(const BinTree& t, int& next_leaf, std::vector<int>& out) {
  if (t.is_leaf()) {
    ++next_leaf;
    return;
  }
  if (t.left().is_leaf() && t.right().is_leaf()) {
    out.push_back(next_leaf);
    next_leaf += 2;
    return;
  }
  caret_positions(t.left(), next_leaf, out);
  caret_positions(t.right(), next_leaf, out);
}

std::vector<int> caret_positions(const BinTree& t) {
  std::vector<int> out;
  int next_leaf = 0;
  caret_positions(t, next_leaf, out);
  return out;
}

// Replaces the caret over leaves (index, index+1) by a leaf.
BinTree remove_caret(const BinTree& t, int index, int& next_leaf) {
  if (t.is_leaf()) {
    ++next_leaf;
    return t;
  }
  if (t.left().is_leaf() && t.right().is_leaf() && next_leaf == index) {
    next_leaf += 2;
    return BinTree::leaf();
  }
  int before = next_leaf;
  BinTree l = remove_caret(t.left(), index, next_leaf);
  BinTree r = remove_caret(t.right(), index, next_leaf);
  if (before <= index && index < next_leaf)
    return BinTree::node(std::move(l), std::move(r));
  return t;  // untouched subtree, share structure
}

BinTree remove_caret(const BinTree& t, int index) {
  int next_leaf = 0;
  return remove_caret(t, index, next_leaf);
}

}  // namespace

TreePair TreePair::reduced(BinTree domain, BinTree range) {
  if (domain.leaf_count() != range.leaf_count())
    throw std::invalid_argument("tree pair leaf counts differ");
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> d = caret_positions(domain);
    std::vector<int> r = caret_positions(range);
    std::vector<int> common;
    std::set_intersection(d.begin(), d.end(), r.begin(), r.end(),
                          std::back_inserter(common));
    // remove from the right so lower indices stay valid
    for (auto it = common.rbegin(); it != common.rend(); ++it) {
      domain = remove_caret(domain, *it);
      range = remove_caret(range, *it);
      changed = true;
    }
  }
  return TreePair(std::move(domain), std::move(range));
}

std::string TreePair::str() const {
  return domain_.str() + " -> " + range_.str();
}

// ---------------------------------------------------------------------------
// composition

namespace {

// Subtrees of the refinement t sitting below each leaf of base.
void collect_grafts(const BinTree& base, const BinTree& t,
                    std::vector<BinTree>& out) {
  if (base.is_leaf()) {
    out.push_back(t);
    return;
  }
  collect_grafts(base.left(), t.left(), out);
  collect_grafts(base.right(), t.right(), out);
}

BinTree graft_leaves(const BinTree& t, const std::vector<BinTree>& grafts,
                     std::size_t& next) {
  if (t.is_leaf()) return grafts[next++];
  BinTree l = graft_leaves(t.left(), grafts, next);
  BinTree r = graft_leaves(t.right(), grafts, next);
  return BinTree::node(std::move(l), std::move(r));
}

// Refining one tree of a pair to target forces the same leaf-by-leaf
// subdivision pattern onto the other tree: the map is affine with a
// power-of-two slope on each interval, so dyadic patterns pull back
// unchanged.
BinTree carry_refinement(const BinTree& from, const BinTree& target,
                         const BinTree& other) {
  std::vector<BinTree> grafts;
  collect_grafts(from, target, grafts);
  std::size_t next = 0;
  return graft_leaves(other, grafts, next);
}

}  // namespace

TreePair multiply(const TreePair& p, const TreePair& r) {
  BinTree t = common_refinement(p.domain(), r.range());
  BinTree new_domain = carry_refinement(r.range(), t, r.domain());
  BinTree new_range = carry_refinement(p.domain(), t, p.range());
  return TreePair::reduced(std::move(new_domain), std::move(new_range));
}

TreePair invert(const TreePair& p) {
  return TreePair::reduced(p.range(), p.domain());
}

TreePair conj(const TreePair& x, const TreePair& y) {
  return multiply(multiply(x, y), invert(x));
}

TreePair power(const TreePair& p, int k) {
  TreePair base = k < 0 ? invert(p) : p;
  int reps = k < 0 ? -k : k;
  TreePair acc;
  for (int i = 0; i < reps; ++i) acc = multiply(acc, base);
  return acc;
}

TreePair generator(int i) {
  const BinTree l = BinTree::leaf();
  BinTree d0 = BinTree::node(l, BinTree::node(l, l));
  BinTree r0 = BinTree::node(BinTree::node(l, l), l);
  if (i == 0) return TreePair::reduced(d0, r0);
  if (i == 1)
    return TreePair::reduced(BinTree::node(l, d0), BinTree::node(l, r0));
  throw std::invalid_argument("generator index must be 0 or 1");
}

TreePair shift(const TreePair& p) {
  return TreePair::reduced(BinTree::node(BinTree::leaf(), p.domain()),
                           BinTree::node(BinTree::leaf(), p.range()));
}

namespace {

int leftmost_depth(const BinTree& t) {
  int d = 0;
  const BinTree* cur = &t;
  while (!cur->is_leaf()) {
    cur = &cur->left();
    ++d;
  }
  return d;
}

int rightmost_depth(const BinTree& t) {
  int d = 0;
  const BinTree* cur = &t;
  while (!cur->is_leaf()) {
    cur = &cur->right();
    ++d;
  }
  return d;
}

}  // namespace

std::pair<int, int> abelianize(const TreePair& p) {
  return {leftmost_depth(p.domain()) - leftmost_depth(p.range()),
          rightmost_depth(p.domain()) - rightmost_depth(p.range())};
}

TreePair evaluate_word(const std::vector<int>& word, const TreePair& g1,
                       const TreePair& g2) {
  TreePair acc;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int letter = *it;
    if (letter == 0 || letter > 2 || letter < -2)
      throw std::invalid_argument("word letters must be +-1 or +-2");
    TreePair g = (letter == 1 || letter == -1) ? g1 : g2;
    if (letter < 0) g = invert(g);
    acc = multiply(g, acc);
  }
  return acc;
}

bool standard_relators_hold() {
  const TreePair a = generator(0);
  const TreePair b = generator(1);
  auto comm = [](const TreePair& x, const TreePair& y) {
    return multiply(multiply(x, y), multiply(invert(x), invert(y)));
  };
  TreePair u = multiply(a, invert(b));
  TreePair v1 = multiply(multiply(invert(a), b), a);
  TreePair v2 = multiply(multiply(power(a, -2), b), power(a, 2));
  return comm(u, v1).is_identity() && comm(u, v2).is_identity();
}

}  // namespace qf
