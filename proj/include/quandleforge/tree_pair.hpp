#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qf {

// An immutable finite binary tree. Copies share structure.
class BinTree {
 public:
  BinTree() = default;  // leaf
  static BinTree leaf() { return BinTree(); }
  static BinTree node(BinTree left, BinTree right);

  bool is_leaf() const { return n_ == nullptr; }
  const BinTree& left() const;
  const BinTree& right() const;
  int leaf_count() const;

  bool operator==(const BinTree& o) const;

  // "." for a leaf, "(L,R)" for a node
  std::string str() const;
  static BinTree parse(std::string_view text);

 private:
  struct Node;
  std::shared_ptr<const Node> n_;
};

struct BinTree::Node {
  BinTree l, r;
  int leaves;
};

inline int BinTree::leaf_count() const { return n_ ? n_->leaves : 1; }

// Smallest common refinement: the union of the two subdivision patterns.
BinTree common_refinement(const BinTree& a, const BinTree& b);

// An element of Thompson's group F as a reduced pair of binary trees
// with equal leaf counts: the map sending the dyadic partition of the
// domain tree onto that of the range tree, interval by interval.
class TreePair {
 public:
  TreePair() = default;  // identity

  // Cancels common carets and stores the reduced form. Throws
  // std::invalid_argument when the leaf counts differ.
  static TreePair reduced(BinTree domain, BinTree range);

  const BinTree& domain() const { return domain_; }
  const BinTree& range() const { return range_; }
  bool is_identity() const { return domain_.is_leaf() && range_.is_leaf(); }

  std::string str() const;  // "domain -> range"
  bool operator==(const TreePair&) const = default;

 private:
  TreePair(BinTree d, BinTree r) : domain_(std::move(d)), range_(std::move(r)) {}
  BinTree domain_, range_;
};

// Composition "apply r, then p", via the common refinement of p.domain
// and r.range.
TreePair multiply(const TreePair& p, const TreePair& r);
TreePair invert(const TreePair& p);
TreePair conj(const TreePair& x, const TreePair& y);  // x y x^-1
TreePair power(const TreePair& p, int k);

// The standard generators: x0 maps the partition {1/2, 3/4} onto
// {1/4, 1/2}; x1 is x0 shifted into the right half.
TreePair generator(int i);  // i in {0, 1}

// The shift endomorphism: grafts both trees under a fresh root caret
// with a trivial left branch. Sends x_n to x_{n+1}.
TreePair shift(const TreePair& p);

// Log2 slopes at the endpoints: (depth of leftmost leaf in domain minus
// in range, same for rightmost). A homomorphism onto Z^2.
std::pair<int, int> abelianize(const TreePair& p);

// Evaluates a word over two given group elements; letters +-1 and +-2
// select g1 and g2, leftmost letter applied last.
TreePair evaluate_word(const std::vector<int>& word, const TreePair& g1,
                       const TreePair& g2);

// The two defining relators of the standard finite presentation of F:
// [x0 x1^-1, x0^-1 x1 x0] and [x0 x1^-1, x0^-2 x1 x0^2]. Both must
// reduce to the identity; this gates every convention in this module.
bool standard_relators_hold();

// group_element hooks for ConjQuandle<TreePair>
inline bool equals(const TreePair& a, const TreePair& b) { return a == b; }

}  // namespace qf
