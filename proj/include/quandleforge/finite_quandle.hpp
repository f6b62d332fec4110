#pragma once

#include <concepts>
#include <string>
#include <vector>

namespace qf {

// Result of checking the three quandle axiom families on a Cayley table.
// violation names the first failing axiom instance when ok is false.
struct QuandleCheck {
  bool ok = true;
  std::string violation;
};

// Checks that each row is a permutation, the diagonal is fixed
// (x |> x = x) and left self-distributivity holds. Throws
// std::invalid_argument on malformed input (non-square table or
// out-of-range entries).
QuandleCheck is_quandle(const std::vector<std::vector<int>>& table);

// A finite quandle as an n x n Cayley table, table[x][y] = x |> y.
// Instances always satisfy the quandle axioms; from_table rejects
// anything that does not.
class FiniteQuandle {
 public:
  using value_type = int;

  static FiniteQuandle trivial(int n);   // x |> y = y
  static FiniteQuandle dihedral(int n);  // x |> y = 2x - y mod n
  static FiniteQuandle from_table(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int op(int x, int y) const { return table_.at(x).at(y); }
  int op_inv(int x, int y) const { return inv_.at(x).at(y); }
  int left_div(int x, int y) const { return op_inv(x, y); }
  const std::vector<std::vector<int>>& table() const { return table_; }

  std::string str() const;  // "n" then n rows of n integers
  bool operator==(const FiniteQuandle&) const = default;

 private:
  FiniteQuandle(std::vector<std::vector<int>> table,
                std::vector<std::vector<int>> inv)
      : table_(std::move(table)), inv_(std::move(inv)) {}

  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> inv_;  // inv_[x][table_[x][y]] = y
};

// Parses the text form accepted for ingestion: the order n followed by
// n rows of n integers, whitespace separated.
FiniteQuandle quandle_from_text(const std::string& text);

struct OrbitPartition {
  std::vector<std::vector<int>> blocks;  // by smallest member
  std::vector<int> block_of;             // element -> block index
};

// The partition generated by y ~ x |> y over all x, y.
OrbitPartition orbits(const FiniteQuandle& q);

// All self-maps preserving |>, each as an image vector, in
// lexicographic order.
std::vector<std::vector<int>> endomorphisms(const FiniteQuandle& q);

// One representative per isomorphism class, in lexicographic order of
// the canonical (minimal relabeling) table. Throws when n exceeds the
// cap; the search is exponential in n.
std::vector<FiniteQuandle> enumerate_quandles(int n, int cap = 5);

// ---------------------------------------------------------------------------
// Conjugation quandles over an arbitrary group implementation.

template <class G>
concept group_element = requires(const G& a, const G& b) {
  { multiply(a, b) } -> std::convertible_to<G>;
  { invert(a) } -> std::convertible_to<G>;
  { a == b } -> std::convertible_to<bool>;
};

// x |> y = x y x^-1. Satisfies all three quandle axioms in any group.
template <group_element G>
struct ConjQuandle {
  using value_type = G;
  G op(const G& x, const G& y) const {
    return multiply(multiply(x, y), invert(x));
  }
  G op_inv(const G& x, const G& y) const {
    return multiply(multiply(invert(x), y), x);
  }
};

// ---------------------------------------------------------------------------
// Free quandles: conjugates of the generators inside a free group.

// Letters are +-(i+1) for generator i; the word is freely reduced.
std::vector<int> free_reduce(std::vector<int> word);
std::vector<int> word_inverse(const std::vector<int>& word);

// The conjugate w g w^-1 of generator g, with w in canonical form: w is
// freely reduced and does not end in g or g^-1.
struct FreeQuandleElem {
  std::vector<int> word;
  int generator = 0;
  bool operator==(const FreeQuandleElem&) const = default;
};

FreeQuandleElem fq_canonical(std::vector<int> word, int generator);

struct FreeQuandle {
  using value_type = FreeQuandleElem;
  FreeQuandleElem op(const FreeQuandleElem& x, const FreeQuandleElem& y) const;
  FreeQuandleElem op_inv(const FreeQuandleElem& x,
                         const FreeQuandleElem& y) const;
};

}  // namespace qf
