#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quandleforge/finite_quandle.hpp"
#include "quandleforge/laurent.hpp"

namespace qf {

// A quandle expression over named generators: a generator leaf, or a
// binary node x |> y (op) or x <| y (op_inv, the left inverse of |>).
class Term {
 public:
  enum class Kind { generator, op, op_inv };

  static Term gen(std::string name);
  static Term apply(Term lhs, Kind k, Term rhs);  // pre: k != generator

  Kind kind() const { return n_->kind; }
  const std::string& name() const;  // pre: generator
  Term lhs() const;                 // pre: op / op_inv
  Term rhs() const;

  // The generator reached by always descending right; both operations
  // keep their right argument's orbit, so this drives orbit counting.
  const std::string& rightmost_leaf() const;

  void collect_leaves(std::vector<std::string>& out) const;

  bool operator==(const Term& o) const;

  // Rendering that re-parses to an equal tree: compound operands are
  // parenthesized, e.g. "a |> (a |> b)".
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> l, r;
  };
  explicit Term(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  static Term wrap(const std::shared_ptr<const Node>& n) { return Term(n); }

  std::shared_ptr<const Node> n_;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " +
                           msg),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Grammar: term := atom | atom OP term, with OP one of "|>" and "<|",
// both right-associative at equal precedence. Mixing the two operators
// in one unparenthesized chain is an error.
Term parse_term(std::string_view text);

struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::pair<Term, Term>> relations;
};

// Validates generator names (distinct) and relation leaves (declared).
// Throws std::invalid_argument on violation.
void validate(const Presentation& p);

// Line-oriented .qdl DSL:
//   quandle NAME
//   gens a, b
//   rel TERM = TERM
// with '#' comments and blank lines ignored.
Presentation parse_presentation(std::string_view dsl);
std::string render_presentation(const Presentation& p);

// The two-generator, two-relation presentation of Thompson's quandle.
Presentation thompson_presentation();

// ---------------------------------------------------------------------------
// evaluation in an arbitrary quandle model

template <class M>
concept quandle_model = requires(const M& m, const typename M::value_type& x,
                                 const typename M::value_type& y) {
  { m.op(x, y) } -> std::convertible_to<typename M::value_type>;
  { m.op_inv(x, y) } -> std::convertible_to<typename M::value_type>;
};

template <quandle_model M>
typename M::value_type eval(
    const Term& t, const std::map<std::string, typename M::value_type>& assign,
    const M& model) {
  switch (t.kind()) {
    case Term::Kind::generator: {
      auto it = assign.find(t.name());
      if (it == assign.end())
        throw std::invalid_argument("unassigned generator: " + t.name());
      return it->second;
    }
    case Term::Kind::op:
      return model.op(eval(t.lhs(), assign, model),
                      eval(t.rhs(), assign, model));
    case Term::Kind::op_inv:
      return model.op_inv(eval(t.lhs(), assign, model),
                          eval(t.rhs(), assign, model));
  }
  throw std::logic_error("unreachable");
}

template <quandle_model M>
bool check_hom(const Presentation& p,
               const std::map<std::string, typename M::value_type>& assign,
               const M& model) {
  for (const auto& [l, r] : p.relations)
    if (!(eval(l, assign, model) == eval(r, assign, model))) return false;
  return true;
}

// Exhaustive count of homomorphisms into a finite quandle. Guarded by
// caps because the assignment space is |Q|^{#generators}.
long long hom_count(const Presentation& p, const FiniteQuandle& q,
                    int order_cap = 5, int gens_cap = 4);

// ---------------------------------------------------------------------------
// presentation-level invariants

struct GeneratorPartition {
  int count = 0;
  std::vector<std::vector<std::string>> blocks;
};

// Orbits of the presented quandle: union-find over generators merging
// rightmost leaves of the two sides of each relation. Sound because a
// morphism to a trivial quandle sends every term to its rightmost leaf.
GeneratorPartition orbit_count(const Presentation& p);

// Rank of the free abelian group on the orbit set.
int abelianization_rank(const Presentation& p);

struct HnnData {
  Presentation base;
  std::string stable_letter;
  std::vector<std::pair<Term, Term>> tau_pairs;  // t |> u = v
};

// Adjoins the stable letter with one relation t |> u = v per tau pair.
// Relations for generators of the subquandle suffice: left
// multiplication by t distributes over |> and <|.
Presentation hnn_extend(const HnnData& d);

// One row per relation, linearized by x |> y -> (1-q) x + q y and
// x <| y -> (1-q^-1) x + q^-1 y; row = lin(lhs) - lin(rhs).
LaurentMatrix alexander_matrix(const Presentation& p);

}  // namespace qf
