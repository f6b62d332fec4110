#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quandleforge/term.hpp"
#include "quandleforge/tree_pair.hpp"

namespace qf {

enum class Orbit { A, B };

inline std::string orbit_name(Orbit o) { return o == Orbit::A ? "A" : "B"; }

// An element of Thompson's quandle, realized faithfully inside F as a
// tree pair together with the conjugacy class of the generator it came
// from. Equality is equality of the underlying group elements.
struct PElem {
  TreePair value;
  Orbit orbit_tag = Orbit::A;

  bool operator==(const PElem& o) const { return value == o.value; }
  std::string str() const {
    return "p-elem{orbit=" + orbit_name(orbit_tag) + ", tree=" + value.str() +
           "}";
  }
};

// The orientation convention linking the quandle's conjugation to the
// tree-pair generators: sign +1 means (a, b) = (x0, x1), sign -1 means
// the inverses.
struct Calibration {
  TreePair a, b;
  int sign = 0;
};

// Tries both signs against the defining relation
// a |> (a |> b) = b |> (a |> b) (with g |> h = g h g^-1) and returns the
// unique assignment under which it holds as a tree-pair identity.
// Throws std::runtime_error unless exactly one sign works.
Calibration calibrate();

struct RelationReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<std::pair<int, int>> first_failure;
};

// The calibrated model of Thompson's quandle: generators p(n), the
// conjugation operations, the shift endomorphism and the orbit map. The
// p(n) table is memoized; it is the only shared state and is published
// under a mutex, so the model can be used from several threads.
class ThompsonQuandle {
 public:
  using value_type = PElem;

  explicit ThompsonQuandle(std::size_t generator_cap = 64);

  const Calibration& calibration() const { return cal_; }
  std::size_t generator_cap() const { return cap_; }

  // q_0 = a, q_1 = b, q_n = q_{n-2} |> q_{n-1}. Throws beyond the cap.
  PElem p(std::size_t n) const;

  PElem op(const PElem& x, const PElem& y) const;      // x y x^-1
  PElem op_inv(const PElem& x, const PElem& y) const;  // x^-1 y x

  // The shift endomorphism of F restricted to the model; sends p(n) to
  // p(n+1) and satisfies eps(eps(x)) = op(p(0), eps(x)).
  PElem eps(const PElem& x) const;

  // Recomputes the orbit from the abelianization of the value and
  // cross-checks the stored tag. Throws std::runtime_error when the
  // abelianization matches neither generator class.
  Orbit orbit(const PElem& x) const;

  // The term q-tree: iso_f(0) = a, iso_f(1) = b,
  // iso_f(n) = iso_f(n-2) |> iso_f(n-1).
  Term iso_f(std::size_t n) const;

  // Evaluation of a term over {a, b} in the model, a -> p(0), b -> p(1).
  PElem iso_g(const Term& t) const;

  // Checks op(p(j), p(k)) = p(k+1) for all 0 <= j < k <= n.
  RelationReport verify_relations(std::size_t n) const;

 private:
  // Memoized raw value. Returns a copy made under the lock: the memo
  // vector may reallocate while other readers hold results.
  TreePair q(std::size_t n) const;

  Calibration cal_;
  std::pair<int, int> ab_a_, ab_b_;
  std::size_t cap_;
  mutable std::mutex mu_;
  mutable std::vector<TreePair> memo_;
};

}  // namespace qf
