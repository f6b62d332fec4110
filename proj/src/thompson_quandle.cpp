#include "quandleforge/thompson_quandle.hpp"

#include <stdexcept>

namespace qf {

namespace {

bool defining_relation_holds(const TreePair& a, const TreePair& b) {
  // a |> (a |> b) = b |> (a |> b) with g |> h = g h g^-1
  TreePair ab = conj(a, b);
  return conj(a, ab) == conj(b, ab);
}

}  // namespace

Calibration calibrate() {
  if (!standard_relators_hold())
    throw std::runtime_error(
        "tree-pair arithmetic fails the standard relators of F");
  const TreePair x0 = generator(0);
  const TreePair x1 = generator(1);
  const bool plus = defining_relation_holds(x0, x1);
  const bool minus = defining_relation_holds(invert(x0), invert(x1));
  if (plus == minus)
    throw std::runtime_error(
        "calibration failed: expected exactly one orientation to satisfy "
        "the defining relation");
  if (plus) return {x0, x1, +1};
  return {invert(x0), invert(x1), -1};
}

ThompsonQuandle::ThompsonQuandle(std::size_t generator_cap)
    : cal_(calibrate()), cap_(generator_cap) {
  memo_.push_back(cal_.a);
  memo_.push_back(cal_.b);
  ab_a_ = abelianize(cal_.a);
  ab_b_ = abelianize(cal_.b);
  if (ab_a_ == ab_b_)
    throw std::runtime_error("generator abelianizations coincide");
}

TreePair ThompsonQuandle::q(std::size_t n) const {
  if (n > cap_)
    throw std::invalid_argument("generator index " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap_));
  std::lock_guard<std::mutex> lock(mu_);
  while (memo_.size() <= n) {
    std::size_t k = memo_.size();
    memo_.push_back(conj(memo_[k - 2], memo_[k - 1]));
  }
  return memo_[n];
}

PElem ThompsonQuandle::p(std::size_t n) const {
  return {q(n), n == 0 ? Orbit::A : Orbit::B};
}

PElem ThompsonQuandle::op(const PElem& x, const PElem& y) const {
  return {conj(x.value, y.value), y.orbit_tag};
}

PElem ThompsonQuandle::op_inv(const PElem& x, const PElem& y) const {
  return {conj(invert(x.value), y.value), y.orbit_tag};
}

PElem ThompsonQuandle::eps(const PElem& x) const {
  return {shift(x.value), Orbit::B};
}

Orbit ThompsonQuandle::orbit(const PElem& x) const {
  auto ab = abelianize(x.value);
  Orbit computed;
  if (ab == ab_a_)
    computed = Orbit::A;
  else if (ab == ab_b_)
    computed = Orbit::B;
  else
    throw std::runtime_error(
        "orbit: abelianization matches neither generator class (corrupted "
        "element)");
  if (computed != x.orbit_tag)
    throw std::runtime_error("orbit: stored tag disagrees with value");
  return computed;
}

Term ThompsonQuandle::iso_f(std::size_t n) const {
  if (n > cap_)
    throw std::invalid_argument("generator index " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap_));
  Term prev2 = Term::gen("a");
  if (n == 0) return prev2;
  Term prev1 = Term::gen("b");
  for (std::size_t k = 2; k <= n; ++k) {
    Term next = Term::apply(prev2, Term::Kind::op, prev1);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

PElem ThompsonQuandle::iso_g(const Term& t) const {
  std::map<std::string, PElem> assign{{"a", p(0)}, {"b", p(1)}};
  std::vector<std::string> leaves;
  t.collect_leaves(leaves);
  for (const auto& leaf : leaves)
    if (!assign.count(leaf))
      throw std::invalid_argument("unknown generator: " + leaf);
  return eval(t, assign, *this);
}

RelationReport ThompsonQuandle::verify_relations(std::size_t n) const {
  RelationReport report;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 0; j < k; ++j) {
      ++report.checked;
      if (!(op(p(j), p(k)) == p(k + 1))) {
        report.ok = false;
        report.first_failure = {static_cast<int>(j), static_cast<int>(k)};
        return report;
      }
    }
  return report;
}

}  // namespace qf
