#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "quandleforge/finite_quandle.hpp"
#include "quandleforge/thompson_quandle.hpp"

namespace qf {

// One verification run. A failing report always carries the inputs
// needed to reproduce the failure.
struct Report {
  std::string experiment;
  nlohmann::json params;
  bool pass = false;
  nlohmann::json counterexample;  // null when passing
  double wall_ms = 0.0;

  nlohmann::json to_json() const;
  std::string line() const;  // "[PASS] name params (1.2 ms)"
};

// Enumerates all (endomorphism delta, element q0) of Q with
// delta^2(x) = q0 |> delta(x) for all x; each such pair must induce a
// homomorphism from the two-generator presentation via a -> q0,
// b -> delta(q0), and the sequence delta^n(q0) must satisfy
// q_j |> q_k = q_{k+1} for j < k <= 6.
Report check_universal_pairs(const FiniteQuandle& q);

// For every homomorphic assignment (x, y) of the two-generator
// presentation into Q, builds the recursion q_n = q_{n-2} |> q_{n-1}
// and checks q_j |> q_k = q_{k+1} for all j < k <= n.
Report check_qseq_relations(const FiniteQuandle& q, int n);

// Hom-count equality between the presentation and its extension by a
// stable letter t with t |> a = b, t |> b = a |> b, over every quandle
// of order <= order_cap. A necessary condition for the extension to be
// isomorphic to the base, not a proof of isomorphism.
Report hnn_census(int order_cap);

// Builds the Alexander matrix of the two-generator presentation, checks
// the second row is a ring multiple of the first, reduces, and checks
// the module description: free rank 1, torsion (1 - q), nothing
// residual; the q = 1 specialization must have rank
// #generators - #orbits.
Report alexander_pipeline();

// p(0..n) pairwise distinct and p(0), p(1) in different orbits.
Report distinctness_probe(const ThompsonQuandle& model, int n);

// The two standard relators of F reduce to the identity.
Report relator_gate();

// shift^2(g) = conj(a, shift(g)) on seeded random elements, plus
// eps(p(n)) = p(n+1) for n <= 10 in the model.
Report eps_square_law(const ThompsonQuandle& model, int samples,
                      std::uint64_t seed);

// orbit_count of the two-generator presentation is exactly 2.
Report orbit_structure();

// hom_count into trivial(n) equals n^2 for n = 1..max_order.
Report hom_count_square(int max_order);

// Every word of length <= max_len over {a^{+-1}, b^{+-1}} that
// conjugates a to a equals a^k for some |k| <= max_len.
Report centralizer_probe(const ThompsonQuandle& model, int max_len);

// iso_g(iso_f(n)) = p(n) for n <= max_index.
Report iso_roundtrip(const ThompsonQuandle& model, int max_index);

// The square FQ(2) -> F(2) -> F against FQ(2) -> P -> F commutes on all
// canonical free-quandle elements with conjugator length <= max_len.
Report free_quandle_diagram(const ThompsonQuandle& model, int max_len);

// Quandle axioms on every enumerated table of order <= order_cap.
Report finite_axiom_census(int order_cap);

// Quandle axioms for conjugation on seeded random tree-pair triples.
Report conj_axiom_probe(int triples, int max_word_len, std::uint64_t seed);

// check_universal_pairs over all enumerated quandles of order <=
// order_cap plus the trivial and dihedral quandles of order 5.
Report universal_census(int order_cap);

// check_qseq_relations over all enumerated quandles of order <= cap.
Report qseq_census(int order_cap, int n);

// fingen relations in the model: op(p(j), p(k)) = p(k+1), j < k <= n.
Report fingen_relations(const ThompsonQuandle& model, int max_index);

enum class Suite { all, univ, fingen, hnn, alexander, orbits };

std::optional<Suite> suite_from_name(std::string_view name);
std::string suite_name(Suite s);

// Runs the named suite; deterministic order and content.
std::vector<Report> run_suite(Suite s);

bool all_pass(const std::vector<Report>& reports);

}  // namespace qf
