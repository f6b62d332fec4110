#include "quandleforge/experiments.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "quandleforge/prng.hpp"
#include "quandleforge/term.hpp"

namespace qf {

namespace {

constexpr std::uint64_t kEpsSeed = 0x51a9e0d6u;
constexpr std::uint64_t kConjSeed = 0x7bd3a21cu;

using Clock = std::chrono::steady_clock;

Report timed(const std::string& name, nlohmann::json params,
             const std::function<void(Report&)>& body) {
  Report r;
  r.experiment = name;
  r.params = std::move(params);
  r.pass = true;
  auto start = Clock::now();
  body(r);
  r.wall_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

nlohmann::json table_json(const FiniteQuandle& q) {
  return nlohmann::json(q.table());
}

BinTree random_tree(int leaves, SplitMix64& rng) {
  if (leaves <= 1) return BinTree::leaf();
  int left = rng.range(1, leaves - 1);
  return BinTree::node(random_tree(left, rng), random_tree(leaves - left, rng));
}

TreePair random_tree_pair(int max_leaves, SplitMix64& rng) {
  int leaves = rng.range(1, max_leaves);
  return TreePair::reduced(random_tree(leaves, rng), random_tree(leaves, rng));
}

std::vector<int> random_word(int max_len, SplitMix64& rng) {
  int len = rng.range(0, max_len);
  std::vector<int> w;
  for (int i = 0; i < len; ++i) {
    static const int letters[4] = {1, -1, 2, -2};
    w.push_back(letters[rng.below(4)]);
  }
  return w;
}

}  // namespace

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["experiment"] = experiment;
  j["params"] = params;
  j["pass"] = pass;
  if (!pass) j["counterexample"] = counterexample;
  j["wall_ms"] = wall_ms;
  return j;
}

std::string Report::line() const {
  std::ostringstream out;
  out << (pass ? "[PASS] " : "[FAIL] ") << experiment;
  if (!params.empty()) out << " " << params.dump();
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.1f ms)", wall_ms);
  out << buf;
  if (!pass) out << "\n       counterexample: " << counterexample.dump();
  return out.str();
}

// ---------------------------------------------------------------------------

Report check_universal_pairs(const FiniteQuandle& q) {
  return timed("check_universal_pairs", {{"order", q.order()}}, [&](Report& r) {
    const Presentation pres = thompson_presentation();
    const int n = q.order();
    auto endos = endomorphisms(q);
    int qualifying = 0;
    for (const auto& delta : endos) {
      for (int q0 = 0; q0 < n; ++q0) {
        bool cond = true;
        for (int x = 0; x < n && cond; ++x)
          cond = delta[std::size_t(delta[std::size_t(x)])] ==
                 q.op(q0, delta[std::size_t(x)]);
        if (!cond) continue;
        ++qualifying;
        std::map<std::string, int> assign{{"a", q0},
                                          {"b", delta[std::size_t(q0)]}};
        if (!check_hom(pres, assign, q)) {
          r.pass = false;
          r.counterexample = {{"table", table_json(q)},
                              {"delta", delta},
                              {"q0", q0},
                              {"failure", "assignment is not a morphism"}};
          return;
        }
        // the sequence delta^n(q0) must satisfy the defining relations
        std::vector<int> seq{q0};
        for (int i = 1; i <= 7; ++i)
          seq.push_back(delta[std::size_t(seq.back())]);
        for (int k = 1; k <= 6; ++k)
          for (int j = 0; j < k; ++j)
            if (q.op(seq[std::size_t(j)], seq[std::size_t(k)]) !=
                seq[std::size_t(k + 1)]) {
              r.pass = false;
              r.counterexample = {{"table", table_json(q)},
                                  {"delta", delta},
                                  {"q0", q0},
                                  {"j", j},
                                  {"k", k},
                                  {"failure", "sequence relation"}};
              return;
            }
      }
    }
    r.params["endomorphisms"] = endos.size();
    r.params["qualifying_pairs"] = qualifying;
  });
}

Report check_qseq_relations(const FiniteQuandle& q, int n) {
  return timed("check_qseq_relations", {{"order", q.order()}, {"N", n}},
               [&](Report& r) {
                 const Presentation pres = thompson_presentation();
                 int homs = 0;
                 for (int x = 0; x < q.order(); ++x)
                   for (int y = 0; y < q.order(); ++y) {
                     std::map<std::string, int> assign{{"a", x}, {"b", y}};
                     if (!check_hom(pres, assign, q)) continue;
                     ++homs;
                     std::vector<int> seq{x, y};
                     for (int i = 2; i <= n + 1; ++i)
                       seq.push_back(q.op(seq[std::size_t(i - 2)],
                                          seq[std::size_t(i - 1)]));
                     for (int k = 1; k <= n; ++k)
                       for (int j = 0; j < k; ++j)
                         if (q.op(seq[std::size_t(j)], seq[std::size_t(k)]) !=
                             seq[std::size_t(k + 1)]) {
                           r.pass = false;
                           r.counterexample = {{"table", table_json(q)},
                                               {"x", x},
                                               {"y", y},
                                               {"j", j},
                                               {"k", k}};
                           return;
                         }
                   }
                 r.params["homomorphisms"] = homs;
               });
}

Report hnn_census(int order_cap) {
  return timed("hnn_census", {{"order_cap", order_cap}}, [&](Report& r) {
    r.params["note"] =
        "hom-count equality is a necessary condition for the extension to "
        "be isomorphic to the base, not a proof";
    const Presentation base = thompson_presentation();
    HnnData data{base, "t", {}};
    data.tau_pairs.emplace_back(parse_term("a"), parse_term("b"));
    data.tau_pairs.emplace_back(parse_term("b"), parse_term("a |> b"));
    const Presentation ext = hnn_extend(data);
    int models = 0;
    for (int n = 1; n <= order_cap; ++n)
      for (const auto& q : enumerate_quandles(n)) {
        ++models;
        long long base_count = hom_count(base, q);
        long long ext_count = hom_count(ext, q);
        if (base_count != ext_count) {
          r.pass = false;
          r.counterexample = {{"table", table_json(q)},
                              {"base_count", base_count},
                              {"ext_count", ext_count}};
          return;
        }
      }
    r.params["models"] = models;
  });
}

Report alexander_pipeline() {
  return timed("alexander_pipeline", {}, [&](Report& r) {
    const Presentation pres = thompson_presentation();
    LaurentMatrix m = alexander_matrix(pres);
    auto fail = [&](const std::string& what, nlohmann::json detail) {
      r.pass = false;
      detail["failure"] = what;
      r.counterexample = std::move(detail);
    };
    if (m.nrows() != 2) return fail("expected two relations", {});
    // second relation row must be a ring multiple of the first
    std::size_t k = 0;
    while (k < m.ncols() && m.at(0, k).is_zero()) ++k;
    if (k == m.ncols()) return fail("first row vanished", {});
    auto u = LaurentPoly::divide_exact(m.at(1, k), m.at(0, k));
    bool multiple = u.has_value();
    for (std::size_t j = 0; j < m.ncols() && multiple; ++j)
      multiple = (m.at(1, j) == *u * m.at(0, j));
    if (!multiple)
      return fail("second row is not a multiple of the first",
                  {{"matrix", m.str()}});
    r.params["row_factor"] = u->str();

    ModuleDescription desc = describe_module(m);
    const LaurentPoly one_minus_q =
        LaurentPoly::one() - LaurentPoly::q();
    if (desc.free_rank != 1)
      return fail("free rank", {{"free_rank", desc.free_rank}});
    if (desc.torsion_factors.size() != 1 ||
        !(desc.torsion_factors[0] == one_minus_q.normalized_associate())) {
      nlohmann::json torsion = nlohmann::json::array();
      for (const auto& t : desc.torsion_factors) torsion.push_back(t.str());
      return fail("torsion factors", {{"torsion", torsion}});
    }
    if (desc.residual.has_value())
      return fail("unexpected residual", {{"residual", desc.residual->str()}});

    std::size_t rank_at_1 = rational_rank(specialize(m, Rat(1)));
    std::size_t expected =
        pres.generators.size() -
        std::size_t(orbit_count(pres).count);
    if (rank_at_1 != expected)
      return fail("q=1 specialization rank",
                  {{"rank", rank_at_1}, {"expected", expected}});
    r.params["free_rank"] = 1;
    r.params["torsion"] = one_minus_q.normalized_associate().str();
    r.params["rank_at_q1"] = rank_at_1;
  });
}

Report distinctness_probe(const ThompsonQuandle& model, int n) {
  return timed("distinctness_probe", {{"N", n}}, [&](Report& r) {
    std::vector<PElem> elems;
    for (int i = 0; i <= n; ++i) elems.push_back(model.p(std::size_t(i)));
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (elems[std::size_t(i)] == elems[std::size_t(j)]) {
          r.pass = false;
          r.counterexample = {{"i", i}, {"j", j}};
          return;
        }
    if (model.orbit(elems[0]) == model.orbit(elems[1])) {
      r.pass = false;
      r.counterexample = {{"failure", "p(0) and p(1) share an orbit"}};
      return;
    }
    // the orbit map takes exactly the two expected values
    for (int i = 0; i <= n; ++i) {
      Orbit o = model.orbit(elems[std::size_t(i)]);
      if (o != (i == 0 ? Orbit::A : Orbit::B)) {
        r.pass = false;
        r.counterexample = {{"i", i}, {"orbit", orbit_name(o)}};
        return;
      }
    }
  });
}

Report relator_gate() {
  return timed("relator_gate", {}, [&](Report& r) {
    r.pass = standard_relators_hold();
    if (!r.pass)
      r.counterexample = {{"failure", "a standard relator of F is nontrivial"}};
  });
}

Report eps_square_law(const ThompsonQuandle& model, int samples,
                      std::uint64_t seed) {
  return timed("eps_square_law", {{"samples", samples}, {"seed", seed}},
               [&](Report& r) {
                 for (int n = 0; n <= 10; ++n)
                   if (!(model.eps(model.p(std::size_t(n))) ==
                         model.p(std::size_t(n) + 1))) {
                     r.pass = false;
                     r.counterexample = {{"failure", "eps(p(n)) != p(n+1)"},
                                         {"n", n}};
                     return;
                   }
                 // shift^2(g) = conj(a, shift(g)) on random group elements
                 SplitMix64 rng(seed);
                 const TreePair a = model.calibration().a;
                 for (int i = 0; i < samples; ++i) {
                   TreePair g = random_tree_pair(12, rng);
                   if (!(shift(shift(g)) == conj(a, shift(g)))) {
                     r.pass = false;
                     r.counterexample = {{"failure", "shift square law"},
                                         {"element", g.str()}};
                     return;
                   }
                 }
                 // eps^2 = p0 |> eps on a pool closed under the operations,
                 // and eps stays injective on the pool
                 std::vector<PElem> pool;
                 for (std::size_t n = 0; n <= 5; ++n)
                   pool.push_back(model.p(n));
                 const PElem p0 = model.p(0);
                 for (int i = 0; i < samples; ++i) {
                   const PElem& x = pool[rng.below(pool.size())];
                   const PElem& y = pool[rng.below(pool.size())];
                   PElem z = rng.below(2) == 0 ? model.op(x, y)
                                               : model.op_inv(x, y);
                   if (!(model.eps(model.eps(z)) ==
                         model.op(p0, model.eps(z)))) {
                     r.pass = false;
                     r.counterexample = {{"failure", "eps^2 != p0 |> eps"},
                                         {"element", z.str()}};
                     return;
                   }
                   pool.push_back(z);
                 }
                 for (std::size_t i = 0; i < pool.size(); ++i)
                   for (std::size_t j = i + 1; j < pool.size(); ++j)
                     if (!(pool[i] == pool[j]) &&
                         model.eps(pool[i]) == model.eps(pool[j])) {
                       r.pass = false;
                       r.counterexample = {{"failure", "eps not injective"},
                                           {"x", pool[i].str()},
                                           {"y", pool[j].str()}};
                       return;
                     }
               });
}

Report orbit_structure() {
  return timed("orbit_structure", {}, [&](Report& r) {
    GeneratorPartition part = orbit_count(thompson_presentation());
    r.params["orbits"] = part.count;
    if (part.count != 2 || part.blocks.size() != 2 ||
        part.blocks[0] != std::vector<std::string>{"a"} ||
        part.blocks[1] != std::vector<std::string>{"b"}) {
      r.pass = false;
      nlohmann::json blocks = nlohmann::json::array();
      for (const auto& b : part.blocks) blocks.push_back(b);
      r.counterexample = {{"blocks", blocks}};
    }
  });
}

Report hom_count_square(int max_order) {
  return timed("hom_count_square", {{"max_order", max_order}}, [&](Report& r) {
    const Presentation pres = thompson_presentation();
    for (int n = 1; n <= max_order; ++n) {
      long long count = hom_count(pres, FiniteQuandle::trivial(n));
      if (count != static_cast<long long>(n) * n) {
        r.pass = false;
        r.counterexample = {{"order", n}, {"count", count}};
        return;
      }
    }
  });
}

Report centralizer_probe(const ThompsonQuandle& model, int max_len) {
  return timed("centralizer_probe", {{"max_len", max_len}}, [&](Report& r) {
    const TreePair a = model.calibration().a;
    const TreePair b = model.calibration().b;
    std::vector<TreePair> powers;  // a^k for |k| <= max_len
    for (int k = -max_len; k <= max_len; ++k) powers.push_back(power(a, k));
    int centralizing = 0;
    std::vector<std::vector<int>> stack{{}};
    while (!stack.empty()) {
      std::vector<int> word = stack.back();
      stack.pop_back();
      TreePair w = evaluate_word(word, a, b);
      if (conj(w, a) == a) {
        ++centralizing;
        bool is_power = false;
        for (const auto& pk : powers)
          if (w == pk) is_power = true;
        if (!is_power) {
          r.pass = false;
          r.counterexample = {{"word", word}};
          return;
        }
      }
      if (static_cast<int>(word.size()) < max_len)
        for (int letter : {1, -1, 2, -2}) {
          word.push_back(letter);
          stack.push_back(word);
          word.pop_back();
        }
    }
    r.params["centralizing_words"] = centralizing;
  });
}

Report iso_roundtrip(const ThompsonQuandle& model, int max_index) {
  return timed("iso_roundtrip", {{"max_index", max_index}}, [&](Report& r) {
    for (int n = 0; n <= max_index; ++n) {
      if (!(model.iso_g(model.iso_f(std::size_t(n))) ==
            model.p(std::size_t(n)))) {
        r.pass = false;
        r.counterexample = {{"n", n}};
        return;
      }
    }
  });
}

Report free_quandle_diagram(const ThompsonQuandle& model, int max_len) {
  return timed("free_quandle_diagram", {{"max_len", max_len}}, [&](Report& r) {
    const TreePair ga = model.calibration().a;
    const TreePair gb = model.calibration().b;
    int elems = 0;
    std::vector<std::vector<int>> words{{}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::vector<int>> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len - 1)
          for (int letter : {1, -1, 2, -2}) {
            if (!w.empty() && w.back() == -letter) continue;  // stay reduced
            auto w2 = w;
            w2.push_back(letter);
            next.push_back(w2);
          }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words)
      for (int g = 0; g < 2; ++g) {
        ++elems;
        FreeQuandleElem canon = fq_canonical(w, g);
        // through the quandle: conjugate p(g) by the canonical word
        PElem through_p = model.p(std::size_t(g));
        for (auto it = canon.word.rbegin(); it != canon.word.rend(); ++it) {
          PElem gen = model.p(std::size_t(*it > 0 ? *it : -*it) - 1);
          through_p = *it > 0 ? model.op(gen, through_p)
                              : model.op_inv(gen, through_p);
        }
        // through the free group: conjugate in F by the raw word
        TreePair wv = evaluate_word(w, ga, gb);
        TreePair through_f = conj(wv, g == 0 ? ga : gb);
        if (!(through_p.value == through_f)) {
          r.pass = false;
          r.counterexample = {{"word", w}, {"generator", g}};
          return;
        }
      }
    r.params["elements"] = elems;
  });
}

Report finite_axiom_census(int order_cap) {
  return timed("finite_axiom_census", {{"order_cap", order_cap}},
               [&](Report& r) {
                 int models = 0;
                 for (int n = 1; n <= order_cap; ++n)
                   for (const auto& q : enumerate_quandles(n)) {
                     ++models;
                     QuandleCheck check = is_quandle(q.table());
                     if (!check.ok) {
                       r.pass = false;
                       r.counterexample = {{"table", table_json(q)},
                                           {"violation", check.violation}};
                       return;
                     }
                   }
                 r.params["models"] = models;
               });
}

Report conj_axiom_probe(int triples, int max_word_len, std::uint64_t seed) {
  return timed(
      "conj_axiom_probe",
      {{"triples", triples}, {"max_word_len", max_word_len}, {"seed", seed}},
      [&](Report& r) {
        SplitMix64 rng(seed);
        const TreePair g1 = generator(0);
        const TreePair g2 = generator(1);
        ConjQuandle<TreePair> cq;
        for (int i = 0; i < triples; ++i) {
          TreePair x = evaluate_word(random_word(max_word_len, rng), g1, g2);
          TreePair y = evaluate_word(random_word(max_word_len, rng), g1, g2);
          TreePair z = evaluate_word(random_word(max_word_len, rng), g1, g2);
          bool ok = cq.op(x, cq.op(y, z)) == cq.op(cq.op(x, y), cq.op(x, z)) &&
                    cq.op(x, x) == x && cq.op_inv(x, cq.op(x, y)) == y;
          if (!ok) {
            r.pass = false;
            r.counterexample = {
                {"x", x.str()}, {"y", y.str()}, {"z", z.str()}};
            return;
          }
        }
      });
}

Report universal_census(int order_cap) {
  return timed("universal_census", {{"order_cap", order_cap}}, [&](Report& r) {
    std::vector<FiniteQuandle> models;
    for (int n = 1; n <= order_cap; ++n)
      for (auto& q : enumerate_quandles(n)) models.push_back(q);
    models.push_back(FiniteQuandle::trivial(5));
    models.push_back(FiniteQuandle::dihedral(5));
    r.params["models"] = models.size();
    for (const auto& q : models) {
      Report inner = check_universal_pairs(q);
      if (!inner.pass) {
        r.pass = false;
        r.counterexample = inner.counterexample;
        return;
      }
    }
  });
}

Report qseq_census(int order_cap, int n) {
  return timed("qseq_census", {{"order_cap", order_cap}, {"N", n}},
               [&](Report& r) {
                 int models = 0;
                 for (int order = 1; order <= order_cap; ++order)
                   for (const auto& q : enumerate_quandles(order)) {
                     ++models;
                     Report inner = check_qseq_relations(q, n);
                     if (!inner.pass) {
                       r.pass = false;
                       r.counterexample = inner.counterexample;
                       return;
                     }
                   }
                 r.params["models"] = models;
               });
}

Report fingen_relations(const ThompsonQuandle& model, int max_index) {
  return timed("fingen_relations", {{"max_index", max_index}}, [&](Report& r) {
    RelationReport rel = model.verify_relations(std::size_t(max_index));
    r.params["checked"] = rel.checked;
    r.pass = rel.ok;
    if (!rel.ok)
      r.counterexample = {{"j", rel.first_failure->first},
                          {"k", rel.first_failure->second}};
  });
}

// ---------------------------------------------------------------------------

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "univ") return Suite::univ;
  if (name == "fingen") return Suite::fingen;
  if (name == "hnn") return Suite::hnn;
  if (name == "alexander") return Suite::alexander;
  if (name == "orbits") return Suite::orbits;
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::univ: return "univ";
    case Suite::fingen: return "fingen";
    case Suite::hnn: return "hnn";
    case Suite::alexander: return "alexander";
    case Suite::orbits: return "orbits";
  }
  return "?";
}

std::vector<Report> run_suite(Suite s) {
  std::vector<Report> out;
  auto add = [&out](Report r) { out.push_back(std::move(r)); };

  const bool want_fingen = s == Suite::all || s == Suite::fingen;
  const bool want_univ = s == Suite::all || s == Suite::univ;
  const bool want_orbits = s == Suite::all || s == Suite::orbits;
  const bool want_hnn = s == Suite::all || s == Suite::hnn;
  const bool want_alexander = s == Suite::all || s == Suite::alexander;

  std::optional<ThompsonQuandle> model;
  if (want_fingen || want_univ || want_orbits) model.emplace();

  if (want_fingen) {
    add(relator_gate());
    add(fingen_relations(*model, 10));
    add(iso_roundtrip(*model, 12));
    add(qseq_census(4, 6));
  }
  if (want_univ) {
    add(universal_census(4));
    add(eps_square_law(*model, 100, kEpsSeed));
  }
  if (want_orbits) {
    add(orbit_structure());
    add(hom_count_square(5));
    add(distinctness_probe(*model, 20));
    add(centralizer_probe(*model, 4));
    add(finite_axiom_census(4));
    add(conj_axiom_probe(200, 6, kConjSeed));
    add(free_quandle_diagram(*model, 4));
  }
  if (want_hnn) add(hnn_census(4));
  if (want_alexander) add(alexander_pipeline());
  return out;
}

bool all_pass(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

}  // namespace qf
