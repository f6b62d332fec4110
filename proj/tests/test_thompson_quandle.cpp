#include "quandleforge/thompson_quandle.hpp"

#include <atomic>
#include <thread>

#include "doctest.h"
#include "quandleforge/finite_quandle.hpp"
#include "test_support.hpp"

using namespace qf;

namespace {

bool defining_relation(const TreePair& a, const TreePair& b) {
  TreePair ab = conj(a, b);
  return conj(a, ab) == conj(b, ab);
}

// elements built from p(0..5) by the quandle operations, seeded
std::vector<PElem> sample_pool(const ThompsonQuandle& model, int extra,
                               SplitMix64& rng) {
  std::vector<PElem> pool;
  for (std::size_t n = 0; n <= 5; ++n) pool.push_back(model.p(n));
  for (int i = 0; i < extra; ++i) {
    const PElem& x = pool[rng.below(pool.size())];
    const PElem& y = pool[rng.below(pool.size())];
    pool.push_back(rng.below(2) == 0 ? model.op(x, y) : model.op_inv(x, y));
  }
  return pool;
}

}  // namespace

TEST_SUITE_BEGIN("thompson_quandle");

TEST_CASE("calibration picks exactly one orientation") {
  Calibration cal = calibrate();
  CHECK(defining_relation(cal.a, cal.b));
  // the opposite sign fails the defining relation
  CHECK_FALSE(defining_relation(invert(cal.a), invert(cal.b)));
  CHECK((cal.sign == 1 || cal.sign == -1));

  // the second defining relation holds under the calibration too:
  // a |> (a |> (a |> b)) = b |> (a |> (a |> b))
  TreePair inner = conj(cal.a, conj(cal.a, cal.b));
  CHECK(conj(cal.a, inner) == conj(cal.b, inner));
}

TEST_CASE("calibration satisfies the defining chain") {
  Calibration cal = calibrate();
  TreePair q2 = conj(cal.a, cal.b);
  TreePair q3 = conj(cal.b, q2);
  CHECK(conj(cal.a, q2) == q3);              // R_{0,2}
  CHECK(conj(cal.b, q3) == conj(q2, q3));    // R_{1,3}, both equal q4
}

TEST_CASE("generator sequence") {
  ThompsonQuandle model;
  const TreePair a = model.calibration().a;
  const TreePair b = model.calibration().b;
  CHECK(model.p(0).value == a);
  CHECK(model.p(1).value == b);
  CHECK(model.p(2).value == multiply(multiply(a, b), invert(a)));
  CHECK(model.p(3).value == conj(b, model.p(2).value));

  for (int i = 0; i <= 20; ++i)
    for (int j = i + 1; j <= 20; ++j)
      CHECK_FALSE(model.p(std::size_t(i)) == model.p(std::size_t(j)));
}

TEST_CASE("three routes to the generator sequence agree") {
  // the model's conjugation recursion against two independent
  // constructions in F: conjugation words and the iterated shift
  ThompsonQuandle model;
  const TreePair x0 = generator(0);
  const TreePair x1 = generator(1);
  TreePair by_shift = x0;
  for (int n = 0; n <= 15; ++n) {
    TreePair by_word =
        n == 0 ? x0
               : multiply(multiply(power(x0, -(n - 1)), x1), power(x0, n - 1));
    CHECK(model.p(std::size_t(n)).value == invert(by_word));
    CHECK(by_shift == by_word);
    by_shift = shift(by_shift);
  }
}

TEST_CASE("generator cap") {
  ThompsonQuandle small(10);
  CHECK_NOTHROW(small.p(10));
  CHECK_THROWS_AS(small.p(11), std::invalid_argument);
  CHECK_THROWS_AS(small.iso_f(11), std::invalid_argument);
}

TEST_CASE("quandle operations") {
  ThompsonQuandle model;
  for (std::size_t n = 0; n <= 10; ++n) {
    PElem x = model.p(n);
    CHECK(model.op(x, x) == x);
  }
  SplitMix64 rng(31);
  for (int i = 0; i < 50; ++i) {
    PElem x = model.p(rng.below(11));
    PElem y = model.p(rng.below(11));
    CHECK(model.op_inv(x, model.op(x, y)) == y);
    CHECK(model.op(x, model.op_inv(x, y)) == y);
  }
  for (std::size_t k = 1; k <= 10; ++k)
    for (std::size_t j = 0; j < k; ++j)
      CHECK(model.op(model.p(j), model.p(k)) == model.p(k + 1));
}

TEST_CASE("quandle axioms on generated elements") {
  ThompsonQuandle model;
  SplitMix64 rng(32);
  auto pool = sample_pool(model, 40, rng);
  for (int i = 0; i < 100; ++i) {
    const PElem& x = pool[rng.below(pool.size())];
    const PElem& y = pool[rng.below(pool.size())];
    const PElem& z = pool[rng.below(pool.size())];
    CHECK(model.op(x, model.op(y, z)) ==
          model.op(model.op(x, y), model.op(x, z)));
    CHECK(model.op(x, x) == x);
    CHECK(model.op_inv(x, model.op(x, y)) == y);
  }
}

TEST_CASE("eps") {
  ThompsonQuandle model;
  for (std::size_t n = 0; n <= 10; ++n)
    CHECK(model.eps(model.p(n)) == model.p(n + 1));

  SplitMix64 rng(33);
  auto pool = sample_pool(model, 94, rng);  // 100 elements total
  const PElem p0 = model.p(0);
  for (const PElem& x : pool)
    CHECK(model.eps(model.eps(x)) == model.op(p0, model.eps(x)));

  // injective on the sample
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      if (!(pool[i] == pool[j]))
        CHECK_FALSE(model.eps(pool[i]) == model.eps(pool[j]));
}

TEST_CASE("orbit map") {
  ThompsonQuandle model;
  CHECK(model.orbit(model.p(0)) == Orbit::A);
  CHECK(model.orbit(model.p(7)) == Orbit::B);

  SplitMix64 rng(34);
  auto pool = sample_pool(model, 50, rng);
  for (int i = 0; i < 100; ++i) {
    const PElem& x = pool[rng.below(pool.size())];
    const PElem& y = pool[rng.below(pool.size())];
    CHECK(model.orbit(model.op(x, y)) == model.orbit(y));
  }

  // corrupted elements are rejected
  const TreePair a = model.calibration().a;
  PElem fake{multiply(a, a), Orbit::A};  // abelianization matches no generator
  CHECK_THROWS_AS(model.orbit(fake), std::runtime_error);
  PElem mistagged{a, Orbit::B};
  CHECK_THROWS_AS(model.orbit(mistagged), std::runtime_error);
}

TEST_CASE("iso_f produces the q-terms") {
  ThompsonQuandle model;
  CHECK(model.iso_f(0).str() == "a");
  CHECK(model.iso_f(1).str() == "b");
  CHECK(model.iso_f(2).str() == "a |> b");
  CHECK(model.iso_f(4).str() == "(a |> b) |> (b |> (a |> b))");
}

TEST_CASE("iso_g evaluates terms in the model") {
  ThompsonQuandle model;
  CHECK(model.iso_g(parse_term("a")) == model.p(0));
  CHECK(model.iso_g(parse_term("a |> b")) == model.p(2));
  CHECK(model.iso_g(parse_term("b |> (a |> b)")) == model.p(3));
  CHECK_THROWS_AS(model.iso_g(parse_term("a |> z")), std::invalid_argument);
}

TEST_CASE("iso_f and iso_g are mutually inverse on generators") {
  ThompsonQuandle model;
  for (std::size_t n = 0; n <= 12; ++n)
    CHECK(model.iso_g(model.iso_f(n)) == model.p(n));
}

TEST_CASE("verify_relations") {
  ThompsonQuandle model;
  RelationReport r10 = model.verify_relations(10);
  CHECK(r10.ok);
  CHECK(r10.checked == 55);

  RelationReport r1 = model.verify_relations(1);
  CHECK(r1.ok);
  CHECK(r1.checked == 1);

  RelationReport r0 = model.verify_relations(0);
  CHECK(r0.ok);
  CHECK(r0.checked == 0);
}

TEST_CASE("conjugation quandle axioms on random tree pairs") {
  ConjQuandle<TreePair> cq;
  SplitMix64 rng(35);
  const TreePair g1 = generator(0);
  const TreePair g2 = generator(1);
  auto random_elem = [&] {
    std::vector<int> w;
    for (int k = rng.range(0, 6); k > 0; --k)
      w.push_back(std::vector<int>{1, -1, 2, -2}[rng.below(4)]);
    return evaluate_word(w, g1, g2);
  };
  for (int i = 0; i < 200; ++i) {
    TreePair x = random_elem(), y = random_elem(), z = random_elem();
    CHECK(cq.op(x, cq.op(y, z)) == cq.op(cq.op(x, y), cq.op(x, z)));
    CHECK(cq.op(x, x) == x);
    CHECK(cq.op_inv(x, cq.op(x, y)) == y);
  }
}

TEST_CASE("centralizer probe: short words commuting with a are its powers") {
  ThompsonQuandle model;
  const TreePair a = model.calibration().a;
  const TreePair b = model.calibration().b;
  std::vector<TreePair> powers;
  for (int k = -4; k <= 4; ++k) powers.push_back(power(a, k));

  std::vector<std::vector<int>> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].size() >= 4) continue;
    for (int letter : {1, -1, 2, -2}) {
      auto w = words[i];
      w.push_back(letter);
      words.push_back(w);
    }
  }
  int centralizing = 0;
  for (const auto& w : words) {
    TreePair g = evaluate_word(w, a, b);
    if (conj(g, a) == a) {
      ++centralizing;
      bool is_power = false;
      for (const auto& pk : powers) is_power |= (g == pk);
      CHECK(is_power);
    }
  }
  CHECK(centralizing > 0);
}

TEST_CASE("free quandle square commutes into F") {
  ThompsonQuandle model;
  const TreePair ga = model.calibration().a;
  const TreePair gb = model.calibration().b;
  SplitMix64 rng(36);
  for (int i = 0; i < 100; ++i) {
    std::vector<int> w;
    for (int k = rng.range(0, 4); k > 0; --k)
      w.push_back(std::vector<int>{1, -1, 2, -2}[rng.below(4)]);
    int g = int(rng.below(2));
    FreeQuandleElem canon = fq_canonical(w, g);

    PElem through_p = model.p(std::size_t(g));
    for (auto it = canon.word.rbegin(); it != canon.word.rend(); ++it) {
      PElem gen = model.p(std::size_t(*it > 0 ? *it : -*it) - 1);
      through_p =
          *it > 0 ? model.op(gen, through_p) : model.op_inv(gen, through_p);
    }
    TreePair through_f = conj(evaluate_word(w, ga, gb), g == 0 ? ga : gb);
    CHECK(through_p.value == through_f);
  }
}

TEST_CASE("element rendering") {
  ThompsonQuandle model;
  std::string s = model.p(0).str();
  CHECK(s.rfind("p-elem{orbit=A, tree=", 0) == 0);
  CHECK(s.back() == '}');
}

TEST_CASE("memoized generators are safe to read concurrently") {
  ThompsonQuandle model;
  std::vector<PElem> expected;
  for (std::size_t n = 0; n <= 40; ++n) expected.push_back(model.p(n));

  ThompsonQuandle fresh;
  std::atomic<int> mismatches{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t n = std::size_t(t) % 3; n <= 40; ++n)
        if (!(fresh.p(n) == expected[n])) ++mismatches;
    });
  for (auto& w : workers) w.join();
  CHECK(mismatches == 0);
}

TEST_SUITE_END();
