#include "quandleforge/laurent.hpp"

#include <vector>

#include "doctest.h"
#include "quandleforge/prng.hpp"
#include "test_support.hpp"

using namespace qf;

namespace {

LaurentPoly one_minus_q() { return LaurentPoly::one() - LaurentPoly::q(); }
LaurentPoly q_minus_one() { return LaurentPoly::q() - LaurentPoly::one(); }

LaurentPoly random_poly(SplitMix64& rng) {
  LaurentPoly p;
  int terms = rng.range(0, 4);
  for (int i = 0; i < terms; ++i)
    p = p + LaurentPoly::term(rng.range(-5, 5), rng.range(-4, 4));
  return p;
}

// The presentation matrix of Thompson's quandle: both relations
// linearize to (1-q) a + (q-1) b.
LaurentMatrix thompson_matrix() {
  return LaurentMatrix::from_rows(
      {"a", "b"},
      {{one_minus_q(), q_minus_one()}, {one_minus_q(), q_minus_one()}});
}

}  // namespace

TEST_SUITE_BEGIN("laurent");

TEST_CASE("polynomial addition") {
  CHECK((one_minus_q() + q_minus_one()).is_zero());
  CHECK(one_minus_q() + LaurentPoly::q() == LaurentPoly::one());
  LaurentPoly qinv = LaurentPoly::term(1, -1);
  CHECK(qinv + qinv == LaurentPoly::term(2, -1));
}

TEST_CASE("polynomial multiplication") {
  LaurentPoly qinv = LaurentPoly::term(1, -1);
  CHECK(one_minus_q() * qinv ==
        LaurentPoly::from_terms({{-1, 1}, {0, -1}}));  // q^-1 - 1
  CHECK(one_minus_q() * (LaurentPoly::one() + LaurentPoly::q()) ==
        LaurentPoly::from_terms({{0, 1}, {2, -1}}));  // 1 - q^2
  SplitMix64 rng(11);
  for (int i = 0; i < 20; ++i)
    CHECK((random_poly(rng) * LaurentPoly()).is_zero());
}

TEST_CASE("evaluation") {
  CHECK(one_minus_q().eval(Rat(1)) == Rat(0));
  CHECK(one_minus_q().eval(Rat(2)) == Rat(-1));
  CHECK(LaurentPoly::term(1, -1).eval(Rat(2)) == Rat(1, 2));
  CHECK_THROWS_AS(one_minus_q().eval(Rat(0)), std::domain_error);
}

TEST_CASE("rendering") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(one_minus_q().str() == "1 - q");
  CHECK(LaurentPoly::term(2, -1).str() == "2*q^-1");
  CHECK((LaurentPoly::term(1, -1) - LaurentPoly::one()).str() == "q^-1 - 1");
  CHECK(q_minus_one().str() == "-1 + q");
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
  for (int k = -4; k <= 4; ++k)
    for (int s : {1, -1}) {
      LaurentPoly u = LaurentPoly::term(s, k);
      CHECK(u.is_unit());
      CHECK(u * u.unit_inverse() == LaurentPoly::one());
    }
  CHECK_FALSE(one_minus_q().is_unit());
  CHECK_FALSE(LaurentPoly::term(2, 3).is_unit());
}

TEST_CASE("exact division") {
  auto r = LaurentPoly::divide_exact(q_minus_one(), one_minus_q());
  REQUIRE(r.has_value());
  CHECK(*r == LaurentPoly::constant(-1));

  LaurentPoly num = LaurentPoly::from_terms({{0, 1}, {2, -1}});  // 1 - q^2
  auto s = LaurentPoly::divide_exact(num, LaurentPoly::one() + LaurentPoly::q());
  REQUIRE(s.has_value());
  CHECK(*s == one_minus_q());

  CHECK_FALSE(LaurentPoly::divide_exact(LaurentPoly::q(), one_minus_q()));
  CHECK_FALSE(LaurentPoly::divide_exact(LaurentPoly::constant(3),
                                        LaurentPoly::constant(2)));
  CHECK(LaurentPoly::divide_exact(LaurentPoly(), one_minus_q())->is_zero());
  CHECK_FALSE(LaurentPoly::divide_exact(one_minus_q(), LaurentPoly()));

  SplitMix64 rng(7);
  for (int i = 0; i < 100; ++i) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    auto quot = LaurentPoly::divide_exact(a * b, b);
    REQUIRE(quot.has_value());
    CHECK(*quot == a);
  }
}

TEST_CASE("normalized associate") {
  CHECK(q_minus_one().normalized_associate() == one_minus_q());
  CHECK(one_minus_q().shifted(-3).normalized_associate() == one_minus_q());
  CHECK((-one_minus_q()).normalized_associate() == one_minus_q());
  CHECK(LaurentPoly().normalized_associate().is_zero());
}

TEST_CASE("matrix_reduce drops duplicate relation rows") {
  ReduceResult res = matrix_reduce(thompson_matrix());
  REQUIRE(res.matrix.nrows() == 1);
  CHECK(res.matrix.at(0, 0) == one_minus_q());
  CHECK(res.matrix.at(0, 1) == q_minus_one());
  REQUIRE(res.transcript.size() == 1);
  CHECK(res.transcript[0].kind == ReduceOp::Kind::drop_multiple_row);
  CHECK(res.transcript[0].str() == "drop row 1 = (1) * row 0");

  // a row that is a nonunit multiple is dropped, not its generator
  LaurentMatrix m = LaurentMatrix::from_rows(
      {"a", "b"}, {{one_minus_q() * one_minus_q(), LaurentPoly()},
                   {one_minus_q(), LaurentPoly()}});
  ReduceResult res2 = matrix_reduce(m);
  REQUIRE(res2.matrix.nrows() == 1);
  CHECK(res2.matrix.at(0, 0) == one_minus_q());
}

TEST_CASE("matrix_reduce on the zero matrix") {
  LaurentMatrix z = LaurentMatrix::from_rows(
      {"a", "b"}, {{LaurentPoly(), LaurentPoly()},
                   {LaurentPoly(), LaurentPoly()}});
  ReduceResult res = matrix_reduce(z);
  CHECK(res.matrix.nrows() == 0);
  ModuleDescription desc = describe_module(z);
  CHECK(desc.free_rank == 2);
  CHECK(desc.torsion_factors.empty());
  CHECK_FALSE(desc.residual.has_value());
}

TEST_CASE("unit pivot elimination") {
  LaurentMatrix m = LaurentMatrix::from_rows(
      {"a", "b"},
      {{LaurentPoly::one(), LaurentPoly()}, {LaurentPoly(), one_minus_q()}});
  ReduceResult res = matrix_reduce(m);
  CHECK(res.matrix == m);  // already diagonal
  ModuleDescription desc = describe_module(m);
  CHECK(desc.free_rank == 0);
  REQUIRE(desc.torsion_factors.size() == 1);
  CHECK(desc.torsion_factors[0] == one_minus_q());
  CHECK_FALSE(desc.residual.has_value());
}

TEST_CASE("describe_module of the Thompson presentation matrix") {
  ModuleDescription desc = describe_module(thompson_matrix());
  CHECK(desc.free_rank == 1);
  REQUIRE(desc.torsion_factors.size() == 1);
  CHECK(desc.torsion_factors[0] == one_minus_q());
  CHECK_FALSE(desc.residual.has_value());
}

TEST_CASE("describe_module is invariant under relation and column swaps") {
  ModuleDescription base = describe_module(thompson_matrix());

  LaurentMatrix swapped_rows = LaurentMatrix::from_rows(
      {"a", "b"},
      {{one_minus_q(), q_minus_one()}, {one_minus_q(), q_minus_one()}});
  swapped_rows.swap_rows(0, 1);
  ModuleDescription d1 = describe_module(swapped_rows);

  LaurentMatrix swapped_cols = thompson_matrix();
  swapped_cols.swap_cols(0, 1);
  ModuleDescription d2 = describe_module(swapped_cols);

  for (const auto& d : {d1, d2}) {
    CHECK(d.free_rank == base.free_rank);
    REQUIRE(d.torsion_factors.size() == base.torsion_factors.size());
    CHECK(d.torsion_factors[0] == base.torsion_factors[0]);
    CHECK_FALSE(d.residual.has_value());
  }
}

TEST_CASE("integer diagonal against Smith normal form at q=1") {
  LaurentMatrix m = LaurentMatrix::from_rows(
      {"a", "b"}, {{LaurentPoly::constant(2), LaurentPoly()},
                   {LaurentPoly(), LaurentPoly::constant(3)}});
  ModuleDescription desc = describe_module(m);
  CHECK_FALSE(desc.residual.has_value());
  REQUIRE(desc.torsion_factors.size() == 2);

  // oracle: invariant factors of the q=1 specialization
  auto spec = specialize(m, Rat(1));
  std::vector<std::vector<long long>> ints;
  for (const auto& row : spec) {
    std::vector<long long> r;
    for (const auto& v : row) {
      REQUIRE(v.den() == 1);
      r.push_back(v.num());
    }
    ints.push_back(r);
  }
  auto oracle = qftest::smith_invariants(ints);

  // description side: torsion factors specialized at q=1
  std::vector<std::vector<long long>> diag;
  std::size_t desc_free = desc.free_rank;
  std::vector<long long> vals;
  for (const auto& t : desc.torsion_factors) {
    Rat v = t.eval(Rat(1));
    REQUIRE(v.den() == 1);
    if (v.num() == 0)
      ++desc_free;  // (1-q)-style factors become free at q=1
    else
      vals.push_back(v.num());
  }
  diag.assign(vals.size(), std::vector<long long>(vals.size(), 0));
  for (std::size_t i = 0; i < vals.size(); ++i) diag[i][i] = vals[i];
  auto ours = qftest::smith_invariants(diag);

  auto nontrivial = [](std::vector<long long> v) {
    std::erase(v, 1);
    return v;
  };
  CHECK(nontrivial(ours) == nontrivial(oracle));
  CHECK(desc_free == m.ncols() - oracle.size());
}

TEST_CASE("describe_module reports a residual when no move applies") {
  LaurentMatrix m = LaurentMatrix::from_rows(
      {"a", "b"}, {{LaurentPoly::constant(2), LaurentPoly::constant(3)},
                   {LaurentPoly::constant(3), LaurentPoly::constant(2)}});
  ModuleDescription desc = describe_module(m);
  REQUIRE(desc.residual.has_value());
  CHECK(desc.residual->nrows() == 2);
  CHECK(desc.free_rank == 0);
}

TEST_CASE("transcripts replay exactly and preserve row spans") {
  std::vector<LaurentMatrix> inputs;
  inputs.push_back(thompson_matrix());
  inputs.push_back(LaurentMatrix::from_rows(
      {"a", "b"}, {{LaurentPoly::q(), one_minus_q()},
                   {LaurentPoly(), LaurentPoly::constant(2)}}));
  inputs.push_back(LaurentMatrix::from_rows(
      {"a", "b", "c"},
      {{one_minus_q() * one_minus_q(), LaurentPoly(), LaurentPoly::one()},
       {one_minus_q(), LaurentPoly::constant(2), LaurentPoly()},
       {LaurentPoly(), LaurentPoly(), LaurentPoly()}}));
  // seeded random matrices over a small entry pool
  SplitMix64 rng(404);
  const std::vector<LaurentPoly> pool{
      LaurentPoly(),          LaurentPoly::one(),     -LaurentPoly::one(),
      LaurentPoly::q(),       LaurentPoly::term(1, -1), one_minus_q(),
      LaurentPoly::constant(2), one_minus_q() * one_minus_q()};
  for (int t = 0; t < 25; ++t) {
    std::size_t rows = rng.below(4) + 1, cols = rng.below(3) + 1;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < cols; ++j)
      labels.push_back(std::string(1, char('a' + j)));
    LaurentMatrix m(labels);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t j = 0; j < cols; ++j)
        row.push_back(pool[rng.below(pool.size())]);
      m.append_row(std::move(row));
    }
    inputs.push_back(std::move(m));
  }

  for (const auto& input : inputs) {
    ReduceResult res = matrix_reduce(input);
    CHECK(apply_transcript(input, res.transcript) == res.matrix);

    for (std::int64_t c : {2, 3, -1}) {
      // align the column bases: apply the recorded column moves to the
      // specialized input, then compare row spans by rank
      auto rows = specialize(input, Rat(c));
      for (const auto& op : res.transcript) {
        if (op.kind == ReduceOp::Kind::swap_cols) {
          for (auto& row : rows) std::swap(row[op.i], row[op.j]);
        } else if (op.kind == ReduceOp::Kind::add_col_multiple) {
          Rat f = op.factor.eval(Rat(c));
          for (auto& row : rows) row[op.i] = row[op.i] + f * row[op.j];
        }
      }
      auto reduced = specialize(res.matrix, Rat(c));
      std::size_t rank_in = rational_rank(rows);
      std::size_t rank_out = rational_rank(reduced);
      auto stacked = rows;
      stacked.insert(stacked.end(), reduced.begin(), reduced.end());
      CHECK(rank_in == rank_out);
      CHECK(rational_rank(stacked) == rank_in);
    }
  }
}

TEST_CASE("rational rank") {
  using Row = std::vector<Rat>;
  CHECK(rational_rank({}) == 0);
  CHECK(rational_rank({Row{Rat(0), Rat(0)}}) == 0);
  CHECK(rational_rank({Row{Rat(1), Rat(2)}, Row{Rat(2), Rat(4)}}) == 1);
  CHECK(rational_rank({Row{Rat(1), Rat(0)}, Row{Rat(0), Rat(1)}}) == 2);
}

TEST_SUITE_END();
