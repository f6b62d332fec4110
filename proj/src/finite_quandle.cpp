#include "quandleforge/finite_quandle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "quandleforge/union_find.hpp"

namespace qf {

QuandleCheck is_quandle(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("Cayley table entry out of range");
  }

  for (int x = 0; x < n; ++x) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int y = 0; y < n; ++y) {
      if (seen[static_cast<std::size_t>(table[x][y])])
        return {false, "row " + std::to_string(x) + " is not a permutation"};
      seen[static_cast<std::size_t>(table[x][y])] = true;
    }
  }
  for (int x = 0; x < n; ++x)
    if (table[x][x] != x)
      return {false, "idempotence violated at x=" + std::to_string(x)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[x][table[y][z]] != table[table[x][y]][table[x][z]])
          return {false, "left distributivity violated at (x,y,z)=(" +
                             std::to_string(x) + "," + std::to_string(y) +
                             "," + std::to_string(z) + ")"};
  return {true, ""};
}

namespace {

std::vector<std::vector<int>> invert_rows(
    const std::vector<std::vector<int>>& table) {
  const std::size_t n = table.size();
  std::vector<std::vector<int>> inv(n, std::vector<int>(n, 0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      inv[x][static_cast<std::size_t>(table[x][y])] = static_cast<int>(y);
  return inv;
}

}  // namespace

FiniteQuandle FiniteQuandle::trivial(int n) {
  if (n < 1) throw std::invalid_argument("quandle order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n));
  for (auto& row : t)
    for (int y = 0; y < n; ++y) row.push_back(y);
  auto inv = invert_rows(t);
  return FiniteQuandle(std::move(t), std::move(inv));
}

FiniteQuandle FiniteQuandle::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("quandle order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x)].push_back(((2 * x - y) % n + n) % n);
  auto inv = invert_rows(t);
  return FiniteQuandle(std::move(t), std::move(inv));
}

FiniteQuandle FiniteQuandle::from_table(std::vector<std::vector<int>> table) {
  if (table.empty()) throw std::invalid_argument("empty Cayley table");
  QuandleCheck check = is_quandle(table);
  if (!check.ok)
    throw std::invalid_argument("not a quandle: " + check.violation);
  auto inv = invert_rows(table);
  return FiniteQuandle(std::move(table), std::move(inv));
}

std::string FiniteQuandle::str() const {
  std::ostringstream out;
  out << order() << "\n";
  for (const auto& row : table_) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j == 0 ? "" : " ") << row[j];
    out << "\n";
  }
  return out.str();
}

FiniteQuandle quandle_from_text(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n < 1)
    throw std::invalid_argument("table text must start with the order");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : t)
    for (auto& v : row)
      if (!(in >> v))
        throw std::invalid_argument("table text ended early");
  return FiniteQuandle::from_table(std::move(t));
}

OrbitPartition orbits(const FiniteQuandle& q) {
  const int n = q.order();
  UnionFind uf(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      uf.unite(static_cast<std::size_t>(y),
               static_cast<std::size_t>(q.op(x, y)));
  OrbitPartition part;
  part.block_of.assign(static_cast<std::size_t>(n), -1);
  for (const auto& block : uf.blocks()) {
    std::vector<int> b;
    for (std::size_t e : block) {
      part.block_of[e] = static_cast<int>(part.blocks.size());
      b.push_back(static_cast<int>(e));
    }
    part.blocks.push_back(std::move(b));
  }
  return part;
}

namespace {

// Depth-first assignment of images with incremental morphism checking.
void endo_search(const FiniteQuandle& q, std::vector<int>& image,
                 std::size_t next, std::vector<std::vector<int>>& out) {
  const int n = q.order();
  if (next == static_cast<std::size_t>(n)) {
    out.push_back(image);
    return;
  }
  for (int v = 0; v < n; ++v) {
    image[next] = v;
    bool ok = true;
    const int k = static_cast<int>(next);
    for (int x = 0; x <= k && ok; ++x)
      for (int y = 0; y <= k && ok; ++y) {
        int xy = q.op(x, y);
        if (xy > k) continue;
        ok = image[static_cast<std::size_t>(xy)] ==
             q.op(image[static_cast<std::size_t>(x)],
                  image[static_cast<std::size_t>(y)]);
      }
    if (ok) endo_search(q, image, next + 1, out);
  }
}

}  // namespace

std::vector<std::vector<int>> endomorphisms(const FiniteQuandle& q) {
  std::vector<std::vector<int>> out;
  std::vector<int> image(static_cast<std::size_t>(q.order()), -1);
  endo_search(q, image, 0, out);
  return out;
}

namespace {

std::vector<std::vector<int>> permutations_fixing(int n, int fixed) {
  std::vector<int> base;
  for (int i = 0; i < n; ++i) base.push_back(i);
  std::vector<std::vector<int>> out;  // lexicographic
  do {
    if (base[static_cast<std::size_t>(fixed)] == fixed) out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

// Relabel t by sigma: result[x][y] = sigma(t[sigma^-1(x)][sigma^-1(y)]).
std::vector<std::vector<int>> relabel(const std::vector<std::vector<int>>& t,
                                      const std::vector<int>& sigma) {
  const std::size_t n = t.size();
  std::vector<int> inv(n);
  for (std::size_t i = 0; i < n; ++i)
    inv[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out[x][y] = sigma[static_cast<std::size_t>(
          t[static_cast<std::size_t>(inv[x])][static_cast<std::size_t>(inv[y])])];
  return out;
}

bool is_canonical(const std::vector<std::vector<int>>& t) {
  std::vector<int> sigma;
  for (std::size_t i = 0; i < t.size(); ++i)
    sigma.push_back(static_cast<int>(i));
  while (std::next_permutation(sigma.begin(), sigma.end()))
    if (relabel(t, sigma) < t) return false;
  return true;
}

// Distributivity of the partial table with rows 0..placed set. A triple
// (x,y,z) is checkable once rows x, y and t[x][y] are all placed; z is
// unrestricted because placed rows are complete.
bool rows_consistent(const std::vector<std::vector<int>>& t, int placed) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x <= placed; ++x)
    for (int y = 0; y <= placed; ++y) {
      const auto& row_x = t[std::size_t(x)];
      const int xy = row_x[std::size_t(y)];
      if (xy > placed) continue;
      const auto& row_y = t[std::size_t(y)];
      const auto& row_xy = t[std::size_t(xy)];
      for (int z = 0; z < n; ++z)
        if (row_x[std::size_t(row_y[std::size_t(z)])] !=
            row_xy[std::size_t(row_x[std::size_t(z)])])
          return false;
    }
  return true;
}

void quandle_search(int n,
                    const std::vector<std::vector<std::vector<int>>>& rows_for,
                    std::vector<std::vector<int>>& t, int next,
                    std::vector<FiniteQuandle>& out) {
  if (next == n) {
    if (is_canonical(t)) out.push_back(FiniteQuandle::from_table(t));
    return;
  }
  for (const auto& row : rows_for[std::size_t(next)]) {
    t[std::size_t(next)] = row;
    if (rows_consistent(t, next)) quandle_search(n, rows_for, t, next + 1, out);
  }
}

}  // namespace

std::vector<FiniteQuandle> enumerate_quandles(int n, int cap) {
  if (n < 1) throw std::invalid_argument("quandle order must be positive");
  if (n > cap)
    throw std::invalid_argument("enumeration order " + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
  std::vector<std::vector<std::vector<int>>> rows_for;
  for (int x = 0; x < n; ++x) rows_for.push_back(permutations_fixing(n, x));
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                  std::vector<int>(static_cast<std::size_t>(n), -1));
  std::vector<FiniteQuandle> out;
  quandle_search(n, rows_for, t, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// free group words and free quandles

std::vector<int> free_reduce(std::vector<int> word) {
  std::vector<int> out;
  for (int letter : word) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

std::vector<int> word_inverse(const std::vector<int>& word) {
  std::vector<int> out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(-*it);
  return out;
}

FreeQuandleElem fq_canonical(std::vector<int> word, int generator) {
  word = free_reduce(std::move(word));
  const int g = generator + 1;
  while (!word.empty() && (word.back() == g || word.back() == -g))
    word.pop_back();
  return {std::move(word), generator};
}

namespace {

std::vector<int> carrier_word(const FreeQuandleElem& x) {
  // the underlying free-group element w g w^-1
  std::vector<int> w = x.word;
  w.push_back(x.generator + 1);
  auto inv = word_inverse(x.word);
  w.insert(w.end(), inv.begin(), inv.end());
  return free_reduce(std::move(w));
}

}  // namespace

FreeQuandleElem FreeQuandle::op(const FreeQuandleElem& x,
                                const FreeQuandleElem& y) const {
  std::vector<int> w = carrier_word(x);
  w.insert(w.end(), y.word.begin(), y.word.end());
  return fq_canonical(std::move(w), y.generator);
}

FreeQuandleElem FreeQuandle::op_inv(const FreeQuandleElem& x,
                                    const FreeQuandleElem& y) const {
  std::vector<int> w = word_inverse(carrier_word(x));
  w.insert(w.end(), y.word.begin(), y.word.end());
  return fq_canonical(std::move(w), y.generator);
}

}  // namespace qf
