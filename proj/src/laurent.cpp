#include "quandleforge/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qf {

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
  if (den_ == 0) throw std::domain_error("Rat: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("Rat: division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::term(std::int64_t coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.c_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::from_terms(
    std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPoly p;
  for (const auto& [exp, coeff] : terms) {
    p.c_[exp] += coeff;
    if (p.c_[exp] == 0) p.c_.erase(exp);
  }
  return p;
}

bool LaurentPoly::is_unit() const {
  if (c_.size() != 1) return false;
  std::int64_t c = c_.begin()->second;
  return c == 1 || c == -1;
}

int LaurentPoly::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

std::int64_t LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.c_) {
    r.c_[e] += c;
    if (r.c_[e] == 0) r.c_.erase(e);
  }
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      int e = ea + eb;
      r.c_[e] += ca * cb;
      if (r.c_[e] == 0) r.c_.erase(e);
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(int dexp) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e + dexp] = c;
  return r;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("unit_inverse of a nonunit");
  auto [e, c] = *c_.begin();
  return term(c, -e);
}

Rat LaurentPoly::eval(const Rat& c) const {
  if (c.is_zero())
    throw std::domain_error("eval: image of q must be invertible");
  if (is_zero()) return Rat(0);
  // evaluate as c^min * sum coeff_k c^(k - min)
  Rat acc(0);
  int lo = min_exp();
  for (const auto& [e, co] : c_) {
    Rat p(1);
    for (int k = 0; k < e - lo; ++k) p = p * c;
    acc = acc + Rat(co) * p;
  }
  Rat scale(1);
  for (int k = 0; k < (lo < 0 ? -lo : lo); ++k) scale = scale * c;
  return lo >= 0 ? acc * scale : acc / scale;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& num,
                                                     const LaurentPoly& den) {
  if (den.is_zero()) {
    if (num.is_zero()) return LaurentPoly();
    return std::nullopt;
  }
  if (num.is_zero()) return LaurentPoly();
  // normalize both to ordinary polynomials with nonzero constant term and
  // run long division from the top degree
  int shift = num.min_exp() - den.min_exp();
  LaurentPoly rem = num.shifted(-num.min_exp());
  LaurentPoly d = den.shifted(-den.min_exp());
  LaurentPoly quot;
  while (!rem.is_zero() && rem.max_exp() >= d.max_exp()) {
    std::int64_t lead_r = rem.coeff(rem.max_exp());
    std::int64_t lead_d = d.coeff(d.max_exp());
    if (lead_r % lead_d != 0) return std::nullopt;
    LaurentPoly t = term(lead_r / lead_d, rem.max_exp() - d.max_exp());
    quot = quot + t;
    rem = rem - t * d;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot.shifted(shift);
}

LaurentPoly LaurentPoly::normalized_associate() const {
  if (is_zero()) return *this;
  LaurentPoly r = shifted(-min_exp());
  if (r.coeff(0) < 0) r = -r;
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : c_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "q";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// LaurentMatrix

LaurentMatrix::LaurentMatrix(std::vector<std::string> column_labels)
    : labels_(std::move(column_labels)) {}

LaurentMatrix LaurentMatrix::from_rows(
    std::vector<std::string> column_labels,
    std::vector<std::vector<LaurentPoly>> rows) {
  LaurentMatrix m(std::move(column_labels));
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

const LaurentPoly& LaurentMatrix::at(std::size_t i, std::size_t j) const {
  return rows_.at(i).at(j);
}

const std::vector<LaurentPoly>& LaurentMatrix::row(std::size_t i) const {
  return rows_.at(i);
}

void LaurentMatrix::append_row(std::vector<LaurentPoly> row) {
  if (row.size() != labels_.size())
    throw std::invalid_argument("row width does not match column count");
  rows_.push_back(std::move(row));
}

bool LaurentMatrix::row_is_zero(std::size_t i) const {
  for (const auto& p : rows_.at(i))
    if (!p.is_zero()) return false;
  return true;
}

void LaurentMatrix::drop_row(std::size_t i) {
  rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
}

void LaurentMatrix::swap_rows(std::size_t i, std::size_t j) {
  std::swap(rows_.at(i), rows_.at(j));
}

void LaurentMatrix::swap_cols(std::size_t i, std::size_t j) {
  for (auto& r : rows_) std::swap(r.at(i), r.at(j));
  std::swap(labels_.at(i), labels_.at(j));
}

void LaurentMatrix::scale_row(std::size_t i, const LaurentPoly& unit) {
  for (auto& p : rows_.at(i)) p = p * unit;
}

void LaurentMatrix::add_row_multiple(std::size_t i, std::size_t j,
                                     const LaurentPoly& c) {
  for (std::size_t k = 0; k < ncols(); ++k)
    rows_.at(i)[k] = rows_.at(i)[k] + c * rows_.at(j)[k];
}

void LaurentMatrix::add_col_multiple(std::size_t i, std::size_t j,
                                     const LaurentPoly& c) {
  for (auto& r : rows_) r.at(i) = r.at(i) + c * r.at(j);
}

std::string LaurentMatrix::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < nrows(); ++i) {
    out << (i == 0 ? "[" : " [");
    for (std::size_t j = 0; j < ncols(); ++j)
      out << (j == 0 ? "" : ", ") << rows_[i][j].str();
    out << "]" << (i + 1 == nrows() ? "" : "\n");
  }
  out << "]";
  return out.str();
}

std::string ReduceOp::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::drop_zero_row:
      out << "drop row " << i << " (zero)";
      break;
    case Kind::drop_multiple_row:
      out << "drop row " << i << " = (" << factor.str() << ") * row " << j;
      break;
    case Kind::swap_rows:
      out << "swap rows " << i << ", " << j;
      break;
    case Kind::swap_cols:
      out << "swap cols " << i << ", " << j;
      break;
    case Kind::scale_row:
      out << "row " << i << " *= " << factor.str();
      break;
    case Kind::add_row_multiple:
      out << "row " << i << " += (" << factor.str() << ") * row " << j;
      break;
    case Kind::add_col_multiple:
      out << "col " << i << " += (" << factor.str() << ") * col " << j;
      break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// reduction

namespace {

// Drops zero rows and rows that are exact ring multiples of another kept
// row. Mutual (associate) multiples keep the lower index.
bool drop_redundant_rows(LaurentMatrix& m, std::vector<ReduceOp>& ops) {
  bool changed = false;
  for (std::size_t i = 0; i < m.nrows();) {
    if (m.row_is_zero(i)) {
      ops.push_back({ReduceOp::Kind::drop_zero_row, i, 0, {}});
      m.drop_row(i);
      changed = true;
      continue;
    }
    bool dropped = false;
    for (std::size_t j = 0; j < m.nrows() && !dropped; ++j) {
      if (j == i) continue;
      // candidate factor from the first nonzero position of row j
      std::size_t k = 0;
      while (k < m.ncols() && m.at(j, k).is_zero()) ++k;
      if (k == m.ncols()) continue;
      auto u = LaurentPoly::divide_exact(m.at(i, k), m.at(j, k));
      if (!u) continue;
      bool multiple = true;
      for (std::size_t c = 0; c < m.ncols() && multiple; ++c)
        multiple = (m.at(i, c) == *u * m.at(j, c));
      if (!multiple) continue;
      // when the rows are associates, keep the one with the lower index
      bool associate = u->is_unit();
      if (associate && i < j) continue;
      ops.push_back({ReduceOp::Kind::drop_multiple_row, i, j, *u});
      m.drop_row(i);
      dropped = true;
      changed = true;
    }
    if (!dropped) ++i;
  }
  return changed;
}

// Full elimination at unit pivots, building an identity block in the top
// left corner starting at diagonal position d.
bool eliminate_unit_pivots(LaurentMatrix& m, std::size_t& d,
                           std::vector<ReduceOp>& ops) {
  bool changed = false;
  while (d < m.nrows() && d < m.ncols()) {
    std::size_t pi = m.nrows(), pj = m.ncols();
    for (std::size_t i = d; i < m.nrows() && pi == m.nrows(); ++i)
      for (std::size_t j = d; j < m.ncols(); ++j)
        if (m.at(i, j).is_unit()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == m.nrows()) break;
    if (pi != d) {
      ops.push_back({ReduceOp::Kind::swap_rows, d, pi, {}});
      m.swap_rows(d, pi);
    }
    if (pj != d) {
      ops.push_back({ReduceOp::Kind::swap_cols, d, pj, {}});
      m.swap_cols(d, pj);
    }
    LaurentPoly inv = m.at(d, d).unit_inverse();
    if (!(m.at(d, d) == LaurentPoly::one())) {
      ops.push_back({ReduceOp::Kind::scale_row, d, 0, inv});
      m.scale_row(d, inv);
    }
    for (std::size_t i = 0; i < m.nrows(); ++i) {
      if (i == d || m.at(i, d).is_zero()) continue;
      LaurentPoly c = -m.at(i, d);
      ops.push_back({ReduceOp::Kind::add_row_multiple, i, d, c});
      m.add_row_multiple(i, d, c);
    }
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      if (j == d || m.at(d, j).is_zero()) continue;
      LaurentPoly c = -m.at(d, j);
      ops.push_back({ReduceOp::Kind::add_col_multiple, j, d, c});
      m.add_col_multiple(j, d, c);
    }
    ++d;
    changed = true;
  }
  return changed;
}

}  // namespace

ReduceResult matrix_reduce(const LaurentMatrix& input) {
  ReduceResult res{input, {}};
  std::size_t d = 0;
  bool changed = true;
  while (changed) {
    changed = drop_redundant_rows(res.matrix, res.transcript);
    changed |= eliminate_unit_pivots(res.matrix, d, res.transcript);
  }
  return res;
}

LaurentMatrix apply_transcript(LaurentMatrix m,
                               const std::vector<ReduceOp>& ops) {
  for (const auto& op : ops) {
    switch (op.kind) {
      case ReduceOp::Kind::drop_zero_row:
      case ReduceOp::Kind::drop_multiple_row:
        m.drop_row(op.i);
        break;
      case ReduceOp::Kind::swap_rows:
        m.swap_rows(op.i, op.j);
        break;
      case ReduceOp::Kind::swap_cols:
        m.swap_cols(op.i, op.j);
        break;
      case ReduceOp::Kind::scale_row:
        m.scale_row(op.i, op.factor);
        break;
      case ReduceOp::Kind::add_row_multiple:
        m.add_row_multiple(op.i, op.j, op.factor);
        break;
      case ReduceOp::Kind::add_col_multiple:
        m.add_col_multiple(op.i, op.j, op.factor);
        break;
    }
  }
  return m;
}

ModuleDescription describe_module(const LaurentMatrix& input) {
  LaurentMatrix m = matrix_reduce(input).matrix;
  std::vector<bool> row_done(m.nrows(), false);
  std::vector<bool> col_pivoted(m.ncols(), false);
  std::vector<LaurentPoly> torsion;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < m.nrows() && !progress; ++i) {
      if (row_done[i]) continue;
      if (m.row_is_zero(i)) {
        row_done[i] = true;
        progress = true;
        break;
      }
      // try to clear the row with column operations from an entry that
      // divides every other entry of the row
      std::size_t pivot_col = m.ncols();
      std::vector<LaurentPoly> quotients(m.ncols());
      for (std::size_t j = 0; j < m.ncols() && pivot_col == m.ncols(); ++j) {
        if (m.at(i, j).is_zero() || col_pivoted[j]) continue;
        bool divides_all = true;
        for (std::size_t k = 0; k < m.ncols() && divides_all; ++k) {
          if (k == j || m.at(i, k).is_zero()) continue;
          auto u = LaurentPoly::divide_exact(m.at(i, k), m.at(i, j));
          if (u)
            quotients[k] = *u;
          else
            divides_all = false;
        }
        if (divides_all) pivot_col = j;
      }
      if (pivot_col == m.ncols()) continue;
      for (std::size_t k = 0; k < m.ncols(); ++k) {
        if (k == pivot_col || m.at(i, k).is_zero()) continue;
        m.add_col_multiple(k, pivot_col, -quotients[k]);
      }
      // the row now has a single entry; retire it when its column is
      // clear in every other live row
      bool clear = true;
      for (std::size_t r = 0; r < m.nrows() && clear; ++r)
        clear = (r == i) || row_done[r] || m.at(r, pivot_col).is_zero();
      if (!clear) continue;
      const LaurentPoly& p = m.at(i, pivot_col);
      if (!p.is_unit()) torsion.push_back(p.normalized_associate());
      row_done[i] = true;
      col_pivoted[pivot_col] = true;
      progress = true;
    }
  }

  ModuleDescription desc;
  std::vector<std::size_t> live_rows;
  for (std::size_t i = 0; i < m.nrows(); ++i)
    if (!row_done[i]) live_rows.push_back(i);

  for (std::size_t j = 0; j < m.ncols(); ++j) {
    if (col_pivoted[j]) continue;
    bool zero_in_live = true;
    for (std::size_t i : live_rows)
      if (!m.at(i, j).is_zero()) zero_in_live = false;
    if (zero_in_live) ++desc.free_rank;
  }

  std::sort(torsion.begin(), torsion.end(),
            [](const LaurentPoly& a, const LaurentPoly& b) {
              return a.str() < b.str();
            });
  desc.torsion_factors = std::move(torsion);

  if (!live_rows.empty()) {
    std::vector<std::string> labels;
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      bool involved = false;
      for (std::size_t i : live_rows)
        if (!m.at(i, j).is_zero()) involved = true;
      if (involved) {
        labels.push_back(m.column_labels()[j]);
        cols.push_back(j);
      }
    }
    LaurentMatrix residual(labels);
    for (std::size_t i : live_rows) {
      std::vector<LaurentPoly> row;
      for (std::size_t j : cols) row.push_back(m.at(i, j));
      residual.append_row(std::move(row));
    }
    desc.residual = std::move(residual);
  }
  return desc;
}

// ---------------------------------------------------------------------------
// rational specialization

std::vector<std::vector<Rat>> specialize(const LaurentMatrix& m,
                                         const Rat& c) {
  std::vector<std::vector<Rat>> out(m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      out[i].push_back(m.at(i, j).eval(c));
  return out;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> rows) {
  std::size_t rank = 0;
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][col].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      Rat f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace qf
