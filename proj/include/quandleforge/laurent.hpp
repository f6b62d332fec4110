#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qf {

// Exact rational arithmetic, sized for specialization checks of small
// Laurent matrices. Throws std::domain_error on division by zero.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rat operator-() const { return Rat(-num_, den_); }
  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator/(const Rat& a, const Rat& b);
  bool operator==(const Rat&) const = default;

  std::string str() const;

 private:
  std::int64_t num_, den_;  // den_ > 0, gcd(|num_|, den_) = 1
};

// Element of Z[q^{+-1}], stored as a sparse exponent -> coefficient map
// with no zero coefficients. Immutable in spirit: all operations return
// new values.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero

  static LaurentPoly constant(std::int64_t c) { return term(c, 0); }
  static LaurentPoly one() { return term(1, 0); }
  static LaurentPoly q() { return term(1, 1); }
  static LaurentPoly term(std::int64_t coeff, int exp);
  static LaurentPoly from_terms(
      std::initializer_list<std::pair<int, std::int64_t>> terms);

  bool is_zero() const { return c_.empty(); }
  bool is_unit() const;  // +-q^k
  int min_exp() const;   // pre: nonzero
  int max_exp() const;   // pre: nonzero
  std::int64_t coeff(int exp) const;
  const std::map<int, std::int64_t>& coeffs() const { return c_; }

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly shifted(int dexp) const;  // multiply by q^dexp
  LaurentPoly unit_inverse() const;     // pre: is_unit()

  // Substitution q -> c. The image of q must be invertible, so c = 0 is
  // rejected with std::domain_error.
  Rat eval(const Rat& c) const;

  // Exact quotient num / den in Z[q^{+-1}], or nullopt when den does not
  // divide num. divide_exact(p, 0) is nullopt unless p = 0.
  static std::optional<LaurentPoly> divide_exact(const LaurentPoly& num,
                                                 const LaurentPoly& den);

  // The canonical unit multiple: minimum exponent 0, lowest coefficient
  // positive. Used to compare torsion factors up to units.
  LaurentPoly normalized_associate() const;

  // Ascending-exponent rendering, e.g. "1 - q", "2*q^-1", "0".
  std::string str() const;

 private:
  std::map<int, std::int64_t> c_;
};

// One elementary move recorded by matrix_reduce. Replaying the transcript
// on the input matrix reproduces the output exactly.
struct ReduceOp {
  enum class Kind {
    drop_zero_row,      // remove row i (all entries zero)
    drop_multiple_row,  // remove row i, which equals factor * row j
    swap_rows,          // exchange rows i and j
    swap_cols,          // exchange columns i and j (labels move too)
    scale_row,          // row i *= factor (factor a unit)
    add_row_multiple,   // row i += factor * row j
    add_col_multiple,   // col i += factor * col j
  };
  Kind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  LaurentPoly factor;
  std::string str() const;
};

// Presentation matrix of a Z[q^{+-1}]-module: one column per generator,
// one row per relation.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::vector<std::string> column_labels);
  static LaurentMatrix from_rows(std::vector<std::string> column_labels,
                                 std::vector<std::vector<LaurentPoly>> rows);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return labels_.size(); }
  const std::vector<std::string>& column_labels() const { return labels_; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const;
  const std::vector<LaurentPoly>& row(std::size_t i) const;
  void append_row(std::vector<LaurentPoly> row);
  bool row_is_zero(std::size_t i) const;

  // elementary moves
  void drop_row(std::size_t i);
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void scale_row(std::size_t i, const LaurentPoly& unit);
  void add_row_multiple(std::size_t i, std::size_t j, const LaurentPoly& c);
  void add_col_multiple(std::size_t i, std::size_t j, const LaurentPoly& c);

  std::string str() const;
  bool operator==(const LaurentMatrix&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<LaurentPoly>> rows_;
};

struct ReduceResult {
  LaurentMatrix matrix;
  std::vector<ReduceOp> transcript;
};

// Best-effort reduction: zero-row removal, removal of rows that are ring
// multiples of another row, and full elimination at unit (+-q^k) pivots.
// Z[q^{+-1}] is not a PID, so no general diagonal form is attempted; the
// output always presents the same module as the input.
ReduceResult matrix_reduce(const LaurentMatrix& m);

LaurentMatrix apply_transcript(LaurentMatrix m,
                               const std::vector<ReduceOp>& ops);

// Direct-sum description of the presented module, as far as the
// implemented moves reach. When residual is absent the description is
// complete: free_rank free summands plus one cyclic summand per torsion
// factor. Torsion factors are canonical associates, sorted.
struct ModuleDescription {
  std::size_t free_rank = 0;
  std::vector<LaurentPoly> torsion_factors;
  std::optional<LaurentMatrix> residual;
};

ModuleDescription describe_module(const LaurentMatrix& m);

// Rational specialization q -> c of a full matrix, plus exact rank, used
// to validate reductions independently of the symbolic path.
std::vector<std::vector<Rat>> specialize(const LaurentMatrix& m, const Rat& c);
std::size_t rational_rank(std::vector<std::vector<Rat>> rows);

}  // namespace qf
