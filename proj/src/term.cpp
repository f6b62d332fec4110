#include "quandleforge/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "quandleforge/union_find.hpp"

namespace qf {

Term Term::gen(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::generator;
  n->name = std::move(name);
  return wrap(n);
}

Term Term::apply(Term lhs, Kind k, Term rhs) {
  if (k == Kind::generator)
    throw std::invalid_argument("apply requires an operator kind");
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->l = lhs.n_;
  n->r = rhs.n_;
  return wrap(n);
}

const std::string& Term::name() const {
  if (n_->kind != Kind::generator)
    throw std::logic_error("name() on a compound term");
  return n_->name;
}

Term Term::lhs() const {
  if (n_->kind == Kind::generator)
    throw std::logic_error("lhs() on a generator");
  return wrap(n_->l);
}

Term Term::rhs() const {
  if (n_->kind == Kind::generator)
    throw std::logic_error("rhs() on a generator");
  return wrap(n_->r);
}

const std::string& Term::rightmost_leaf() const {
  const Node* n = n_.get();
  while (n->kind != Kind::generator) n = n->r.get();
  return n->name;
}

void Term::collect_leaves(std::vector<std::string>& out) const {
  if (n_->kind == Kind::generator) {
    out.push_back(n_->name);
    return;
  }
  wrap(n_->l).collect_leaves(out);
  wrap(n_->r).collect_leaves(out);
}

bool Term::operator==(const Term& o) const {
  if (n_ == o.n_) return true;
  if (n_->kind != o.n_->kind) return false;
  if (n_->kind == Kind::generator) return n_->name == o.n_->name;
  return wrap(n_->l) == wrap(o.n_->l) && wrap(n_->r) == wrap(o.n_->r);
}

std::string Term::str() const {
  if (n_->kind == Kind::generator) return n_->name;
  auto operand = [](const Term& t) {
    return t.kind() == Kind::generator ? t.str() : "(" + t.str() + ")";
  };
  const char* op = n_->kind == Kind::op ? " |> " : " <| ";
  return operand(wrap(n_->l)) + op + operand(wrap(n_->r));
}

// ---------------------------------------------------------------------------
// parser

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos, msg); }

  // returns 0 when no operator follows
  char peek_op() {
    skip_ws();
    if (pos + 1 < text.size()) {
      if (text[pos] == '|' && text[pos + 1] == '>') return '>';
      if (text[pos] == '<' && text[pos + 1] == '|') return '<';
    }
    return 0;
  }

  Term atom() {
    skip_ws();
    if (pos == text.size()) fail("expected a term");
    if (text[pos] == '(') {
      ++pos;
      Term t = term();
      skip_ws();
      if (pos == text.size() || text[pos] != ')') fail("expected ')'");
      ++pos;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      return Term::gen(std::string(text.substr(start, pos - start)));
    }
    fail("expected an identifier or '('");
  }

  Term term() {
    Term first = atom();
    char op = peek_op();
    if (op == 0) return first;
    pos += 2;
    std::vector<Term> operands{first};
    std::vector<char> ops{op};
    operands.push_back(atom());
    while (true) {
      char next = peek_op();
      if (next == 0) break;
      if (next != op)
        fail("mixing '|>' and '<|' requires parentheses");
      pos += 2;
      operands.push_back(atom());
    }
    // right-associative fold
    Term::Kind k = op == '>' ? Term::Kind::op : Term::Kind::op_inv;
    Term acc = operands.back();
    for (auto it = operands.rbegin() + 1; it != operands.rend(); ++it)
      acc = Term::apply(*it, k, acc);
    return acc;
  }
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p{text};
  Term t = p.term();
  if (!p.at_end()) p.fail("trailing input after term");
  return t;
}

// ---------------------------------------------------------------------------
// presentations

void validate(const Presentation& p) {
  std::set<std::string> names;
  for (const auto& g : p.generators) {
    if (g.empty()) throw std::invalid_argument("empty generator name");
    if (!names.insert(g).second)
      throw std::invalid_argument("duplicate generator: " + g);
  }
  for (const auto& [l, r] : p.relations) {
    std::vector<std::string> leaves;
    l.collect_leaves(leaves);
    r.collect_leaves(leaves);
    for (const auto& leaf : leaves)
      if (!names.count(leaf))
        throw std::invalid_argument("undeclared generator in relation: " +
                                    leaf);
  }
}

namespace {

std::string trimmed(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

}  // namespace

Presentation parse_presentation(std::string_view dsl) {
  Presentation p;
  std::istringstream in{std::string(dsl)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    if (line.rfind("quandle ", 0) == 0) {
      p.name = trimmed(line.substr(8));
    } else if (line.rfind("gens ", 0) == 0) {
      std::istringstream gens(line.substr(5));
      std::string g;
      while (std::getline(gens, g, ',')) {
        g = trimmed(g);
        if (!g.empty()) p.generators.push_back(g);
      }
    } else if (line.rfind("rel ", 0) == 0) {
      std::string body = line.substr(4);
      auto eq = body.find('=');
      if (eq == std::string::npos)
        throw parse_error(lineno, "relation without '='");
      p.relations.emplace_back(parse_term(body.substr(0, eq)),
                               parse_term(body.substr(eq + 1)));
    } else {
      throw parse_error(lineno, "unknown directive: " + line);
    }
  }
  validate(p);
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "quandle " << p.name << "\n";
  out << "gens ";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out << (i == 0 ? "" : ", ") << p.generators[i];
  out << "\n";
  for (const auto& [l, r] : p.relations)
    out << "rel " << l.str() << " = " << r.str() << "\n";
  return out.str();
}

Presentation thompson_presentation() {
  Presentation p;
  p.name = "P";
  p.generators = {"a", "b"};
  p.relations.emplace_back(parse_term("a |> (a |> b)"),
                           parse_term("b |> (a |> b)"));
  p.relations.emplace_back(parse_term("a |> (a |> (a |> b))"),
                           parse_term("b |> (a |> (a |> b))"));
  validate(p);
  return p;
}

// ---------------------------------------------------------------------------
// counting and invariants

long long hom_count(const Presentation& p, const FiniteQuandle& q,
                    int order_cap, int gens_cap) {
  if (q.order() > order_cap)
    throw std::invalid_argument("hom_count: model order exceeds cap");
  if (static_cast<int>(p.generators.size()) > gens_cap)
    throw std::invalid_argument("hom_count: generator count exceeds cap");
  const std::size_t k = p.generators.size();
  std::vector<int> idx(k, 0);
  long long count = 0;
  while (true) {
    std::map<std::string, int> assign;
    for (std::size_t i = 0; i < k; ++i) assign[p.generators[i]] = idx[i];
    if (check_hom(p, assign, q)) ++count;
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++idx[i] < q.order()) break;
      idx[i] = 0;
    }
    if (i == k) break;
  }
  return count;
}

GeneratorPartition orbit_count(const Presentation& p) {
  validate(p);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    index[p.generators[i]] = i;
  UnionFind uf(p.generators.size());
  for (const auto& [l, r] : p.relations)
    uf.unite(index.at(l.rightmost_leaf()), index.at(r.rightmost_leaf()));
  GeneratorPartition out;
  for (const auto& block : uf.blocks()) {
    std::vector<std::string> names;
    for (std::size_t i : block) names.push_back(p.generators[i]);
    out.blocks.push_back(std::move(names));
  }
  out.count = static_cast<int>(out.blocks.size());
  return out;
}

int abelianization_rank(const Presentation& p) { return orbit_count(p).count; }

Presentation hnn_extend(const HnnData& d) {
  validate(d.base);
  for (const auto& g : d.base.generators)
    if (g == d.stable_letter)
      throw std::invalid_argument("stable letter collides with generator: " +
                                  d.stable_letter);
  Presentation out = d.base;
  out.name = d.base.name + "*" + d.stable_letter;
  out.generators.push_back(d.stable_letter);
  Term t = Term::gen(d.stable_letter);
  for (const auto& [u, v] : d.tau_pairs)
    out.relations.emplace_back(Term::apply(t, Term::Kind::op, u), v);
  validate(out);
  return out;
}

namespace {

// lin(term) as a coefficient vector over the generator columns
std::vector<LaurentPoly> linearize(const Term& t,
                                   const std::map<std::string, std::size_t>& col,
                                   std::size_t n) {
  switch (t.kind()) {
    case Term::Kind::generator: {
      std::vector<LaurentPoly> v(n);
      v[col.at(t.name())] = LaurentPoly::one();
      return v;
    }
    case Term::Kind::op:
    case Term::Kind::op_inv: {
      // x |> y -> (1-q) x + q y; x <| y -> (1-q^-1) x + q^-1 y
      const int e = t.kind() == Term::Kind::op ? 1 : -1;
      LaurentPoly qe = LaurentPoly::term(1, e);
      LaurentPoly one_minus = LaurentPoly::one() - qe;
      auto l = linearize(t.lhs(), col, n);
      auto r = linearize(t.rhs(), col, n);
      std::vector<LaurentPoly> v(n);
      for (std::size_t i = 0; i < n; ++i)
        v[i] = one_minus * l[i] + qe * r[i];
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LaurentMatrix alexander_matrix(const Presentation& p) {
  validate(p);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    col[p.generators[i]] = i;
  LaurentMatrix m(p.generators);
  const std::size_t n = p.generators.size();
  for (const auto& [l, r] : p.relations) {
    auto lv = linearize(l, col, n);
    auto rv = linearize(r, col, n);
    std::vector<LaurentPoly> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = lv[i] - rv[i];
    m.append_row(std::move(row));
  }
  return m;
}

}  // namespace qf
