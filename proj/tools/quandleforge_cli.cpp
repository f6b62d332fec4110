// quandleforge: finitely presented quandles, Thompson's quandle inside F,
// and Alexander modules from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "quandleforge/experiments.hpp"
#include "quandleforge/serialize.hpp"
#include "quandleforge/term.hpp"
#include "quandleforge/thompson_quandle.hpp"

namespace {

using nlohmann::json;
using namespace qf;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Caps {
  std::size_t generator = 64;
  int order = 5;

  static Caps from_env() {
    Caps caps;
    if (const char* v = std::getenv("QUANDLEFORGE_CAP")) {
      char* end = nullptr;
      long n = std::strtol(v, &end, 10);
      if (end == v || *end != '\0' || n < 1)
        throw std::invalid_argument("QUANDLEFORGE_CAP must be a positive integer");
      caps.generator = static_cast<std::size_t>(n);
      caps.order = static_cast<int>(std::min<long>(n, 64));
    }
    return caps;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Presentation load_presentation(const std::string& path) {
  return parse_presentation(slurp(path));
}

// "trivial:N", "dihedral:N" or "table:FILE" (text or JSON array form)
FiniteQuandle load_model(const std::string& spec, int order_cap) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("model must be trivial:N, dihedral:N or table:FILE");
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (kind == "trivial" || kind == "dihedral") {
    int n = std::stoi(arg);
    if (n < 1 || n > order_cap)
      throw std::invalid_argument("model order out of range (cap " +
                                  std::to_string(order_cap) + ")");
    return kind == "trivial" ? FiniteQuandle::trivial(n)
                             : FiniteQuandle::dihedral(n);
  }
  if (kind == "table") {
    std::string text = slurp(arg);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
      auto parsed = json::parse(text).get<std::vector<std::vector<int>>>();
      return FiniteQuandle::from_table(std::move(parsed));
    }
    return quandle_from_text(text);
  }
  throw std::invalid_argument("unknown model kind: " + kind);
}

std::map<std::string, int> parse_assignment(const std::string& text) {
  std::map<std::string, int> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    auto eq = piece.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("assignment must be name=value pairs");
    std::string name = piece.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    out[name] = std::stoi(piece.substr(eq + 1));
  }
  return out;
}

std::vector<std::pair<Term, Term>> parse_tau(const std::string& text) {
  std::vector<std::pair<Term, Term>> out;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    auto arrow = piece.find("->");
    if (arrow == std::string::npos)
      throw std::invalid_argument("tau must be a list of u->v pairs");
    out.emplace_back(parse_term(piece.substr(0, arrow)),
                     parse_term(piece.substr(arrow + 2)));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finitely presented quandles and Thompson's quandle"};
  app.require_subcommand(1);
  app.fallthrough(true);  // let subcommands pick up the global --json flag

  Caps caps;
  try {
    caps = Caps::from_env();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term in a finite model");
  std::string eval_pres, eval_term, eval_model, eval_assign;
  eval_cmd->add_option("--pres", eval_pres, "presentation file (.qdl)")->required();
  eval_cmd->add_option("--term", eval_term, "term over the presentation's generators")->required();
  eval_cmd->add_option("--model", eval_model, "trivial:N | dihedral:N | table:FILE")->required();
  eval_cmd->add_option("--assign", eval_assign, "generator assignment, e.g. a=0,b=1")->required();

  // eq
  auto* eq_cmd = app.add_subcommand("eq", "compare generators p(M), p(N) of Thompson's quandle");
  int eq_m = 0, eq_n = 0;
  eq_cmd->add_option("--p", eq_m, "first index")->required();
  eq_cmd->add_option("--q", eq_n, "second index")->required();

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "orbit (A or B) of an element of Thompson's quandle");
  int orbit_p = -1;
  std::string orbit_term;
  orbit_cmd->add_option("--p", orbit_p, "generator index");
  orbit_cmd->add_option("--term", orbit_term, "term over a, b");

  // nf
  auto* nf_cmd = app.add_subcommand("nf", "reduced tree pair of p(N)");
  int nf_n = 0;
  nf_cmd->add_option("--p", nf_n, "generator index")->required();

  // alexander
  auto* alex_cmd = app.add_subcommand("alexander", "Alexander module of a presentation");
  std::string alex_pres;
  alex_cmd->add_option("--pres", alex_pres, "presentation file (.qdl)")->required();

  // homcount
  auto* hom_cmd = app.add_subcommand("homcount", "count homomorphisms into a finite model");
  std::string hom_pres, hom_model;
  hom_cmd->add_option("--pres", hom_pres, "presentation file (.qdl)")->required();
  hom_cmd->add_option("--model", hom_model, "trivial:N | dihedral:N | table:FILE")->required();

  // enumerate
  auto* enum_cmd = app.add_subcommand("enumerate", "finite quandles of a given order up to isomorphism");
  int enum_order = 0;
  enum_cmd->add_option("--order", enum_order, "order")->required();

  // hnn
  auto* hnn_cmd = app.add_subcommand("hnn", "HNN extension of a presentation");
  std::string hnn_pres, hnn_tau, hnn_letter = "t";
  hnn_cmd->add_option("--pres", hnn_pres, "presentation file (.qdl)")->required();
  hnn_cmd->add_option("--tau", hnn_tau, "pairs u->v, e.g. \"a->b, b->a|>b\"")->required();
  hnn_cmd->add_option("--letter", hnn_letter, "stable letter (default t)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the experiment suites");
  std::string verify_suite = "all";
  verify_cmd->add_option("--suite", verify_suite, "all|univ|fingen|hnn|alexander|orbits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) {
      Presentation pres = load_presentation(eval_pres);
      Term t = parse_term(eval_term);
      std::vector<std::string> leaves;
      t.collect_leaves(leaves);
      for (const auto& leaf : leaves) {
        bool declared = false;
        for (const auto& g : pres.generators) declared |= (g == leaf);
        if (!declared)
          throw std::invalid_argument("term uses undeclared generator: " + leaf);
      }
      FiniteQuandle q = load_model(eval_model, caps.order);
      auto assign = parse_assignment(eval_assign);
      for (const auto& [name, value] : assign)
        if (value < 0 || value >= q.order())
          throw std::invalid_argument("assignment value out of range for " + name);
      int result = eval(t, assign, q);
      if (as_json)
        std::cout << json{{"value", result}} << "\n";
      else
        std::cout << result << "\n";
      return kExitOk;
    }

    if (*eq_cmd) {
      ThompsonQuandle model(caps.generator);
      bool equal = model.p(std::size_t(eq_m)) == model.p(std::size_t(eq_n));
      if (as_json)
        std::cout << json{{"equal", equal}} << "\n";
      else
        std::cout << (equal ? "true" : "false") << "\n";
      return kExitOk;
    }

    if (*orbit_cmd) {
      if ((orbit_p < 0) == orbit_term.empty())
        throw std::invalid_argument("orbit needs exactly one of --p or --term");
      ThompsonQuandle model(caps.generator);
      PElem e = orbit_term.empty() ? model.p(std::size_t(orbit_p))
                                   : model.iso_g(parse_term(orbit_term));
      std::string name = orbit_name(model.orbit(e));
      if (as_json)
        std::cout << json{{"orbit", name}} << "\n";
      else
        std::cout << name << "\n";
      return kExitOk;
    }

    if (*nf_cmd) {
      ThompsonQuandle model(caps.generator);
      PElem e = model.p(std::size_t(nf_n));
      if (as_json)
        std::cout << pelem_json(e) << "\n";
      else
        std::cout << e.value.str() << "\n";
      return kExitOk;
    }

    if (*alex_cmd) {
      Presentation pres = load_presentation(alex_pres);
      LaurentMatrix m = alexander_matrix(pres);
      ReduceResult red = matrix_reduce(m);
      ModuleDescription desc = describe_module(m);
      if (as_json) {
        json torsion = json::array();
        for (const auto& t : desc.torsion_factors) torsion.push_back(poly_json(t));
        json out = {{"presentation", presentation_json(pres)},
                    {"matrix", matrix_json(m)},
                    {"reduced", matrix_json(red.matrix)},
                    {"description",
                     {{"free_rank", desc.free_rank}, {"torsion", torsion}}}};
        if (desc.residual) out["description"]["residual"] = matrix_json(*desc.residual);
        std::cout << out << "\n";
      } else {
        std::cout << "matrix:\n" << m.str() << "\n";
        std::cout << "reduced:\n" << red.matrix.str() << "\n";
        std::cout << "free rank: " << desc.free_rank << "\n";
        std::cout << "torsion:";
        for (const auto& t : desc.torsion_factors) std::cout << " (" << t.str() << ")";
        std::cout << "\n";
        if (desc.residual) std::cout << "residual:\n" << desc.residual->str() << "\n";
      }
      return kExitOk;
    }

    if (*hom_cmd) {
      Presentation pres = load_presentation(hom_pres);
      FiniteQuandle q = load_model(hom_model, caps.order);
      long long count = hom_count(pres, q, caps.order);
      if (as_json)
        std::cout << json{{"count", count}} << "\n";
      else
        std::cout << count << "\n";
      return kExitOk;
    }

    if (*enum_cmd) {
      auto found = enumerate_quandles(enum_order, caps.order);
      if (as_json) {
        json tables = json::array();
        for (const auto& q : found) tables.push_back(q.table());
        std::cout << json{{"order", enum_order}, {"tables", tables}} << "\n";
      } else {
        for (std::size_t i = 0; i < found.size(); ++i)
          std::cout << (i == 0 ? "" : "\n") << found[i].str();
        std::cout << "count: " << found.size() << "\n";
      }
      return kExitOk;
    }

    if (*hnn_cmd) {
      Presentation base = load_presentation(hnn_pres);
      HnnData data{std::move(base), hnn_letter, parse_tau(hnn_tau)};
      Presentation ext = hnn_extend(data);
      if (as_json)
        std::cout << presentation_json(ext) << "\n";
      else
        std::cout << render_presentation(ext);
      return kExitOk;
    }

    if (*verify_cmd) {
      auto suite = suite_from_name(verify_suite);
      if (!suite)
        throw std::invalid_argument("unknown suite: " + verify_suite);
      std::vector<Report> reports = run_suite(*suite);
      for (const auto& r : reports) {
        if (as_json)
          std::cout << r.to_json() << "\n";
        else
          std::cout << r.line() << "\n";
      }
      return all_pass(reports) ? kExitOk : kExitVerifyFailed;
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
