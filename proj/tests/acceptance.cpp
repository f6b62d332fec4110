// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [path-to-quandleforge-cli]
// When the CLI path is given, the verify criteria run through the real
// binary; otherwise they fall back to the library entry points.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "quandleforge/experiments.hpp"
#include "quandleforge/term.hpp"

using namespace qf;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct CliResult {
  int exit_code = -1;
  std::string output;
  double seconds = 0.0;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
  CliResult res;
  std::string cmd = cli + " " + args + " 2>/dev/null";
  auto start = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::vector<json> parse_json_lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

int failures = 0;

void criterion(int number, const std::string& what,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number,
              what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  ThompsonQuandle model;
  const Presentation pres = thompson_presentation();

  criterion(1, "55 relations p(j) |> p(k) = p(k+1) for j < k <= 10 in under 10 s",
            [&](std::string& detail) {
              if (!cli.empty()) {
                CliResult res = run_cli(cli, "verify --suite fingen --json");
                if (res.exit_code != 0) {
                  detail = "verify --suite fingen exited " +
                           std::to_string(res.exit_code);
                  return false;
                }
                bool found = false;
                for (const json& j : parse_json_lines(res.output))
                  if (j["experiment"] == "fingen_relations")
                    found = j["pass"] == true &&
                            j["params"]["checked"] == 55 &&
                            j["params"]["max_index"] == 10;
                detail = "cli, " + std::to_string(res.seconds) + " s";
                return found && res.seconds < 10.0;
              }
              auto start = Clock::now();
              Report r = fingen_relations(model, 10);
              detail = "library fallback";
              return r.pass && r.params["checked"] == 55 &&
                     seconds_since(start) < 10.0;
            });

  criterion(2, "orbit count 2 and n^2 homomorphisms into trivial(n), n <= 5",
            [&](std::string&) {
              GeneratorPartition part = orbit_count(pres);
              if (part.count != 2) return false;
              for (int n = 1; n <= 5; ++n)
                if (hom_count(pres, FiniteQuandle::trivial(n)) !=
                    static_cast<long long>(n) * n)
                  return false;
              return true;
            });

  criterion(3, "universal property pairs pass on all models of order <= 4 "
               "plus trivial(5), dihedral(5) in under 60 s",
            [&](std::string& detail) {
              auto start = Clock::now();
              Report r = universal_census(4);
              double secs = seconds_since(start);
              detail = std::to_string(secs) + " s";
              return r.pass && secs < 60.0;
            });

  criterion(4, "iso_g(iso_f(n)) = p(n) for n <= 12 and q-sequence relations "
               "hold in all models of order <= 4 with N = 6",
            [&](std::string&) {
              return iso_roundtrip(model, 12).pass && qseq_census(4, 6).pass;
            });

  criterion(5, "hom-count equality with the HNN extension on every quandle "
               "of order <= 4",
            [&](std::string&) { return hnn_census(4).pass; });

  criterion(6, "p(0..20) pairwise distinct, two orbits, centralizer probe "
               "clean",
            [&](std::string&) {
              return distinctness_probe(model, 20).pass &&
                     centralizer_probe(model, 4).pass;
            });

  criterion(7, "Alexander module is free rank 1 plus torsion (1 - q), "
               "exact, in under 1 s",
            [&](std::string& detail) {
              auto start = Clock::now();
              Report r = alexander_pipeline();
              double secs = seconds_since(start);
              detail = std::to_string(secs) + " s";
              return r.pass && r.params["free_rank"] == 1 &&
                     r.params["torsion"] == "1 - q" &&
                     r.params["rank_at_q1"] == 0 && secs < 1.0;
            });

  criterion(8, "F calibration gate: relators trivial and shift^2 = "
               "conj(a, shift) on 100 seeded elements",
            [&](std::string&) {
              return relator_gate().pass &&
                     eps_square_law(model, 100, 0x51a9e0d6u).pass;
            });

  criterion(9, "quandle axioms on all enumerated models of order <= 4 and "
               "200 seeded conjugation triples",
            [&](std::string&) {
              return finite_axiom_census(4).pass &&
                     conj_axiom_probe(200, 6, 0x7bd3a21cu).pass;
            });

  criterion(10, "full verification suite exits 0 in under 2 minutes",
            [&](std::string& detail) {
              if (!cli.empty()) {
                CliResult res = run_cli(cli, "verify --suite all");
                detail = "cli, " + std::to_string(res.seconds) + " s";
                return res.exit_code == 0 && res.seconds < 120.0;
              }
              auto start = Clock::now();
              auto reports = run_suite(Suite::all);
              double secs = seconds_since(start);
              detail = "library fallback, " + std::to_string(secs) + " s";
              return all_pass(reports) && secs < 120.0;
            });

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
