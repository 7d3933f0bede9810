// affcrystal: paths, quiver data, crystal graphs and verification suites
// from the command line. Everything goes through the C interface.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "affcrystal.h"

namespace {

struct RunConfig {
  int n = -1;
  std::string lambda;
  std::string kind = "B1";
  std::string word;
  std::uint64_t seed = 0;
  std::string field = "fp";
  std::string out;
  int depth = -1;
  int level = -1;
  std::size_t max_nodes = 10000;
  std::string suite;
  std::string fixture;
};

int fail(afc_status st) {
  std::cerr << "affcrystal: " << afc_last_error() << "\n";
  return static_cast<int>(st);
}

int emit(char* text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(path, std::ios::binary);
    os << text;
    if (!os) {
      afc_string_free(text);
      std::cerr << "affcrystal: cannot write " << path << "\n";
      return 1;
    }
  }
  afc_string_free(text);
  return 0;
}

// CRYSTAL_SEED wins over --seed.
void apply_env(RunConfig& cfg) {
  if (const char* s = std::getenv("CRYSTAL_SEED")) {
    try {
      cfg.seed = std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "affcrystal: ignoring malformed CRYSTAL_SEED '" << s << "'\n";
    }
  }
}

bool check_rank(const RunConfig& cfg) {
  if (cfg.n < 0 || cfg.lambda.empty()) return true;
  int commas = 0;
  for (char c : cfg.lambda) commas += c == ',';
  if (commas == cfg.n) return true;
  std::cerr << "affcrystal: --lambda has " << commas + 1 << " coefficients, --n " << cfg.n << " needs " << cfg.n + 1
            << "\n";
  return false;
}

int cmd_path(const RunConfig& cfg) {
  if (!check_rank(cfg)) return AFC_ERR_ARGUMENT;
  afc_path* p = nullptr;
  if (auto st = afc_path_from_word(cfg.lambda.c_str(), cfg.kind.c_str(), cfg.word.c_str(), &p)) return fail(st);
  char* json = nullptr;
  const auto st = afc_path_to_json(p, &json);
  afc_path_free(p);
  if (st) return fail(st);
  return emit(json, cfg.out);
}

int cmd_quiver(const RunConfig& cfg) {
  if (!check_rank(cfg)) return AFC_ERR_ARGUMENT;
  char* json = nullptr;
  if (auto st = afc_quiver_run(cfg.lambda.c_str(), cfg.word.c_str(), cfg.seed, cfg.field.c_str(), &json))
    return fail(st);
  return emit(json, cfg.out);
}

int cmd_graph(const RunConfig& cfg) {
  char* dot = nullptr;
  afc_status st;
  if (!cfg.lambda.empty()) {
    if (!check_rank(cfg)) return AFC_ERR_ARGUMENT;
    st = afc_graph_dot_path(cfg.lambda.c_str(), cfg.kind.c_str(), cfg.depth < 0 ? 3 : cfg.depth, cfg.max_nodes, &dot);
  } else {
    if (cfg.n < 1 || cfg.level < 0) {
      std::cerr << "affcrystal: graph needs --lambda, or --n and --level for a perfect crystal\n";
      return AFC_ERR_ARGUMENT;
    }
    st = afc_graph_dot_perfect(cfg.kind.c_str(), cfg.n, cfg.level, cfg.depth, &dot);
  }
  if (st) return fail(st);
  return emit(dot, cfg.out);
}

int cmd_verify(const RunConfig& cfg) {
  char* report = nullptr;
  const auto st = afc_verify(cfg.suite.c_str(), cfg.seed, cfg.fixture.empty() ? nullptr : cfg.fixture.c_str(),
                             &report);
  if (report) {
    std::cout << report;
    afc_string_free(report);
  }
  if (st) return fail(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystals of type A_n^(1): paths, Young walls and quiver data"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* path = app.add_subcommand("path", "Lambda-path of f-word applied to u_Lambda, as JSON");
  auto* quiver = app.add_subcommand("quiver", "Walls, matrix units, commutant and kernel table, as JSON");
  auto* graph = app.add_subcommand("graph", "Crystal graph in DOT format");
  auto* verify = app.add_subcommand("verify", "Run a verification suite");

  for (auto* sub : {path, quiver, graph}) {
    sub->add_option("--n", cfg.n, "Rank n (checked against --lambda)");
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
  }
  for (auto* sub : {path, quiver}) {
    sub->add_option("--lambda", cfg.lambda, "Comma-separated a_0,...,a_n")->required();
    sub->add_option("--word", cfg.word, "Tokens i or i^m, rightmost applied first");
  }
  path->add_option("--kind", cfg.kind, "B1, Bn or Ad");
  quiver->add_option("--seed", cfg.seed, "Sampling seed (CRYSTAL_SEED overrides)");
  quiver->add_option("--field", cfg.field, "Field for the commutant: fp or q")->check(CLI::IsMember({"fp", "q"}));

  graph->add_option("--lambda", cfg.lambda, "Ball in B(Lambda) for this weight");
  graph->add_option("--kind", cfg.kind, "B1, Bn or Ad");
  graph->add_option("--level", cfg.level, "Level l of the perfect crystal (without --lambda)");
  graph->add_option("--depth", cfg.depth, "Radius of the ball (default 3 for B(Lambda), unbounded otherwise)");
  graph->add_option("--max-nodes", cfg.max_nodes, "Node budget for B(Lambda)");

  verify->add_option("suite", cfg.suite, "example, xi, perfect, bridge, axioms or all")
      ->required()
      ->check(CLI::IsMember({"example", "xi", "perfect", "bridge", "axioms", "all"}));
  verify->add_option("--fixture", cfg.fixture, "Golden JSON compared by the example suite");
  verify->add_option("--seed", cfg.seed, "Sampling seed (CRYSTAL_SEED overrides)");

  CLI11_PARSE(app, argc, argv);
  apply_env(cfg);

  if (*path) return cmd_path(cfg);
  if (*quiver) return cmd_quiver(cfg);
  if (*graph) return cmd_graph(cfg);
  return cmd_verify(cfg);
}
