#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "brickforge/generator.hpp"
#include "brickforge/jsonio.hpp"
#include "brickforge/textio.hpp"
#include "brickforge/verify.hpp"

namespace {

using namespace brickforge;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitResourceLimit = 3;

int max_n_limit() {
  if (const char* env = std::getenv("BRICKFORGE_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 16;  // canonical forms cap out here anyway
}

Multigraph load_graph(const std::string& path) {
  Multigraph g = read_graph_file(path);
  if (g.n() > max_n_limit())
    raise(ErrorCode::TooLarge, path + ": graph exceeds the configured vertex limit");
  return g;
}

std::optional<std::pair<int, int>> doubleton_option(const std::vector<int>& pair) {
  if (pair.empty()) return std::nullopt;
  return std::make_pair(pair[0], pair[1]);
}

Doubleton pick_doubleton(const Multigraph& g, const std::vector<int>& pair) {
  if (!pair.empty()) {
    auto r = validate_doubleton(g, pair[0], pair[1]);
    if (!r)
      raise(ErrorCode::PreconditionViolated,
            "the requested pair is not a removable doubleton");
    return *r;
  }
  auto all = removable_doubletons(g);
  if (all.empty())
    raise(ErrorCode::PreconditionViolated, "the graph has no removable doubleton");
  std::sort(all.begin(), all.end(),
            [](const Doubleton& a, const Doubleton& b) { return a.pair() < b.pair(); });
  return all.front();
}

void print_analysis(const AnalysisReport& rep) {
  std::cout << "vertices: " << rep.n << "  edges: " << rep.m << "\n"
            << "matching covered: " << (rep.matching_covered ? "yes" : "no") << "\n"
            << "bipartite: " << (rep.bipartite ? "yes" : "no") << "\n"
            << "bicritical: " << (rep.bicritical ? "yes" : "no") << "\n"
            << "brick: " << (rep.brick ? "yes" : "no") << "\n"
            << "near-bipartite: " << (rep.near_bipartite ? "yes" : "no") << "\n";
  if (rep.b) std::cout << "b(G): " << *rep.b << "\n";
  std::cout << "removable doubletons:";
  for (const auto& [a, b] : rep.doubletons) std::cout << " {" << a << "," << b << "}";
  std::cout << "\n";
  if (rep.selected_doubleton)
    std::cout << "R-columns relative to {" << rep.selected_doubleton->first << ","
              << rep.selected_doubleton->second << "}\n";
  std::cout << "edges (id u v flags):\n";
  for (const EdgeClassification& c : rep.edges) {
    std::cout << "  " << c.id << " (" << c.u << "," << c.v << ")";
    if (c.removable) std::cout << " removable";
    if (c.b_invariant) std::cout << " b-invariant";
    if (c.in_doubleton) std::cout << " in-R";
    if (c.r_compatible) std::cout << " R-compatible";
    if (c.r_thin) std::cout << " R-thin";
    if (c.index) std::cout << " index=" << *c.index;
    if (c.rank) std::cout << " rank=" << *c.rank;
    std::cout << "\n";
  }
}

int cmd_analyze(const std::string& path, bool as_json, const std::vector<int>& pair) {
  AnalysisReport rep = make_analysis_report(load_graph(path), doubleton_option(pair));
  if (as_json)
    std::cout << json(rep).dump(2) << "\n";
  else
    print_analysis(rep);
  return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& out_dir, bool as_json,
                  unsigned seed) {
  Multigraph g = load_graph(path);
  DecompositionResult result = decompose(g, seed);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    json index = json::array();
    for (size_t i = 0; i < result.pieces.size(); ++i) {
      std::string name = "piece" + std::to_string(i) + ".txt";
      write_graph_file(result.pieces[i].graph, out_dir + "/" + name);
      index.push_back(json{{"file", name},
                           {"brick", result.pieces[i].brick},
                           {"n", result.pieces[i].graph.n()},
                           {"m", result.pieces[i].graph.m()}});
    }
    std::ofstream idx(out_dir + "/decomposition.json");
    idx << json{{"b", result.b}, {"pieces", index}}.dump(2) << "\n";
  }
  if (as_json) {
    std::cout << json(result).dump(2) << "\n";
  } else {
    std::cout << "b(G) = " << result.b << ", " << result.pieces.size() << " pieces\n";
    for (const DecompositionPiece& p : result.pieces)
      std::cout << "  " << (p.brick ? "brick" : "brace") << " n=" << p.graph.n()
                << " m=" << p.graph.m() << "\n";
  }
  return kExitOk;
}

int cmd_doubletons(const std::string& path) {
  Multigraph g = load_graph(path);
  json out = json::array();
  for (const Doubleton& r : removable_doubletons(g)) out.push_back(json(r));
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& path, const std::vector<int>& pair, bool as_json) {
  Multigraph g = load_graph(path);
  Doubleton r = pick_doubleton(g, pair);
  ReductionSequence seq = reduction_sequence(g, r);
  if (as_json) {
    std::cout << json(seq).dump(2) << "\n";
  } else {
    for (const ReductionStep& step : seq.steps)
      std::cout << "n=" << step.graph.n() << " remove e=" << step.e << "\n";
    std::cout << "base: " << seq.base_tag << " (n=" << seq.base.n()
              << ", m=" << seq.base.m() << ")\n";
  }
  return kExitOk;
}

int cmd_generate(int max_n, const std::string& out_dir, bool simple_only) {
  if (max_n > max_n_limit())
    raise(ErrorCode::TooLarge, "--max-n exceeds the configured vertex limit");
  std::vector<CatalogEntry> entries = generate_catalog(max_n, simple_only);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (size_t i = 0; i < entries.size(); ++i)
      write_graph_file(entries[i].representative,
                       out_dir + "/entry" + std::to_string(i) + ".txt");
    std::ofstream idx(out_dir + "/catalog.json");
    idx << catalog_index(entries).dump(2) << "\n";
  }
  std::cout << entries.size() << " catalog entries up to n=" << max_n << "\n";
  for (const CatalogEntry& e : entries)
    std::cout << "  n=" << e.representative.n() << " m=" << e.representative.m()
              << " doubletons=" << e.doubletons.size() << " key=" << e.form.key()
              << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n, unsigned seed) {
  SuiteReport rep;
  if (suite == "core")
    rep = run_core_suite(seed);
  else if (suite == "lemmas")
    rep = run_lemma_suite(max_n, seed);
  else
    rep = run_full_suite(max_n, seed);
  for (const PropertyResult& r : rep.results)
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
              << ")\n";
  return rep.all_passed() ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"near-bipartite brick analysis toolkit"};
  app.require_subcommand(1);

  std::string path, out_dir, suite = "core";
  std::vector<int> pair;
  bool as_json = false, simple_only = false;
  int max_n = 8;
  unsigned seed = 0;

  auto* analyze = app.add_subcommand("analyze", "classify a graph and its edges");
  analyze->add_option("path", path)->required();
  analyze->add_flag("--json", as_json);
  analyze->add_option("--doubleton", pair, "edge id pair")->expected(2);

  auto* dec = app.add_subcommand("decompose", "tight cut decomposition");
  dec->add_option("path", path)->required();
  dec->add_option("--out", out_dir);
  dec->add_flag("--json", as_json);
  dec->add_option("--seed", seed);

  auto* dbl = app.add_subcommand("doubletons", "list removable doubletons as JSON");
  dbl->add_option("path", path)->required();

  auto* red = app.add_subcommand("reduce", "reduce an R-brick to K4 or the prism");
  red->add_option("path", path)->required();
  red->add_option("--doubleton", pair, "edge id pair")->expected(2);
  red->add_flag("--json", as_json);

  auto* gen = app.add_subcommand("generate", "generate the brick catalog");
  gen->add_option("--max-n", max_n);
  gen->add_option("--out", out_dir);
  gen->add_flag("--simple-only", simple_only);

  auto* ver = app.add_subcommand("verify", "run the property suites");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"core", "lemmas", "full"}));
  ver->add_option("--max-n", max_n);
  ver->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(path, as_json, pair);
    if (dec->parsed()) return cmd_decompose(path, out_dir, as_json, seed);
    if (dbl->parsed()) return cmd_doubletons(path);
    if (red->parsed()) return cmd_reduce(path, pair, as_json);
    if (gen->parsed()) return cmd_generate(max_n, out_dir, simple_only);
    if (ver->parsed()) return cmd_verify(suite, max_n, seed);
  } catch (const Error& err) {
    std::cerr << "error [" << error_code_name(err.code()) << "]: " << err.what() << "\n";
    if (err.code() == ErrorCode::ParseError) return kExitParseError;
    if (err.code() == ErrorCode::TooLarge) return kExitResourceLimit;
    return kExitPropertyFailure;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitOk;
}
