// End-to-end acceptance checks. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "brickforge/canonical.hpp"
#include "brickforge/generator.hpp"
#include "brickforge/retractthin.hpp"
#include "brickforge/tightcut.hpp"
#include "brickforge/verify.hpp"

using namespace brickforge;

namespace {

int failures = 0;

void report(int number, const std::string& description, bool ok,
            double seconds, double limit_seconds) {
  bool in_time = seconds <= limit_seconds;
  bool passed = ok && in_time;
  if (!passed) ++failures;
  std::cout << (passed ? "PASS" : "FAIL") << " criterion-" << number << " "
            << description;
  if (!ok) std::cout << " [property failed]";
  if (!in_time) std::cout << " [exceeded " << limit_seconds << "s]";
  std::cout << " (" << seconds << "s)\n";
}

template <typename F>
void criterion(int number, const std::string& description, double limit_seconds,
               F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& ex) {
    std::cout << "  exception: " << ex.what() << "\n";
    ok = false;
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, description, ok, seconds, limit_seconds);
}

bool petersen_edges() {
  Multigraph g = builtin("petersen").graph;
  if (removable_edges(g).size() != 15) return false;
  for (const Edge& e : g.edges()) {
    if (!is_removable(g, e.id)) return false;
    if (b_count(g.minus_edge(e.id)) != 2) return false;
    if (is_b_invariant(g, e.id)) return false;
  }
  return true;
}

bool staircase_facts() {
  BuiltinGraph st8 = builtin("st8");
  std::vector<int> rem = removable_edges(st8.graph);
  if (rem.size() != 1) return false;
  int e = rem.front();
  auto doubletons = removable_doubletons(st8.graph);
  if (doubletons.size() != 2) return false;
  if (!is_b_invariant(st8.graph, e)) return false;
  for (const Doubleton& r : doubletons)
    if (!is_R_thin(st8.graph, r, e)) return false;
  Multigraph j = retract(st8.graph.minus_edge(e)).graph;
  Multigraph k4 = Multigraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  return j.n() == 4 && j.m() == 7 && isomorphic(j, k4, CanonMode::SimpleUnderlying);
}

bool base_case_facts() {
  for (const char* name : {"k4", "c6bar"}) {
    Multigraph g = builtin(name).graph;
    if (!is_brick(g)) return false;
    auto doubletons = removable_doubletons(g);
    if (doubletons.size() != 3) return false;
    for (const Doubleton& r : doubletons)
      for (const Edge& ed : g.edges()) {
        if (r.contains(ed.id)) continue;
        if (is_R_thin(g, r, ed.id)) return false;
      }
  }
  return true;
}

bool asymmetry_examples() {
  BuiltinGraph f2 = builtin("fig2_brick");
  int e2 = f2.named_edges.at("e");
  Doubleton r2 = *validate_doubleton(f2.graph, f2.named_edges.at("alpha"),
                                     f2.named_edges.at("beta"));
  if (!is_thin(f2.graph, e2)) return false;
  if (is_R_compatible(f2.graph, r2, e2)) return false;
  if (is_near_bipartite(retract(f2.graph.minus_edge(e2)).graph)) return false;

  BuiltinGraph f3 = builtin("fig3_pseudo_biwheel");
  Doubleton r3 = *validate_doubleton(f3.graph, f3.named_edges.at("alpha"),
                                     f3.named_edges.at("beta"));
  Doubleton r3p = *validate_doubleton(f3.graph, f3.named_edges.at("alpha_prime"),
                                      f3.named_edges.at("beta_prime"));
  for (int key : {f3.named_edges.at("e"), f3.named_edges.at("f")}) {
    if (!is_R_compatible(f3.graph, r3p, key)) return false;
    if (is_R_compatible(f3.graph, r3, key)) return false;
  }
  return true;
}

bool thin_edge_sweep(const std::vector<CatalogEntry>& catalog) {
  for (const CatalogEntry& entry : catalog) {
    if (is_base_brick(entry.representative)) continue;
    for (const Doubleton& r : entry.doubletons) {
      int e = find_R_thin_edge(entry.representative, r, SearchStrategy::Scan);
      if (!is_R_thin(entry.representative, r, e)) return false;
    }
  }
  return true;
}

bool ascent_sweep(const std::vector<CatalogEntry>& catalog) {
  for (const CatalogEntry& entry : catalog) {
    const Multigraph& g = entry.representative;
    for (const Doubleton& r : entry.doubletons)
      for (const Edge& ed : g.edges()) {
        if (r.contains(ed.id)) continue;
        if (!is_R_compatible(g, r, ed.id)) continue;
        if (is_R_thin(g, r, ed.id)) continue;
        auto f = ascend(g, r, ed.id);
        if (!f.has_value()) return false;
        int gain = edge_rank(g, r, *f) + edge_index(g, r, *f) -
                   edge_rank(g, r, ed.id) - edge_index(g, r, ed.id);
        if (gain <= 0) return false;
      }
  }
  return true;
}

bool lemma_sweep(const std::vector<CatalogEntry>& catalog) {
  SuiteReport rep = run_lemma_suite(catalog);
  for (const PropertyResult& r : rep.results)
    if (!r.passed) std::cout << "  FAIL " << r.name << " (" << r.detail << ")\n";
  return rep.all_passed();
}

bool decomposition_sweep(const std::vector<CatalogEntry>& catalog) {
  for (const CatalogEntry& entry : catalog) {
    const Multigraph& g = entry.representative;
    if (!decomposition_invariant(g, 5, 101)) return false;
    std::vector<int> rem = removable_edges(g);
    if (!rem.empty() && !decomposition_invariant(g.minus_edge(rem.front()), 5, 102))
      return false;
  }
  return true;
}

bool oracle_sweep(const std::vector<CatalogEntry>& catalog) {
  for (const CatalogEntry& entry : catalog) {
    const Multigraph& g = entry.representative;
    if (g.n() <= 12 && !oracle_agreement(g)) return false;
    for (const Edge& ed : g.edges()) {
      Multigraph ge = g.minus_edge(ed.id);
      if (ge.n() <= 12 && !oracle_agreement(ge)) return false;
    }
    for (const Doubleton& r : entry.doubletons)
      if (!oracle_agreement(g.minus_edges({r.alpha, r.beta}))) return false;
  }
  std::mt19937 rng(7);
  for (int t = 0; t < 1000; ++t)
    if (!oracle_agreement(random_test_graph(rng, 10))) return false;
  return true;
}

bool completeness_at_six() {
  auto forms4 = brute_force_simple_nb_bricks(4);
  auto forms6 = brute_force_simple_nb_bricks(6);
  Multigraph k4 = Multigraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (forms4.size() != 1 ||
      forms4.front() != canonical_form(k4, CanonMode::SimpleUnderlying))
    return false;
  // the prism and its one- and two-chord extensions
  if (forms6.size() != 3) return false;
  CanonicalForm prism = canonical_form(builtin("c6bar").graph, CanonMode::SimpleUnderlying);
  if (std::find(forms6.begin(), forms6.end(), prism) == forms6.end()) return false;

  std::set<std::string> brute;
  for (const CanonicalForm& f : forms4) brute.insert(f.key());
  for (const CanonicalForm& f : forms6) brute.insert(f.key());
  std::set<std::string> catalog;
  for (const CatalogEntry& e : generate_catalog(6, /*simple_only=*/true))
    catalog.insert(
        canonical_form(e.representative, CanonMode::SimpleUnderlying).key());
  return brute == catalog;
}

}  // namespace

int main() {
  criterion(1, "petersen-removability-profile", 5.0, petersen_edges);
  criterion(2, "staircase-unique-thin-edge", 1.0, staircase_facts);
  criterion(3, "base-bricks-have-no-thin-edge", 1.0, base_case_facts);
  criterion(4, "compatibility-asymmetry-examples", 5.0, asymmetry_examples);

  // criteria 5-9 sweep every entry with per-edge work; use the sweep caps
  std::vector<CatalogEntry> catalog;
  try {
    catalog = generate_catalog(10, false, sweep_catalog_limits());
  } catch (const std::exception& ex) {
    std::cout << "FAIL catalog-generation " << ex.what() << "\n";
    return 1;
  }

  criterion(5, "thin-edge-exists-for-every-doubleton", 600.0,
            [&] { return thin_edge_sweep(catalog); });
  criterion(6, "rank-plus-index-ascent", 600.0, [&] { return ascent_sweep(catalog); });
  criterion(7, "lemma-property-suite", 1200.0, [&] { return lemma_sweep(catalog); });
  criterion(8, "decomposition-order-invariance", 600.0,
            [&] { return decomposition_sweep(catalog); });
  criterion(9, "matching-engine-oracle-equivalence", 600.0,
            [&] { return oracle_sweep(catalog); });
  criterion(10, "catalog-completeness-small-orders", 120.0, completeness_at_six);

  return failures == 0 ? 0 : 1;
}
