#pragma once

#include <random>
#include <string>
#include <vector>

#include "brickforge/generator.hpp"

namespace brickforge {

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<PropertyResult> results;

  bool all_passed() const {
    for (const PropertyResult& r : results)
      if (!r.passed) return false;
    return true;
  }
};

// matching engine vs enumeration oracle on PM existence and admissibility
bool oracle_agreement(const Multigraph& g);

// random even-order test graph (possibly disconnected, occasional parallels)
Multigraph random_test_graph(std::mt19937& rng, int max_n);

// same b and same simple-underlying piece multiset across randomized orders
bool decomposition_invariant(const Multigraph& g, int trials = 5, unsigned seed = 1);

// canonical forms of every simple near-bipartite brick on exactly n labeled
// vertices (exhaustive scan)
std::vector<CanonicalForm> brute_force_simple_nb_bricks(int n);

// The property sweeps use a slimmer edge-count cap than the default catalog:
// they visit every entry with per-edge work, so the sweep set must stay small.
inline CatalogLimits sweep_catalog_limits() {
  CatalogLimits limits;
  limits.extra_edges_over_cubic = 1;
  return limits;
}

SuiteReport run_core_suite(unsigned seed = 0);
SuiteReport run_lemma_suite(int max_n, unsigned seed = 0);
SuiteReport run_lemma_suite(const std::vector<CatalogEntry>& catalog, unsigned seed = 0);
SuiteReport run_full_suite(int max_n, unsigned seed = 0);

}  // namespace brickforge
