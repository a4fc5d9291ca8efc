#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brickforge/canonical.hpp"
#include "brickforge/multigraph.hpp"
#include "brickforge/nearbip.hpp"
#include "brickforge/retractthin.hpp"

namespace brickforge {

struct BuiltinGraph {
  Multigraph graph;
  // keys among: e, f, alpha, beta, alpha_prime, beta_prime
  std::map<std::string, int> named_edges;
};

// names: k4, c6bar, petersen, st8, fig2_brick, fig3_pseudo_biwheel
BuiltinGraph builtin(const std::string& name);  // UnknownName

// underlying simple graph is K4 or the prism (the two generation bases)
bool is_base_brick(const Multigraph& g);

enum class SearchStrategy { Scan, Ascent };

int find_R_thin_edge(const Multigraph& g, const Doubleton& r,
                     SearchStrategy strategy);  // BaseBrick, TheoremViolation

// An R-compatible f with rank(f)+index(f) > rank(e)+index(e) and an end
// whose neighborhood in G-e lies inside one maximal nontrivial barrier.
std::optional<int> ascend(const Multigraph& g, const Doubleton& r,
                          int e);  // NotRCompatible, AlreadyThin

struct ReduceStepResult {
  int e = -1;          // the R-thin edge removed
  Multigraph j;        // retract of G - e
  Doubleton r_j;       // R carried through (same edge ids)
  std::map<int, int> vertex_map;
};

ReduceStepResult reduce_step(const Multigraph& g, const Doubleton& r);  // BaseBrick

struct ReductionStep {
  Multigraph graph;
  Doubleton r;
  int e = -1;
  std::map<int, int> retract_map;
};

struct ReductionSequence {
  std::vector<ReductionStep> steps;
  Multigraph base;
  std::string base_tag;  // "K4" or "C6bar"
};

ReductionSequence reduction_sequence(const Multigraph& g, const Doubleton& r);

struct Expansion {
  Multigraph graph;
  int e = -1;  // the added R-thin edge
  std::string provenance;
};

// All bricks obtained from J by 0, 1, or 2 bi-splits plus one added edge e,
// such that e is R-thin and retract(G - e) is isomorphic to J with R intact.
std::vector<Expansion> expansions(const Multigraph& j, const Doubleton& r,
                                  int target_n_max);

struct CatalogEntry {
  CanonicalForm form;
  Multigraph representative;
  std::vector<Doubleton> doubletons;
  std::string provenance;  // "base" or parent form key + expansion parameters
};

struct CatalogLimits {
  int max_multiplicity = 2;       // parallel class size cap (keeps closure finite)
  int extra_edges_over_cubic = 3; // m <= 3n/2 + this
};

std::vector<CatalogEntry> generate_catalog(int n_max, bool simple_only = false,
                                           const CatalogLimits& limits = {});

}  // namespace brickforge
