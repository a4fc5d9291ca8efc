#pragma once

#include <optional>
#include <vector>

#include "brickforge/matching.hpp"
#include "brickforge/multigraph.hpp"
#include "brickforge/nearbip.hpp"

namespace brickforge {

enum class CutKind { BarrierCut, TwoSeparationCut, Other };

const char* cut_kind_name(CutKind kind);

struct TightCut {
  Cut cut;
  CutKind kind = CutKind::Other;
};

struct DecompositionPiece {
  Multigraph graph;
  bool brick = false;  // piece has no nontrivial tight cut; brick iff nonbipartite
};

struct DecompositionResult {
  std::vector<DecompositionPiece> pieces;  // sorted by canonical form
  int b = 0;
  std::vector<VertexSet> trace;  // shores of the cuts applied, in order
};

bool is_tight(const Multigraph& g, const VertexSet& x);  // EvenShore, NotMatchingCovered

std::vector<TightCut> barrier_cuts(const Multigraph& g);          // NotMatchingCovered
std::vector<TightCut> two_separation_cuts(const Multigraph& g);   // NotMatchingCovered

// Barrier cuts first, then 2-separation cuts, then an exhaustive odd-subset
// search (|V| <= 14). Absent iff G is a brick or brace.
std::optional<TightCut> find_nontrivial_tight_cut(const Multigraph& g);

// Deterministic when seed is absent; otherwise picks uniformly among the
// nontrivial tight cuts available at each step.
DecompositionResult decompose(const Multigraph& g,
                              std::optional<unsigned> seed = std::nullopt);

int b_count(const Multigraph& g);     // NotMatchingCovered
int rank_graph(const Multigraph& g);  // NotNearBrick when b != 1

bool structural_tight_check_bipartite(const Multigraph& h, const VertexSet& x);  // NotBipartite
bool structural_tight_check_nearbip(const Multigraph& g, const Doubleton& r,
                                    const VertexSet& x);  // NotRGraph

}  // namespace brickforge
