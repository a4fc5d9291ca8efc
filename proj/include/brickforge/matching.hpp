#pragma once

#include <optional>
#include <vector>

#include "brickforge/multigraph.hpp"

namespace brickforge {

struct Matching {
  std::vector<int> edge_ids;  // ascending

  bool operator==(const Matching& o) const { return edge_ids == o.edge_ids; }
  bool operator<(const Matching& o) const { return edge_ids < o.edge_ids; }
};

struct Barrier {
  VertexSet s;
  std::vector<VertexSet> odd_components;
  VertexSet isolated;  // the singleton odd components

  bool nontrivial() const { return s.size() >= 2; }
};

struct CanonicalPartition {
  std::vector<Barrier> parts;  // maximal barriers, partitioning V
};

// Blossom-based matching engine.
bool has_perfect_matching(const Multigraph& g);
std::optional<VertexSet> tutte_witness(const Multigraph& g);  // set S with odd(G-S) > |S|
bool is_admissible(const Multigraph& g, int e);               // UnknownEdge
bool is_matching_covered(const Multigraph& g);

// Independent backtracking oracle; lexicographic by sorted edge-id sequence.
inline constexpr int kDefaultEnumerationBound = 20;
std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g,
                                                  int max_vertices = kDefaultEnumerationBound);

bool is_bicritical(const Multigraph& g);
bool is_brick(const Multigraph& g);

std::optional<Barrier> is_barrier(const Multigraph& g, const VertexSet& s);  // NoPerfectMatching

CanonicalPartition canonical_partition(const Multigraph& g);             // NotMatchingCovered
std::vector<Barrier> nontrivial_maximal_barriers(const Multigraph& g);   // NotMatchingCovered

// All nontrivial barriers (each maximal barrier's subsets of size >= 2 that
// satisfy the barrier equality). Requires G matching covered.
std::vector<Barrier> all_nontrivial_barriers(const Multigraph& g);

int odd_component_count(const Multigraph& g, const VertexSet& s);

}  // namespace brickforge
