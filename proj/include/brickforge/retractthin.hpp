#pragma once

#include <map>
#include <optional>
#include <vector>

#include "brickforge/matching.hpp"
#include "brickforge/multigraph.hpp"
#include "brickforge/nearbip.hpp"

namespace brickforge {

struct BicontractionStep {
  int removed_vertex = -1;
  int neighbor_u = -1;
  int neighbor_w = -1;
  int merged_label = -1;
};

struct RetractResult {
  Multigraph graph;
  std::vector<BicontractionStep> steps;
  std::map<int, int> vertex_map;  // original vertex -> surviving vertex
  bool collapsed = false;         // result has <= 2 vertices
};

// Merges a degree-2 vertex with its two neighbors into one fresh vertex.
Multigraph bicontract(const Multigraph& g, int v);  // WrongDegree, IdenticalNeighbors

// Exhaustive bicontraction (smallest-label first, or randomized when seeded).
RetractResult retract(const Multigraph& g,
                      std::optional<unsigned> seed = std::nullopt);  // StuckIdenticalNeighbors

// Splits v into v1/v2 (edge parts as given) joined through a new degree-2
// vertex v0. Inverse of bicontract.
Multigraph bi_split(const Multigraph& g, int v, const std::vector<int>& part1,
                    const std::vector<int>& part2, int v1, int v2,
                    int v0);  // WrongDegree, EmptyPart

bool is_thin(const Multigraph& g, int e);                        // NotBInvariant
bool is_R_thin(const Multigraph& g, const Doubleton& r, int e);  // NotRBrick
int edge_index(const Multigraph& g, const Doubleton& r, int e);  // NotRCompatible
int edge_rank(const Multigraph& g, const Doubleton& r, int e);   // NotRCompatible

struct ThreeCaseReport {
  int index = 0;
  // true when the report's "B" (barrier side) is the witness class A, i.e.
  // the roles of alpha and beta are swapped relative to the doubleton witness
  bool classes_swapped = false;
  // index 1
  VertexSet s, i;
  // index 2
  VertexSet s1, i1, s2_star, i2_star, s2, i2, x1, x2;
};

ThreeCaseReport three_case(const Multigraph& g, const Doubleton& r, int e);  // NotRCompatible

struct CandidateBipartite {
  Multigraph graph;  // (H - e) with the complement of S ∪ I contracted to xbar
  int xbar = -1;
  VertexSet class_i_xbar;  // I together with the contraction vertex
  VertexSet class_s;
  VertexSet isolated;  // I
};

CandidateBipartite candidate_bipartite(const Multigraph& g, const Doubleton& r, int e,
                                       const VertexSet& s);  // BarrierTooSmall
std::vector<int> candidate_set(const Multigraph& g, const Doubleton& r, int e,
                               const VertexSet& s);  // BarrierTooSmall

struct MatchingCandidateReport {
  bool names_resolved = false;
  bool clause_i = false;    // each vertex of I is cubic
  bool clause_ii = false;   // b1 cubic, neighbors inside I + {b2}
  bool clause_iii = false;  // u0: one neighbor in I - y, rest outside X
  bool clause_iv = false;   // u1: two neighbors in I, rest outside X
  bool clause_v = false;    // |S| >= 4: other S-vertices have 3 neighbors, all in I
  bool all_hold = false;
  // |S| = 3 only: underlying simple graph of the auxiliary graph is the
  // 6-vertex ladder (two triangles of a prism opened into a 2x3 grid)
  std::optional<bool> ladder;
  // |S| >= 4 only
  std::optional<bool> b1_w1_nonadjacent;
  std::optional<bool> y_adjacent_b1_u2;
  std::optional<bool> u0_w2_nonadjacent;
  int y = -1, z = -1, b1 = -1, b2 = -1, u0 = -1, u1 = -1;
  std::vector<int> w;  // w_1..w_k
  std::vector<int> u;  // u_1..u_k
};

MatchingCandidateReport verify_matching_candidate_structure(
    const Multigraph& g, const Doubleton& r, int e, const VertexSet& s);  // NotAMatching

struct EqualRankReport {
  bool clause_i = false;   // e, f nonadjacent
  bool clause_ii = false;  // S3 within S1 - u, I3 within I1 - y
  bool clause_iii = false; // S2 strictly inside S4, I2 strictly inside I4
  bool clause_iv = false;  // S1+I2 = S3+I4 and S2+I1 = S4+I3
  bool clause_v = false;   // all neighbors of u inside S2 + I1
  bool clause_vi = false;  // e belongs to the candidate set of (f, S4)
  bool all_hold = false;
  VertexSet s1, i1, s2, i2, s3, i3, s4, i4;
  int y = -1, z = -1, u = -1, w_vertex = -1;
};

// S1: the maximal nontrivial barrier of G-e (|S1| >= 3) with f in C(e,S1).
EqualRankReport verify_equal_rank(const Multigraph& g, const Doubleton& r, int e, int f,
                                  const VertexSet& s1);  // PreconditionViolated

// Isolated vertices of (g - s).
VertexSet isolated_after_removal(const Multigraph& g, const VertexSet& s);

}  // namespace brickforge
