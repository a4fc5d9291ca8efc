#pragma once

#include <optional>
#include <vector>

#include "brickforge/matching.hpp"
#include "brickforge/multigraph.hpp"

namespace brickforge {

// Removable doubleton R = {alpha, beta}: deleting both leaves a bipartite
// matching covered graph. The witness bipartition of G - R is oriented so
// that alpha's ends lie in A and beta's ends lie in B.
struct Doubleton {
  int alpha = -1;
  int beta = -1;
  VertexSet a;
  VertexSet b;

  bool contains(int e) const { return e == alpha || e == beta; }
  std::pair<int, int> pair() const {
    return {std::min(alpha, beta), std::max(alpha, beta)};
  }
};

bool is_removable(const Multigraph& g, int e);                 // UnknownEdge
std::vector<int> removable_edges(const Multigraph& g);         // NotMatchingCovered
bool is_b_invariant(const Multigraph& g, int e);               // NotRemovable

std::vector<Doubleton> removable_doubletons(const Multigraph& g);  // BipartiteInput, NotMatchingCovered
bool is_near_bipartite(const Multigraph& g);

// Checks that R is a removable doubleton of G with a consistent witness;
// returns the (re)computed witness or nullopt.
std::optional<Doubleton> validate_doubleton(const Multigraph& g, int alpha, int beta);

bool is_R_compatible(const Multigraph& g, const Doubleton& r, int e);  // EdgeInDoubleton

// G is an R-brick: a brick with removable doubleton R.
bool is_R_brick(const Multigraph& g, const Doubleton& r);

// Lemma self-tests; preconditions enforced, result should always be true.
bool verify_exchange_bipartite(const Multigraph& h, int e, int f);  // PreconditionViolated
bool verify_exchange_Rcompatible(const Multigraph& g, const Doubleton& r, int e, int f);

struct NonRemovableWitness {
  VertexSet a0, a1, b0, b1;  // |a0| = |b0|, e the unique edge from b0 to a1
};

std::optional<NonRemovableWitness> non_removable_witness(const Multigraph& h, int e);  // NotBipartite

}  // namespace brickforge
