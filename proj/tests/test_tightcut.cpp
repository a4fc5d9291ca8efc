#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "brickforge/canonical.hpp"
#include "brickforge/generator.hpp"
#include "brickforge/tightcut.hpp"
#include "brickforge/verify.hpp"

using namespace brickforge;

namespace {

Multigraph k4() {
  return Multigraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Multigraph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Multigraph::build(n, edges);
}

Multigraph k33() {
  return Multigraph::build(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

Multigraph st8_minus_e() {
  BuiltinGraph b = builtin("st8");
  return b.graph.minus_edge(b.named_edges.at("e"));
}

// all nontrivial tight cuts of g, as cut edge-id sets, by brute force
std::set<EdgeIdSet> exhaustive_tight_cuts(const Multigraph& g) {
  const auto& vs = g.vertices();
  int n = g.n();
  std::set<EdgeIdSet> found;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    VertexSet x;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) x.insert(vs[i]);
    if (x.size() % 2 == 0) continue;
    if (x.size() < 3 || x.size() + 3 > static_cast<size_t>(n)) continue;
    if (is_tight(g, x)) found.insert(cut_edges(g, x).edge_ids);
  }
  return found;
}

}  // namespace

TEST_CASE("tightness of explicit shores") {
  Multigraph c6 = cycle(6);
  for (int v : c6.vertices()) CHECK(is_tight(c6, {v}));
  CHECK(is_tight(c6, {0, 1, 2}));
  CHECK(!is_tight(c6, {0, 2, 4}));
  CHECK_THROWS_AS(is_tight(c6, {0, 1}), Error);
  CHECK_THROWS_AS(is_tight(cycle(5), {0}), Error);
}

TEST_CASE("barrier cuts") {
  for (const char* name : {"k4", "c6bar", "petersen", "st8"})
    CHECK(barrier_cuts(builtin(name).graph).empty());

  Multigraph ge = st8_minus_e();
  auto cuts = barrier_cuts(ge);
  CHECK(!cuts.empty());
  for (const TightCut& c : cuts) {
    CHECK(c.kind == CutKind::BarrierCut);
    CHECK(is_tight(ge, c.cut.shore));
    CHECK(c.cut.shore.size() % 2 == 1);
    CHECK(c.cut.shore.size() >= 3);
  }
}

TEST_CASE("two separation cuts") {
  Multigraph c6 = cycle(6);
  auto cuts = two_separation_cuts(c6);
  CHECK(!cuts.empty());
  for (const TightCut& c : cuts) {
    CHECK(c.kind == CutKind::TwoSeparationCut);
    CHECK(is_tight(c6, c.cut.shore));
  }
  CHECK(two_separation_cuts(k4()).empty());
}

TEST_CASE("finding a nontrivial tight cut") {
  CHECK(!find_nontrivial_tight_cut(k4()).has_value());
  CHECK(!find_nontrivial_tight_cut(k33()).has_value());
  CHECK(!find_nontrivial_tight_cut(builtin("petersen").graph).has_value());

  auto c6cut = find_nontrivial_tight_cut(cycle(6));
  REQUIRE(c6cut.has_value());
  CHECK(is_tight(cycle(6), c6cut->cut.shore));

  auto st8cut = find_nontrivial_tight_cut(st8_minus_e());
  REQUIRE(st8cut.has_value());
  CHECK(st8cut->kind == CutKind::BarrierCut);
}

TEST_CASE("decomposition") {
  DecompositionResult rk4 = decompose(k4());
  CHECK(rk4.b == 1);
  CHECK(rk4.pieces.size() == 1);
  CHECK(rk4.pieces.front().brick);

  BuiltinGraph pet = builtin("petersen");
  DecompositionResult rp = decompose(pet.graph.minus_edge(0));
  CHECK(rp.b == 2);

  DecompositionResult rs = decompose(st8_minus_e());
  CHECK(rs.b == 1);
  int bricks = 0;
  for (const DecompositionPiece& p : rs.pieces)
    if (p.brick) {
      ++bricks;
      CHECK(isomorphic(p.graph, k4(), CanonMode::SimpleUnderlying));
    }
  CHECK(bricks == 1);

  CHECK(decompose(k33()).b == 0);
  CHECK(decompose(cycle(6)).b == 0);
}

TEST_CASE("rank of a near brick") {
  CHECK(rank_graph(st8_minus_e()) == 4);
  BuiltinGraph f2 = builtin("fig2_brick");
  CHECK(rank_graph(f2.graph.minus_edge(f2.named_edges.at("e"))) == 8);
  CHECK_THROWS_AS(rank_graph(builtin("petersen").graph.minus_edge(0)), Error);
}

TEST_CASE("decomposition order invariance") {
  for (const Multigraph& g :
       {st8_minus_e(), cycle(6), k33(),
        builtin("fig2_brick").graph.minus_edge(builtin("fig2_brick").named_edges.at("e"))})
    CHECK(decomposition_invariant(g, 5, 17));
}

TEST_CASE("decomposition pieces admit no nontrivial tight cut") {
  for (const Multigraph& g : {st8_minus_e(), cycle(6), k33()})
    for (const DecompositionPiece& p : decompose(g).pieces)
      CHECK(!find_nontrivial_tight_cut(p.graph).has_value());
}

TEST_CASE("near brick tight cuts are exactly the barrier cuts") {
  Multigraph ge = st8_minus_e();
  std::set<EdgeIdSet> from_barriers;
  for (const TightCut& c : barrier_cuts(ge)) from_barriers.insert(c.cut.edge_ids);
  CHECK(exhaustive_tight_cuts(ge) == from_barriers);
  // one nontrivial tight cut per nontrivial barrier here
  CHECK(from_barriers.size() == all_nontrivial_barriers(ge).size());
}

TEST_CASE("structural tight checks match the matching-based definition") {
  // bipartite form
  for (const Multigraph& h : {cycle(6), k33()}) {
    const auto& vs = h.vertices();
    for (unsigned mask = 1; mask + 1 < (1u << h.n()); ++mask) {
      VertexSet x;
      for (int i = 0; i < h.n(); ++i)
        if (mask & (1u << i)) x.insert(vs[i]);
      if (x.size() % 2 == 0) continue;
      CHECK(structural_tight_check_bipartite(h, x) == is_tight(h, x));
    }
  }
  // near-bipartite form
  for (const char* name : {"k4", "c6bar", "st8"}) {
    Multigraph g = builtin(name).graph;
    Doubleton r = removable_doubletons(g).front();
    const auto& vs = g.vertices();
    for (unsigned mask = 1; mask + 1 < (1u << g.n()); ++mask) {
      VertexSet x;
      for (int i = 0; i < g.n(); ++i)
        if (mask & (1u << i)) x.insert(vs[i]);
      if (x.size() % 2 == 0) continue;
      CHECK(structural_tight_check_nearbip(g, r, x) == is_tight(g, x));
    }
  }
}
