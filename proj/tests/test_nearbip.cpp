#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "brickforge/generator.hpp"
#include "brickforge/nearbip.hpp"
#include "brickforge/retractthin.hpp"
#include "brickforge/tightcut.hpp"

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

Multigraph cube() {
  return Multigraph::build(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7},
                               {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

Doubleton doubleton_of(const std::string& name) {
  BuiltinGraph b = builtin(name);
  auto r = validate_doubleton(b.graph, b.named_edges.at("alpha"), b.named_edges.at("beta"));
  REQUIRE(r.has_value());
  return *r;
}

}  // namespace

TEST_CASE("removable edges") {
  Multigraph pet = builtin("petersen").graph;
  CHECK(removable_edges(pet).size() == 15);
  CHECK(removable_edges(builtin("st8").graph) == std::vector<int>{11});
  CHECK(removable_edges(k4()).empty());
  CHECK(removable_edges(cycle(4)).empty());
}

TEST_CASE("b-invariance") {
  Multigraph pet = builtin("petersen").graph;
  for (int e : removable_edges(pet)) {
    CHECK(!is_b_invariant(pet, e));
    CHECK(b_count(pet.minus_edge(e)) == 2);
  }
  BuiltinGraph st8 = builtin("st8");
  CHECK(is_b_invariant(st8.graph, st8.named_edges.at("e")));
  CHECK_THROWS_AS(is_b_invariant(k4(), 0), Error);  // not removable
}

TEST_CASE("removable doubletons") {
  CHECK(removable_doubletons(k4()).size() == 3);
  CHECK(removable_doubletons(builtin("c6bar").graph).size() == 3);
  CHECK(removable_doubletons(builtin("petersen").graph).empty());
  CHECK(removable_doubletons(builtin("st8").graph).size() == 2);
  CHECK_THROWS_AS(removable_doubletons(k33()), Error);  // bipartite input

  for (const char* name : {"k4", "c6bar", "st8", "fig2_brick", "fig3_pseudo_biwheel"}) {
    Multigraph g = builtin(name).graph;
    for (const Doubleton& r : removable_doubletons(g)) {
      const Edge& ea = g.edge(r.alpha);
      const Edge& eb = g.edge(r.beta);
      // the two edges are disjoint and the witness is oriented
      CHECK(!ea.incident(eb.u));
      CHECK(!ea.incident(eb.v));
      CHECK(r.a.count(ea.u));
      CHECK(r.a.count(ea.v));
      CHECK(r.b.count(eb.u));
      CHECK(r.b.count(eb.v));
      Multigraph h = g.minus_edges({r.alpha, r.beta});
      CHECK(is_bipartite(h));
      CHECK(is_matching_covered(h));
      // neither edge of the doubleton is removable on its own
      CHECK(!is_removable(g, r.alpha));
      CHECK(!is_removable(g, r.beta));
    }
  }
}

TEST_CASE("doubleton parity in perfect matchings") {
  for (const char* name : {"k4", "c6bar", "st8", "fig2_brick"}) {
    Multigraph g = builtin(name).graph;
    for (const Doubleton& r : removable_doubletons(g))
      for (const Matching& m : enumerate_perfect_matchings(g)) {
        bool has_a = std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), r.alpha);
        bool has_b = std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), r.beta);
        CHECK(has_a == has_b);
      }
  }
}

TEST_CASE("near bipartite recognition") {
  CHECK(is_near_bipartite(k4()));
  CHECK(is_near_bipartite(builtin("c6bar").graph));
  CHECK(is_near_bipartite(builtin("st8").graph));
  CHECK(!is_near_bipartite(builtin("petersen").graph));
  BuiltinGraph f2 = builtin("fig2_brick");
  CHECK(is_near_bipartite(f2.graph));
  Multigraph j = retract(f2.graph.minus_edge(f2.named_edges.at("e"))).graph;
  CHECK(!is_near_bipartite(j));
}

TEST_CASE("validate doubleton") {
  BuiltinGraph st8 = builtin("st8");
  auto ok = validate_doubleton(st8.graph, st8.named_edges.at("alpha"),
                               st8.named_edges.at("beta"));
  CHECK(ok.has_value());
  CHECK(!validate_doubleton(st8.graph, 0, 1).has_value());  // adjacent edges
  CHECK(!validate_doubleton(builtin("petersen").graph, 0, 7).has_value());
}

TEST_CASE("R-compatibility") {
  BuiltinGraph st8 = builtin("st8");
  int e = st8.named_edges.at("e");
  for (const Doubleton& r : removable_doubletons(st8.graph)) {
    CHECK(is_R_compatible(st8.graph, r, e));
    CHECK_THROWS_AS(is_R_compatible(st8.graph, r, r.alpha), Error);
  }

  BuiltinGraph f2 = builtin("fig2_brick");
  Doubleton r2 = doubleton_of("fig2_brick");
  CHECK(!is_R_compatible(f2.graph, r2, f2.named_edges.at("e")));

  BuiltinGraph f3 = builtin("fig3_pseudo_biwheel");
  Doubleton r3 = doubleton_of("fig3_pseudo_biwheel");
  auto rp = validate_doubleton(f3.graph, f3.named_edges.at("alpha_prime"),
                               f3.named_edges.at("beta_prime"));
  REQUIRE(rp.has_value());
  CHECK(is_R_compatible(f3.graph, *rp, f3.named_edges.at("e")));
  CHECK(is_R_compatible(f3.graph, *rp, f3.named_edges.at("f")));
  CHECK(!is_R_compatible(f3.graph, r3, f3.named_edges.at("e")));
  CHECK(!is_R_compatible(f3.graph, r3, f3.named_edges.at("f")));
}

TEST_CASE("R-brick recognition") {
  BuiltinGraph st8 = builtin("st8");
  for (const Doubleton& r : removable_doubletons(st8.graph))
    CHECK(is_R_brick(st8.graph, r));
}

TEST_CASE("removability is not preserved under deletion in general") {
  // in the 8-vertex staircase, edge 1 becomes removable only after e leaves
  BuiltinGraph st8 = builtin("st8");
  int e = st8.named_edges.at("e");
  int f = st8.named_edges.at("f");
  CHECK(!is_removable(st8.graph, f));
  CHECK(is_removable(st8.graph.minus_edge(e), f));
}

TEST_CASE("exchange checks enforce preconditions") {
  BuiltinGraph st8 = builtin("st8");
  Doubleton r = removable_doubletons(st8.graph).front();
  int e = st8.named_edges.at("e");
  CHECK_THROWS_AS(verify_exchange_Rcompatible(st8.graph, r, e, e), Error);
  Multigraph h = st8.graph.minus_edges({r.alpha, r.beta});
  int f = removable_edges(h).front();
  CHECK_THROWS_AS(verify_exchange_bipartite(h, f, f), Error);
}

TEST_CASE("non-removable witness") {
  Multigraph c4 = cycle(4);
  for (const Edge& e : c4.edges()) CHECK(non_removable_witness(c4, e.id).has_value());

  std::vector<Multigraph> corpus = {cycle(4), cycle(6), k33(), cube()};
  for (const char* name : {"st8", "fig2_brick", "fig3_pseudo_biwheel"}) {
    Doubleton r = doubleton_of(name);
    corpus.push_back(builtin(name).graph.minus_edges({r.alpha, r.beta}));
  }
  for (const Multigraph& h : corpus)
    for (const Edge& e : h.edges())
      CHECK(non_removable_witness(h, e.id).has_value() == !is_removable(h, e.id));

  CHECK_THROWS_AS(non_removable_witness(k4(), 0), Error);  // not bipartite
}
