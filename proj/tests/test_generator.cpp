#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "brickforge/canonical.hpp"
#include "brickforge/generator.hpp"

using namespace brickforge;

namespace {

Multigraph k4() {
  return Multigraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("builtin graphs") {
  BuiltinGraph st8 = builtin("st8");
  CHECK(st8.graph.n() == 8);
  CHECK(st8.graph.m() == 12);
  for (int v : st8.graph.vertices()) CHECK(st8.graph.degree(v) == 3);

  CHECK(builtin("c6bar").graph.n() == 6);
  CHECK(builtin("c6bar").graph.m() == 9);
  CHECK(builtin("petersen").graph.n() == 10);
  CHECK(builtin("fig2_brick").graph.n() == 10);
  CHECK(builtin("fig2_brick").graph.m() == 16);
  CHECK(builtin("fig3_pseudo_biwheel").graph.n() == 10);
  CHECK(builtin("fig3_pseudo_biwheel").graph.m() == 16);
  CHECK(removable_doubletons(builtin("fig2_brick").graph).size() == 1);
  CHECK_THROWS_AS(builtin("nonsense"), Error);
}

TEST_CASE("base brick recognition") {
  CHECK(is_base_brick(k4()));
  CHECK(is_base_brick(builtin("c6bar").graph));
  CHECK(!is_base_brick(builtin("st8").graph));
  CHECK(!is_base_brick(builtin("petersen").graph));
  // doubling an edge does not change the underlying simple graph
  Multigraph doubled = k4();
  doubled.add_edge(0, 1);
  CHECK(is_base_brick(doubled));
}

TEST_CASE("finding an R-thin edge") {
  BuiltinGraph st8 = builtin("st8");
  for (const Doubleton& r : removable_doubletons(st8.graph)) {
    CHECK(find_R_thin_edge(st8.graph, r, SearchStrategy::Scan) ==
          st8.named_edges.at("e"));
    int via_ascent = find_R_thin_edge(st8.graph, r, SearchStrategy::Ascent);
    CHECK(is_R_thin(st8.graph, r, via_ascent));
  }
  Doubleton rk = removable_doubletons(k4()).front();
  CHECK_THROWS_AS(find_R_thin_edge(k4(), rk, SearchStrategy::Scan), Error);
}

TEST_CASE("reduction step") {
  BuiltinGraph st8 = builtin("st8");
  Doubleton r = removable_doubletons(st8.graph).front();
  ReduceStepResult step = reduce_step(st8.graph, r);
  CHECK(step.e == st8.named_edges.at("e"));
  CHECK(step.j.n() == 4);
  CHECK(step.j.m() == 7);
  CHECK(step.j.has_edge(r.alpha));
  CHECK(step.j.has_edge(r.beta));
  CHECK(is_R_brick(step.j, step.r_j));
}

TEST_CASE("reduction sequence") {
  BuiltinGraph st8 = builtin("st8");
  Doubleton r = removable_doubletons(st8.graph).front();
  ReductionSequence seq = reduction_sequence(st8.graph, r);
  CHECK(seq.steps.size() == 1);
  CHECK(seq.base_tag == "K4");
  CHECK(isomorphic(seq.base, k4(), CanonMode::SimpleUnderlying));

  Multigraph prism = builtin("c6bar").graph;
  Doubleton rp = removable_doubletons(prism).front();
  ReductionSequence ps = reduction_sequence(prism, rp);
  CHECK(ps.steps.empty());
  CHECK(ps.base_tag == "C6bar");
}

TEST_CASE("expansions invert the reduction step") {
  BuiltinGraph st8 = builtin("st8");
  Doubleton r = removable_doubletons(st8.graph).front();
  ReduceStepResult step = reduce_step(st8.graph, r);
  bool found = false;
  for (const Expansion& x : expansions(step.j, step.r_j, 8))
    if (isomorphic(x.graph, st8.graph, CanonMode::WithMultiplicity)) found = true;
  CHECK(found);
}

TEST_CASE("catalog basics") {
  auto c4 = generate_catalog(4, /*simple_only=*/true);
  REQUIRE(c4.size() == 1);
  CHECK(isomorphic(c4.front().representative, k4(), CanonMode::WithMultiplicity));

  // n=6 holds the prism plus its one- and two-chord extensions
  auto c6 = generate_catalog(6, /*simple_only=*/true);
  REQUIRE(c6.size() == 4);
  CHECK(isomorphic(c6[0].representative, k4(), CanonMode::WithMultiplicity));
  bool has_prism = false;
  for (const CatalogEntry& e : c6)
    if (isomorphic(e.representative, builtin("c6bar").graph, CanonMode::WithMultiplicity))
      has_prism = true;
  CHECK(has_prism);

  auto c8 = generate_catalog(8);
  CanonicalForm st8_form =
      canonical_form(builtin("st8").graph, CanonMode::WithMultiplicity);
  bool has_st8 = false;
  for (const CatalogEntry& e : c8)
    if (e.form == st8_form) has_st8 = true;
  CHECK(has_st8);
}

TEST_CASE("catalog soundness") {
  for (const CatalogEntry& e : generate_catalog(8)) {
    CHECK(is_brick(e.representative));
    CHECK(is_near_bipartite(e.representative));
    CHECK(!e.doubletons.empty());
    for (const Doubleton& r : e.doubletons)
      CHECK(validate_doubleton(e.representative, r.alpha, r.beta).has_value());
    CHECK(canonical_form(e.representative, CanonMode::WithMultiplicity) == e.form);
  }
}

TEST_CASE("catalog determinism") {
  auto a = generate_catalog(8);
  auto b = generate_catalog(8);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].form == b[i].form);
    CHECK(a[i].provenance == b[i].provenance);
  }
}
