#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "brickforge/canonical.hpp"
#include "brickforge/generator.hpp"
#include "brickforge/multigraph.hpp"
#include "brickforge/textio.hpp"

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

Multigraph relabel_randomly(const Multigraph& g, std::mt19937& rng) {
  std::vector<int> labels = g.vertices();
  std::vector<int> perm = labels;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<int, int> to;
  for (size_t i = 0; i < labels.size(); ++i) to[labels[i]] = perm[i];
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int u = to[e.u], v = to[e.v];
    edges.push_back(Edge{e.id, std::min(u, v), std::max(u, v)});
  }
  std::sort(labels.begin(), labels.end());
  return Multigraph::from_raw(labels, edges);
}

}  // namespace

TEST_CASE("build and basic accessors") {
  Multigraph g = k4();
  CHECK(g.n() == 4);
  CHECK(g.m() == 6);
  CHECK(g.degree(0) == 3);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});

  Multigraph digon = Multigraph::build(2, {{0, 1}, {0, 1}});
  CHECK(digon.m() == 2);
  CHECK(digon.multiplicity(0, 1) == 2);
  CHECK(digon.edge(0).id != digon.edge(1).id);

  CHECK_THROWS_AS(Multigraph::build(4, {{0, 0}}), Error);
  try {
    Multigraph::build(4, {{0, 0}});
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::LoopRejected);
  }
}

TEST_CASE("edge ids are stable under deletion") {
  Multigraph g = k4();
  Multigraph h = g.minus_edge(2);
  CHECK(!h.has_edge(2));
  CHECK(h.edge(5).u == 2);
  CHECK(h.edge(5).v == 3);
  CHECK(h.m() == 5);
}

TEST_CASE("cut edges") {
  Multigraph g = k4();
  Cut c = cut_edges(g, {0});
  CHECK(c.edge_ids == EdgeIdSet{0, 1, 2});

  Multigraph c4 = cycle(4);
  Cut c2 = cut_edges(c4, {0, 1});
  CHECK(c2.edge_ids == EdgeIdSet{1, 3});

  // symmetry between a shore and its complement
  for (const VertexSet& x : {VertexSet{0}, VertexSet{0, 2}, VertexSet{1, 2, 3}}) {
    VertexSet xbar;
    for (int v : g.vertices())
      if (!x.count(v)) xbar.insert(v);
    CHECK(cut_edges(g, x).edge_ids == cut_edges(g, xbar).edge_ids);
  }
  CHECK_THROWS_AS(cut_edges(g, {}), Error);
  CHECK_THROWS_AS(cut_edges(g, {0, 1, 2, 3}), Error);
}

TEST_CASE("contract shore") {
  Multigraph g = k4();
  Multigraph h = contract_shore(g, {2, 3}, 9);
  CHECK(h.n() == 3);
  CHECK(h.m() == 5);
  CHECK(h.has_vertex(9));
  CHECK(h.multiplicity(0, 9) == 2);
  CHECK(h.multiplicity(1, 9) == 2);
  CHECK(h.multiplicity(0, 1) == 1);

  // boundary edges keep their ids; interior edges disappear
  EdgeIdSet survivors;
  for (const Edge& e : h.edges()) survivors.insert(e.id);
  EdgeIdSet expected = cut_edges(g, {2, 3}).edge_ids;
  expected.insert(0);  // the edge 01 inside the kept side
  CHECK(survivors == expected);

  // contracting a single vertex only renames it
  Multigraph r = contract_shore(g, {3}, 7);
  CHECK(r.n() == 4);
  CHECK(r.m() == 6);
  CHECK(r.has_vertex(7));
}

TEST_CASE("bipartition") {
  auto p = bipartition(cycle(4));
  REQUIRE(p.has_value());
  CHECK(p->a == VertexSet{0, 2});
  CHECK(p->b == VertexSet{1, 3});
  CHECK(!bipartition(k4()).has_value());
  // a bipartition properly 2-colors every edge
  Multigraph c6 = cycle(6);
  auto q = bipartition(c6);
  REQUIRE(q.has_value());
  for (const Edge& e : c6.edges()) CHECK(q->a.count(e.u) != q->a.count(e.v));
}

TEST_CASE("three connectivity") {
  CHECK(is_three_connected(k4()));
  CHECK(!is_three_connected(cycle(6)));
  CHECK(is_three_connected(builtin("petersen").graph));
  CHECK(!is_three_connected(Multigraph::build(2, {{0, 1}})));
}

TEST_CASE("canonical form invariance under relabeling") {
  std::mt19937 rng(12345);
  for (const char* name : {"k4", "petersen", "st8", "fig2_brick"}) {
    Multigraph g = builtin(name).graph;
    CanonicalForm base = canonical_form(g, CanonMode::WithMultiplicity);
    for (int t = 0; t < 100; ++t)
      CHECK(canonical_form(relabel_randomly(g, rng), CanonMode::WithMultiplicity) == base);
  }
}

TEST_CASE("canonical form distinguishes multiplicity only when asked") {
  Multigraph single = Multigraph::build(2, {{0, 1}});
  Multigraph digon = Multigraph::build(2, {{0, 1}, {0, 1}});
  CHECK(canonical_form(single, CanonMode::SimpleUnderlying) ==
        canonical_form(digon, CanonMode::SimpleUnderlying));
  CHECK(canonical_form(single, CanonMode::WithMultiplicity) !=
        canonical_form(digon, CanonMode::WithMultiplicity));
}

TEST_CASE("canonical form distinguishes prism from K33") {
  Multigraph prism = builtin("c6bar").graph;
  Multigraph k33 = Multigraph::build(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(canonical_form(prism, CanonMode::WithMultiplicity) !=
        canonical_form(k33, CanonMode::WithMultiplicity));
  CHECK(isomorphic(prism, prism, CanonMode::WithMultiplicity));
  CHECK(!isomorphic(prism, k33, CanonMode::SimpleUnderlying));
}

TEST_CASE("canonical form rejects oversized graphs") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 17; ++i) edges.emplace_back(i, (i + 1) % 17);
  Multigraph big = Multigraph::build(17, edges);
  CHECK_THROWS_AS(canonical_form(big, CanonMode::WithMultiplicity), Error);
}

TEST_CASE("text format round trip") {
  Multigraph g = builtin("st8").graph;
  Multigraph back = read_graph_string(graph_to_text(g));
  CHECK(back.n() == g.n());
  CHECK(back.m() == g.m());
  CHECK(isomorphic(g, back, CanonMode::WithMultiplicity));

  CHECK(read_graph_string("# comment\n2 2\n0 1\n0 1\n").m() == 2);
  CHECK_THROWS_AS(read_graph_string("2\n"), Error);
  CHECK_THROWS_AS(read_graph_string("2 1\n0 0\n"), Error);
  CHECK_THROWS_AS(read_graph_string("2 1\n0 5\n"), Error);
  CHECK_THROWS_AS(read_graph_string("2 1\n0 1\nextra\n"), Error);
  CHECK_THROWS_AS(read_graph_string("2 2\n0 1\n"), Error);
}
