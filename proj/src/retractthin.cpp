#include "brickforge/retractthin.hpp"

#include <algorithm>
#include <random>

#include "brickforge/canonical.hpp"
#include "brickforge/tightcut.hpp"

namespace brickforge {

namespace {

bool subset(const VertexSet& inner, const VertexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  for (int v : a)
    if (!b.count(v)) out.insert(v);
  return out;
}

VertexSet complement(const Multigraph& g, const VertexSet& x) {
  VertexSet out;
  for (int v : g.vertices())
    if (!x.count(v)) out.insert(v);
  return out;
}

bool adjacent(const Multigraph& g, int u, int v) { return g.multiplicity(u, v) > 0; }

void check(bool ok, const char* msg) {
  if (!ok) raise(ErrorCode::TheoremViolation, msg);
}

// two neighbors of a degree-2 vertex; raises if they coincide
std::pair<int, int> bicontraction_neighbors(const Multigraph& g, int v) {
  auto inc = g.incident_edges(v);
  int u = g.edge(inc[0]).other(v);
  int w = g.edge(inc[1]).other(v);
  if (u == w)
    raise(ErrorCode::IdenticalNeighbors, "degree-2 vertex lies on a parallel pair");
  return {u, w};
}

Doubleton require_doubleton(const Multigraph& g, const Doubleton& r) {
  auto checked = validate_doubleton(g, r.alpha, r.beta);
  if (!checked)
    raise(ErrorCode::PreconditionViolated, "R is not a removable doubleton of G");
  return *checked;
}

void require_R_compatible(const Multigraph& g, const Doubleton& r, int e) {
  if (!is_R_compatible(g, r, e))
    raise(ErrorCode::NotRCompatible, "edge " + std::to_string(e) + " is not R-compatible");
}

// class (a or b of the witness) containing s; raises if s straddles both
const VertexSet& class_of(const Doubleton& r, const VertexSet& s, const char* what) {
  if (subset(s, r.b)) return r.b;
  if (subset(s, r.a)) return r.a;
  raise(ErrorCode::TheoremViolation, std::string(what) + " straddles the color classes");
}

}  // namespace

VertexSet isolated_after_removal(const Multigraph& g, const VertexSet& s) {
  VertexSet out;
  for (const VertexSet& comp : components_after_removal(g, s))
    if (comp.size() == 1) out.insert(*comp.begin());
  return out;
}

Multigraph bicontract(const Multigraph& g, int v) {
  if (!g.has_vertex(v)) raise(ErrorCode::UnknownVertex, "no such vertex");
  if (g.degree(v) != 2)
    raise(ErrorCode::WrongDegree, "bicontraction needs a degree-2 vertex");
  auto [u, w] = bicontraction_neighbors(g, v);
  return contract_shore(g, VertexSet{u, v, w}, g.max_vertex_label() + 1);
}

RetractResult retract(const Multigraph& g, std::optional<unsigned> seed) {
  RetractResult r;
  r.graph = g;
  for (int v : g.vertices()) r.vertex_map[v] = v;
  std::mt19937 rng(seed.value_or(0));
  while (r.graph.n() > 2) {
    std::vector<int> usable;
    bool any_deg2 = false;
    for (int v : r.graph.vertices()) {
      if (r.graph.degree(v) != 2) continue;
      any_deg2 = true;
      auto inc = r.graph.incident_edges(v);
      if (r.graph.edge(inc[0]).other(v) != r.graph.edge(inc[1]).other(v))
        usable.push_back(v);
    }
    if (!any_deg2) break;
    if (usable.empty())
      raise(ErrorCode::StuckIdenticalNeighbors,
            "every degree-2 vertex lies on a parallel pair");
    int v = usable[seed ? rng() % usable.size() : 0];
    auto [u, w] = bicontraction_neighbors(r.graph, v);
    int label = r.graph.max_vertex_label() + 1;
    r.graph = contract_shore(r.graph, VertexSet{u, v, w}, label);
    r.steps.push_back(BicontractionStep{v, u, w, label});
    for (auto& [orig, cur] : r.vertex_map)
      if (cur == u || cur == v || cur == w) cur = label;
  }
  r.collapsed = r.graph.n() <= 2;
  return r;
}

Multigraph bi_split(const Multigraph& g, int v, const std::vector<int>& part1,
                    const std::vector<int>& part2, int v1, int v2, int v0) {
  if (!g.has_vertex(v)) raise(ErrorCode::UnknownVertex, "no such vertex");
  if (g.degree(v) < 2) raise(ErrorCode::WrongDegree, "bi-split needs degree >= 2");
  if (part1.empty() || part2.empty())
    raise(ErrorCode::EmptyPart, "both edge parts must be nonempty");
  std::set<int> p1(part1.begin(), part1.end()), p2(part2.begin(), part2.end());
  std::set<int> all = p1;
  all.insert(p2.begin(), p2.end());
  std::vector<int> inc = g.incident_edges(v);
  if (p1.size() + p2.size() != all.size() ||
      all != std::set<int>(inc.begin(), inc.end()))
    raise(ErrorCode::PreconditionViolated, "parts must partition the edges at v");
  for (int label : {v1, v2, v0}) {
    if (label != v && g.has_vertex(label))
      raise(ErrorCode::PreconditionViolated, "split labels must be fresh");
  }
  if (v1 == v2 || v1 == v0 || v2 == v0)
    raise(ErrorCode::PreconditionViolated, "split labels must be distinct");

  std::vector<int> vertices;
  for (int x : g.vertices())
    if (x != v) vertices.push_back(x);
  vertices.insert(vertices.end(), {v1, v2, v0});
  std::sort(vertices.begin(), vertices.end());
  std::vector<Edge> edges;
  int next_id = 0;
  for (const Edge& e : g.edges()) {
    Edge moved = e;
    if (e.incident(v)) {
      int keep = e.other(v);
      int target = p1.count(e.id) ? v1 : v2;
      moved = Edge{e.id, std::min(keep, target), std::max(keep, target)};
    }
    edges.push_back(moved);
    next_id = std::max(next_id, e.id + 1);
  }
  edges.push_back(Edge{next_id, std::min(v1, v0), std::max(v1, v0)});
  edges.push_back(Edge{next_id + 1, std::min(v2, v0), std::max(v2, v0)});
  return Multigraph::from_raw(std::move(vertices), std::move(edges));
}

bool is_thin(const Multigraph& g, int e) {
  if (!is_brick(g))
    raise(ErrorCode::PreconditionViolated, "thinness is defined for bricks");
  if (!is_removable(g, e) || !is_b_invariant(g, e))
    raise(ErrorCode::NotBInvariant, "thinness is defined for b-invariant edges");
  return is_brick(retract(g.minus_edge(e)).graph);
}

bool is_R_thin(const Multigraph& g, const Doubleton& r, int e) {
  Doubleton rr = require_doubleton(g, r);
  if (!is_brick(g)) raise(ErrorCode::NotRBrick, "G is not a brick");
  if (!is_R_compatible(g, rr, e)) return false;
  // R-compatible edges are b-invariant; is_thin would reject otherwise
  bool via_retract = is_thin(g, e);
  Multigraph ge = g.minus_edge(e);
  bool via_barriers = true;
  for (const Barrier& part : canonical_partition(ge).parts)
    if (part.s.size() > 2) via_barriers = false;
  if (via_retract != via_barriers) {
    // The barrier characterization can outrun the retract when parallel edges
    // keep a two-neighbour vertex of G-e above degree two: no bicontraction
    // applies there, so the retract stops short of the brick of G-e. Only
    // that corner may disagree, and only in the barrier-true direction.
    bool parallel_corner = false;
    for (int v : ge.vertices())
      if (ge.neighbors(v).size() == 2 && ge.degree(v) >= 3) parallel_corner = true;
    check(!via_retract && via_barriers && parallel_corner,
          "thinness characterizations disagree");
  }
  return via_retract;
}

int edge_index(const Multigraph& g, const Doubleton& r, int e) {
  require_R_compatible(g, r, e);
  int k = static_cast<int>(nontrivial_maximal_barriers(g.minus_edge(e)).size());
  check(k <= 2, "more than two maximal nontrivial barriers after deletion");
  return k;
}

int edge_rank(const Multigraph& g, const Doubleton& r, int e) {
  require_R_compatible(g, r, e);
  return rank_graph(g.minus_edge(e));
}

ThreeCaseReport three_case(const Multigraph& g, const Doubleton& r, int e) {
  Doubleton rr = require_doubleton(g, r);
  require_R_compatible(g, rr, e);
  Multigraph ge = g.minus_edge(e);
  auto barriers = nontrivial_maximal_barriers(ge);
  check(barriers.size() <= 2, "more than two maximal nontrivial barriers");
  ThreeCaseReport rep;
  rep.index = static_cast<int>(barriers.size());
  if (rep.index == 0) return rep;
  const Edge& ed = g.edge(e);

  if (rep.index == 1) {
    rep.s = barriers[0].s;
    rep.i = isolated_after_removal(ge, rep.s);
    const VertexSet& cls_b = class_of(rr, rep.s, "barrier");
    rep.classes_swapped = (&cls_b == &rr.a);
    const VertexSet& cls_a = rep.classes_swapped ? rr.b : rr.a;
    check(subset(rep.i, cls_a), "isolated set leaks into the barrier's class");
    check(rep.i.size() + 1 == rep.s.size(), "isolated set size must be |S| - 1");
    int in_i = rep.i.count(ed.u) ? ed.u : (rep.i.count(ed.v) ? ed.v : -1);
    check(in_i >= 0, "deleted edge has no end among the isolated vertices");
    int other = ed.other(in_i);
    check(cls_b.count(other) && !rep.s.count(other),
          "deleted edge's other end must lie in B - S");
    return rep;
  }

  // two maximal nontrivial barriers, one inside each color class
  const VertexSet* s1 = nullptr;
  const VertexSet* s2_star = nullptr;
  for (const Barrier& b : barriers) {
    if (subset(b.s, rr.b))
      s1 = &b.s;
    else if (subset(b.s, rr.a))
      s2_star = &b.s;
  }
  check(s1 && s2_star, "the two barriers must lie in distinct color classes");
  rep.s1 = *s1;
  rep.s2_star = *s2_star;
  rep.i1 = isolated_after_removal(ge, rep.s1);
  rep.i2_star = isolated_after_removal(ge, rep.s2_star);
  check(subset(rep.i1, rr.a) && subset(rep.i2_star, rr.b),
        "isolated sets must lie opposite their barriers");
  check(rep.i1.size() + 1 == rep.s1.size() &&
            rep.i2_star.size() + 1 == rep.s2_star.size(),
        "isolated set size must be |S| - 1");
  VertexSet end1 = set_minus(rep.i1, rep.s2_star);
  VertexSet end2 = set_minus(rep.i2_star, rep.s1);
  bool placed = (end1.count(ed.u) && end2.count(ed.v)) ||
                (end1.count(ed.v) && end2.count(ed.u));
  check(placed, "deleted edge must join I1 - S2* to I2* - S1");

  rep.x1 = set_union(rep.s1, rep.i1);
  rep.s2 = set_minus(rep.s2_star, rep.i1);
  rep.i2 = set_minus(rep.i2_star, rep.s1);
  // recompute S2 independently from the contraction of X1
  int label = g.max_vertex_label() + 1;
  Multigraph contracted = contract_shore(ge, rep.x1, label);
  auto inner = nontrivial_maximal_barriers(contracted);
  check(inner.size() == 1, "contraction must leave a unique maximal barrier");
  check(!inner[0].s.count(label), "contraction vertex entered the barrier");
  check(inner[0].s == rep.s2, "S2 computed two ways must agree");
  auto as_barrier = is_barrier(ge, rep.s2);
  check(as_barrier.has_value(), "S2 must be a barrier of G - e");
  check(isolated_after_removal(ge, rep.s2) == rep.i2,
        "I2 must be the isolated vertices of (G - e) - S2");
  check(rep.i2.size() + 1 == rep.s2.size(), "isolated set size must be |S2| - 1");
  rep.x2 = set_union(rep.s2, rep.i2);
  return rep;
}

CandidateBipartite candidate_bipartite(const Multigraph& g, const Doubleton& r, int e,
                                       const VertexSet& s) {
  Doubleton rr = require_doubleton(g, r);
  require_R_compatible(g, rr, e);
  if (s.size() < 3)
    raise(ErrorCode::BarrierTooSmall, "candidate sets need a barrier of size >= 3");
  Multigraph ge = g.minus_edge(e);
  if (!is_barrier(ge, s))
    raise(ErrorCode::PreconditionViolated, "S is not a barrier of G - e");
  CandidateBipartite out;
  out.isolated = isolated_after_removal(ge, s);
  VertexSet x = set_union(s, out.isolated);
  VertexSet xbar_set = complement(g, x);
  check(!xbar_set.empty(), "the complement of S and its isolated set is empty");
  Multigraph h_minus_e = g.minus_edges({rr.alpha, rr.beta, e});
  out.xbar = g.max_vertex_label() + 1;
  out.graph = contract_shore(h_minus_e, xbar_set, out.xbar);
  out.class_s = s;
  out.class_i_xbar = out.isolated;
  out.class_i_xbar.insert(out.xbar);
  check(is_bipartite(out.graph), "auxiliary graph must be bipartite");
  check(is_matching_covered(out.graph), "auxiliary graph must be matching covered");
  for (const Edge& he : out.graph.edges())
    check(out.class_s.count(he.u) != out.class_s.count(he.v),
          "auxiliary graph edge inside a color class");
  return out;
}

std::vector<int> candidate_set(const Multigraph& g, const Doubleton& r, int e,
                               const VertexSet& s) {
  CandidateBipartite cb = candidate_bipartite(g, r, e, s);
  std::vector<int> out;
  for (const Edge& he : cb.graph.edges()) {
    if (he.incident(cb.xbar)) continue;
    if (is_matching_covered(cb.graph.minus_edge(he.id))) out.push_back(he.id);
  }
  return out;  // edge ids survive the contraction, so these are G's ids
}

MatchingCandidateReport verify_matching_candidate_structure(const Multigraph& g,
                                                            const Doubleton& r, int e,
                                                            const VertexSet& s) {
  CandidateBipartite cb = candidate_bipartite(g, r, e, s);
  std::vector<int> cand = candidate_set(g, r, e, s);
  for (size_t i = 0; i < cand.size(); ++i)
    for (size_t j = i + 1; j < cand.size(); ++j) {
      const Edge& a = g.edge(cand[i]);
      const Edge& b = g.edge(cand[j]);
      if (a.incident(b.u) || a.incident(b.v))
        raise(ErrorCode::NotAMatching, "candidate set contains adjacent edges");
    }

  MatchingCandidateReport rep;
  Doubleton rr = require_doubleton(g, r);
  const VertexSet& i_set = cb.isolated;
  VertexSet x = set_union(s, i_set);
  VertexSet xbar_set = complement(g, x);
  const Edge& ed = g.edge(e);
  rep.y = i_set.count(ed.u) ? ed.u : (i_set.count(ed.v) ? ed.v : -1);
  if (rep.y < 0) return rep;
  rep.z = ed.other(rep.y);

  // each vertex of I - y carries exactly one candidate; y carries none
  std::map<int, int> cand_at;  // I-vertex -> candidate edge id
  bool names_ok = cand.size() + 2 == s.size();
  for (int f : cand) {
    const Edge& fe = g.edge(f);
    int wi = i_set.count(fe.u) ? fe.u : (i_set.count(fe.v) ? fe.v : -1);
    if (wi < 0 || wi == rep.y || cand_at.count(wi) || !s.count(fe.other(wi))) {
      names_ok = false;
      break;
    }
    cand_at[wi] = f;
  }
  names_ok = names_ok && cand_at.size() + 1 == i_set.size();

  const VertexSet& cls_b = class_of(rr, s, "barrier");
  const Edge& beta_a = g.edge(rr.alpha);
  const Edge& beta_b = g.edge(rr.beta);
  const Edge& beta = (cls_b.count(beta_b.u) && cls_b.count(beta_b.v)) ? beta_b : beta_a;
  names_ok = names_ok && cls_b.count(beta.u) && cls_b.count(beta.v);
  if (names_ok) {
    if (s.count(beta.u) != s.count(beta.v)) {
      rep.b1 = s.count(beta.u) ? beta.u : beta.v;
      rep.b2 = beta.other(rep.b1);
    } else {
      names_ok = false;
    }
  }

  if (names_ok) {
    VertexSet taken{rep.b1};
    std::vector<std::pair<int, int>> pairs;  // (w_j, u_j)
    for (const auto& [wi, f] : cand_at) {
      int ui = g.edge(f).other(wi);
      if (ui == rep.b1 || taken.count(ui)) {
        names_ok = false;
        break;
      }
      taken.insert(ui);
      pairs.emplace_back(wi, ui);
    }
    if (names_ok) {
      VertexSet rest = set_minus(s, taken);
      names_ok = rest.size() == 1;
      if (names_ok) rep.u0 = *rest.begin();
    }
    if (names_ok) {
      // u1: the unique candidate end in S with a neighbor outside X
      std::vector<size_t> with_outside;
      for (size_t j = 0; j < pairs.size(); ++j)
        for (int nb : g.neighbors(pairs[j].second))
          if (xbar_set.count(nb)) {
            with_outside.push_back(j);
            break;
          }
      names_ok = with_outside.size() == 1;
      if (names_ok) std::swap(pairs[0], pairs[with_outside[0]]);
    }
    if (names_ok) {
      rep.u1 = pairs[0].second;
      for (const auto& [wi, ui] : pairs) {
        rep.w.push_back(wi);
        rep.u.push_back(ui);
      }
    }
  }
  rep.names_resolved = names_ok;
  if (!names_ok) return rep;

  rep.clause_i = true;
  for (int v : i_set) rep.clause_i = rep.clause_i && g.degree(v) == 3;

  rep.clause_ii = g.degree(rep.b1) == 3;
  for (int nb : g.neighbors(rep.b1))
    rep.clause_ii = rep.clause_ii && (i_set.count(nb) || nb == rep.b2);

  int u0_inner = 0;
  rep.clause_iii = true;
  for (int nb : g.neighbors(rep.u0)) {
    if (i_set.count(nb) && nb != rep.y)
      ++u0_inner;
    else if (!xbar_set.count(nb))
      rep.clause_iii = false;
  }
  rep.clause_iii = rep.clause_iii && u0_inner == 1;

  int u1_inner = 0;
  rep.clause_iv = true;
  for (int nb : g.neighbors(rep.u1)) {
    if (i_set.count(nb))
      ++u1_inner;
    else if (!xbar_set.count(nb))
      rep.clause_iv = false;
  }
  rep.clause_iv = rep.clause_iv && u1_inner == 2;

  rep.clause_v = true;
  if (s.size() >= 4) {
    VertexSet special{rep.b1, rep.u0, rep.u1};
    for (int v : s) {
      if (special.count(v)) continue;
      auto nbs = g.neighbors(v);
      bool ok = nbs.size() == 3;
      for (int nb : nbs) ok = ok && i_set.count(nb);
      rep.clause_v = rep.clause_v && ok;
    }
  }

  if (s.size() == 3) {
    // 2x3 grid: two paths of length two joined by three rungs
    Multigraph ladder =
        Multigraph::build(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    rep.ladder = canonical_form(cb.graph, CanonMode::SimpleUnderlying) ==
                 canonical_form(ladder, CanonMode::SimpleUnderlying);
  } else {
    rep.b1_w1_nonadjacent = !adjacent(g, rep.b1, rep.w[0]);
    // renumber so that b1 is adjacent to w2
    std::optional<size_t> j2;
    for (size_t j = 1; j < rep.w.size(); ++j)
      if (adjacent(g, rep.b1, rep.w[j])) {
        j2 = j;
        break;
      }
    if (j2) {
      int w2 = rep.w[*j2], u2 = rep.u[*j2];
      rep.y_adjacent_b1_u2 = adjacent(g, rep.y, rep.b1) && adjacent(g, rep.y, u2);
      rep.u0_w2_nonadjacent = !adjacent(g, rep.u0, w2);
    } else {
      rep.y_adjacent_b1_u2 = false;
      rep.u0_w2_nonadjacent = false;
    }
  }

  rep.all_hold = rep.clause_i && rep.clause_ii && rep.clause_iii && rep.clause_iv &&
                 rep.clause_v && rep.ladder.value_or(true) &&
                 rep.b1_w1_nonadjacent.value_or(true) &&
                 rep.y_adjacent_b1_u2.value_or(true) &&
                 rep.u0_w2_nonadjacent.value_or(true);
  return rep;
}

EqualRankReport verify_equal_rank(const Multigraph& g, const Doubleton& r, int e, int f,
                                  const VertexSet& s1) {
  Doubleton rr = require_doubleton(g, r);
  if (!is_brick(g)) raise(ErrorCode::PreconditionViolated, "G must be a brick");
  if (!is_R_compatible(g, rr, e) || !is_R_compatible(g, rr, f))
    raise(ErrorCode::PreconditionViolated, "e and f must be R-compatible");
  if (edge_index(g, rr, e) != 2 || edge_index(g, rr, f) != 2)
    raise(ErrorCode::PreconditionViolated, "e and f must both have index 2");
  if (edge_rank(g, rr, e) != edge_rank(g, rr, f))
    raise(ErrorCode::PreconditionViolated, "e and f must have equal rank");
  if (s1.size() < 3)
    raise(ErrorCode::PreconditionViolated, "S1 must have at least three vertices");
  Multigraph ge = g.minus_edge(e);
  bool s1_maximal = false;
  for (const Barrier& b : nontrivial_maximal_barriers(ge)) s1_maximal |= b.s == s1;
  if (!s1_maximal)
    raise(ErrorCode::PreconditionViolated, "S1 must be a maximal nontrivial barrier of G - e");
  std::vector<int> cand = candidate_set(g, rr, e, s1);
  if (std::find(cand.begin(), cand.end(), f) == cand.end())
    raise(ErrorCode::PreconditionViolated, "f must belong to the candidate set of (e, S1)");

  EqualRankReport rep;
  rep.s1 = s1;
  const VertexSet& cls_b = class_of(rr, s1, "S1");
  const VertexSet& cls_a = (&cls_b == &rr.b) ? rr.a : rr.b;
  const Edge& ed = g.edge(e);
  rep.y = cls_a.count(ed.u) ? ed.u : ed.v;
  rep.z = ed.other(rep.y);
  check(cls_a.count(rep.y) && cls_b.count(rep.z), "e must join the two color classes");
  rep.i1 = isolated_after_removal(ge, s1);
  const Edge& fd = g.edge(f);
  rep.u = s1.count(fd.u) ? fd.u : fd.v;
  rep.w_vertex = fd.other(rep.u);
  check(s1.count(rep.u) && rep.i1.count(rep.w_vertex),
        "f must join S1 to its isolated set");

  int label = g.max_vertex_label() + 1;
  auto second_barrier = [&](const Multigraph& reduced, const VertexSet& first_x) {
    Multigraph contracted = contract_shore(reduced, first_x, label);
    auto inner = nontrivial_maximal_barriers(contracted);
    check(inner.size() == 1, "contraction must leave a unique maximal barrier");
    check(!inner[0].s.count(label), "contraction vertex entered the barrier");
    return inner[0].s;
  };
  rep.s2 = second_barrier(ge, set_union(s1, rep.i1));
  rep.i2 = isolated_after_removal(ge, rep.s2);
  check(subset(rep.s2, cls_a) && rep.i2.count(rep.z), "S2 must lie in A with z isolated");

  Multigraph gf = g.minus_edge(f);
  const VertexSet* s3 = nullptr;
  for (const Barrier& b : nontrivial_maximal_barriers(gf))
    if (subset(b.s, cls_b)) s3 = &b.s;
  check(s3 != nullptr, "G - f must have a maximal nontrivial barrier inside B");
  rep.s3 = *s3;
  rep.i3 = isolated_after_removal(gf, rep.s3);
  check(rep.i3.count(rep.w_vertex), "w must be isolated by S3");
  rep.s4 = second_barrier(gf, set_union(rep.s3, rep.i3));
  rep.i4 = isolated_after_removal(gf, rep.s4);
  check(subset(rep.s4, cls_a) && rep.i4.count(rep.u), "S4 must lie in A with u isolated");

  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  rep.clause_i = !a.incident(b.u) && !a.incident(b.v);
  rep.clause_ii = subset(rep.s3, set_minus(rep.s1, VertexSet{rep.u})) &&
                  subset(rep.i3, set_minus(rep.i1, VertexSet{rep.y}));
  rep.clause_iii = subset(rep.s2, rep.s4) && rep.s2 != rep.s4 &&
                   subset(rep.i2, rep.i4) && rep.i2 != rep.i4;
  rep.clause_iv = set_union(rep.s1, rep.i2) == set_union(rep.s3, rep.i4) &&
                  set_union(rep.s2, rep.i1) == set_union(rep.s4, rep.i3);
  rep.clause_v = true;
  for (int nb : g.neighbors(rep.u))
    rep.clause_v = rep.clause_v && (rep.s2.count(nb) || rep.i1.count(nb));
  rep.clause_vi = false;
  if (rep.s4.size() >= 3) {
    std::vector<int> back = candidate_set(g, rr, f, rep.s4);
    rep.clause_vi = std::find(back.begin(), back.end(), e) != back.end();
  }
  rep.all_hold = rep.clause_i && rep.clause_ii && rep.clause_iii && rep.clause_iv &&
                 rep.clause_v && rep.clause_vi;
  return rep;
}

}  // namespace brickforge
