#include "brickforge/generator.hpp"

#include <algorithm>
#include <sstream>

#include "brickforge/matching.hpp"
#include "brickforge/tightcut.hpp"

namespace brickforge {

namespace {

void check(bool ok, const char* msg) {
  if (!ok) raise(ErrorCode::TheoremViolation, msg);
}

Doubleton require_R_brick(const Multigraph& g, const Doubleton& r) {
  auto checked = validate_doubleton(g, r.alpha, r.beta);
  if (!checked || !is_brick(g))
    raise(ErrorCode::PreconditionViolated, "G must be a brick with removable doubleton R");
  return *checked;
}

BuiltinGraph make_st8() {
  // staircase of order eight; two squares stacked between two triangles
  BuiltinGraph b;
  b.graph = Multigraph::build(8, {{0, 1},
                                  {1, 2},
                                  {0, 2},
                                  {3, 4},
                                  {4, 5},
                                  {3, 5},
                                  {0, 3},
                                  {1, 6},
                                  {6, 4},
                                  {2, 7},
                                  {7, 5},
                                  {6, 7}});
  b.named_edges = {{"alpha", 0},      {"f", 1},    {"alpha_prime", 2},
                   {"beta_prime", 3}, {"beta", 5}, {"e", 11}};
  return b;
}

BuiltinGraph make_fig2_brick() {
  // 10-vertex brick: an 8-cycle 0..7 closed by beta, a top hub 8 and a
  // bottom hub 9 on alternating cycle vertices
  BuiltinGraph b;
  b.graph = Multigraph::build(10, {{0, 1},
                                   {1, 2},
                                   {2, 3},
                                   {3, 4},
                                   {4, 5},
                                   {5, 6},
                                   {6, 7},
                                   {0, 7},
                                   {0, 8},
                                   {2, 8},
                                   {5, 8},
                                   {7, 8},
                                   {1, 9},
                                   {3, 9},
                                   {4, 9},
                                   {6, 9}});
  b.named_edges = {{"alpha", 3}, {"beta", 7}, {"e", 8}};
  return b;
}

BuiltinGraph make_fig3_pseudo_biwheel() {
  // hub pair 0,1 joined by an edge; rim path 2..7; two apex vertices 8, 9
  BuiltinGraph b;
  b.graph = Multigraph::build(10, {{0, 1},
                                   {0, 2},
                                   {1, 7},
                                   {0, 8},
                                   {1, 9},
                                   {2, 3},
                                   {3, 4},
                                   {4, 5},
                                   {5, 6},
                                   {6, 7},
                                   {2, 8},
                                   {4, 8},
                                   {6, 8},
                                   {3, 9},
                                   {5, 9},
                                   {7, 9}});
  b.named_edges = {{"alpha", 1},       {"beta", 2}, {"alpha_prime", 3},
                   {"beta_prime", 4},  {"e", 10},   {"f", 15}};
  return b;
}

const CanonicalForm& k4_form() {
  static const CanonicalForm form = canonical_form(
      Multigraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
      CanonMode::SimpleUnderlying);
  return form;
}

const CanonicalForm& prism_form() {
  static const CanonicalForm form = canonical_form(
      Multigraph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}),
      CanonMode::SimpleUnderlying);
  return form;
}

bool has_simple_representative(const Multigraph& g) {
  for (const Edge& e : g.edges())
    if (g.multiplicity(e.u, e.v) > 1) return false;
  return true;
}

}  // namespace

BuiltinGraph builtin(const std::string& name) {
  if (name == "k4") {
    BuiltinGraph b;
    b.graph = Multigraph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    return b;
  }
  if (name == "c6bar") {
    BuiltinGraph b;
    b.graph = Multigraph::build(
        6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    return b;
  }
  if (name == "petersen") {
    BuiltinGraph b;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i);
    b.graph = Multigraph::build(10, edges);
    return b;
  }
  if (name == "st8") return make_st8();
  if (name == "fig2_brick") return make_fig2_brick();
  if (name == "fig3_pseudo_biwheel") return make_fig3_pseudo_biwheel();
  raise(ErrorCode::UnknownName, "unknown builtin graph: " + name);
}

bool is_base_brick(const Multigraph& g) {
  if (g.n() != 4 && g.n() != 6) return false;
  CanonicalForm form = canonical_form(g, CanonMode::SimpleUnderlying);
  return form == k4_form() || form == prism_form();
}

std::optional<int> ascend(const Multigraph& g, const Doubleton& r, int e) {
  Doubleton rr = require_R_brick(g, r);
  if (!is_R_compatible(g, rr, e))
    raise(ErrorCode::NotRCompatible, "ascent starts from an R-compatible edge");
  if (is_R_thin(g, rr, e)) raise(ErrorCode::AlreadyThin, "edge is already R-thin");

  Multigraph ge = g.minus_edge(e);
  auto barriers = nontrivial_maximal_barriers(ge);
  int potential = edge_rank(g, rr, e) + edge_index(g, rr, e);
  const Edge& ed = g.edge(e);

  EdgeIdSet pool;
  for (const Barrier& b : barriers)
    if (b.s.size() >= 3)
      for (int f : candidate_set(g, rr, e, b.s)) pool.insert(f);
  for (int id : g.incident_edges(ed.u)) pool.insert(id);
  for (int id : g.incident_edges(ed.v)) pool.insert(id);
  pool.erase(e);
  pool.erase(rr.alpha);
  pool.erase(rr.beta);

  // condition: some end of f has all its G-e neighbors inside one maximal
  // nontrivial barrier of G-e
  auto confined_end = [&](const Edge& fe) {
    for (int x : {fe.u, fe.v}) {
      auto nbs = ge.neighbors(x);
      for (const Barrier& b : barriers) {
        bool inside = true;
        for (int nb : nbs) inside = inside && b.s.count(nb) > 0;
        if (inside) return true;
      }
    }
    return false;
  };

  for (int f : pool) {
    if (!is_R_compatible(g, rr, f)) continue;
    const Edge& fe = g.edge(f);
    if (!confined_end(fe)) continue;
    if (edge_rank(g, rr, f) + edge_index(g, rr, f) > potential) return f;
  }
  return std::nullopt;
}

int find_R_thin_edge(const Multigraph& g, const Doubleton& r, SearchStrategy strategy) {
  Doubleton rr = require_R_brick(g, r);
  if (is_base_brick(g))
    raise(ErrorCode::BaseBrick, "the base bricks have no R-thin edge");
  if (strategy == SearchStrategy::Scan) {
    for (const Edge& e : g.edges()) {
      if (rr.contains(e.id)) continue;
      if (is_R_compatible(g, rr, e.id) && is_R_thin(g, rr, e.id)) return e.id;
    }
    raise(ErrorCode::TheoremViolation, "no R-thin edge found by scan");
  }
  std::optional<int> cur;
  for (const Edge& e : g.edges()) {
    if (rr.contains(e.id)) continue;
    if (is_R_compatible(g, rr, e.id)) {
      cur = e.id;
      break;
    }
  }
  check(cur.has_value(), "an R-brick must have an R-compatible edge");
  for (int guard = 0; guard <= g.n() + g.m(); ++guard) {
    if (is_R_thin(g, rr, *cur)) return *cur;
    std::optional<int> next = ascend(g, rr, *cur);
    check(next.has_value(), "ascent found no edge of greater rank plus index");
    cur = next;
  }
  raise(ErrorCode::TheoremViolation, "ascent failed to terminate");
}

ReduceStepResult reduce_step(const Multigraph& g, const Doubleton& r) {
  Doubleton rr = require_R_brick(g, r);
  int e = find_R_thin_edge(g, rr, SearchStrategy::Scan);
  RetractResult res = retract(g.minus_edge(e));
  check(res.graph.has_edge(rr.alpha) && res.graph.has_edge(rr.beta),
        "doubleton edge lost during the retract");
  auto r_j = validate_doubleton(res.graph, rr.alpha, rr.beta);
  check(r_j.has_value(), "R is no longer a removable doubleton after the retract");
  check(is_brick(res.graph), "retract of G - e must be a brick for R-thin e");
  return ReduceStepResult{e, res.graph, *r_j, res.vertex_map};
}

ReductionSequence reduction_sequence(const Multigraph& g, const Doubleton& r) {
  Doubleton cur_r = require_R_brick(g, r);
  Multigraph cur = g;
  ReductionSequence seq;
  while (!is_base_brick(cur)) {
    ReduceStepResult step = reduce_step(cur, cur_r);
    seq.steps.push_back(ReductionStep{cur, cur_r, step.e, step.vertex_map});
    cur = step.j;
    cur_r = step.r_j;
  }
  seq.base = cur;
  seq.base_tag =
      canonical_form(cur, CanonMode::SimpleUnderlying) == k4_form() ? "K4" : "C6bar";
  return seq;
}

namespace {

struct Host {
  Multigraph graph;
  std::string provenance;
};

// all bi-splits of any single vertex of the given graph
std::vector<Host> single_splits(const Multigraph& base, const std::string& prefix) {
  std::vector<Host> out;
  for (int v : base.vertices()) {
    std::vector<int> inc = base.incident_edges(v);
    int d = static_cast<int>(inc.size());
    if (d < 2) continue;
    int v1 = base.max_vertex_label() + 1;
    // unordered partitions: inc[0] pinned to the first part
    for (unsigned mask = 0; mask + 1 < (1u << (d - 1)); ++mask) {
      std::vector<int> part1{inc[0]}, part2;
      for (int i = 1; i < d; ++i)
        (mask & (1u << (i - 1)) ? part1 : part2).push_back(inc[i]);
      std::ostringstream prov;
      prov << prefix << "split(v=" << v << ",mask=" << mask << ")";
      out.push_back(Host{bi_split(base, v, part1, part2, v1, v1 + 1, v1 + 2), prov.str()});
    }
  }
  return out;
}

}  // namespace

std::vector<Expansion> expansions(const Multigraph& j, const Doubleton& r,
                                  int target_n_max) {
  Doubleton rr = require_R_brick(j, r);
  std::vector<Host> hosts{Host{j, ""}};
  if (j.n() + 2 <= target_n_max) {
    std::vector<Host> level1 = single_splits(j, "");
    for (const Host& h : level1) hosts.push_back(h);
    if (j.n() + 4 <= target_n_max)
      for (const Host& h : level1)
        for (Host& h2 : single_splits(h.graph, h.provenance + ";"))
          hosts.push_back(std::move(h2));
  }

  std::vector<std::pair<std::string, Expansion>> keyed;
  std::set<std::string> seen;
  for (const Host& host : hosts) {
    const Multigraph& hg = host.graph;
    if (hg.n() > target_n_max) continue;
    auto parts = bipartition(hg.minus_edges({rr.alpha, rr.beta}));
    if (!parts) continue;
    std::vector<int> deg2;
    for (int v : hg.vertices())
      if (hg.degree(v) == 2) deg2.push_back(v);
    if (deg2.size() > 2) continue;  // one added edge cannot fix three low vertices

    std::vector<std::pair<int, int>> additions;
    auto cross = [&](int u, int v) { return parts->a.count(u) != parts->a.count(v); };
    if (deg2.size() == 2) {
      if (cross(deg2[0], deg2[1])) additions.emplace_back(deg2[0], deg2[1]);
    } else if (deg2.size() == 1) {
      for (int v : hg.vertices())
        if (v != deg2[0] && cross(deg2[0], v)) additions.emplace_back(deg2[0], v);
    } else {
      for (int u : parts->a)
        for (int v : parts->b) additions.emplace_back(u, v);
    }

    for (auto [u, v] : additions) {
      Multigraph g = hg;
      int e = g.add_edge(u, v);
      std::string key = canonical_form(g, CanonMode::WithMultiplicity).key();
      if (!seen.insert(key).second) continue;
      auto dbl = validate_doubleton(g, rr.alpha, rr.beta);
      if (!dbl) continue;
      if (!is_brick(g)) continue;
      if (!is_R_compatible(g, *dbl, e)) continue;
      RetractResult back = retract(g.minus_edge(e));
      if (!back.graph.has_edge(rr.alpha) || !back.graph.has_edge(rr.beta)) continue;
      if (!isomorphic(back.graph, j, CanonMode::WithMultiplicity)) continue;
      if (!is_R_thin(g, *dbl, e)) continue;
      std::ostringstream prov;
      prov << host.provenance << (host.provenance.empty() ? "" : ";") << "edge(" << u
           << "," << v << ")";
      keyed.emplace_back(key, Expansion{std::move(g), e, prov.str()});
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.provenance < b.second.provenance;
  });
  std::vector<Expansion> out;
  out.reserve(keyed.size());
  for (auto& [key, exp] : keyed) out.push_back(std::move(exp));
  return out;
}

std::vector<CatalogEntry> generate_catalog(int n_max, bool simple_only,
                                           const CatalogLimits& limits) {
  std::map<std::string, CatalogEntry> by_key;
  std::vector<std::string> frontier;

  auto within_limits = [&](const Multigraph& g) {
    if (g.n() > n_max) return false;
    if (2 * g.m() > 3 * g.n() + 2 * limits.extra_edges_over_cubic) return false;
    for (const Edge& e : g.edges())
      if (g.multiplicity(e.u, e.v) > limits.max_multiplicity) return false;
    return true;
  };
  auto add_entry = [&](const Multigraph& g, const std::string& prov) {
    if (!within_limits(g)) return;
    CanonicalForm form = canonical_form(g, CanonMode::WithMultiplicity);
    std::string key = form.key();
    auto it = by_key.find(key);
    if (it != by_key.end()) {
      if (prov < it->second.provenance) it->second.provenance = prov;
      return;
    }
    by_key.emplace(key, CatalogEntry{form, g, removable_doubletons(g), prov});
    frontier.push_back(key);
  };

  add_entry(builtin("k4").graph, "base");
  if (n_max >= 6) add_entry(builtin("c6bar").graph, "base");

  for (size_t at = 0; at < frontier.size(); ++at) {
    CatalogEntry entry = by_key.at(frontier[at]);
    for (const Doubleton& r : entry.doubletons)
      for (const Expansion& exp : expansions(entry.representative, r, n_max))
        add_entry(exp.graph,
                  entry.form.key() + "|R(" + std::to_string(r.pair().first) + "," +
                      std::to_string(r.pair().second) + ")|" + exp.provenance);
  }

  std::vector<CatalogEntry> out;
  for (auto& [key, entry] : by_key) {
    if (simple_only && !has_simple_representative(entry.representative)) continue;
    out.push_back(std::move(entry));
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.representative.n() != b.representative.n())
      return a.representative.n() < b.representative.n();
    return a.form.key() < b.form.key();
  });
  return out;
}

}  // namespace brickforge
