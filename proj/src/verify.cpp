#include "brickforge/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "brickforge/matching.hpp"
#include "brickforge/tightcut.hpp"

namespace brickforge {

namespace {

// failure collector: one PropertyResult per named property, with the first
// few counterexamples in the detail string
class Ledger {
 public:
  void declare(const std::string& name) { order_.push_back(name); props_[name]; }

  void record(const std::string& name, bool ok, const std::string& where) {
    Entry& e = props_[name];
    ++e.checked;
    if (!ok) {
      ++e.failed;
      if (e.failed <= 3) e.samples.push_back(where);
    }
  }

  void crash(const std::string& name, const std::string& what) {
    Entry& e = props_[name];
    ++e.failed;
    if (e.failed <= 3) e.samples.push_back("exception: " + what);
  }

  std::vector<PropertyResult> results() const {
    std::vector<PropertyResult> out;
    for (const std::string& name : order_) {
      const Entry& e = props_.at(name);
      PropertyResult r;
      r.name = name;
      r.passed = e.failed == 0;
      std::ostringstream detail;
      detail << e.checked << " checked";
      if (e.failed) {
        detail << ", " << e.failed << " failed:";
        for (const std::string& s : e.samples) detail << " [" << s << "]";
      }
      r.detail = detail.str();
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  struct Entry {
    long checked = 0;
    long failed = 0;
    std::vector<std::string> samples;
  };
  std::vector<std::string> order_;
  std::map<std::string, Entry> props_;
};

std::string where_tag(const CatalogEntry& entry, const std::string& extra) {
  return entry.form.key().substr(0, 12) + " " + extra;
}

bool sets_nested(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool edges_adjacent(const Edge& a, const Edge& b) {
  return a.incident(b.u) || a.incident(b.v);
}

bool subset_ids(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    if (std::find(b.begin(), b.end(), x) == b.end()) return false;
  return true;
}

bool in_triangle(const Multigraph& g, const Edge& e) {
  for (int x : g.neighbors(e.u))
    if (x != e.v && g.multiplicity(x, e.v) > 0) return true;
  return false;
}

bool r_compatible_in(const Multigraph& g, const Doubleton& r, int f) {
  // same definition, applied to an already-reduced graph
  return is_matching_covered(g.minus_edge(f)) &&
         is_matching_covered(g.minus_edges({r.alpha, r.beta, f}));
}

std::multiset<std::string> piece_forms(const DecompositionResult& d) {
  std::multiset<std::string> out;
  for (const DecompositionPiece& p : d.pieces)
    out.insert(canonical_form(p.graph, CanonMode::SimpleUnderlying).key());
  return out;
}

}  // namespace

bool oracle_agreement(const Multigraph& g) {
  std::vector<Matching> pms = enumerate_perfect_matchings(g);
  if (has_perfect_matching(g) != !pms.empty()) return false;
  for (const Edge& e : g.edges()) {
    bool listed = false;
    for (const Matching& m : pms)
      listed = listed || std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), e.id);
    if (is_admissible(g, e.id) != listed) return false;
  }
  return true;
}

Multigraph random_test_graph(std::mt19937& rng, int max_n) {
  int n = 4 + 2 * static_cast<int>(rng() % (static_cast<unsigned>(max_n - 2) / 2));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double p = 0.3 + 0.4 * unit(rng);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < p) edges.emplace_back(u, v);
  if (!edges.empty() && unit(rng) < 0.3)
    edges.push_back(edges[rng() % edges.size()]);  // a parallel copy
  return Multigraph::build(n, edges);
}

bool decomposition_invariant(const Multigraph& g, int trials, unsigned seed) {
  DecompositionResult base = decompose(g);
  auto base_forms = piece_forms(base);
  for (int t = 0; t < trials; ++t) {
    DecompositionResult d = decompose(g, seed + t);
    if (d.b != base.b || piece_forms(d) != base_forms) return false;
  }
  return true;
}

std::vector<CanonicalForm> brute_force_simple_nb_bricks(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<CanonicalForm> found;
  for (unsigned long mask = 0; mask < (1ul << slots.size()); ++mask) {
    if (__builtin_popcountl(mask) < 3 * n / 2) continue;  // bricks are min degree 3
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < slots.size(); ++i)
      if (mask & (1ul << i)) edges.push_back(slots[i]);
    Multigraph g = Multigraph::build(n, edges);
    bool low = false;
    for (int v : g.vertices()) low = low || g.degree(v) < 3;
    if (low || !is_connected(g)) continue;
    if (!is_brick(g)) continue;
    if (!is_near_bipartite(g)) continue;
    found.insert(canonical_form(g, CanonMode::SimpleUnderlying));
  }
  return {found.begin(), found.end()};
}

namespace {

void check_builtin_facts(Ledger& led) {
  led.declare("petersen-removable-edges");
  led.declare("st8-facts");
  led.declare("base-brick-facts");
  led.declare("fig2-facts");
  led.declare("fig3-facts");
  led.declare("non-removable-witness");

  {
    Multigraph p = builtin("petersen").graph;
    std::vector<int> rem = removable_edges(p);
    bool ok = rem.size() == 15;
    for (const Edge& e : p.edges()) {
      ok = ok && b_count(p.minus_edge(e.id)) == 2;
      ok = ok && !is_b_invariant(p, e.id);
    }
    led.record("petersen-removable-edges", ok, "petersen");
  }
  {
    BuiltinGraph st8 = builtin("st8");
    int e = st8.named_edges.at("e");
    std::vector<int> rem = removable_edges(st8.graph);
    bool ok = rem == std::vector<int>{e};
    auto doubles = removable_doubletons(st8.graph);
    ok = ok && doubles.size() == 2;
    ok = ok && is_b_invariant(st8.graph, e);
    for (const Doubleton& r : doubles) ok = ok && is_R_thin(st8.graph, r, e);
    RetractResult res = retract(st8.graph.minus_edge(e));
    ok = ok && res.graph.n() == 4 && res.graph.m() == 7;
    ok = ok && is_base_brick(res.graph) &&
         canonical_form(res.graph, CanonMode::SimpleUnderlying) ==
             canonical_form(builtin("k4").graph, CanonMode::SimpleUnderlying);
    led.record("st8-facts", ok, "st8");
  }
  {
    for (const char* name : {"k4", "c6bar"}) {
      Multigraph g = builtin(name).graph;
      bool ok = is_brick(g);
      auto doubles = removable_doubletons(g);
      ok = ok && doubles.size() == 3;
      for (const Doubleton& r : doubles)
        for (const Edge& e : g.edges())
          if (!r.contains(e.id) && is_R_compatible(g, r, e.id))
            ok = ok && !is_R_thin(g, r, e.id);
      led.record("base-brick-facts", ok, name);
    }
  }
  {
    BuiltinGraph fig2 = builtin("fig2_brick");
    int e = fig2.named_edges.at("e");
    auto doubles = removable_doubletons(fig2.graph);
    bool ok = doubles.size() == 1;
    ok = ok && is_thin(fig2.graph, e);
    if (ok) ok = !is_R_compatible(fig2.graph, doubles[0], e);
    RetractResult res = retract(fig2.graph.minus_edge(e));
    ok = ok && res.graph.n() == 8 && !is_near_bipartite(res.graph);
    led.record("fig2-facts", ok, "fig2_brick");
  }
  {
    BuiltinGraph fig3 = builtin("fig3_pseudo_biwheel");
    const Multigraph& g = fig3.graph;
    Doubleton r = *validate_doubleton(g, fig3.named_edges.at("alpha"),
                                      fig3.named_edges.at("beta"));
    Doubleton r_prime = *validate_doubleton(g, fig3.named_edges.at("alpha_prime"),
                                            fig3.named_edges.at("beta_prime"));
    bool ok = true;
    for (const char* key : {"e", "f"}) {
      int id = fig3.named_edges.at(key);
      ok = ok && is_R_compatible(g, r_prime, id);
      ok = ok && !is_R_compatible(g, r, id);
    }
    led.record("fig3-facts", ok, "fig3_pseudo_biwheel");
  }
  {
    // witness present exactly for the non-removable edges
    std::vector<Multigraph> hosts;
    hosts.push_back(Multigraph::build(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));  // C4
    hosts.push_back(Multigraph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
    hosts.push_back(Multigraph::build(
        6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    for (const char* name : {"st8", "fig2_brick", "fig3_pseudo_biwheel"}) {
      BuiltinGraph b = builtin(name);
      for (const Doubleton& r : removable_doubletons(b.graph))
        hosts.push_back(b.graph.minus_edges({r.alpha, r.beta}));
    }
    for (size_t i = 0; i < hosts.size(); ++i) {
      const Multigraph& h = hosts[i];
      for (const Edge& e : h.edges()) {
        auto w = non_removable_witness(h, e.id);
        led.record("non-removable-witness", w.has_value() != is_removable(h, e.id),
                   "host " + std::to_string(i) + " edge " + std::to_string(e.id));
      }
    }
  }
}

void check_oracle_and_orders(Ledger& led, unsigned seed) {
  led.declare("oracle-equivalence");
  led.declare("decomposition-invariance");
  std::vector<Multigraph> graphs;
  for (const char* name : {"k4", "c6bar", "petersen", "st8", "fig2_brick",
                           "fig3_pseudo_biwheel"}) {
    Multigraph g = builtin(name).graph;
    graphs.push_back(g);
    for (int e : removable_edges(g)) graphs.push_back(g.minus_edge(e));
  }
  for (size_t i = 0; i < graphs.size(); ++i) {
    led.record("oracle-equivalence", oracle_agreement(graphs[i]),
               "builtin-derived " + std::to_string(i));
    if (is_matching_covered(graphs[i]))
      led.record("decomposition-invariance", decomposition_invariant(graphs[i]),
                 "builtin-derived " + std::to_string(i));
  }
  std::mt19937 rng(seed);
  for (int t = 0; t < 200; ++t) {
    Multigraph g = random_test_graph(rng, 10);
    led.record("oracle-equivalence", oracle_agreement(g), "random " + std::to_string(t));
  }
}

void check_quadrilateral(Ledger& led, const Multigraph& h, const std::string& tag) {
  for (int b : h.vertices()) {
    if (h.degree(b) < 3) continue;
    std::vector<int> inc = h.incident_edges(b);
    for (size_t i = 0; i < inc.size(); ++i)
      for (size_t j = i + 1; j < inc.size(); ++j) {
        int x = h.edge(inc[i]).other(b);
        int y = h.edge(inc[j]).other(b);
        if (x == y) continue;
        bool in_square = false;
        for (int z : h.neighbors(x))
          if (z != b && h.multiplicity(z, y) > 0) in_square = true;
        if (!in_square) continue;
        led.record("quadrilateral",
                   is_removable(h, inc[i]) || is_removable(h, inc[j]), tag);
      }
  }
}

struct EdgeFacts {
  int index = -1;
  int rank = -1;
  bool thin = false;
};

void check_entry(Ledger& led, const CatalogEntry& entry, unsigned seed) {
  const Multigraph& g = entry.representative;
  int n = g.n();
  bool base = is_base_brick(g);

  led.record("catalog-soundness", is_brick(g) && is_near_bipartite(g),
             where_tag(entry, "soundness"));
  led.record("decomposition-invariance", decomposition_invariant(g),
             where_tag(entry, "whole graph"));
  led.record("oracle-equivalence", oracle_agreement(g), where_tag(entry, "entry"));

  // bi-split round trip on a sample of vertices
  for (int v : g.vertices()) {
    std::vector<int> inc = g.incident_edges(v);
    int d = static_cast<int>(inc.size());
    if (d > 6) continue;
    int v1 = g.max_vertex_label() + 1;
    for (unsigned mask = 0; mask + 1 < (1u << (d - 1)); ++mask) {
      std::vector<int> p1{inc[0]}, p2;
      for (int i = 1; i < d; ++i) (mask & (1u << (i - 1)) ? p1 : p2).push_back(inc[i]);
      Multigraph split = bi_split(g, v, p1, p2, v1, v1 + 1, v1 + 2);
      led.record("bi-split-round-trip",
                 isomorphic(bicontract(split, v1 + 2), g, CanonMode::WithMultiplicity),
                 where_tag(entry, "v=" + std::to_string(v)));
    }
  }

  if (!base) {
    try {
      int e_scan = find_R_thin_edge(g, entry.doubletons.front(), SearchStrategy::Scan);
      led.record("r-thin-exists-scan",
                 is_R_thin(g, entry.doubletons.front(), e_scan), where_tag(entry, ""));
      // order independence of the retract that the reduction performs
      RetractResult ref = retract(g.minus_edge(e_scan));
      bool orders_ok = true;
      for (unsigned s = 1; s <= 5; ++s)
        orders_ok = orders_ok && isomorphic(retract(g.minus_edge(e_scan), s).graph,
                                            ref.graph, CanonMode::WithMultiplicity);
      led.record("retract-order-independence", orders_ok, where_tag(entry, ""));
    } catch (const Error& err) {
      led.crash("r-thin-exists-scan", err.what());
    }
    try {
      int e_asc = find_R_thin_edge(g, entry.doubletons.front(), SearchStrategy::Ascent);
      led.record("r-thin-exists-ascent",
                 is_R_thin(g, entry.doubletons.front(), e_asc), where_tag(entry, ""));
    } catch (const Error& err) {
      led.crash("r-thin-exists-ascent", err.what());
    }
    try {
      ReduceStepResult step = reduce_step(g, entry.doubletons.front());
      led.record("thin-edge-near-bipartite-retract", is_near_bipartite(step.j),
                 where_tag(entry, ""));
    } catch (const Error& err) {
      led.crash("thin-edge-near-bipartite-retract", err.what());
    }
  }

  for (const Doubleton& r : entry.doubletons) {
    std::string rtag = "R=(" + std::to_string(r.pair().first) + "," +
                       std::to_string(r.pair().second) + ")";
    Multigraph h = g.minus_edges({r.alpha, r.beta});

    led.record("doubleton-edges-not-removable",
               !is_removable(g, r.alpha) && !is_removable(g, r.beta),
               where_tag(entry, rtag));
    bool parity = true;
    for (const Matching& m : enumerate_perfect_matchings(g)) {
      bool ha = std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), r.alpha);
      bool hb = std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), r.beta);
      parity = parity && ha == hb;
    }
    led.record("doubleton-parity", parity, where_tag(entry, rtag));
    led.record("r-graph-near-brick", b_count(g) == 1, where_tag(entry, rtag));
    check_quadrilateral(led, h, where_tag(entry, rtag));

    int exchange_budget = 20;
    std::map<int, EdgeFacts> facts;
    for (const Edge& eg : g.edges()) {
      if (r.contains(eg.id) || !is_R_compatible(g, r, eg.id)) continue;
      const int e = eg.id;
      std::string etag = where_tag(entry, rtag + " e=" + std::to_string(e));
      EdgeFacts& ef = facts[e];
      ef.index = edge_index(g, r, e);
      ef.rank = edge_rank(g, r, e);
      ef.thin = is_R_thin(g, r, e);

      // near-brick G-e hands R to its unique brick
      Multigraph ge = g.minus_edge(e);
      DecompositionResult dge = decompose(ge);
      bool inherit = dge.b == 1;
      if (inherit) {
        for (const DecompositionPiece& p : dge.pieces)
          if (p.brick)
            inherit = p.graph.has_edge(r.alpha) && p.graph.has_edge(r.beta) &&
                      validate_doubleton(p.graph, r.alpha, r.beta).has_value();
      }
      led.record("brick-inheritance", inherit, etag);

      ThreeCaseReport tc = three_case(g, r, e);
      led.record("three-case-shape", tc.index == ef.index && tc.index <= 2, etag);

      // rank hits its ceiling exactly when every barrier of G-e is small;
      // that matches thinness except when parallel edges block a bicontraction
      bool small_barriers = true;
      for (const Barrier& part : canonical_partition(ge).parts)
        if (part.s.size() > 2) small_barriers = false;
      bool table_ok = true;
      if (ef.index == 0) {
        table_ok = ef.rank == n;
      } else if (ef.index == 1) {
        table_ok = ef.rank == n - 2 * static_cast<int>(tc.s.size()) + 2 &&
                   ef.rank <= n - 2 && (ef.rank == n - 2) == small_barriers;
      } else {
        table_ok = ef.rank == n - 2 * static_cast<int>(tc.s1.size()) -
                                  2 * static_cast<int>(tc.s2.size()) + 4 &&
                   ef.rank <= n - 4 && (ef.rank == n - 4) == small_barriers;
      }
      table_ok = table_ok && (!ef.thin || small_barriers);
      led.record("rank-table", table_ok, etag);

      if (ef.thin) {
        int cubic = (g.degree(eg.u) == 3 ? 1 : 0) + (g.degree(eg.v) == 3 ? 1 : 0);
        bool coincide = (ef.index == 0 && cubic == 0) || (ef.index == 1 && cubic == 1) ||
                        (ef.index == 2 && cubic == 2 && !in_triangle(g, eg));
        led.record("index-degree-coincide", coincide, etag);
      }

      // candidate sets over barriers of G - e of size >= 3
      auto barriers = all_nontrivial_barriers(ge);
      std::map<std::string, std::vector<int>> cand_by_barrier;
      for (const Barrier& b : barriers) {
        if (b.s.size() < 3) continue;
        std::vector<int> cand = candidate_set(g, r, e, b.s);
        std::string btag = etag + " |S|=" + std::to_string(b.s.size());
        led.record("candidate-lower-bound", cand.size() + 2 >= b.s.size(), btag);

        VertexSet isolated = isolated_after_removal(ge, b.s);
        bool members_ok = true, ranks_ok = true;
        for (int f : cand) {
          members_ok = members_ok && is_R_compatible(g, r, f) && r_compatible_in(ge, r, f);
          ranks_ok = ranks_ok && edge_rank(g, r, f) >= ef.rank;
          if (edge_index(g, r, f) == 1)
            led.record("index-one-candidate-rank", edge_rank(g, r, f) > ef.rank, btag);
        }
        led.record("candidate-r-compatible", members_ok, btag);
        led.record("candidate-rank-at-least", ranks_ok, btag);

        // converse membership: R-compatible edges of G-e touching I are candidates
        bool converse = true;
        for (const Edge& fg : ge.edges()) {
          if (r.contains(fg.id)) continue;
          if (!isolated.count(fg.u) && !isolated.count(fg.v)) continue;
          if (!r_compatible_in(ge, r, fg.id)) continue;
          converse = converse && std::find(cand.begin(), cand.end(), fg.id) != cand.end();
        }
        led.record("candidate-converse-membership", converse, btag);

        bool matching = true;
        for (size_t i = 0; i < cand.size() && matching; ++i)
          for (size_t j = i + 1; j < cand.size(); ++j)
            if (edges_adjacent(g.edge(cand[i]), g.edge(cand[j]))) {
              matching = false;
              if (ef.index == 2) {
                bool one_up = edge_rank(g, r, cand[i]) > ef.rank ||
                              edge_rank(g, r, cand[j]) > ef.rank;
                led.record("adjacent-candidates-rank", one_up, btag);
              }
              break;
            }
        if (matching) {
          MatchingCandidateReport mc = verify_matching_candidate_structure(g, r, e, b.s);
          led.record("matching-candidate-structure",
                     mc.names_resolved && mc.all_hold && cand.size() + 2 == b.s.size(),
                     btag);
        }

        // Equal Rank Lemma on maximal index-2 configurations
        bool maximal = false;
        for (const Barrier& mb : nontrivial_maximal_barriers(ge)) maximal |= mb.s == b.s;
        if (maximal && ef.index == 2) {
          for (int f : cand) {
            if (edge_index(g, r, f) != 2 || edge_rank(g, r, f) != ef.rank) continue;
            EqualRankReport er = verify_equal_rank(g, r, e, f, b.s);
            led.record("equal-rank-lemma", er.all_hold,
                       btag + " f=" + std::to_string(f));
          }
        }
      }
      // containment under barrier inclusion
      for (const Barrier& b1 : barriers) {
        if (b1.s.size() < 3) continue;
        for (const Barrier& b2 : barriers) {
          if (b2.s.size() <= b1.s.size() || !sets_nested(b1.s, b2.s)) continue;
          led.record("candidate-containment",
                     subset_ids(candidate_set(g, r, e, b1.s),
                                candidate_set(g, r, e, b2.s)),
                     etag);
        }
      }

      if (!ef.thin) {
        std::optional<int> f = ascend(g, r, e);
        led.record("rank-plus-index-ascent", f.has_value(), etag);
      }

      // exchange property in G (budgeted pair scan)
      for (const Edge& fg : g.edges()) {
        if (exchange_budget <= 0) break;
        if (fg.id == e || r.contains(fg.id)) continue;
        if (!r_compatible_in(ge, r, fg.id)) continue;
        --exchange_budget;
        led.record("exchange-r-compatible", verify_exchange_Rcompatible(g, r, e, fg.id),
                   etag + " f=" + std::to_string(fg.id));
      }
    }

    // bipartite exchange property inside H
    int bip_budget = 20;
    for (const Edge& eh : h.edges()) {
      if (bip_budget <= 0) break;
      if (!is_removable(h, eh.id)) continue;
      Multigraph he = h.minus_edge(eh.id);
      for (const Edge& fh : h.edges()) {
        if (bip_budget <= 0) break;
        if (fh.id == eh.id || !he.has_edge(fh.id)) continue;
        if (!is_matching_covered(he.minus_edge(fh.id))) continue;
        --bip_budget;
        led.record("exchange-bipartite", verify_exchange_bipartite(h, eh.id, fh.id),
                   where_tag(entry, rtag));
      }
    }
  }
}

void declare_lemma_properties(Ledger& led) {
  for (const char* name :
       {"catalog-soundness", "decomposition-invariance", "oracle-equivalence",
        "bi-split-round-trip", "r-thin-exists-scan", "retract-order-independence",
        "r-thin-exists-ascent", "thin-edge-near-bipartite-retract",
        "doubleton-edges-not-removable", "doubleton-parity", "r-graph-near-brick",
        "quadrilateral", "brick-inheritance", "three-case-shape", "rank-table",
        "index-degree-coincide", "candidate-lower-bound", "candidate-r-compatible",
        "candidate-rank-at-least", "candidate-converse-membership",
        "index-one-candidate-rank", "adjacent-candidates-rank",
        "matching-candidate-structure", "equal-rank-lemma", "candidate-containment",
        "rank-plus-index-ascent", "exchange-r-compatible", "exchange-bipartite"})
    led.declare(name);
}

}  // namespace

SuiteReport run_core_suite(unsigned seed) {
  Ledger led;
  try {
    check_builtin_facts(led);
    check_oracle_and_orders(led, seed);
  } catch (const std::exception& ex) {
    led.declare("core-suite");
    led.crash("core-suite", ex.what());
  }
  return SuiteReport{led.results()};
}

SuiteReport run_lemma_suite(const std::vector<CatalogEntry>& catalog, unsigned seed) {
  Ledger led;
  declare_lemma_properties(led);
  try {
    for (const CatalogEntry& entry : catalog) check_entry(led, entry, seed);
  } catch (const std::exception& ex) {
    led.crash("catalog-soundness", ex.what());
  }
  return SuiteReport{led.results()};
}

SuiteReport run_lemma_suite(int max_n, unsigned seed) {
  return run_lemma_suite(generate_catalog(max_n, false, sweep_catalog_limits()), seed);
}

SuiteReport run_full_suite(int max_n, unsigned seed) {
  SuiteReport core = run_core_suite(seed);
  SuiteReport lemmas = run_lemma_suite(max_n, seed);
  Ledger led;
  led.declare("catalog-completeness-n6");
  try {
    std::set<std::string> brute;
    for (const CanonicalForm& f : brute_force_simple_nb_bricks(6)) brute.insert(f.key());
    std::set<std::string> cat;
    for (const CatalogEntry& e : generate_catalog(6, /*simple_only=*/true))
      if (e.representative.n() == 6)
        cat.insert(canonical_form(e.representative, CanonMode::SimpleUnderlying).key());
    led.record("catalog-completeness-n6", brute == cat, "n=6");
  } catch (const std::exception& ex) {
    led.crash("catalog-completeness-n6", ex.what());
  }
  SuiteReport out = core;
  for (PropertyResult& r : lemmas.results) out.results.push_back(std::move(r));
  for (PropertyResult& r : led.results()) out.results.push_back(std::move(r));
  return out;
}

}  // namespace brickforge
