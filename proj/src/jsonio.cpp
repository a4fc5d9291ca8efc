#include "brickforge/jsonio.hpp"

#include <algorithm>

namespace brickforge {

AnalysisReport make_analysis_report(const Multigraph& g,
                                    std::optional<std::pair<int, int>> doubleton) {
  AnalysisReport rep;
  rep.n = g.n();
  rep.m = g.m();
  rep.matching_covered = is_matching_covered(g);
  rep.bipartite = is_bipartite(g);
  rep.bicritical = rep.matching_covered && is_bicritical(g);
  rep.brick = rep.matching_covered && is_brick(g);
  if (rep.matching_covered) {
    rep.b = b_count(g);
    if (!rep.bipartite) {
      for (const Doubleton& r : removable_doubletons(g)) rep.doubletons.push_back(r.pair());
      rep.near_bipartite = !rep.doubletons.empty();
    }
  }
  std::optional<Doubleton> selected;
  if (doubleton) {
    selected = validate_doubleton(g, doubleton->first, doubleton->second);
    if (!selected)
      raise(ErrorCode::PreconditionViolated, "the requested pair is not a removable doubleton");
  } else if (!rep.doubletons.empty()) {
    selected = validate_doubleton(g, rep.doubletons.front().first, rep.doubletons.front().second);
  }
  if (selected) rep.selected_doubleton = selected->pair();

  for (const Edge& e : g.edges()) {
    EdgeClassification c;
    c.id = e.id;
    c.u = e.u;
    c.v = e.v;
    c.removable = rep.matching_covered && is_removable(g, e.id);
    c.b_invariant = c.removable && is_b_invariant(g, e.id);
    if (selected) {
      c.in_doubleton = selected->contains(e.id);
      if (!c.in_doubleton) {
        c.r_compatible = is_R_compatible(g, *selected, e.id);
        if (c.r_compatible && rep.brick) {
          c.r_thin = is_R_thin(g, *selected, e.id);
          c.index = edge_index(g, *selected, e.id);
          c.rank = edge_rank(g, *selected, e.id);
        }
      }
    }
    rep.edges.push_back(c);
  }
  return rep;
}

namespace {

json set_to_json(const VertexSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

VertexSet set_from_json(const json& j) {
  VertexSet s;
  for (int v : j.get<std::vector<int>>()) s.insert(v);
  return s;
}

template <typename T>
void opt_to_json(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <typename T>
void opt_from_json(const json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key))
    v = j.at(key).get<T>();
  else
    v.reset();
}

}  // namespace

void to_json(json& j, const Multigraph& g) {
  j = json::object();
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id, e.u, e.v});
  j["edges"] = std::move(edges);
  if (!g.annotations().empty()) {
    json notes = json::object();
    for (const auto& [v, note] : g.annotations()) notes[std::to_string(v)] = note;
    j["annotations"] = std::move(notes);
  }
}

void from_json(const json& j, Multigraph& g) {
  std::vector<int> vertices = j.at("vertices").get<std::vector<int>>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  std::map<int, std::string> notes;
  if (j.contains("annotations"))
    for (const auto& [key, val] : j.at("annotations").items())
      notes[std::stoi(key)] = val.get<std::string>();
  g = Multigraph::from_raw(std::move(vertices), std::move(edges), std::move(notes));
}

void to_json(json& j, const Doubleton& r) {
  j = json{{"alpha", r.alpha}, {"beta", r.beta}, {"a", set_to_json(r.a)}, {"b", set_to_json(r.b)}};
}

void from_json(const json& j, Doubleton& r) {
  r.alpha = j.at("alpha").get<int>();
  r.beta = j.at("beta").get<int>();
  r.a = set_from_json(j.at("a"));
  r.b = set_from_json(j.at("b"));
}

void to_json(json& j, const EdgeClassification& c) {
  j = json{{"id", c.id},
           {"u", c.u},
           {"v", c.v},
           {"removable", c.removable},
           {"b_invariant", c.b_invariant},
           {"in_doubleton", c.in_doubleton},
           {"r_compatible", c.r_compatible},
           {"r_thin", c.r_thin}};
  opt_to_json(j, "index", c.index);
  opt_to_json(j, "rank", c.rank);
}

void from_json(const json& j, EdgeClassification& c) {
  c.id = j.at("id").get<int>();
  c.u = j.at("u").get<int>();
  c.v = j.at("v").get<int>();
  c.removable = j.at("removable").get<bool>();
  c.b_invariant = j.at("b_invariant").get<bool>();
  c.in_doubleton = j.at("in_doubleton").get<bool>();
  c.r_compatible = j.at("r_compatible").get<bool>();
  c.r_thin = j.at("r_thin").get<bool>();
  opt_from_json(j, "index", c.index);
  opt_from_json(j, "rank", c.rank);
}

void to_json(json& j, const AnalysisReport& r) {
  j = json{{"n", r.n},
           {"m", r.m},
           {"matching_covered", r.matching_covered},
           {"bicritical", r.bicritical},
           {"brick", r.brick},
           {"bipartite", r.bipartite},
           {"near_bipartite", r.near_bipartite},
           {"doubletons", r.doubletons},
           {"edges", r.edges}};
  opt_to_json(j, "b", r.b);
  opt_to_json(j, "selected_doubleton", r.selected_doubleton);
}

void from_json(const json& j, AnalysisReport& r) {
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.matching_covered = j.at("matching_covered").get<bool>();
  r.bicritical = j.at("bicritical").get<bool>();
  r.brick = j.at("brick").get<bool>();
  r.bipartite = j.at("bipartite").get<bool>();
  r.near_bipartite = j.at("near_bipartite").get<bool>();
  r.doubletons = j.at("doubletons").get<std::vector<std::pair<int, int>>>();
  r.edges = j.at("edges").get<std::vector<EdgeClassification>>();
  opt_from_json(j, "b", r.b);
  opt_from_json(j, "selected_doubleton", r.selected_doubleton);
}

void to_json(json& j, const DecompositionPiece& p) {
  j = json{{"graph", p.graph}, {"brick", p.brick}};
}

void from_json(const json& j, DecompositionPiece& p) {
  p.graph = j.at("graph").get<Multigraph>();
  p.brick = j.at("brick").get<bool>();
}

void to_json(json& j, const DecompositionResult& r) {
  json trace = json::array();
  for (const VertexSet& x : r.trace) trace.push_back(set_to_json(x));
  j = json{{"pieces", r.pieces}, {"b", r.b}, {"trace", std::move(trace)}};
}

void from_json(const json& j, DecompositionResult& r) {
  r.pieces = j.at("pieces").get<std::vector<DecompositionPiece>>();
  r.b = j.at("b").get<int>();
  r.trace.clear();
  for (const auto& x : j.at("trace")) r.trace.push_back(set_from_json(x));
}

void to_json(json& j, const ThreeCaseReport& r) {
  j = json{{"index", r.index}, {"classes_swapped", r.classes_swapped}};
  if (r.index == 1) {
    j["s"] = set_to_json(r.s);
    j["i"] = set_to_json(r.i);
  } else if (r.index == 2) {
    j["s1"] = set_to_json(r.s1);
    j["i1"] = set_to_json(r.i1);
    j["s2_star"] = set_to_json(r.s2_star);
    j["i2_star"] = set_to_json(r.i2_star);
    j["s2"] = set_to_json(r.s2);
    j["i2"] = set_to_json(r.i2);
    j["x1"] = set_to_json(r.x1);
    j["x2"] = set_to_json(r.x2);
  }
}

void from_json(const json& j, ThreeCaseReport& r) {
  r = ThreeCaseReport{};
  r.index = j.at("index").get<int>();
  r.classes_swapped = j.at("classes_swapped").get<bool>();
  if (r.index == 1) {
    r.s = set_from_json(j.at("s"));
    r.i = set_from_json(j.at("i"));
  } else if (r.index == 2) {
    r.s1 = set_from_json(j.at("s1"));
    r.i1 = set_from_json(j.at("i1"));
    r.s2_star = set_from_json(j.at("s2_star"));
    r.i2_star = set_from_json(j.at("i2_star"));
    r.s2 = set_from_json(j.at("s2"));
    r.i2 = set_from_json(j.at("i2"));
    r.x1 = set_from_json(j.at("x1"));
    r.x2 = set_from_json(j.at("x2"));
  }
}

void to_json(json& j, const MatchingCandidateReport& r) {
  j = json{{"names_resolved", r.names_resolved},
           {"clause_i", r.clause_i},
           {"clause_ii", r.clause_ii},
           {"clause_iii", r.clause_iii},
           {"clause_iv", r.clause_iv},
           {"clause_v", r.clause_v},
           {"all_hold", r.all_hold},
           {"y", r.y},
           {"z", r.z},
           {"b1", r.b1},
           {"b2", r.b2},
           {"u0", r.u0},
           {"u1", r.u1},
           {"w", r.w},
           {"u", r.u}};
  opt_to_json(j, "ladder", r.ladder);
  opt_to_json(j, "b1_w1_nonadjacent", r.b1_w1_nonadjacent);
  opt_to_json(j, "y_adjacent_b1_u2", r.y_adjacent_b1_u2);
  opt_to_json(j, "u0_w2_nonadjacent", r.u0_w2_nonadjacent);
}

void from_json(const json& j, MatchingCandidateReport& r) {
  r.names_resolved = j.at("names_resolved").get<bool>();
  r.clause_i = j.at("clause_i").get<bool>();
  r.clause_ii = j.at("clause_ii").get<bool>();
  r.clause_iii = j.at("clause_iii").get<bool>();
  r.clause_iv = j.at("clause_iv").get<bool>();
  r.clause_v = j.at("clause_v").get<bool>();
  r.all_hold = j.at("all_hold").get<bool>();
  r.y = j.at("y").get<int>();
  r.z = j.at("z").get<int>();
  r.b1 = j.at("b1").get<int>();
  r.b2 = j.at("b2").get<int>();
  r.u0 = j.at("u0").get<int>();
  r.u1 = j.at("u1").get<int>();
  r.w = j.at("w").get<std::vector<int>>();
  r.u = j.at("u").get<std::vector<int>>();
  opt_from_json(j, "ladder", r.ladder);
  opt_from_json(j, "b1_w1_nonadjacent", r.b1_w1_nonadjacent);
  opt_from_json(j, "y_adjacent_b1_u2", r.y_adjacent_b1_u2);
  opt_from_json(j, "u0_w2_nonadjacent", r.u0_w2_nonadjacent);
}

void to_json(json& j, const EqualRankReport& r) {
  j = json{{"clause_i", r.clause_i},   {"clause_ii", r.clause_ii},
           {"clause_iii", r.clause_iii}, {"clause_iv", r.clause_iv},
           {"clause_v", r.clause_v},   {"clause_vi", r.clause_vi},
           {"all_hold", r.all_hold},   {"s1", set_to_json(r.s1)},
           {"i1", set_to_json(r.i1)},  {"s2", set_to_json(r.s2)},
           {"i2", set_to_json(r.i2)},  {"s3", set_to_json(r.s3)},
           {"i3", set_to_json(r.i3)},  {"s4", set_to_json(r.s4)},
           {"i4", set_to_json(r.i4)},  {"y", r.y},
           {"z", r.z},                 {"u", r.u},
           {"w_vertex", r.w_vertex}};
}

void from_json(const json& j, EqualRankReport& r) {
  r.clause_i = j.at("clause_i").get<bool>();
  r.clause_ii = j.at("clause_ii").get<bool>();
  r.clause_iii = j.at("clause_iii").get<bool>();
  r.clause_iv = j.at("clause_iv").get<bool>();
  r.clause_v = j.at("clause_v").get<bool>();
  r.clause_vi = j.at("clause_vi").get<bool>();
  r.all_hold = j.at("all_hold").get<bool>();
  r.s1 = set_from_json(j.at("s1"));
  r.i1 = set_from_json(j.at("i1"));
  r.s2 = set_from_json(j.at("s2"));
  r.i2 = set_from_json(j.at("i2"));
  r.s3 = set_from_json(j.at("s3"));
  r.i3 = set_from_json(j.at("i3"));
  r.s4 = set_from_json(j.at("s4"));
  r.i4 = set_from_json(j.at("i4"));
  r.y = j.at("y").get<int>();
  r.z = j.at("z").get<int>();
  r.u = j.at("u").get<int>();
  r.w_vertex = j.at("w_vertex").get<int>();
}

void to_json(json& j, const ReductionStep& s) {
  json map = json::object();
  for (const auto& [from, to] : s.retract_map) map[std::to_string(from)] = to;
  j = json{{"graph", s.graph}, {"r", s.r}, {"e", s.e}, {"retract_map", std::move(map)}};
}

void from_json(const json& j, ReductionStep& s) {
  s.graph = j.at("graph").get<Multigraph>();
  s.r = j.at("r").get<Doubleton>();
  s.e = j.at("e").get<int>();
  s.retract_map.clear();
  for (const auto& [key, val] : j.at("retract_map").items())
    s.retract_map[std::stoi(key)] = val.get<int>();
}

void to_json(json& j, const ReductionSequence& s) {
  j = json{{"steps", s.steps}, {"base", s.base}, {"base_tag", s.base_tag}};
}

void from_json(const json& j, ReductionSequence& s) {
  s.steps = j.at("steps").get<std::vector<ReductionStep>>();
  s.base = j.at("base").get<Multigraph>();
  s.base_tag = j.at("base_tag").get<std::string>();
}

json catalog_index(const std::vector<CatalogEntry>& entries) {
  json out = json::array();
  for (const CatalogEntry& entry : entries) {
    json doubletons = json::array();
    for (const Doubleton& r : entry.doubletons)
      doubletons.push_back({r.pair().first, r.pair().second});
    out.push_back(json{{"key", entry.form.key()},
                       {"n", entry.representative.n()},
                       {"m", entry.representative.m()},
                       {"doubletons", std::move(doubletons)},
                       {"provenance", entry.provenance}});
  }
  return out;
}

}  // namespace brickforge
