#include "brickforge/tightcut.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "brickforge/canonical.hpp"

namespace brickforge {

namespace {

constexpr int kExhaustiveTightCutBound = 14;

std::string vertex_set_to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

bool tight_against(const std::vector<Matching>& pms, const Multigraph& g,
                   const VertexSet& x) {
  EdgeIdSet boundary = cut_edges(g, x).edge_ids;
  for (const Matching& m : pms) {
    int hits = 0;
    for (int id : m.edge_ids)
      if (boundary.count(id)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

bool nontrivial_shore(const Multigraph& g, const VertexSet& x) {
  return x.size() >= 2 && x.size() + 2 <= static_cast<size_t>(g.n());
}

void require_matching_covered(const Multigraph& g, const char* what) {
  if (!is_matching_covered(g))
    raise(ErrorCode::NotMatchingCovered, std::string(what) + " needs a matching covered graph");
}

// dedup key: a cut is determined by its edge set in a connected graph
void append_unique(std::vector<TightCut>& out, std::set<EdgeIdSet>& seen, TightCut cut) {
  if (seen.insert(cut.cut.edge_ids).second) out.push_back(std::move(cut));
}

void sort_cuts(std::vector<TightCut>& cuts) {
  std::sort(cuts.begin(), cuts.end(), [](const TightCut& a, const TightCut& b) {
    if (a.cut.shore.size() != b.cut.shore.size())
      return a.cut.shore.size() < b.cut.shore.size();
    return a.cut.shore < b.cut.shore;
  });
}

std::vector<TightCut> barrier_cuts_checked(const Multigraph& g) {
  std::vector<TightCut> out;
  std::set<EdgeIdSet> seen;
  for (const Barrier& b : all_nontrivial_barriers(g))
    for (const VertexSet& comp : b.odd_components)
      if (nontrivial_shore(g, comp))
        append_unique(out, seen, TightCut{cut_edges(g, comp), CutKind::BarrierCut});
  sort_cuts(out);
  return out;
}

std::vector<TightCut> two_separation_cuts_checked(const Multigraph& g) {
  std::vector<TightCut> out;
  std::set<EdgeIdSet> seen;
  auto pms = enumerate_perfect_matchings(g);
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      auto comps = components_after_removal(g, {vs[i], vs[j]});
      if (comps.size() < 2) continue;
      for (const VertexSet& comp : comps) {
        if (comp.size() % 2 != 0) continue;
        for (int attach : {vs[i], vs[j]}) {
          VertexSet shore = comp;
          shore.insert(attach);
          if (!nontrivial_shore(g, shore)) continue;
          // tightness is not automatic for 2-separations; verify it
          if (tight_against(pms, g, shore))
            append_unique(out, seen,
                          TightCut{cut_edges(g, shore), CutKind::TwoSeparationCut});
        }
      }
    }
  sort_cuts(out);
  return out;
}

std::optional<TightCut> exhaustive_tight_cut(const Multigraph& g) {
  if (g.n() > kExhaustiveTightCutBound)
    raise(ErrorCode::TooLarge, "exhaustive tight cut search limited to " +
                                   std::to_string(kExhaustiveTightCutBound) + " vertices");
  auto pms = enumerate_perfect_matchings(g);
  std::vector<int> vs = g.vertices();
  int n = static_cast<int>(vs.size());
  // fix vs[0] inside the shore so each cut is tried once
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    VertexSet x{vs[0]};
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) x.insert(vs[i]);
    if (x.size() % 2 == 0) continue;
    if (!nontrivial_shore(g, x)) continue;
    if (tight_against(pms, g, x)) return TightCut{cut_edges(g, x), CutKind::Other};
  }
  return std::nullopt;
}

std::vector<TightCut> candidate_cuts(const Multigraph& g) {
  std::vector<TightCut> cuts = barrier_cuts_checked(g);
  for (TightCut& c : two_separation_cuts_checked(g)) {
    bool dup = false;
    for (const TightCut& prev : cuts)
      if (prev.cut.edge_ids == c.cut.edge_ids) {
        dup = true;
        break;
      }
    if (!dup) cuts.push_back(std::move(c));
  }
  return cuts;
}

void decompose_rec(const Multigraph& g, std::mt19937* rng, DecompositionResult& result) {
  std::vector<TightCut> cuts = candidate_cuts(g);
  std::optional<TightCut> chosen;
  if (!cuts.empty()) {
    size_t pick = 0;
    if (rng) pick = (*rng)() % cuts.size();
    chosen = cuts[pick];
  } else {
    chosen = exhaustive_tight_cut(g);
  }
  if (!chosen) {
    result.pieces.push_back(DecompositionPiece{g, !is_bipartite(g)});
    return;
  }
  const VertexSet& x = chosen->cut.shore;
  VertexSet xbar;
  for (int v : g.vertices())
    if (!x.count(v)) xbar.insert(v);
  result.trace.push_back(x);
  int label = g.max_vertex_label() + 1;
  Multigraph g1 = contract_shore(g, xbar, label);
  g1.annotate(label, "contraction of " + vertex_set_to_string(xbar));
  Multigraph g2 = contract_shore(g, x, label);
  g2.annotate(label, "contraction of " + vertex_set_to_string(x));
  decompose_rec(g1, rng, result);
  decompose_rec(g2, rng, result);
}

}  // namespace

const char* cut_kind_name(CutKind kind) {
  switch (kind) {
    case CutKind::BarrierCut: return "barrier-cut";
    case CutKind::TwoSeparationCut: return "two-separation-cut";
    case CutKind::Other: return "other";
  }
  return "other";
}

bool is_tight(const Multigraph& g, const VertexSet& x) {
  require_matching_covered(g, "is_tight");
  if (x.empty() || static_cast<int>(x.size()) >= g.n())
    raise(ErrorCode::EmptyOrFullShore, "shore must be nonempty and proper");
  if (x.size() % 2 == 0) raise(ErrorCode::EvenShore, "tight cut shores are odd");
  return tight_against(enumerate_perfect_matchings(g), g, x);
}

std::vector<TightCut> barrier_cuts(const Multigraph& g) {
  require_matching_covered(g, "barrier_cuts");
  return barrier_cuts_checked(g);
}

std::vector<TightCut> two_separation_cuts(const Multigraph& g) {
  require_matching_covered(g, "two_separation_cuts");
  return two_separation_cuts_checked(g);
}

std::optional<TightCut> find_nontrivial_tight_cut(const Multigraph& g) {
  require_matching_covered(g, "find_nontrivial_tight_cut");
  auto barrier = barrier_cuts_checked(g);
  if (!barrier.empty()) return barrier.front();
  auto two_sep = two_separation_cuts_checked(g);
  if (!two_sep.empty()) return two_sep.front();
  return exhaustive_tight_cut(g);
}

DecompositionResult decompose(const Multigraph& g, std::optional<unsigned> seed) {
  require_matching_covered(g, "decompose");
  DecompositionResult result;
  std::mt19937 rng(seed.value_or(0));
  decompose_rec(g, seed ? &rng : nullptr, result);
  std::stable_sort(result.pieces.begin(), result.pieces.end(),
                   [](const DecompositionPiece& a, const DecompositionPiece& b) {
                     return canonical_form(a.graph, CanonMode::WithMultiplicity) <
                            canonical_form(b.graph, CanonMode::WithMultiplicity);
                   });
  for (const DecompositionPiece& piece : result.pieces)
    result.b += piece.brick ? 1 : 0;
  return result;
}

int b_count(const Multigraph& g) { return decompose(g).b; }

int rank_graph(const Multigraph& g) {
  DecompositionResult d = decompose(g);
  if (d.b != 1) raise(ErrorCode::NotNearBrick, "rank needs b(G) = 1, got " + std::to_string(d.b));
  for (const DecompositionPiece& piece : d.pieces)
    if (piece.brick) return piece.graph.n();
  raise(ErrorCode::TheoremViolation, "b = 1 but no brick piece");
}

namespace {

struct MajorityParts {
  VertexSet plus, minus;  // majority/minority of the given odd set
};

MajorityParts split_by_classes(const VertexSet& x, const Bipartition& parts) {
  VertexSet xa, xb;
  for (int v : x) (parts.a.count(v) ? xa : xb).insert(v);
  if (xa.size() > xb.size()) return {xa, xb};
  return {xb, xa};
}

}  // namespace

bool structural_tight_check_bipartite(const Multigraph& h, const VertexSet& x) {
  auto parts = bipartition(h);
  if (!parts) raise(ErrorCode::NotBipartite, "structural check needs a bipartite graph");
  require_matching_covered(h, "structural_tight_check_bipartite");
  if (x.empty() || static_cast<int>(x.size()) >= h.n())
    raise(ErrorCode::EmptyOrFullShore, "shore must be nonempty and proper");
  if (x.size() % 2 == 0) raise(ErrorCode::EvenShore, "tight cut shores are odd");
  VertexSet xbar;
  for (int v : h.vertices())
    if (!x.count(v)) xbar.insert(v);
  MajorityParts in = split_by_classes(x, *parts);
  MajorityParts out = split_by_classes(xbar, *parts);
  if (in.plus.size() != in.minus.size() + 1) return false;
  for (const Edge& e : h.edges()) {
    bool a_minor = in.minus.count(e.u) || in.minus.count(e.v);
    bool b_minor = out.minus.count(e.u) || out.minus.count(e.v);
    if (a_minor && b_minor) return false;
  }
  return true;
}

bool structural_tight_check_nearbip(const Multigraph& g, const Doubleton& r,
                                    const VertexSet& x) {
  auto checked = validate_doubleton(g, r.alpha, r.beta);
  if (!checked) raise(ErrorCode::NotRGraph, "R is not a removable doubleton of G");
  if (x.empty() || static_cast<int>(x.size()) >= g.n())
    raise(ErrorCode::EmptyOrFullShore, "shore must be nonempty and proper");
  if (x.size() % 2 == 0) raise(ErrorCode::EvenShore, "tight cut shores are odd");
  Bipartition parts{checked->a, checked->b};
  VertexSet xbar;
  for (int v : g.vertices())
    if (!x.count(v)) xbar.insert(v);
  MajorityParts in = split_by_classes(x, parts);
  MajorityParts out = split_by_classes(xbar, parts);
  if (in.plus.size() != in.minus.size() + 1) return false;
  for (const Edge& e : g.edges()) {
    if (e.id == r.alpha || e.id == r.beta) continue;
    bool a_minor = in.minus.count(e.u) || in.minus.count(e.v);
    bool b_minor = out.minus.count(e.u) || out.minus.count(e.v);
    if (a_minor && b_minor) return false;
  }
  const Edge& alpha = g.edge(r.alpha);
  const Edge& beta = g.edge(r.beta);
  auto both_in = [](const Edge& e, const VertexSet& s) {
    return s.count(e.u) && s.count(e.v);
  };
  auto end_in = [](const Edge& e, const VertexSet& s) {
    return s.count(e.u) || s.count(e.v);
  };
  // one of alpha/beta has both ends in a majority part; the other then needs
  // an end in the minority part on the same side of the cut
  for (const auto& [gamma, delta] : {std::pair{&alpha, &beta}, std::pair{&beta, &alpha}}) {
    if (both_in(*gamma, out.plus) && end_in(*delta, out.minus)) return true;
    if (both_in(*gamma, in.plus) && end_in(*delta, in.minus)) return true;
  }
  return false;
}

}  // namespace brickforge
