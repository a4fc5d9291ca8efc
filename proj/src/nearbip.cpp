#include "brickforge/nearbip.hpp"

#include <algorithm>

#include "brickforge/tightcut.hpp"

namespace brickforge {

bool is_removable(const Multigraph& g, int e) {
  g.edge(e);  // UnknownEdge
  return is_matching_covered(g.minus_edge(e));
}

std::vector<int> removable_edges(const Multigraph& g) {
  if (!is_matching_covered(g))
    raise(ErrorCode::NotMatchingCovered, "removable edges need a matching covered graph");
  std::vector<int> out;
  for (const Edge& e : g.edges())
    if (is_matching_covered(g.minus_edge(e.id))) out.push_back(e.id);
  return out;
}

bool is_b_invariant(const Multigraph& g, int e) {
  if (!is_removable(g, e))
    raise(ErrorCode::NotRemovable, "b-invariance is defined for removable edges");
  return b_count(g.minus_edge(e)) == b_count(g);
}

namespace {

// assumes G itself was already checked (matching covered, nonbipartite)
std::optional<Doubleton> make_doubleton(const Multigraph& g, int alpha, int beta) {
  const Edge& ea = g.edge(alpha);
  const Edge& eb = g.edge(beta);
  Multigraph h = g.minus_edges({alpha, beta});
  auto parts = bipartition(h);
  if (!parts) return std::nullopt;
  if (!is_matching_covered(h)) return std::nullopt;
  auto side = [&](const Edge& e) -> int {
    bool ua = parts->a.count(e.u), va = parts->a.count(e.v);
    if (ua != va) return -1;  // crosses the bipartition
    return ua ? 0 : 1;
  };
  int sa = side(ea), sb = side(eb);
  if (sa < 0 || sb < 0 || sa == sb) return std::nullopt;
  Doubleton r;
  r.alpha = alpha;
  r.beta = beta;
  if (sa == 0) {
    r.a = parts->a;
    r.b = parts->b;
  } else {
    r.a = parts->b;
    r.b = parts->a;
  }
  return r;
}

}  // namespace

std::optional<Doubleton> validate_doubleton(const Multigraph& g, int alpha, int beta) {
  if (alpha == beta) return std::nullopt;
  if (!g.has_edge(alpha) || !g.has_edge(beta)) return std::nullopt;
  if (is_bipartite(g)) return std::nullopt;
  if (!is_matching_covered(g)) return std::nullopt;
  return make_doubleton(g, alpha, beta);
}

std::vector<Doubleton> removable_doubletons(const Multigraph& g) {
  if (!is_matching_covered(g))
    raise(ErrorCode::NotMatchingCovered, "doubletons need a matching covered graph");
  if (is_bipartite(g))
    raise(ErrorCode::BipartiteInput, "doubletons are defined for nonbipartite graphs");
  std::vector<Doubleton> out;
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& ea = edges[i];
      const Edge& eb = edges[j];
      if (ea.incident(eb.u) || ea.incident(eb.v)) continue;  // doubleton edges are nonadjacent
      if (auto r = make_doubleton(g, ea.id, eb.id)) out.push_back(std::move(*r));
    }
  return out;
}

bool is_near_bipartite(const Multigraph& g) {
  if (!is_matching_covered(g) || is_bipartite(g)) return false;
  return !removable_doubletons(g).empty();
}

bool is_R_compatible(const Multigraph& g, const Doubleton& r, int e) {
  g.edge(e);  // UnknownEdge
  if (r.contains(e))
    raise(ErrorCode::EdgeInDoubleton, "doubleton edges are not R-compatible candidates");
  if (!is_matching_covered(g.minus_edge(e))) return false;
  return is_matching_covered(g.minus_edges({r.alpha, r.beta, e}));
}

bool is_R_brick(const Multigraph& g, const Doubleton& r) {
  if (!is_brick(g)) return false;
  return validate_doubleton(g, r.alpha, r.beta).has_value();
}

bool verify_exchange_bipartite(const Multigraph& h, int e, int f) {
  if (e == f) raise(ErrorCode::PreconditionViolated, "edges must be distinct");
  if (!is_bipartite(h) || !is_matching_covered(h))
    raise(ErrorCode::PreconditionViolated, "needs a bipartite matching covered graph");
  if (!is_matching_covered(h.minus_edge(e)))
    raise(ErrorCode::PreconditionViolated, "e must be removable in H");
  if (!is_matching_covered(h.minus_edges({e, f})))
    raise(ErrorCode::PreconditionViolated, "f must be removable in H - e");
  return is_matching_covered(h.minus_edge(f)) &&
         is_matching_covered(h.minus_edges({f, e}));
}

bool verify_exchange_Rcompatible(const Multigraph& g, const Doubleton& r, int e, int f) {
  if (e == f) raise(ErrorCode::PreconditionViolated, "edges must be distinct");
  if (r.contains(e) || r.contains(f))
    raise(ErrorCode::PreconditionViolated, "doubleton edges are excluded");
  if (!validate_doubleton(g, r.alpha, r.beta))
    raise(ErrorCode::PreconditionViolated, "R is not a removable doubleton of G");
  if (!is_R_compatible(g, r, e))
    raise(ErrorCode::PreconditionViolated, "e must be R-compatible in G");
  Multigraph ge = g.minus_edge(e);
  if (!is_matching_covered(ge.minus_edge(f)) ||
      !is_matching_covered(ge.minus_edges({r.alpha, r.beta, f})))
    raise(ErrorCode::PreconditionViolated, "f must be R-compatible in G - e");
  Multigraph gf = g.minus_edge(f);
  bool f_in_g = is_R_compatible(g, r, f);
  bool e_in_gf = is_matching_covered(gf.minus_edge(e)) &&
                 is_matching_covered(gf.minus_edges({r.alpha, r.beta, e}));
  return f_in_g && e_in_gf;
}

std::optional<NonRemovableWitness> non_removable_witness(const Multigraph& h, int e) {
  auto parts = bipartition(h);
  if (!parts) raise(ErrorCode::NotBipartite, "witness search needs a bipartite graph");
  if (!is_matching_covered(h) || h.n() < 4)
    raise(ErrorCode::PreconditionViolated, "needs a matching covered graph on >= 4 vertices");
  if (is_matching_covered(h.minus_edge(e))) return std::nullopt;
  const Edge& ed = h.edge(e);
  Multigraph hm = h.minus_edge(e);
  // Search for Y inside one class, containing e's end there, with
  // |N(Y)| = |Y| in H - e and e's other end outside N(Y). Then
  // A1 := Y, B1 := N(Y), A0 := class - Y, B0 := other class - N(Y)
  // makes e the unique edge from B0 to A1. Both orientations are tried.
  auto search = [&](const VertexSet& cls_a,
                    const VertexSet& cls_b) -> std::optional<NonRemovableWitness> {
    int a_end = cls_a.count(ed.u) ? ed.u : ed.v;
    int b_end = ed.other(a_end);
    std::vector<int> avec(cls_a.begin(), cls_a.end());
    int k = static_cast<int>(avec.size());
    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << k); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned x, unsigned y) {
      return __builtin_popcount(x) < __builtin_popcount(y);
    });
    for (unsigned mask : masks) {
      VertexSet y;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) y.insert(avec[i]);
      if (!y.count(a_end)) continue;
      VertexSet nbhd;
      for (const Edge& he : hm.edges()) {
        if (y.count(he.u)) nbhd.insert(he.v);
        if (y.count(he.v)) nbhd.insert(he.u);
      }
      if (nbhd.size() != y.size() || nbhd.count(b_end)) continue;
      NonRemovableWitness w;
      w.a1 = y;
      w.b1 = nbhd;
      for (int v : cls_a)
        if (!y.count(v)) w.a0.insert(v);
      for (int v : cls_b)
        if (!nbhd.count(v)) w.b0.insert(v);
      if (w.a0.size() != w.b0.size())
        raise(ErrorCode::TheoremViolation, "witness parts are unbalanced");
      for (const Edge& he : h.edges())
        if (he.id != e &&
            ((w.b0.count(he.u) && w.a1.count(he.v)) ||
             (w.b0.count(he.v) && w.a1.count(he.u))))
          raise(ErrorCode::TheoremViolation, "witness admits a second crossing edge");
      return w;
    }
    return std::nullopt;
  };
  if (auto w = search(parts->a, parts->b)) return w;
  if (auto w = search(parts->b, parts->a)) return w;
  raise(ErrorCode::TheoremViolation, "non-removable edge without a Hall-type witness");
}

}  // namespace brickforge
