#include "brickforge/matching.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace brickforge {

namespace {

// Blossom (Edmonds) maximum matching on the underlying simple graph.
struct BlossomSolver {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, parent, base;
  std::vector<char> used, in_blossom;

  explicit BlossomSolver(const Multigraph& g) {
    std::map<int, int> index;
    for (int v : g.vertices()) {
      int k = static_cast<int>(index.size());
      index[v] = k;
    }
    n = g.n();
    adj.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges()) {
      int u = index[e.u], v = index[e.v];
      if (seen.insert({std::min(u, v), std::max(u, v)}).second) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }

  int lca(int a, int b) {
    std::vector<char> mark(n, 0);
    for (;;) {
      a = base[a];
      mark[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  bool find_augmenting_path(int root) {
    used.assign(n, 0);
    parent.assign(n, -1);
    base.resize(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur_base = lca(v, to);
          in_blossom.assign(n, 0);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            int u = to;
            while (u != -1) {
              int pv = parent[u], ppv = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return false;
  }

  int maximum_matching_size() {
    match.assign(n, -1);
    int size = 0;
    for (int v = 0; v < n; ++v)
      if (match[v] == -1 && find_augmenting_path(v)) ++size;
    return size;
  }
};

int maximum_matching_size(const Multigraph& g) {
  return BlossomSolver(g).maximum_matching_size();
}

}  // namespace

int odd_component_count(const Multigraph& g, const VertexSet& s) {
  int odd = 0;
  for (const VertexSet& comp : components_after_removal(g, s))
    if (comp.size() % 2 == 1) ++odd;
  return odd;
}

bool has_perfect_matching(const Multigraph& g) {
  if (g.n() % 2 != 0) return false;
  return maximum_matching_size(g) * 2 == g.n();
}

std::optional<VertexSet> tutte_witness(const Multigraph& g) {
  if (has_perfect_matching(g)) return std::nullopt;
  // Gallai-Edmonds: with D the vertices missed by some maximum matching and
  // S = N(D) - D, odd(G - S) exceeds |S| by the matching deficiency.
  int mm = maximum_matching_size(g);
  VertexSet d;
  for (int v : g.vertices())
    if (maximum_matching_size(g.minus_vertices({v})) == mm) d.insert(v);
  VertexSet s;
  for (int v : d)
    for (int w : g.neighbors(v))
      if (!d.count(w)) s.insert(w);
  if (odd_component_count(g, s) <= static_cast<int>(s.size()))
    raise(ErrorCode::TheoremViolation, "Tutte witness construction failed");
  return s;
}

bool is_admissible(const Multigraph& g, int e) {
  const Edge& ed = g.edge(e);
  return has_perfect_matching(g.minus_vertices({ed.u, ed.v}));
}

bool is_matching_covered(const Multigraph& g) {
  if (g.n() < 2 || g.n() % 2 != 0) return false;
  if (!is_connected(g)) return false;
  for (const Edge& e : g.edges())
    if (!has_perfect_matching(g.minus_vertices({e.u, e.v}))) return false;
  return true;
}

namespace {

void enumerate_rec(const Multigraph& g, std::map<int, char>& covered,
                   std::vector<int>& chosen, std::vector<Matching>& out) {
  int free_vertex = -1;
  for (const auto& [v, c] : covered)
    if (!c) {
      free_vertex = v;
      break;
    }
  if (free_vertex == -1) {
    Matching m{chosen};
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    out.push_back(std::move(m));
    return;
  }
  for (const Edge& e : g.edges()) {
    if (!e.incident(free_vertex)) continue;
    int w = e.other(free_vertex);
    if (covered[w]) continue;
    covered[free_vertex] = covered[w] = 1;
    chosen.push_back(e.id);
    enumerate_rec(g, covered, chosen, out);
    chosen.pop_back();
    covered[free_vertex] = covered[w] = 0;
  }
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Multigraph& g, int max_vertices) {
  if (g.n() > max_vertices)
    raise(ErrorCode::TooLarge, "enumeration bound is " + std::to_string(max_vertices) +
                                   " vertices");
  std::vector<Matching> out;
  if (g.n() % 2 != 0) return out;
  std::map<int, char> covered;
  for (int v : g.vertices()) covered[v] = 0;
  std::vector<int> chosen;
  enumerate_rec(g, covered, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_bicritical(const Multigraph& g) {
  if (g.n() < 4 || g.n() % 2 != 0) return false;
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!has_perfect_matching(g.minus_vertices({vs[i], vs[j]}))) return false;
  return true;
}

bool is_brick(const Multigraph& g) {
  return is_three_connected(g) && is_bicritical(g);
}

std::optional<Barrier> is_barrier(const Multigraph& g, const VertexSet& s) {
  if (s.empty()) raise(ErrorCode::PreconditionViolated, "barrier candidate must be nonempty");
  for (int v : s)
    if (!g.has_vertex(v)) raise(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  if (!has_perfect_matching(g)) raise(ErrorCode::NoPerfectMatching, "barriers need a perfect matching");
  Barrier b;
  b.s = s;
  for (VertexSet& comp : components_after_removal(g, s)) {
    if (comp.size() % 2 == 0) continue;
    if (comp.size() == 1) b.isolated.insert(*comp.begin());
    b.odd_components.push_back(std::move(comp));
  }
  if (b.odd_components.size() != s.size()) return std::nullopt;
  return b;
}

CanonicalPartition canonical_partition(const Multigraph& g) {
  if (!is_matching_covered(g))
    raise(ErrorCode::NotMatchingCovered, "canonical partition needs a matching covered graph");
  // u and v share a maximal barrier iff G - {u, v} has no perfect matching
  CanonicalPartition cp;
  VertexSet assigned;
  for (int u : g.vertices()) {
    if (assigned.count(u)) continue;
    VertexSet part{u};
    for (int v : g.vertices())
      if (v != u && !assigned.count(v) &&
          !has_perfect_matching(g.minus_vertices({u, v})))
        part.insert(v);
    auto barrier = is_barrier(g, part);
    if (!barrier)
      raise(ErrorCode::TheoremViolation, "canonical partition part is not a barrier");
    for (int v : part) assigned.insert(v);
    cp.parts.push_back(std::move(*barrier));
  }
  if (assigned.size() != static_cast<size_t>(g.n()))
    raise(ErrorCode::TheoremViolation, "canonical partition does not cover V");
  return cp;
}

std::vector<Barrier> nontrivial_maximal_barriers(const Multigraph& g) {
  std::vector<Barrier> out;
  for (Barrier& b : canonical_partition(g).parts)
    if (b.nontrivial()) out.push_back(std::move(b));
  return out;
}

std::vector<Barrier> all_nontrivial_barriers(const Multigraph& g) {
  // every barrier of a matching covered graph lies inside a maximal one
  std::vector<Barrier> out;
  for (const Barrier& part : canonical_partition(g).parts) {
    if (!part.nontrivial()) continue;
    std::vector<int> vs(part.s.begin(), part.s.end());
    int k = static_cast<int>(vs.size());
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      VertexSet s;
      for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) s.insert(vs[i]);
      if (auto b = is_barrier(g, s)) out.push_back(std::move(*b));
    }
  }
  return out;
}

}  // namespace brickforge
