#include "brickforge/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace brickforge {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopRejected: return "LoopRejected";
    case ErrorCode::EmptyOrFullShore: return "EmptyOrFullShore";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::NotMatchingCovered: return "NotMatchingCovered";
    case ErrorCode::EvenShore: return "EvenShore";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::BipartiteInput: return "BipartiteInput";
    case ErrorCode::NotRGraph: return "NotRGraph";
    case ErrorCode::NotNearBrick: return "NotNearBrick";
    case ErrorCode::NotRemovable: return "NotRemovable";
    case ErrorCode::NotBInvariant: return "NotBInvariant";
    case ErrorCode::NotRBrick: return "NotRBrick";
    case ErrorCode::NotRCompatible: return "NotRCompatible";
    case ErrorCode::EdgeInDoubleton: return "EdgeInDoubleton";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::IdenticalNeighbors: return "IdenticalNeighbors";
    case ErrorCode::StuckIdenticalNeighbors: return "StuckIdenticalNeighbors";
    case ErrorCode::EmptyPart: return "EmptyPart";
    case ErrorCode::BarrierTooSmall: return "BarrierTooSmall";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::BaseBrick: return "BaseBrick";
    case ErrorCode::AlreadyThin: return "AlreadyThin";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Multigraph Multigraph::build(int n, const std::vector<std::pair<int, int>>& edge_list) {
  Multigraph g;
  for (int v = 0; v < n; ++v) g.vertices_.push_back(v);
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      raise(ErrorCode::UnknownVertex, "endpoint out of range");
    if (u == v) raise(ErrorCode::LoopRejected, "loop endpoints " + std::to_string(u));
    g.edges_.push_back(Edge{g.next_edge_id_++, u, v});
  }
  return g;
}

bool Multigraph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Multigraph::has_edge(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int k) { return e.id < k; });
  return it != edges_.end() && it->id == id;
}

const Edge& Multigraph::edge(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int k) { return e.id < k; });
  if (it == edges_.end() || it->id != id)
    raise(ErrorCode::UnknownEdge, "edge id " + std::to_string(id));
  return *it;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_)
    if (e.incident(v)) ++d;
  return d;
}

std::vector<int> Multigraph::neighbors(int v) const {
  VertexSet nb;
  for (const Edge& e : edges_)
    if (e.incident(v)) nb.insert(e.other(v));
  return {nb.begin(), nb.end()};
}

std::vector<int> Multigraph::incident_edges(int v) const {
  std::vector<int> ids;
  for (const Edge& e : edges_)
    if (e.incident(v)) ids.push_back(e.id);
  return ids;
}

int Multigraph::multiplicity(int u, int v) const {
  int k = 0;
  for (const Edge& e : edges_)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++k;
  return k;
}

void Multigraph::add_vertex(int label) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it != vertices_.end() && *it == label)
    raise(ErrorCode::PreconditionViolated, "vertex label already present");
  vertices_.insert(it, label);
}

int Multigraph::add_edge(int u, int v) {
  if (u == v) raise(ErrorCode::LoopRejected, "loop endpoints " + std::to_string(u));
  if (!has_vertex(u) || !has_vertex(v))
    raise(ErrorCode::UnknownVertex, "endpoint not in graph");
  edges_.push_back(Edge{next_edge_id_, u, v});
  return next_edge_id_++;
}

void Multigraph::remove_edge(int id) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, int k) { return e.id < k; });
  if (it == edges_.end() || it->id != id)
    raise(ErrorCode::UnknownEdge, "edge id " + std::to_string(id));
  edges_.erase(it);
}

void Multigraph::remove_vertex(int v) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    raise(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  vertices_.erase(it);
  edges_.erase(std::remove_if(edges_.begin(), edges_.end(),
                              [v](const Edge& e) { return e.incident(v); }),
               edges_.end());
  annotations_.erase(v);
}

Multigraph Multigraph::minus_edge(int id) const {
  Multigraph g = *this;
  g.remove_edge(id);
  return g;
}

Multigraph Multigraph::minus_edges(const std::vector<int>& ids) const {
  Multigraph g = *this;
  for (int id : ids) g.remove_edge(id);
  return g;
}

Multigraph Multigraph::minus_vertices(const VertexSet& vs) const {
  Multigraph g = *this;
  for (int v : vs) g.remove_vertex(v);
  return g;
}

Multigraph Multigraph::induced(const VertexSet& vs) const {
  Multigraph g = *this;
  for (int v : vertices_)
    if (!vs.count(v)) g.remove_vertex(v);
  return g;
}

int Multigraph::max_vertex_label() const {
  if (vertices_.empty()) raise(ErrorCode::PreconditionViolated, "empty graph");
  return vertices_.back();
}

void Multigraph::annotate(int v, const std::string& note) {
  if (!has_vertex(v)) raise(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
  annotations_[v] = note;
}

Cut cut_edges(const Multigraph& g, const VertexSet& x) {
  if (x.empty() || static_cast<int>(x.size()) >= g.n())
    raise(ErrorCode::EmptyOrFullShore, "shore must be nonempty and proper");
  for (int v : x)
    if (!g.has_vertex(v)) raise(ErrorCode::UnknownVertex, "shore vertex " + std::to_string(v));
  Cut cut{x, {}};
  for (const Edge& e : g.edges())
    if (x.count(e.u) != x.count(e.v)) cut.edge_ids.insert(e.id);
  return cut;
}

Multigraph Multigraph::from_raw(std::vector<int> vertices, std::vector<Edge> edges,
                                std::map<int, std::string> annotations) {
  Multigraph g;
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (size_t i = 1; i < vertices.size(); ++i)
    if (vertices[i] == vertices[i - 1])
      raise(ErrorCode::PreconditionViolated, "duplicate vertex label");
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].id == edges[i - 1].id)
      raise(ErrorCode::PreconditionViolated, "duplicate edge id");
  for (const Edge& e : edges) {
    if (e.u == e.v) raise(ErrorCode::LoopRejected, "loop in raw edge list");
    if (!std::binary_search(vertices.begin(), vertices.end(), e.u) ||
        !std::binary_search(vertices.begin(), vertices.end(), e.v))
      raise(ErrorCode::UnknownVertex, "raw edge endpoint missing");
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  g.next_edge_id_ = g.edges_.empty() ? 0 : g.edges_.back().id + 1;
  g.annotations_ = std::move(annotations);
  return g;
}

Multigraph contract_shore(const Multigraph& g, const VertexSet& xbar, int label) {
  if (xbar.empty() || static_cast<int>(xbar.size()) >= g.n())
    raise(ErrorCode::EmptyOrFullShore, "shore must be nonempty and proper");
  for (int v : xbar)
    if (!g.has_vertex(v)) raise(ErrorCode::UnknownVertex, "shore vertex " + std::to_string(v));
  std::vector<int> verts;
  for (int v : g.vertices())
    if (!xbar.count(v)) {
      if (v == label)
        raise(ErrorCode::PreconditionViolated, "contraction label collides with a kept vertex");
      verts.push_back(v);
    }
  verts.push_back(label);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    bool bu = xbar.count(e.u) > 0, bv = xbar.count(e.v) > 0;
    if (bu && bv) continue;  // internal to the contracted shore
    edges.push_back(Edge{e.id, bu ? label : e.u, bv ? label : e.v});
  }
  std::map<int, std::string> ann;
  for (const auto& [v, note] : g.annotations())
    if (!xbar.count(v)) ann[v] = note;
  return Multigraph::from_raw(std::move(verts), std::move(edges), std::move(ann));
}

namespace {

std::map<int, std::vector<int>> adjacency(const Multigraph& g, const VertexSet& removed) {
  std::map<int, std::vector<int>> adj;
  for (int v : g.vertices())
    if (!removed.count(v)) adj[v];
  for (const Edge& e : g.edges())
    if (!removed.count(e.u) && !removed.count(e.v)) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  return adj;
}

}  // namespace

std::optional<Bipartition> bipartition(const Multigraph& g) {
  auto adj = adjacency(g, {});
  std::map<int, int> color;
  Bipartition parts;
  for (int s : g.vertices()) {
    if (color.count(s)) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        auto it = color.find(w);
        if (it == color.end()) {
          color[w] = color[v] ^ 1;
          q.push(w);
        } else if (it->second == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  if (g.n() == 0) return Bipartition{};
  // orient so that class A holds the smallest vertex label
  int base = color[g.vertices().front()];
  for (const auto& [v, c] : color)
    (c == base ? parts.a : parts.b).insert(v);
  return parts;
}

bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

std::vector<VertexSet> components_after_removal(const Multigraph& g, const VertexSet& removed) {
  auto adj = adjacency(g, removed);
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (const auto& [s, _] : adj) {
    if (seen.count(s)) continue;
    VertexSet comp;
    std::queue<int> q;
    q.push(s);
    seen.insert(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.insert(v);
      for (int w : adj[v])
        if (seen.insert(w).second) q.push(w);
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Multigraph& g) {
  if (g.n() == 0) return false;
  return components_after_removal(g, {}).size() == 1;
}

bool is_three_connected(const Multigraph& g) {
  if (g.n() < 4) return false;
  if (!is_connected(g)) return false;
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    if (components_after_removal(g, {vs[i]}).size() != 1) return false;
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (components_after_removal(g, {vs[i], vs[j]}).size() != 1) return false;
  }
  return true;
}

}  // namespace brickforge
