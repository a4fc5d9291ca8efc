#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "brickforge/errors.hpp"

namespace brickforge {

using VertexSet = std::set<int>;
using EdgeIdSet = std::set<int>;

struct Edge {
  int id;
  int u;
  int v;

  int other(int w) const {
    if (w == u) return v;
    if (w == v) return u;
    raise(ErrorCode::PreconditionViolated, "vertex not an endpoint");
  }
  bool incident(int w) const { return w == u || w == v; }
};

// Loopless multigraph. Parallel edges are distinct objects with stable ids:
// deleting one never renames another. Vertex labels are arbitrary ints
// (contractions introduce fresh labels).
class Multigraph {
 public:
  Multigraph() = default;

  static Multigraph build(int n, const std::vector<std::pair<int, int>>& edge_list);

  int n() const { return static_cast<int>(vertices_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(int v) const;
  bool has_edge(int id) const;
  const Edge& edge(int id) const;  // UnknownEdge

  int degree(int v) const;  // counts parallel edges
  std::vector<int> neighbors(int v) const;         // distinct, ascending
  std::vector<int> incident_edges(int v) const;    // edge ids, ascending
  int multiplicity(int u, int v) const;

  void add_vertex(int label);
  int add_edge(int u, int v);   // LoopRejected, UnknownVertex; returns new id
  void remove_edge(int id);     // UnknownEdge
  void remove_vertex(int v);    // drops incident edges; UnknownVertex

  Multigraph minus_edge(int id) const;
  Multigraph minus_edges(const std::vector<int>& ids) const;
  Multigraph minus_vertices(const VertexSet& vs) const;
  Multigraph induced(const VertexSet& vs) const;

  int max_vertex_label() const;  // PreconditionViolated on empty graph

  void annotate(int v, const std::string& note);
  const std::map<int, std::string>& annotations() const { return annotations_; }

  // Assembles a graph from explicit parts; edge ids are taken as given.
  static Multigraph from_raw(std::vector<int> vertices, std::vector<Edge> edges,
                             std::map<int, std::string> annotations = {});

 private:
  std::vector<int> vertices_;  // sorted ascending
  std::vector<Edge> edges_;    // sorted by id ascending
  int next_edge_id_ = 0;
  std::map<int, std::string> annotations_;
};

struct Cut {
  VertexSet shore;
  EdgeIdSet edge_ids;
};

Cut cut_edges(const Multigraph& g, const VertexSet& x);  // EmptyOrFullShore

// Contracts Xbar to a single new vertex carrying `label`; edges inside Xbar
// are removed, edges of the cut keep their ids.
Multigraph contract_shore(const Multigraph& g, const VertexSet& xbar, int label);

struct Bipartition {
  VertexSet a;  // class containing the smallest vertex label
  VertexSet b;
};

std::optional<Bipartition> bipartition(const Multigraph& g);
bool is_bipartite(const Multigraph& g);

bool is_connected(const Multigraph& g);

// Connected components of g - removed.
std::vector<VertexSet> components_after_removal(const Multigraph& g, const VertexSet& removed);

// >=4 vertices and no vertex cut of size <= 2 (on the underlying simple graph).
bool is_three_connected(const Multigraph& g);

}  // namespace brickforge
