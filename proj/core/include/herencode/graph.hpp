#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "herencode/errors.hpp"
#include "herencode/vertex_set.hpp"

namespace herencode {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 1..n stored as symmetric bit rows.
// Each vertex also carries a label: its name in the graph it was taken from.
// Fresh graphs are labelled 1..n; induced subgraphs keep the parent's labels.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::vector<Vertex> labels);

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;

  bool adjacent(Vertex u, Vertex v) const { return rows_[u - 1].contains(v); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void set_adjacent(Vertex u, Vertex v, bool on) {
    if (on) add_edge(u, v);
    else remove_edge(u, v);
  }

  const VertexSet& neighbours(Vertex v) const { return rows_[v - 1]; }
  std::size_t degree(Vertex v) const { return rows_[v - 1].size(); }
  std::size_t co_degree(Vertex v) const { return n_ - 1 - degree(v); }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  Vertex label(Vertex v) const { return labels_[v - 1]; }
  const std::vector<Vertex>& labels() const { return labels_; }
  // Position of the vertex carrying `label`, if any.
  std::optional<Vertex> find_label(Vertex label) const;
  bool has_identity_labels() const;

  // Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<Vertex> labels_;
};

// Same vertex count and adjacency, labels ignored.
bool same_adjacency(const Graph& a, const Graph& b);

Graph complement(const Graph& g);

// Vertices of s in ascending order become 1..|s|; labels are inherited.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s);

// Vertex ids of g (not labels) in each connected component, ordered by
// smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Top part of a proper 2-colouring where the smallest vertex of every
// component is on top; nullopt when g has an odd cycle.
std::optional<VertexSet> two_colouring(const Graph& g);

// Applies a permutation: vertex v of g becomes perm[v-1] (1-based values).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

enum class Side { Top, Bottom };
inline Side other(Side s) { return s == Side::Top ? Side::Bottom : Side::Top; }

// A graph with an explicit partition into top and bottom.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Throws InvariantError if an edge joins two vertices of the same part.
  BipartiteGraph(Graph g, VertexSet top);

  const Graph& graph() const { return g_; }
  std::size_t order() const { return g_.order(); }
  const VertexSet& top() const { return top_; }
  const VertexSet& bottom() const { return bottom_; }
  const VertexSet& part(Side s) const { return s == Side::Top ? top_ : bottom_; }
  Side side(Vertex v) const { return top_.contains(v) ? Side::Top : Side::Bottom; }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  const VertexSet& neighbours(Vertex v) const { return g_.neighbours(v); }
  // Non-neighbours of v in the opposite part.
  VertexSet opposite_non_neighbours(Vertex v) const { return part(other(side(v))) - g_.neighbours(v); }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.g_ == b.g_ && a.top_ == b.top_;
  }

 private:
  Graph g_;
  VertexSet top_;
  VertexSet bottom_;
};

BipartiteGraph bipartite_complement(const BipartiteGraph& g);
BipartiteGraph induced_subgraph(const BipartiteGraph& g, const VertexSet& s);
// Uses two_colouring; throws InvariantError if g is not bipartite.
BipartiteGraph with_canonical_bipartition(const Graph& g);

}  // namespace herencode
