#include "herencode/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace herencode {

Graph::Graph(std::size_t n) : n_(n), rows_(n, VertexSet(n)), labels_(n) {
  std::iota(labels_.begin(), labels_.end(), Vertex{1});
}

Graph::Graph(std::size_t n, std::vector<Vertex> labels)
    : n_(n), rows_(n, VertexSet(n)), labels_(std::move(labels)) {
  if (labels_.size() != n) throw std::invalid_argument("label count does not match vertex count");
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  rows_[u - 1].insert(v);
  rows_[v - 1].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u - 1].erase(v);
  rows_[v - 1].erase(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

std::optional<Vertex> Graph::find_label(Vertex label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin() + 1);
}

bool Graph::has_identity_labels() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (labels_[i] != i + 1) return false;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = rows_[u - 1].next(u); v != 0; v = rows_[u - 1].next(v)) out.emplace_back(u, v);
  return out;
}

bool same_adjacency(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (Vertex v = 1; v <= a.order(); ++v)
    if (!(a.neighbours(v) == b.neighbours(v))) return false;
  return true;
}

Graph complement(const Graph& g) {
  Graph h(g.order(), g.labels());
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& s) {
  std::vector<Vertex> labels;
  labels.reserve(s.size());
  for (Vertex v : s) {
    if (v < 1 || v > g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    labels.push_back(g.label(v));
  }
  Graph h(s.size(), std::move(labels));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) h.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
  return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() > g.order()) {
    for (Vertex v = s.first(); v != 0; v = s.next(v))
      if (v > g.order()) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
  }
  return induced_subgraph(g, s.to_vector());
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order());
    comp.insert(s);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || connected_components(g).size() == 1; }

std::optional<VertexSet> two_colouring(const Graph& g) {
  VertexSet top(g.order());
  for (const auto& comp : connected_components(g)) {
    VertexSet layer(g.order());
    layer.insert(comp.first());
    VertexSet seen = layer;
    bool on_top = true;
    while (!layer.empty()) {
      if (on_top) top |= layer;
      VertexSet next(g.order());
      layer.for_each([&](Vertex v) { next |= g.neighbours(v); });
      if (next.intersects(layer)) return std::nullopt;
      next -= seen;
      seen |= next;
      layer = std::move(next);
      on_top = !on_top;
    }
  }
  for (Vertex u = 1; u <= g.order(); ++u) {
    bool t = top.contains(u);
    const auto& nb = g.neighbours(u);
    if (t ? nb.intersects(top) : !(nb - top).empty()) return std::nullopt;
  }
  return top;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw std::invalid_argument("permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u - 1], perm[v - 1]);
  return h;
}

BipartiteGraph::BipartiteGraph(Graph g, VertexSet top) : g_(std::move(g)), top_(std::move(top)) {
  if (top_.universe() != g_.order()) {
    VertexSet resized(g_.order());
    top_.for_each([&](Vertex v) {
      if (v > g_.order()) throw std::invalid_argument("top vertex " + std::to_string(v) + " not in graph");
      resized.insert(v);
    });
    top_ = std::move(resized);
  }
  bottom_ = top_.complement();
  for (Vertex u = 1; u <= g_.order(); ++u) {
    const VertexSet& same = top_.contains(u) ? top_ : bottom_;
    if (g_.neighbours(u).intersects(same)) {
      Vertex w = (g_.neighbours(u) & same).first();
      throw InvariantError("edge " + std::to_string(u) + "-" + std::to_string(w) + " lies inside one part");
    }
  }
}

BipartiteGraph bipartite_complement(const BipartiteGraph& g) {
  Graph h(g.order(), g.graph().labels());
  g.top().for_each([&](Vertex u) {
    g.bottom().for_each([&](Vertex v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    });
  });
  return BipartiteGraph(std::move(h), g.top());
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g, const VertexSet& s) {
  auto vs = s.to_vector();
  Graph h = induced_subgraph(g.graph(), vs);
  VertexSet top(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (g.top().contains(vs[i])) top.insert(static_cast<Vertex>(i + 1));
  return BipartiteGraph(std::move(h), std::move(top));
}

BipartiteGraph with_canonical_bipartition(const Graph& g) {
  auto top = two_colouring(g);
  if (!top) throw InvariantError("graph is not bipartite");
  return BipartiteGraph(g, *top);
}

}  // namespace herencode
