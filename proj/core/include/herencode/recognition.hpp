#pragma once

#include <optional>
#include <vector>

#include "herencode/graph.hpp"
#include "herencode/patterns.hpp"

namespace herencode {

// emb[i-1] is the host vertex that pattern vertex i maps to.
using Embedding = std::vector<Vertex>;

// Induced embedding of h into g. Pattern vertices are placed in order of
// descending degree (ties: smaller label first) and host candidates are tried
// in ascending order, so the result is the lexicographically least embedding
// with respect to that placement order.
std::optional<Embedding> contains_induced(const Graph& g, const Graph& h);

// As contains_induced, but pattern vertex i may only use hosts in domains[i-1].
std::optional<Embedding> find_embedding(const Graph& g, const Graph& h, const std::vector<VertexSet>& domains);

// Induced copy of h whose bottom part lands in g.part(side) and whose top
// part lands in the other part of g.
std::optional<Embedding> find_one_sided(const BipartiteGraph& g, const BipartiteGraph& h, Side side);
bool contains_one_sided(const BipartiteGraph& g, const BipartiteGraph& h, Side side);

// Length of a longest chordless cycle, 0 for forests. With cutoff > 0 the
// search stops as soon as a chordless cycle of length >= cutoff is seen and
// the returned value is then only guaranteed to be >= cutoff.
int chordality(const Graph& g, int cutoff = 0);
bool has_chordless_cycle_at_least(const Graph& g, int k);

struct Biclique {
  VertexSet top;
  VertexSet bottom;
};

// Complete bipartite subgraph with p vertices on one side and q on the other.
// Tries p on top first, then p on the bottom; within an orientation the
// p-set is the lexicographically least feasible one and the q-set the q
// smallest common neighbours.
std::optional<Biclique> contains_biclique(const BipartiteGraph& g, int p, int q);
bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b);

// Adds vertices in ascending order while the pair stays complete bipartite.
// Throws std::invalid_argument if the seed itself is not complete.
Biclique maximal_biclique_extension(const BipartiteGraph& g, const Biclique& seed);

// First vertex outside m with both a neighbour and a non-neighbour in m.
std::optional<Vertex> distinguishing_vertex(const Graph& g, const VertexSet& m);
bool is_module(const Graph& g, const VertexSet& m);
// Smallest module containing s.
VertexSet module_closure(const Graph& g, VertexSet s);
// Lexicographically least module M with 2 <= |M| < n; nullopt iff g is prime.
std::optional<VertexSet> find_nontrivial_module(const Graph& g);
bool is_prime(const Graph& g);

}  // namespace herencode
