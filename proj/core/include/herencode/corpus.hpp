#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "herencode/graph.hpp"

namespace herencode {

// Every labelled graph on n vertices. Bit i of the mask (i from 0) decides
// the i-th pair (u,v), u < v, in lexicographic order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

// Seeded corpus: n uniform in [1, n_max], each edge present with a
// per-graph density drawn uniformly from [0,1].
std::vector<Graph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t n_max);

// Bipartite graphs with top 1..a and bottom a+1..a+b whose biadjacency rows
// and columns are non-decreasing when read as binary numbers (first entry
// most significant). Every bipartite graph with these part sizes is
// isomorphic, part-preservingly, to at least one of them. `keep` is asked
// about every partial graph (first r top vertices, full bottom) and a false
// answer prunes the branch, so it must be hereditary.
void for_each_bipartite(std::size_t a, std::size_t b, const std::function<bool(const BipartiteGraph&)>& keep,
                        const std::function<void(const BipartiteGraph&)>& visit);

BipartiteGraph bipartite_from_rows(std::size_t b, const std::vector<std::uint32_t>& rows);

}  // namespace herencode
