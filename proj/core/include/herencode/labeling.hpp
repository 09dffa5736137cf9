#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "herencode/bits.hpp"
#include "herencode/graph.hpp"

namespace herencode {

enum class SchemeKind { Degeneracy, BipartiteDegeneracy, Biclique, Covering, Peeling };
std::string scheme_kind_name(SchemeKind k);

// Everything adjacency_query needs besides the two labels. Declared label
// length bound: C * ceil(log2 n) + constant.
struct SchemeDescriptor {
  SchemeKind kind = SchemeKind::Degeneracy;
  std::size_t n = 0;
  unsigned d = 0;           // list bound; for coverings the multiplicity c
  std::size_t parts = 0;    // coverings: number of parts; peelings: number of layers
  bool bipartite = false;   // peelings: side bits present, co-degree taken in the opposite part
  std::size_t C = 0;
  std::size_t constant = 0;
  std::vector<SchemeDescriptor> inner;  // coverings: one per part; peelings: one per layer

  friend bool operator==(const SchemeDescriptor&, const SchemeDescriptor&) = default;
};

struct LabelingScheme {
  SchemeDescriptor descriptor;
  std::vector<BitString> labels;  // labels[v-1]

  std::size_t max_label_length() const;
  std::size_t declared_bound() const;
};

// Throws MalformedWordError when a label does not parse under the descriptor.
bool adjacency_query(const SchemeDescriptor& desc, const BitString& lu, const BitString& lv);

// Exhaustive pair check plus the declared length bound; the reason on failure.
std::optional<std::string> verify_scheme(const Graph& g, const LabelingScheme& s);

struct OrderStep {
  Vertex v = 0;
  bool few_non_neighbours = false;
};

// Least eligible vertex first. The flag picks the shorter list, neighbours on ties.
std::optional<std::vector<OrderStep>> degeneracy_order(const Graph& g, unsigned d);
// Same with co-degree measured in the opposite part only.
std::optional<std::vector<OrderStep>> bipartite_degeneracy_order(const BipartiteGraph& g, unsigned d);
unsigned least_degeneracy(const Graph& g);
unsigned least_bipartite_degeneracy(const BipartiteGraph& g);

// Throw SchemeUnavailableError naming the stuck suffix.
LabelingScheme label_by_degeneracy(const Graph& g, unsigned d);
LabelingScheme label_by_bipartite_degeneracy(const BipartiteGraph& g, unsigned d);
// One side bit per vertex; requires g complete bipartite (InvariantError otherwise).
LabelingScheme label_biclique(const BipartiteGraph& g);

// Parts are subgraphs of the covered graph whose vertex labels name vertices
// of that graph (by its own labels).
struct Covering {
  std::vector<Graph> parts;
  unsigned multiplicity = 0;
};

// Reason when cov is not a covering of g with the stated multiplicity.
std::optional<std::string> check_covering(const Graph& g, const Covering& cov);

// Spanning forests peeled off the remaining edges by DFS. The first forest
// keeps every vertex so isolated vertices stay covered; later ones keep
// their non-isolated vertices.
Covering forest_cover(const Graph& g);

LabelingScheme combine_covering(const Graph& g, const Covering& cov, const std::vector<LabelingScheme>& sub);

struct Peeling {
  std::vector<VertexSet> layers;
  std::vector<bool> few_non_neighbours;  // per vertex, index v-1
  unsigned d = 0;
  std::optional<VertexSet> top;  // bipartite mode
};

// Computes flags (neighbours preferred); throws CertificateInvalidError
// naming the first vertex that violates both bounds.
Peeling make_peeling(const Graph& g, std::vector<VertexSet> layers, unsigned d,
                     std::optional<VertexSet> top = std::nullopt);
std::optional<std::string> check_peeling(const Graph& g, const Peeling& peel);

using SchemeBuilder = std::function<LabelingScheme(const Graph& layer_graph, std::size_t layer_index)>;
LabelingScheme combine_peeling(const Graph& g, const Peeling& peel, const SchemeBuilder& inner);

// {"scheme":{...},"labels":{"1":{"bits":7,"hex":"a4"},...}}
std::string bundle_to_json(const LabelingScheme& s);
LabelingScheme bundle_from_json(std::string_view text);

}  // namespace herencode
