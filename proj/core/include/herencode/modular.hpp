#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "herencode/bits.hpp"
#include "herencode/graph.hpp"

namespace herencode {

enum class NodeKind { Leaf, Parallel, Series, Prime };
std::string node_kind_name(NodeKind k);

// Node of a modular decomposition tree. Vertex ids refer to the decomposed
// graph; children are ordered by their smallest vertex and quotient vertex i
// stands for child i.
struct MdNode {
  NodeKind kind = NodeKind::Leaf;
  std::vector<Vertex> vertices;  // ascending
  Graph quotient;                // internal nodes: O_k, K_k or the prime quotient
  std::vector<MdNode> children;

  Vertex leaf() const { return vertices.front(); }
};

MdNode decompose(const Graph& g);
std::size_t node_count(const MdNode& t);

// Contracts each part to one vertex. Throws std::invalid_argument naming a
// distinguishing vertex if a part is not a module, or if the parts do not
// partition V(g).
Graph quotient(const Graph& g, const std::vector<VertexSet>& partition);

class UnsupportedPrimeError : public std::runtime_error {
 public:
  explicit UnsupportedPrimeError(Graph q)
      : std::runtime_error("prime codec cannot encode a " + std::to_string(q.order()) + "-vertex quotient"),
        quotient_(std::move(q)) {}
  const Graph& quotient() const { return quotient_; }

 private:
  Graph quotient_;
};

// Encodes quotient graphs (prime, complete or empty) whose vertex count k is
// known to the decoder from the surrounding record.
class PrimeCodec {
 public:
  virtual ~PrimeCodec() = default;
  virtual std::string name() const = 0;
  virtual bool handles(const Graph& q) const = 0;
  virtual BitString encode(const Graph& q) const = 0;
  // Throws MalformedWordError with a position relative to `bits`.
  virtual Graph decode(const BitString& bits, std::size_t k) const = 0;
};

// Upper-triangle adjacency bits, row by row.
class NaivePrimeCodec : public PrimeCodec {
 public:
  std::string name() const override { return "naive"; }
  bool handles(const Graph&) const override { return true; }
  BitString encode(const Graph& q) const override;
  Graph decode(const BitString& bits, std::size_t k) const override;
};

// Word over {'0','1','|'}: header n^bin '|', then node records in DFS
// pre-order. Leaf: '0' then (vertex-1) in ceil(log2 n) bits. Internal: '1'
// k^bin '|' pc.encode(quotient) '|'. For n = 1 the body is empty.
std::string encode_modular(const Graph& g, const PrimeCodec& pc);
Graph decode_modular(const std::string& word, const PrimeCodec& pc);

// Largest pc-length / (k log2 k) over the internal nodes of t (k >= 2).
double measured_codec_bound(const MdNode& t, const PrimeCodec& pc);

struct LengthReport {
  std::size_t n = 0;
  std::size_t word_length = 0;
  std::size_t header_length = 0;
  std::size_t leaf_contribution = 0;      // n * ceil(log2 n)
  std::size_t internal_contribution = 0;  // everything else after the header
  std::size_t node_count = 0;
  double c = 0;
  double bound = 0;  // (c+2) n log2 n + n + node_count
  bool pass = false;
};

// With c unset, uses measured_codec_bound on g's own tree.
LengthReport check_length_accounting(const Graph& g, const PrimeCodec& pc, std::optional<double> c = std::nullopt);

}  // namespace herencode
