#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "herencode/bits.hpp"
#include "herencode/graph.hpp"

namespace herencode {

// y's adjacency to every vertex outside {y} u U u R is table[pattern], where
// pattern packs (m(U[0],z), ..., m(U[k-1],z)) with U[0] as the high bit.
struct FunctionalWitness {
  Vertex y = 0;
  std::vector<Vertex> U;
  VertexSet R;
  std::vector<bool> table;  // size 2^|U|

  friend bool operator==(const FunctionalWitness&, const FunctionalWitness&) = default;
};

bool check_functional_witness(const Graph& g, const FunctionalWitness& w);

// Search order: |U|+|R| ascending, then |U| ascending, then y, then R, then U
// (sets compared lexicographically). c above `cap` throws ResourceError.
std::optional<FunctionalWitness> find_functional_witness(const Graph& g, unsigned c, unsigned cap = 3);

struct DeltaPair {
  Vertex x = 0;
  Vertex y = 0;
  VertexSet delta;  // N(x) xor N(y)
};

VertexSet neighbourhood_delta(const Graph& g, Vertex x, Vertex y);
// Lexicographically least pair x < y with |N(x) xor N(y)| <= c.
std::optional<DeltaPair> find_delta_pair(const Graph& g, unsigned c);
// U = {x}, R = delta minus {x, y}, identity table.
FunctionalWitness witness_from_delta(const DeltaPair& p);

class NotInClassError : public std::runtime_error {
 public:
  NotInClassError(const std::string& what, Graph residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const Graph& residual() const { return residual_; }

 private:
  Graph residual_;
};

using WitnessFinder = std::function<std::optional<FunctionalWitness>(const Graph&, unsigned c)>;

// Peels one witnessed vertex per step until at most two remain. Step record:
// y, |R|, R entries (id + adjacency bit to y), |U|, U entries likewise, then
// the table padded to 2^c bits. Ids use ceil(log2 n) bits of the original n,
// counts ceil(log2(c+1)) bits. Remaining pair: one adjacency bit.
BitString encode_functional(const Graph& g, unsigned c, const WitnessFinder& finder = {});
Graph decode_functional(const BitString& bits, std::size_t n, unsigned c);

// (2c+1) n ceil(log2 n) + (2^c + 2c) n
double functional_bound(std::size_t n, unsigned c);

struct FunctionalCode {
  std::size_t n = 0;
  unsigned c = 0;
  BitString bits;
};

// 16-byte header: "HFNC", version, c, two reserved bytes, n (u32), bit count
// (u32), all big-endian; then the packed bits. Serialized as lowercase hex.
std::string functional_to_hex(const FunctionalCode& code);
FunctionalCode functional_from_hex(std::string_view hex);

}  // namespace herencode
