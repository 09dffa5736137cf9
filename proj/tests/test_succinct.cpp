#include <doctest.h>

#include <cmath>

#include "herencode/corpus.hpp"
#include "herencode/errors.hpp"
#include "herencode/patterns.hpp"
#include "herencode/succinct.hpp"
#include "oracle.hpp"

using namespace herencode;

namespace {

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  g.add_edge(1, static_cast<Vertex>(n));
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

// Direct check of the witness definition on the matrix.
bool witness_holds(const Graph& g, const FunctionalWitness& w) {
  const auto m = oracle::matrix(g);
  if (w.table.size() != (1u << w.U.size())) return false;
  std::vector<char> skip(g.order() + 1, 0);
  skip[w.y] = 1;
  for (Vertex u : w.U) skip[u] = 1;
  w.R.for_each([&](Vertex r) { skip[r] = 1; });
  for (Vertex z = 1; z <= g.order(); ++z) {
    if (skip[z]) continue;
    std::size_t pattern = 0;
    for (Vertex u : w.U) pattern = pattern << 1 | static_cast<std::size_t>(m[u - 1][z - 1]);
    if (static_cast<bool>(m[w.y - 1][z - 1]) != w.table[pattern]) return false;
  }
  return true;
}

double bound(std::size_t n, unsigned c) {
  const double l = n > 1 ? std::ceil(std::log2(static_cast<double>(n))) : 0;
  return (2.0 * c + 1) * n * l + (std::pow(2.0, c) + 2.0 * c) * n;
}

}  // namespace

TEST_CASE("functional witnesses") {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  auto iso = find_functional_witness(g, 0);
  REQUIRE(iso);
  CHECK(iso->y == 4);
  CHECK(iso->U.empty());
  CHECK(iso->R.empty());
  CHECK(iso->table == std::vector<bool>{false});

  CHECK_FALSE(find_functional_witness(cycle_graph(5), 0));
  // For y = 1, U = {3} with R = {2} already works.
  auto c51 = find_functional_witness(cycle_graph(5), 1);
  REQUIRE(c51);
  CHECK(witness_holds(cycle_graph(5), *c51));
  auto c5 = find_functional_witness(cycle_graph(5), 2);
  REQUIRE(c5);
  CHECK(c5->y == 1);
  CHECK(c5->U.empty());
  CHECK(c5->R == VertexSet(5, {2, 5}));
  CHECK(witness_holds(cycle_graph(5), *c5));

  // 1 and 2 are false twins: both adjacent to exactly 3 and 4.
  Graph twins(4);
  for (Vertex a : {1, 2})
    for (Vertex b : {3, 4}) twins.add_edge(a, b);
  auto t = find_functional_witness(twins, 1);
  REQUIRE(t);
  CHECK(witness_holds(twins, *t));

  CHECK_THROWS_AS(find_functional_witness(cycle_graph(5), 4), ResourceError);

  for (std::size_t n = 1; n <= 6; ++n)
    for_each_graph(n, [](const Graph& h) {
      for (unsigned c = 0; c <= 2; ++c)
        if (auto w = find_functional_witness(h, c)) {
          REQUIRE(w->U.size() <= c);
          REQUIRE(w->R.size() <= c);
          REQUIRE(witness_holds(h, *w));
          REQUIRE(check_functional_witness(h, *w));
        }
    });
}

TEST_CASE("delta pairs") {
  const BipartiteGraph k22 = pattern_bipartite(pattern::complete_bipartite(2, 2));
  auto p = find_delta_pair(k22.graph(), 0);
  REQUIRE(p);
  CHECK(p->delta.empty());

  auto p4 = find_delta_pair(path_graph(4), 1);
  REQUIRE(p4);
  CHECK(p4->x == 1);
  CHECK(p4->y == 3);
  CHECK(p4->delta == VertexSet(4, {4}));
  CHECK(witness_holds(path_graph(4), witness_from_delta(*p4)));

  CHECK_FALSE(find_delta_pair(cycle_graph(5), 1));
  CHECK(find_delta_pair(cycle_graph(5), 2));

  for (std::size_t n = 2; n <= 6; ++n)
    for_each_graph(n, [](const Graph& h) {
      const auto m = oracle::matrix(h);
      std::size_t best = h.order();
      for (std::size_t x = 0; x < h.order(); ++x)
        for (std::size_t y = x + 1; y < h.order(); ++y) best = std::min(best, oracle::symmetric_difference(m, x, y));
      for (unsigned c = 0; c <= 3; ++c) {
        auto d = find_delta_pair(h, c);
        REQUIRE(static_cast<bool>(d) == (best <= c));
        if (d) {
          REQUIRE(oracle::symmetric_difference(m, d->x - 1, d->y - 1) == d->delta.size());
          REQUIRE(witness_holds(h, witness_from_delta(*d)));
        }
      }
    });
}

TEST_CASE("functional codec") {
  for (std::size_t n : {1, 2, 5, 9}) {
    const BitString e = encode_functional(Graph(n), 0);
    CHECK(decode_functional(e, n, 0) == Graph(n));
    const BitString k = encode_functional(complete_graph(n), 0);
    CHECK(decode_functional(k, n, 0) == complete_graph(n));
  }
  CHECK_THROWS_AS(encode_functional(path_graph(4), 0), NotInClassError);
  const BitString p4 = encode_functional(path_graph(4), 1);
  CHECK(decode_functional(p4, 4, 1) == path_graph(4));
  const BipartiteGraph k33 = pattern_bipartite(pattern::complete_bipartite(3, 3));
  CHECK(decode_functional(encode_functional(k33.graph(), 1), 6, 1) == k33.graph());

  try {
    encode_functional(cycle_graph(5), 0);
    FAIL("expected NotInClassError");
  } catch (const NotInClassError& e) {
    CHECK(e.residual().order() == 5);
  }

  BitString cut;
  for (std::size_t i = 0; i + 1 < p4.size(); ++i) cut.push_back(p4[i]);
  CHECK_THROWS_AS(decode_functional(cut, 4, 1), MalformedWordError);
  BitString longer = p4;
  longer.push_back(false);
  CHECK_THROWS_AS(decode_functional(longer, 4, 1), MalformedWordError);

  CHECK(functional_bound(8, 2) == doctest::Approx(bound(8, 2)));
}

TEST_CASE("functional codec round trip on all graphs up to five vertices") {
  std::size_t encoded = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      BitString bits;
      try {
        bits = encode_functional(g, 2);
      } catch (const NotInClassError&) {
        return;
      }
      ++encoded;
      REQUIRE(decode_functional(bits, n, 2) == g);
      REQUIRE(static_cast<double>(bits.size()) <= bound(n, 2));
    });
  CHECK(encoded > 0);
}

TEST_CASE("functional hex container") {
  const FunctionalCode code{4, 1, encode_functional(path_graph(4), 1)};
  const std::string hex = functional_to_hex(code);
  CHECK(hex.substr(0, 8) == "48464e43");
  const FunctionalCode back = functional_from_hex(hex);
  CHECK(back.n == 4);
  CHECK(back.c == 1);
  CHECK(back.bits == code.bits);
  CHECK_THROWS(functional_from_hex(hex.substr(0, 10)));
  CHECK_THROWS(functional_from_hex("zz"));
}
