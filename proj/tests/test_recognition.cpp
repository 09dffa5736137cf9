#include <doctest.h>

#include "herencode/class_spec.hpp"
#include "herencode/corpus.hpp"
#include "herencode/patterns.hpp"
#include "herencode/recognition.hpp"
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

BipartiteGraph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return BipartiteGraph(g, VertexSet(leaves + 1, {1}));
}

bool is_embedding(const Graph& g, const Graph& h, const Embedding& e) {
  for (Vertex a = 1; a <= h.order(); ++a)
    for (Vertex b = a + 1; b <= h.order(); ++b)
      if (g.adjacent(e[a - 1], e[b - 1]) != h.adjacent(a, b) || e[a - 1] == e[b - 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("induced containment examples") {
  CHECK(contains_induced(path_graph(4), path_graph(3)));
  CHECK_FALSE(contains_induced(cycle_graph(4), pattern_graph(pattern::two_k2())));
  CHECK(contains_induced(pattern_graph(pattern::domino()), cycle_graph(4)));
}

TEST_CASE("induced containment matches brute force on all graphs up to six vertices") {
  const std::vector<Graph> patterns = {path_graph(3), path_graph(4), cycle_graph(4), cycle_graph(5),
                                       pattern_graph(pattern::two_k2()), pattern_graph(pattern::complete(3)),
                                       pattern_graph(pattern::double_star(1, 2))};
  std::vector<oracle::Matrix> pm;
  for (const auto& h : patterns) pm.push_back(oracle::matrix(h));
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) {
      const auto gm = oracle::matrix(g);
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        auto e = contains_induced(g, patterns[i]);
        REQUIRE(static_cast<bool>(e) == oracle::induced(gm, pm[i]));
        if (e) CHECK(is_embedding(g, patterns[i], *e));
      }
    });
}

TEST_CASE("one-sided containment") {
  const BipartiteGraph k13 = star(3);
  const BipartiteGraph p3_mid_bottom(path_graph(3), VertexSet(3, {1, 3}));
  const BipartiteGraph p3_mid_top(path_graph(3), VertexSet(3, {2}));
  // h's bottom goes to g's bottom part.
  CHECK_FALSE(contains_one_sided(k13, p3_mid_bottom, Side::Bottom));
  CHECK(contains_one_sided(k13, p3_mid_top, Side::Bottom));
  const BipartiteGraph c6 = with_canonical_bipartition(cycle_graph(6));
  const BipartiteGraph k12 = pattern_bipartite(pattern::complete_bipartite(1, 2));
  CHECK(contains_one_sided(c6, k12, Side::Bottom));
  CHECK(contains_one_sided(c6, k12, Side::Top));
}

TEST_CASE("one-sided containment matches brute force") {
  const std::vector<BipartiteGraph> patterns = {pattern_bipartite(pattern::n_star(1)),
                                                pattern_bipartite(pattern::m_star(2)),
                                                pattern_bipartite(pattern::kpp_plus_o0p(1)),
                                                pattern_bipartite(pattern::path(5))};
  for (std::size_t a = 1; a <= 4; ++a)
    for (std::size_t b = a; b <= 4; ++b)
      for_each_bipartite(a, b, [](const BipartiteGraph&) { return true; }, [&](const BipartiteGraph& g) {
        const auto gm = oracle::matrix(g.graph());
        const auto gs = oracle::sides(g);
        for (const auto& h : patterns) {
          const auto hm = oracle::matrix(h.graph());
          const auto hs = oracle::sides(h);
          REQUIRE(contains_one_sided(g, h, Side::Bottom) == oracle::sided(gm, gs, hm, hs, false));
          REQUIRE(contains_one_sided(g, h, Side::Top) == oracle::sided(gm, gs, hm, hs, true));
        }
      });
}

TEST_CASE("chordality") {
  CHECK(chordality(cycle_graph(6)) == 6);
  CHECK(chordality(path_graph(7)) == 0);
  CHECK(chordality(pattern_graph(pattern::domino())) == 4);
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_graph(n, [](const Graph& g) {
      const int want = oracle::longest_induced_cycle(oracle::matrix(g));
      REQUIRE(chordality(g) == want);
      for (int k = 3; k <= 7; ++k) REQUIRE(has_chordless_cycle_at_least(g, k) == (want >= k));
    });
}

TEST_CASE("bicliques") {
  CHECK(contains_biclique(with_canonical_bipartition(cycle_graph(4)), 2, 2));
  CHECK_FALSE(contains_biclique(with_canonical_bipartition(path_graph(7)), 2, 2));
  const BipartiteGraph k33e = pattern_bipartite(pattern::k33_minus_edge());
  CHECK(contains_biclique(k33e, 2, 3));

  const BipartiteGraph k33 = pattern_bipartite(pattern::complete_bipartite(3, 3));
  const Biclique seed{VertexSet(6, {1, 2}), VertexSet(6, {4, 5})};
  const Biclique ext = maximal_biclique_extension(k33, seed);
  CHECK(ext.top == k33.top());
  CHECK(ext.bottom == k33.bottom());
  const Biclique again = maximal_biclique_extension(k33, ext);
  CHECK(again.top == ext.top);
  CHECK(again.bottom == ext.bottom);

  // In C6 every maximal biclique containing an edge is a closed P3 star.
  const BipartiteGraph c6 = with_canonical_bipartition(cycle_graph(6));
  const Biclique e = maximal_biclique_extension(c6, Biclique{VertexSet(6, {1}), VertexSet(6, {2})});
  CHECK(e.top.size() * e.bottom.size() == 2);
  CHECK(is_complete_between(c6.graph(), e.top, e.bottom));
}

TEST_CASE("modules and primality") {
  CHECK_FALSE(find_nontrivial_module(path_graph(4)));
  CHECK(is_prime(path_graph(4)));
  CHECK(is_module(cycle_graph(4), VertexSet(4, {1, 3})));
  Graph k2(2);
  k2.add_edge(1, 2);
  CHECK_FALSE(find_nontrivial_module(k2));
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_graph(n, [](const Graph& g) {
      const auto gm = oracle::matrix(g);
      if (g.order() >= 3) REQUIRE(is_prime(g) == oracle::prime(gm));
      if (auto m = find_nontrivial_module(g)) {
        std::uint32_t mask = 0;
        m->for_each([&](Vertex v) { mask |= 1u << (v - 1); });
        REQUIRE(oracle::is_module(gm, mask));
        REQUIRE(m->size() >= 2);
        REQUIRE(m->size() < g.order());
      } else if (g.order() >= 3) {
        REQUIRE(oracle::prime(gm));
      }
    });
}

TEST_CASE("class membership") {
  ClassSpec c4free;
  c4free.forbidden = {pattern::cycle(4)};
  CHECK_FALSE(in_class(cycle_graph(4), c4free));
  ClassSpec p7bip;
  p7bip.bipartite = true;
  p7bip.forbidden = {pattern::path(7)};
  CHECK_FALSE(in_class(path_graph(7), p7bip));
  ClassSpec chainish;
  chainish.forbidden = {pattern::cycle(3), pattern::cycle(5), pattern::two_k2()};
  CHECK(in_class(star(3).graph(), chainish));

  // A disconnected pattern is matched part-preservingly: L(2,2)+O_{0,1}
  // needs its isolated vertex in the part of the K_{2,2} side.
  const BipartiteGraph l22 = pattern_bipartite(pattern::l(2, 2));
  Graph g(l22.order() + 1);
  for (auto [u, v] : l22.graph().edges()) g.add_edge(u, v);
  ClassSpec lfree;
  lfree.bipartite = true;
  lfree.forbidden = {pattern::l_plus_o01(2, 2)};
  VertexSet top_plus = l22.top();
  VertexSet top(g.order());
  top_plus.for_each([&](Vertex v) { top.insert(v); });
  CHECK(in_class(BipartiteGraph(g, top), lfree) == false);
  top.insert(static_cast<Vertex>(g.order()));
  CHECK(in_class(BipartiteGraph(g, top), lfree));
}
