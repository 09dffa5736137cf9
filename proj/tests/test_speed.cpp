#include <doctest.h>

#include <cmath>

#include "herencode/errors.hpp"
#include "herencode/patterns.hpp"
#include "herencode/speed.hpp"
#include "oracle.hpp"

using namespace herencode;

namespace {

ClassSpec free_of(std::vector<NamedPattern> forbidden) {
  ClassSpec s;
  s.forbidden = std::move(forbidden);
  return s;
}

// Brute force: no K_{p,q} and no O_{p,q} with either part playing p.
bool ramsey_free(const BipartiteGraph& g, int p, int q) {
  const auto m = oracle::matrix(g.graph());
  const auto sides = oracle::sides(g);
  for (bool complete : {true, false}) {
    const BipartiteGraph h = pattern_bipartite(complete ? pattern::complete_bipartite(p, q) : pattern::empty_bipartite(p, q));
    const auto hm = oracle::matrix(h.graph());
    const auto hs = oracle::sides(h);
    if (oracle::sided(m, sides, hm, hs, false) || oracle::sided(m, sides, hm, hs, true)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("labelled counts") {
  for (std::size_t n = 1; n <= 6; ++n)
    CHECK(count_labelled(ClassSpec{}, n) == std::uint64_t{1} << oracle::binomial(static_cast<unsigned>(n), 2));
  const auto bell = oracle::bell(7);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(count_labelled(free_of({pattern::path(3)}), n) == bell[n]);
  CHECK(count_labelled(free_of({pattern::complete(2)}), 5) == 1);
  CHECK(count_labelled(free_of({pattern::path(3)}), 6, 3) == 203);
  CHECK_THROWS_AS(count_labelled(ClassSpec{}, 8), ResourceError);
}

TEST_CASE("speed tables") {
  const SpeedTable t = speed_table("P3-free", free_of({pattern::path(3)}), 4);
  CHECK(t.counts.size() == 4);
  CHECK(t.counts.at(4) == 15);
  const std::string csv = speed_table_csv(t);
  CHECK(csv.rfind("class_id,n,count,bits_per_vertex\n", 0) == 0);
  CHECK(csv.find("P3-free,4,15,") != std::string::npos);
  CHECK(bits_per_vertex(8, 3) == doctest::Approx(std::log2(8.0) / (3 * std::log2(3.0))));
  CHECK(bits_per_vertex(8, 3) == doctest::Approx(0.6309).epsilon(1e-3));
}

TEST_CASE("bipartite Ramsey numbers") {
  CHECK(bipartite_ramsey(1, 1, 5) == 1);
  CHECK_FALSE(ramsey_counterexample(1, 1, 1));

  // A perfect matching on two vertices per part.
  auto m = ramsey_counterexample(1, 2, 2);
  REQUIRE(m);
  CHECK(m->top().size() == 2);
  CHECK(m->bottom().size() == 2);
  CHECK(ramsey_free(*m, 1, 2));
  CHECK(m->graph().edge_count() == 2);

  for (int p = 1; p <= 2; ++p)
    for (int q = p; q <= 2; ++q)
      for (int n = 1; n <= 3; ++n)
        if (auto c = ramsey_counterexample(p, q, n)) CHECK(ramsey_free(*c, p, q));

  if (auto b = bipartite_ramsey(1, 2, 5)) {
    CHECK_FALSE(ramsey_counterexample(1, 2, *b));
    CHECK(ramsey_counterexample(1, 2, *b - 1));
  }
  CHECK_THROWS_AS(bipartite_ramsey(2, 2, 6), ResourceError);
}

TEST_CASE("log inequality") {
  const LogInequality a = evaluate_log_inequality(2, {2, 2});
  CHECK(a.lhs == doctest::Approx(6.0));
  CHECK(a.rhs == doctest::Approx(8.0));
  CHECK(a.holds());
  REQUIRE(a.holds_exact);
  CHECK(*a.holds_exact);

  // Equality when there is one part.
  const LogInequality one = evaluate_log_inequality(1, {3});
  CHECK(one.lhs == doctest::Approx(one.rhs));
  CHECK(one.holds());

  CHECK(check_log_inequality(3, {1, 1, 2}));
  CHECK_THROWS_AS(evaluate_log_inequality(2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_log_inequality(2, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_log_inequality(3, {1, 2}), std::invalid_argument);

  const CompositionSweep s = sweep_compositions(10);
  // Compositions of n with fewer than n parts: 2^(n-1) - 1.
  std::uint64_t want = 0;
  for (unsigned n = 2; n <= 10; ++n) want += (std::uint64_t{1} << (n - 1)) - 1;
  CHECK(s.checked == want);
  CHECK(s.violations == 0);
  CHECK_FALSE(s.first_violation);
}
