#include "herencode/corpus.hpp"

#include <random>
#include <stdexcept>

namespace herencode {

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  unsigned bit = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v, ++bit)
      if ((mask >> bit) & 1) g.add_edge(u, v);
  return g;
}

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (pairs > 40) throw std::invalid_argument("too many graphs to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) visit(graph_from_mask(n, mask));
}

std::vector<Graph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("n_max must be positive");
  std::mt19937_64 rng(seed);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng() % n_max;
    const double density = unit();
    Graph g(n);
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (unit() < density) g.add_edge(u, v);
    out.push_back(std::move(g));
  }
  return out;
}

BipartiteGraph bipartite_from_rows(std::size_t b, const std::vector<std::uint32_t>& rows) {
  const std::size_t a = rows.size();
  Graph g(a + b);
  VertexSet top(a + b);
  for (std::size_t i = 0; i < a; ++i) {
    top.insert(static_cast<Vertex>(i + 1));
    for (std::size_t j = 0; j < b; ++j)
      if ((rows[i] >> (b - 1 - j)) & 1) g.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(a + j + 1));
  }
  return BipartiteGraph(std::move(g), std::move(top));
}

namespace {

class BipartiteEnumerator {
 public:
  BipartiteEnumerator(std::size_t a, std::size_t b, const std::function<bool(const BipartiteGraph&)>& keep,
                      const std::function<void(const BipartiteGraph&)>& visit)
      : a_(a), b_(b), keep_(keep), visit_(visit) {}

  void run() {
    if (b_ > 31) throw std::invalid_argument("bottom part too large");
    // tie[j]: columns j and j+1 agree on every row so far.
    std::vector<char> tie(b_ > 0 ? b_ - 1 : 0, 1);
    extend(0, tie);
  }

 private:
  void extend(std::uint32_t min_row, const std::vector<char>& tie) {
    if (rows_.size() == a_) {
      visit_(bipartite_from_rows(b_, rows_));
      return;
    }
    const std::uint32_t limit = std::uint32_t{1} << b_;
    for (std::uint32_t r = min_row; r < limit; ++r) {
      std::vector<char> next = tie;
      bool ok = true;
      for (std::size_t j = 0; j + 1 < b_ && ok; ++j) {
        if (!tie[j]) continue;
        const bool x = (r >> (b_ - 1 - j)) & 1;
        const bool y = (r >> (b_ - 2 - j)) & 1;
        if (x && !y) ok = false;
        else if (x != y) next[j] = 0;
      }
      if (!ok) continue;
      rows_.push_back(r);
      if (keep_(bipartite_from_rows(b_, rows_))) extend(r, next);
      rows_.pop_back();
    }
  }

  std::size_t a_, b_;
  const std::function<bool(const BipartiteGraph&)>& keep_;
  const std::function<void(const BipartiteGraph&)>& visit_;
  std::vector<std::uint32_t> rows_;
};

}  // namespace

void for_each_bipartite(std::size_t a, std::size_t b, const std::function<bool(const BipartiteGraph&)>& keep,
                        const std::function<void(const BipartiteGraph&)>& visit) {
  BipartiteEnumerator(a, b, keep, visit).run();
}

}  // namespace herencode
