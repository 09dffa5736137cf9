#include "herencode/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace herencode {

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& g, const Graph& h, const std::vector<VertexSet>* domains)
      : g_(g), h_(h), domains_(domains) {
    const std::size_t k = h.order();
    order_.resize(k);
    std::iota(order_.begin(), order_.end(), Vertex{1});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    image_.assign(k, 0);
    cand_.assign(k, VertexSet(g.order()));
    used_ = VertexSet(g.order());
    base_ = VertexSet(g.order());
    for (Vertex v = 1; v <= g.order(); ++v) base_.insert(v);
  }

  std::optional<Embedding> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    if (h_.order() == 0) return Embedding{};
    if (!place(0)) return std::nullopt;
    return image_;
  }

 private:
  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    VertexSet& cand = cand_[depth];
    cand = base_;
    cand -= used_;
    if (domains_) cand &= (*domains_)[x - 1];
    for (std::size_t i = 0; i < depth && !cand.empty(); ++i) {
      const Vertex y = order_[i];
      const VertexSet& ny = g_.neighbours(image_[y - 1]);
      if (h_.adjacent(x, y)) cand &= ny;
      else cand -= ny;
    }
    const std::size_t need_deg = h_.degree(x);
    const std::size_t need_codeg = h_.order() - 1 - need_deg;
    for (Vertex v = cand.first(); v != 0; v = cand.next(v)) {
      if (g_.degree(v) < need_deg || g_.co_degree(v) < need_codeg) continue;
      image_[x - 1] = v;
      used_.insert(v);
      if (place(depth + 1)) return true;
      used_.erase(v);
    }
    image_[x - 1] = 0;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const std::vector<VertexSet>* domains_;
  std::vector<Vertex> order_;
  Embedding image_;
  std::vector<VertexSet> cand_;
  VertexSet used_;
  VertexSet base_;
};

}  // namespace

std::optional<Embedding> contains_induced(const Graph& g, const Graph& h) {
  return EmbeddingSearch(g, h, nullptr).run();
}

std::optional<Embedding> find_embedding(const Graph& g, const Graph& h, const std::vector<VertexSet>& domains) {
  if (domains.size() != h.order()) throw std::invalid_argument("one domain per pattern vertex required");
  return EmbeddingSearch(g, h, &domains).run();
}

std::optional<Embedding> find_one_sided(const BipartiteGraph& g, const BipartiteGraph& h, Side side) {
  std::vector<VertexSet> domains;
  domains.reserve(h.order());
  for (Vertex x = 1; x <= h.order(); ++x)
    domains.push_back(h.side(x) == Side::Bottom ? g.part(side) : g.part(other(side)));
  return find_embedding(g.graph(), h.graph(), domains);
}

bool contains_one_sided(const BipartiteGraph& g, const BipartiteGraph& h, Side side) {
  return find_one_sided(g, h, side).has_value();
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int cutoff) : g_(g), cutoff_(cutoff) {}

  int run() {
    const std::size_t n = g_.order();
    for (Vertex s = 1; s <= n && !done(); ++s) {
      allowed_ = VertexSet(n);
      for (Vertex v = s + 1; v <= n; ++v) allowed_.insert(v);
      start_ = s;
      const VertexSet first = g_.neighbours(s) & allowed_;
      for (Vertex v1 = first.first(); v1 != 0 && !done(); v1 = first.next(v1)) {
        path_ = VertexSet(n);
        path_.insert(s);
        path_.insert(v1);
        extend(v1, VertexSet(n), 2);
      }
    }
    return best_;
  }

 private:
  bool done() const { return cutoff_ > 0 && best_ >= cutoff_; }

  // `blocked` = union of neighbourhoods of interior path vertices (not s, not end).
  void extend(Vertex end, const VertexSet& blocked, int length) {
    if (done()) return;
    VertexSet cand = g_.neighbours(end) & allowed_;
    cand -= path_;
    cand -= blocked;
    VertexSet next_blocked = blocked | g_.neighbours(end);
    for (Vertex w = cand.first(); w != 0 && !done(); w = cand.next(w)) {
      if (g_.adjacent(w, start_)) {
        best_ = std::max(best_, length + 1);
        continue;
      }
      path_.insert(w);
      extend(w, next_blocked, length + 1);
      path_.erase(w);
    }
  }

  const Graph& g_;
  int cutoff_;
  int best_ = 0;
  Vertex start_ = 0;
  VertexSet allowed_;
  VertexSet path_;
};

}  // namespace

int chordality(const Graph& g, int cutoff) { return CycleSearch(g, cutoff).run(); }

bool has_chordless_cycle_at_least(const Graph& g, int k) {
  if (k > static_cast<int>(g.order())) return false;
  return chordality(g, std::max(k, 3)) >= k;
}

bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex v = a.first(); v != 0; v = a.next(v))
    if (!b.is_subset_of(g.neighbours(v))) return false;
  return true;
}

namespace {

// Lexicographically least p-subset of `pool` whose common neighbourhood inside
// `other` has at least q vertices.
bool choose_subset(const Graph& g, const VertexSet& pool, const VertexSet& common, int p, int q, Vertex from,
                   std::vector<Vertex>& chosen, VertexSet& result_common) {
  if (static_cast<int>(chosen.size()) == p) {
    result_common = common;
    return true;
  }
  for (Vertex v = from == 0 ? pool.first() : pool.next(from); v != 0; v = pool.next(v)) {
    VertexSet c = common & g.neighbours(v);
    if (static_cast<int>(c.size()) < q) continue;
    chosen.push_back(v);
    if (choose_subset(g, pool, c, p, q, v, chosen, result_common)) return true;
    chosen.pop_back();
  }
  return false;
}

std::optional<std::pair<VertexSet, VertexSet>> oriented_biclique(const BipartiteGraph& g, Side pside, int p, int q) {
  const VertexSet& pool = g.part(pside);
  const VertexSet& other_part = g.part(other(pside));
  std::vector<Vertex> chosen;
  VertexSet common;
  if (!choose_subset(g.graph(), pool, other_part, p, q, 0, chosen, common)) return std::nullopt;
  VertexSet ps(g.order(), chosen);
  VertexSet qs(g.order());
  int taken = 0;
  for (Vertex v = common.first(); v != 0 && taken < q; v = common.next(v), ++taken) qs.insert(v);
  return std::make_pair(ps, qs);
}

}  // namespace

std::optional<Biclique> contains_biclique(const BipartiteGraph& g, int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("biclique sides must be positive");
  if (auto r = oriented_biclique(g, Side::Top, p, q)) return Biclique{r->first, r->second};
  if (auto r = oriented_biclique(g, Side::Bottom, p, q)) return Biclique{r->second, r->first};
  return std::nullopt;
}

Biclique maximal_biclique_extension(const BipartiteGraph& g, const Biclique& seed) {
  if (!seed.top.is_subset_of(g.top()) || !seed.bottom.is_subset_of(g.bottom()))
    throw std::invalid_argument("seed sets must lie in top and bottom respectively");
  if (!is_complete_between(g.graph(), seed.top, seed.bottom))
    throw std::invalid_argument("seed is not complete bipartite");
  Biclique out = seed;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (out.top.contains(v) || out.bottom.contains(v)) continue;
    if (g.top().contains(v)) {
      if (out.bottom.is_subset_of(g.neighbours(v))) out.top.insert(v);
    } else if (out.top.is_subset_of(g.neighbours(v))) {
      out.bottom.insert(v);
    }
  }
  return out;
}

std::optional<Vertex> distinguishing_vertex(const Graph& g, const VertexSet& m) {
  for (Vertex w = 1; w <= g.order(); ++w) {
    if (m.contains(w)) continue;
    const VertexSet& nw = g.neighbours(w);
    if (nw.intersects(m) && !m.is_subset_of(nw)) return w;
  }
  return std::nullopt;
}

bool is_module(const Graph& g, const VertexSet& m) { return !distinguishing_vertex(g, m).has_value(); }

VertexSet module_closure(const Graph& g, VertexSet s) {
  for (;;) {
    VertexSet add(g.order());
    for (Vertex w = 1; w <= g.order(); ++w) {
      if (s.contains(w)) continue;
      const VertexSet& nw = g.neighbours(w);
      if (nw.intersects(s) && !s.is_subset_of(nw)) add.insert(w);
    }
    if (add.empty()) return s;
    s |= add;
  }
}

std::optional<VertexSet> find_nontrivial_module(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  auto only_prefix_below = [](const VertexSet& c, const VertexSet& prefix, Vertex bound) {
    for (Vertex v = c.first(); v != 0 && v < bound; v = c.next(v))
      if (!prefix.contains(v)) return false;
    return true;
  };
  for (Vertex m1 = 1; m1 <= n; ++m1) {
    for (Vertex m2 = m1 + 1; m2 <= n; ++m2) {
      VertexSet s(n, {m1, m2});
      VertexSet c = module_closure(g, s);
      if (c.size() == n || !only_prefix_below(c, s, m2)) continue;
      // Grow the prefix greedily with the smallest feasible next vertex.
      Vertex last = m2;
      for (;;) {
        if (c == s) return s;
        VertexSet rest = c - s;
        const Vertex limit = rest.first();
        for (Vertex x = last + 1; x <= limit; ++x) {
          VertexSet t = s;
          t.insert(x);
          VertexSet cx = module_closure(g, t);
          if (cx.size() == n || !only_prefix_below(cx, t, x)) continue;
          s = t;
          c = cx;
          last = x;
          break;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_prime(const Graph& g) { return !find_nontrivial_module(g).has_value(); }

}  // namespace herencode
