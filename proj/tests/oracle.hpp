#pragma once

// Brute-force reference implementations used as test oracles. They work on
// plain adjacency matrices and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "herencode/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix(const herencode::Graph& g) {
  const std::size_t n = g.order();
  Matrix m(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m[i][j] = g.adjacent(static_cast<herencode::Vertex>(i + 1), static_cast<herencode::Vertex>(j + 1));
  return m;
}

inline Matrix from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Matrix m(n, std::vector<char>(n, 0));
  for (auto [u, v] : edges) m[u - 1][v - 1] = m[v - 1][u - 1] = 1;
  return m;
}

// Side of each vertex: true for top.
using Sides = std::vector<char>;

inline Sides sides(const herencode::BipartiteGraph& g) {
  Sides s(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) s[i] = g.top().contains(static_cast<herencode::Vertex>(i + 1));
  return s;
}

// Tries every injective map of h into g. `allowed(hv, gv)` restricts images.
inline bool any_embedding(const Matrix& g, const Matrix& h, const std::function<bool(std::size_t, std::size_t)>& allowed) {
  const std::size_t n = g.size(), k = h.size();
  if (k > n) return false;
  std::vector<std::size_t> img(k);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || !allowed(i, v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = g[v][img[j]] == h[i][j];
      if (!ok) continue;
      used[v] = 1;
      img[i] = v;
      if (rec(i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return rec(0);
}

inline bool induced(const Matrix& g, const Matrix& h) {
  return any_embedding(g, h, [](std::size_t, std::size_t) { return true; });
}

// h's bottom part must land in g's part `bottom_to_top ? top : bottom`, and
// h's top in the other part.
inline bool sided(const Matrix& g, const Sides& gs, const Matrix& h, const Sides& hs, bool bottom_to_top) {
  return any_embedding(g, h, [&](std::size_t hv, std::size_t gv) {
    const bool h_top = hs[hv];
    const bool want_top = h_top ? !bottom_to_top : bottom_to_top;
    return static_cast<bool>(gs[gv]) == want_top;
  });
}

inline bool is_module(const Matrix& g, std::uint32_t mask) {
  const std::size_t n = g.size();
  for (std::size_t z = 0; z < n; ++z) {
    if (mask >> z & 1) continue;
    int seen = -1;
    for (std::size_t m = 0; m < n; ++m) {
      if (!(mask >> m & 1)) continue;
      if (seen == -1) seen = g[z][m];
      else if (seen != g[z][m]) return false;
    }
  }
  return true;
}

inline bool prime(const Matrix& g) {
  const std::size_t n = g.size();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int c = __builtin_popcount(mask);
    if (c >= 2 && c < static_cast<int>(n) && is_module(g, mask)) return false;
  }
  return true;
}

// Length of the longest induced cycle, 0 if none.
inline int longest_induced_cycle(const Matrix& g) {
  const std::size_t n = g.size();
  int best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int c = __builtin_popcount(mask);
    if (c < 3 || c <= best) continue;
    bool all_two = true;
    std::size_t start = n;
    for (std::size_t v = 0; v < n && all_two; ++v) {
      if (!(mask >> v & 1)) continue;
      int d = 0;
      for (std::size_t u = 0; u < n; ++u)
        if ((mask >> u & 1) && g[v][u]) ++d;
      all_two = d == 2;
      start = std::min(start, v);
    }
    if (!all_two) continue;
    // 2-regular: a cycle iff connected.
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::size_t v = 0; v < n; ++v)
        if (frontier >> v & 1)
          for (std::size_t u = 0; u < n; ++u)
            if ((mask >> u & 1) && g[v][u] && !(seen >> u & 1)) next |= 1u << u;
      seen |= next;
      frontier = next;
    }
    if (seen == mask) best = c;
  }
  return best;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Bell numbers via the Bell triangle.
inline std::vector<std::uint64_t> bell(std::size_t count) {
  std::vector<std::uint64_t> out;
  std::vector<std::uint64_t> row = {1};
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(row.front());
    std::vector<std::uint64_t> next = {row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return out;
}

inline std::size_t symmetric_difference(const Matrix& g, std::size_t x, std::size_t y) {
  std::size_t d = 0;
  for (std::size_t z = 0; z < g.size(); ++z) d += g[x][z] != g[y][z];
  return d;
}

}  // namespace oracle
