#include "herencode/succinct.hpp"

#include <algorithm>
#include <cmath>

#include "herencode/errors.hpp"

namespace herencode {

namespace {

std::size_t pattern_of(const Graph& g, const std::vector<Vertex>& U, Vertex z) {
  std::size_t idx = 0;
  for (Vertex x : U) idx = (idx << 1) | (g.adjacent(x, z) ? 1 : 0);
  return idx;
}

// Fills the table if y is a function of U outside the excluded set.
bool fit_table(const Graph& g, Vertex y, const std::vector<Vertex>& U, const VertexSet& excluded,
               std::vector<bool>& table) {
  table.assign(std::size_t{1} << U.size(), false);
  std::vector<char> seen(table.size(), 0);
  for (Vertex z = 1; z <= g.order(); ++z) {
    if (excluded.contains(z)) continue;
    const std::size_t idx = pattern_of(g, U, z);
    const bool val = g.adjacent(y, z);
    if (seen[idx] && table[idx] != val) return false;
    seen[idx] = 1;
    table[idx] = val;
  }
  return true;
}

// Calls f on every r-subset of pool in lexicographic order until it returns true.
template <class F>
bool for_each_subset(const std::vector<Vertex>& pool, std::size_t r, std::vector<Vertex>& cur, std::size_t from,
                     F&& f) {
  if (cur.size() == r) return f(cur);
  for (std::size_t i = from; i + (r - cur.size()) <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    if (for_each_subset(pool, r, cur, i + 1, f)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

bool check_functional_witness(const Graph& g, const FunctionalWitness& w) {
  if (w.y < 1 || w.y > g.order()) return false;
  if (w.R.universe() != g.order() || w.R.contains(w.y)) return false;
  if (w.table.size() != (std::size_t{1} << w.U.size())) return false;
  VertexSet excluded = w.R;
  excluded.insert(w.y);
  for (Vertex x : w.U) {
    if (x < 1 || x > g.order() || excluded.contains(x)) return false;
    excluded.insert(x);
  }
  for (Vertex z = 1; z <= g.order(); ++z) {
    if (excluded.contains(z)) continue;
    if (w.table[pattern_of(g, w.U, z)] != g.adjacent(w.y, z)) return false;
  }
  return true;
}

std::optional<FunctionalWitness> find_functional_witness(const Graph& g, unsigned c, unsigned cap) {
  if (c > cap) throw ResourceError("witness search with c=" + std::to_string(c) + " exceeds the cap of " +
                                   std::to_string(cap));
  const std::size_t n = g.order();
  for (unsigned total = 0; total <= 2 * c; ++total) {
    for (unsigned u = total > c ? total - c : 0; u <= std::min(c, total); ++u) {
      const unsigned r = total - u;
      if (static_cast<std::size_t>(total) + 1 > n) continue;
      for (Vertex y = 1; y <= n; ++y) {
        std::vector<Vertex> pool;
        for (Vertex v = 1; v <= n; ++v)
          if (v != y) pool.push_back(v);
        std::optional<FunctionalWitness> found;
        std::vector<Vertex> rs;
        for_each_subset(pool, r, rs, 0, [&](const std::vector<Vertex>& rset) {
          VertexSet R(n, rset);
          std::vector<Vertex> upool;
          for (Vertex v : pool)
            if (!R.contains(v)) upool.push_back(v);
          std::vector<Vertex> us;
          return for_each_subset(upool, u, us, 0, [&](const std::vector<Vertex>& uset) {
            VertexSet excluded = R;
            excluded.insert(y);
            for (Vertex x : uset) excluded.insert(x);
            std::vector<bool> table;
            if (!fit_table(g, y, uset, excluded, table)) return false;
            found = FunctionalWitness{y, uset, R, table};
            return true;
          });
        });
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

VertexSet neighbourhood_delta(const Graph& g, Vertex x, Vertex y) { return g.neighbours(x) ^ g.neighbours(y); }

std::optional<DeltaPair> find_delta_pair(const Graph& g, unsigned c) {
  for (Vertex x = 1; x <= g.order(); ++x)
    for (Vertex y = x + 1; y <= g.order(); ++y) {
      VertexSet d = neighbourhood_delta(g, x, y);
      if (d.size() <= c) return DeltaPair{x, y, d};
    }
  return std::nullopt;
}

FunctionalWitness witness_from_delta(const DeltaPair& p) {
  FunctionalWitness w;
  w.y = p.y;
  w.U = {p.x};
  w.R = p.delta;
  w.R.erase(p.x);
  w.R.erase(p.y);
  w.table = {false, true};
  return w;
}

double functional_bound(std::size_t n, unsigned c) {
  const double nn = static_cast<double>(n);
  return (2.0 * c + 1) * nn * ceil_log2(n) + (std::pow(2.0, c) + 2.0 * c) * nn;
}

BitString encode_functional(const Graph& g, unsigned c, const WitnessFinder& finder) {
  const std::size_t n = g.order();
  const unsigned w = ceil_log2(n);
  const unsigned cw = ceil_log2(static_cast<std::uint64_t>(c) + 1);
  BitString out;
  Graph h = g;  // labels track original ids
  while (h.order() > 2) {
    auto wit = finder ? finder(h, c) : find_functional_witness(h, c);
    if (!wit) throw NotInClassError("no functional witness with c=" + std::to_string(c) + " in a residual graph of " +
                                        std::to_string(h.order()) + " vertices",
                                    h);
    if (!check_functional_witness(h, *wit) || wit->R.size() > c || wit->U.size() > c)
      throw InvariantError("witness finder returned an invalid witness");
    out.append(h.label(wit->y) - 1, w);
    out.append(wit->R.size(), cw);
    wit->R.for_each([&](Vertex r) {
      out.append(h.label(r) - 1, w);
      out.push_back(h.adjacent(wit->y, r));
    });
    out.append(wit->U.size(), cw);
    for (Vertex x : wit->U) {
      out.append(h.label(x) - 1, w);
      out.push_back(h.adjacent(wit->y, x));
    }
    for (std::size_t i = 0; i < (std::size_t{1} << c); ++i) out.push_back(i < wit->table.size() && wit->table[i]);
    VertexSet keep = h.vertices();
    keep.erase(wit->y);
    h = induced_subgraph(h, keep);
  }
  if (h.order() == 2) out.push_back(h.adjacent(1, 2));
  return out;
}

namespace {

struct Step {
  Vertex y = 0;
  std::vector<std::pair<Vertex, bool>> R;
  std::vector<std::pair<Vertex, bool>> U;
  std::vector<bool> table;
  VertexSet present;  // vertices present when y was removed, y included
};

}  // namespace

Graph decode_functional(const BitString& bits, std::size_t n, unsigned c) {
  if (c > 16) throw MalformedWordError("c too large", 0);
  const unsigned w = ceil_log2(n);
  const unsigned cw = ceil_log2(static_cast<std::uint64_t>(c) + 1);
  BitReader r(bits);
  VertexSet present = VertexSet::full(n);
  std::vector<Step> steps;
  auto read_vertex = [&](const VertexSet& taken) {
    const std::size_t at = r.position();
    const std::uint64_t v = r.read(w);
    if (v >= n) throw MalformedWordError("vertex id out of range", at);
    const Vertex x = static_cast<Vertex>(v + 1);
    if (!present.contains(x)) throw MalformedWordError("vertex already removed", at);
    if (taken.contains(x)) throw MalformedWordError("vertex repeated within a step", at);
    return x;
  };
  while (present.size() > 2) {
    Step s;
    s.present = present;
    VertexSet taken(n);
    s.y = read_vertex(taken);
    taken.insert(s.y);
    for (auto* list : {&s.R, &s.U}) {
      const std::size_t at = r.position();
      const std::uint64_t cnt = r.read(cw);
      if (cnt > c) throw MalformedWordError("set larger than c", at);
      for (std::uint64_t i = 0; i < cnt; ++i) {
        const Vertex x = read_vertex(taken);
        taken.insert(x);
        list->emplace_back(x, r.read_bit());
      }
    }
    for (std::size_t i = 0; i < (std::size_t{1} << c); ++i) s.table.push_back(r.read_bit());
    present.erase(s.y);
    steps.push_back(std::move(s));
  }
  Graph g(n);
  if (present.size() == 2) {
    const Vertex a = present.first(), b = present.next(a);
    if (r.read_bit()) g.add_edge(a, b);
  }
  if (!r.at_end()) throw MalformedWordError("trailing bits", r.position());
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const Step& s = *it;
    VertexSet excluded(n);
    excluded.insert(s.y);
    for (auto [x, a] : s.R) {
      excluded.insert(x);
      if (a) g.add_edge(s.y, x);
    }
    std::vector<Vertex> U;
    for (auto [x, a] : s.U) {
      excluded.insert(x);
      U.push_back(x);
      if (a) g.add_edge(s.y, x);
    }
    VertexSet rest = s.present - excluded;
    rest.for_each([&](Vertex z) {
      if (s.table[pattern_of(g, U, z)]) g.add_edge(s.y, z);
    });
  }
  return g;
}

std::string functional_to_hex(const FunctionalCode& code) {
  std::vector<std::uint8_t> bytes = {'H', 'F', 'N', 'C', 1, static_cast<std::uint8_t>(code.c), 0, 0};
  auto put32 = [&](std::uint64_t v) {
    for (int s = 24; s >= 0; s -= 8) bytes.push_back(static_cast<std::uint8_t>((v >> s) & 0xff));
  };
  put32(code.n);
  put32(code.bits.size());
  const auto body = code.bits.to_bytes();
  bytes.insert(bytes.end(), body.begin(), body.end());
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

FunctionalCode functional_from_hex(std::string_view hex) {
  while (!hex.empty() && (hex.back() == '\n' || hex.back() == '\r')) hex.remove_suffix(1);
  if (hex.size() % 2 != 0) throw MalformedWordError("odd number of hex digits", hex.size());
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    auto nib = [&](char ch, std::size_t at) -> int {
      if (ch >= '0' && ch <= '9') return ch - '0';
      if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
      if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
      throw MalformedWordError("not a hex digit", at);
    };
    bytes.push_back(static_cast<std::uint8_t>(nib(hex[i], i) * 16 + nib(hex[i + 1], i + 1)));
  }
  if (bytes.size() < 16) throw MalformedWordError("header truncated", bytes.size() * 8);
  if (bytes[0] != 'H' || bytes[1] != 'F' || bytes[2] != 'N' || bytes[3] != 'C')
    throw MalformedWordError("bad magic", 0);
  if (bytes[4] != 1) throw MalformedWordError("unsupported version", 32);
  auto get32 = [&](std::size_t at) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 4; ++i) v = (v << 8) | bytes[at + i];
    return v;
  };
  FunctionalCode code;
  code.c = bytes[5];
  code.n = get32(8);
  const std::size_t bit_count = get32(12);
  std::vector<std::uint8_t> body(bytes.begin() + 16, bytes.end());
  if (body.size() != (bit_count + 7) / 8) throw MalformedWordError("body length disagrees with bit count", 128);
  code.bits = BitString::from_bytes(body, bit_count);
  return code;
}

}  // namespace herencode
