#include "herencode/modular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "herencode/errors.hpp"
#include "herencode/recognition.hpp"

namespace herencode {

std::string node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::Parallel: return "parallel";
    case NodeKind::Series: return "series";
    case NodeKind::Prime: return "prime";
  }
  return "?";
}

namespace {

// Components of g[s] (or of its complement when `co` is set).
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s, bool co) {
  std::vector<VertexSet> out;
  VertexSet left = s;
  while (!left.empty()) {
    VertexSet comp(g.order());
    comp.insert(left.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(g.order());
      frontier.for_each([&](Vertex v) {
        if (co) next |= (s - g.neighbours(v));
        else next |= g.neighbours(v);
      });
      next &= left;
      next -= comp;
      comp |= next;
      frontier = std::move(next);
    }
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet closure_within(const Graph& g, const VertexSet& s, VertexSet m) {
  for (;;) {
    VertexSet add(g.order());
    VertexSet outside = s - m;
    outside.for_each([&](Vertex w) {
      const VertexSet& nw = g.neighbours(w);
      if (nw.intersects(m) && !m.is_subset_of(nw)) add.insert(w);
    });
    if (add.empty()) return m;
    m |= add;
  }
}

// Maximal proper modules of a connected and co-connected g[s].
std::vector<VertexSet> maximal_modules(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet assigned(g.order());
  const std::size_t size = s.size();
  s.for_each([&](Vertex v) {
    if (assigned.contains(v)) return;
    VertexSet mod(g.order());
    mod.insert(v);
    s.for_each([&](Vertex u) {
      if (u == v || mod.contains(u)) return;
      VertexSet c = closure_within(g, s, VertexSet(g.order(), {u, v}));
      if (c.size() < size) mod |= c;
    });
    assigned |= mod;
    out.push_back(std::move(mod));
  });
  return out;
}

Graph quotient_of(const Graph& g, const std::vector<VertexSet>& parts) {
  Graph q(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (g.adjacent(parts[i].first(), parts[j].first()))
        q.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
  return q;
}

MdNode decompose_set(const Graph& g, const VertexSet& s) {
  MdNode node;
  node.vertices = s.to_vector();
  if (node.vertices.size() == 1) return node;
  std::vector<VertexSet> parts = components_within(g, s, false);
  if (parts.size() > 1) {
    node.kind = NodeKind::Parallel;
  } else {
    parts = components_within(g, s, true);
    if (parts.size() > 1) {
      node.kind = NodeKind::Series;
    } else {
      node.kind = NodeKind::Prime;
      parts = maximal_modules(g, s);
    }
  }
  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  node.quotient = quotient_of(g, parts);
  for (const auto& p : parts) node.children.push_back(decompose_set(g, p));
  return node;
}

}  // namespace

MdNode decompose(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("cannot decompose the empty graph");
  return decompose_set(g, g.vertices());
}

std::size_t node_count(const MdNode& t) {
  std::size_t c = 1;
  for (const auto& ch : t.children) c += node_count(ch);
  return c;
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& partition) {
  VertexSet seen(g.order());
  for (const auto& part : partition) {
    if (part.empty()) throw std::invalid_argument("partition contains an empty part");
    if (part.intersects(seen)) throw std::invalid_argument("partition parts overlap");
    seen |= part;
    if (auto w = distinguishing_vertex(g, part))
      throw std::invalid_argument("part is not a module: vertex " + std::to_string(*w) + " distinguishes it");
  }
  if (seen.size() != g.order()) throw std::invalid_argument("partition does not cover every vertex");
  return quotient_of(g, partition);
}

BitString NaivePrimeCodec::encode(const Graph& q) const {
  BitString out;
  for (Vertex i = 1; i <= q.order(); ++i)
    for (Vertex j = i + 1; j <= q.order(); ++j) out.push_back(q.adjacent(i, j));
  return out;
}

Graph NaivePrimeCodec::decode(const BitString& bits, std::size_t k) const {
  const std::size_t need = k * (k - 1) / 2;
  if (bits.size() != need)
    throw MalformedWordError("quotient needs " + std::to_string(need) + " bits, found " + std::to_string(bits.size()),
                             std::min(bits.size(), need));
  Graph q(k);
  std::size_t pos = 0;
  for (Vertex i = 1; i <= k; ++i)
    for (Vertex j = i + 1; j <= k; ++j)
      if (bits[pos++]) q.add_edge(i, j);
  return q;
}

namespace {

std::string binary(std::uint64_t v) {
  BitString b;
  b.append(v, bit_length(v));
  return b.to_binary();
}

void encode_node(const MdNode& t, const PrimeCodec& pc, unsigned width, std::string& out) {
  if (t.kind == NodeKind::Leaf) {
    out.push_back('0');
    BitString b;
    b.append(t.leaf() - 1, width);
    out += b.to_binary();
    return;
  }
  if (!pc.handles(t.quotient)) throw UnsupportedPrimeError(t.quotient);
  out.push_back('1');
  out += binary(t.children.size());
  out.push_back('|');
  out += pc.encode(t.quotient).to_binary();
  out.push_back('|');
  for (const auto& ch : t.children) encode_node(ch, pc, width, out);
}

class WordParser {
 public:
  WordParser(const std::string& w, const PrimeCodec& pc) : w_(w), pc_(pc) {}

  Graph run() {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] != '0' && w_[i] != '1' && w_[i] != '|') throw MalformedWordError("symbol outside {0,1,|}", i);
    const std::size_t n = read_number();
    if (n == 0) throw MalformedWordError("vertex count must be positive", 0);
    g_ = Graph(n);
    seen_ = VertexSet(n);
    width_ = ceil_log2(n);
    if (n == 1) {
      if (pos_ != w_.size()) throw MalformedWordError("trailing symbols after single-vertex header", pos_);
      return g_;
    }
    node();
    if (pos_ != w_.size()) throw MalformedWordError("trailing symbols after the tree", pos_);
    if (seen_.size() != n) throw MalformedWordError("leaves do not cover every vertex", pos_);
    return std::move(g_);
  }

 private:
  // Binary digits up to the next '|', which is consumed.
  std::size_t read_number() {
    const std::size_t start = pos_;
    std::size_t v = 0;
    while (pos_ < w_.size() && w_[pos_] != '|') {
      if (pos_ - start >= 40) throw MalformedWordError("number too long", pos_);
      v = v * 2 + (w_[pos_] == '1' ? 1 : 0);
      ++pos_;
    }
    if (pos_ == start) throw MalformedWordError("expected a binary number", pos_);
    if (pos_ == w_.size()) throw MalformedWordError("missing '|' delimiter", pos_);
    if (w_[start] == '0' && pos_ - start > 1) throw MalformedWordError("leading zero in number", start);
    ++pos_;
    return v;
  }

  char take() {
    if (pos_ >= w_.size()) throw MalformedWordError("word truncated", pos_);
    return w_[pos_++];
  }

  std::vector<Vertex> node() {
    const std::size_t at = pos_;
    const char tag = take();
    if (tag == '0') {
      std::uint64_t v = 0;
      for (unsigned i = 0; i < width_; ++i) {
        char c = take();
        if (c == '|') throw MalformedWordError("delimiter inside leaf label", pos_ - 1);
        v = v * 2 + (c == '1' ? 1 : 0);
      }
      if (v >= g_.order()) throw MalformedWordError("leaf label out of range", at);
      const Vertex x = static_cast<Vertex>(v + 1);
      if (seen_.contains(x)) throw MalformedWordError("vertex appears in two leaves", at);
      seen_.insert(x);
      return {x};
    }
    if (tag != '1') throw MalformedWordError("bad record tag", at);
    const std::size_t k = read_number();
    if (k < 2 || k > g_.order()) throw MalformedWordError("internal node child count out of range", at);
    const std::size_t qstart = pos_;
    BitString qbits;
    while (pos_ < w_.size() && w_[pos_] != '|') qbits.push_back(w_[pos_++] == '1');
    if (pos_ == w_.size()) throw MalformedWordError("missing '|' after quotient", pos_);
    ++pos_;
    Graph q;
    try {
      q = pc_.decode(qbits, k);
    } catch (const MalformedWordError& e) {
      throw MalformedWordError(std::string("quotient decode failed: ") + e.what(), qstart + e.position());
    }
    std::vector<std::vector<Vertex>> kids;
    for (std::size_t i = 0; i < k; ++i) kids.push_back(node());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (q.adjacent(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1)))
          for (Vertex a : kids[i])
            for (Vertex b : kids[j]) g_.add_edge(a, b);
    std::vector<Vertex> all;
    for (auto& kv : kids) all.insert(all.end(), kv.begin(), kv.end());
    return all;
  }

  const std::string& w_;
  const PrimeCodec& pc_;
  std::size_t pos_ = 0;
  Graph g_;
  VertexSet seen_;
  unsigned width_ = 0;
};

}  // namespace

std::string encode_modular(const Graph& g, const PrimeCodec& pc) {
  const std::size_t n = g.order();
  std::string out = binary(n) + "|";
  if (n <= 1) return out;
  encode_node(decompose(g), pc, ceil_log2(n), out);
  return out;
}

Graph decode_modular(const std::string& word, const PrimeCodec& pc) { return WordParser(word, pc).run(); }

double measured_codec_bound(const MdNode& t, const PrimeCodec& pc) {
  double c = 0;
  if (t.kind != NodeKind::Leaf) {
    const double k = static_cast<double>(t.children.size());
    c = static_cast<double>(pc.encode(t.quotient).size()) / (k * std::log2(k));
    for (const auto& ch : t.children) c = std::max(c, measured_codec_bound(ch, pc));
  }
  return c;
}

LengthReport check_length_accounting(const Graph& g, const PrimeCodec& pc, std::optional<double> c) {
  LengthReport r;
  r.n = g.order();
  const std::string word = encode_modular(g, pc);
  r.word_length = word.size();
  r.header_length = bit_length(r.n) + 1;
  r.leaf_contribution = r.n > 1 ? r.n * ceil_log2(r.n) : 0;
  r.internal_contribution = r.word_length - r.header_length - r.leaf_contribution;
  if (r.n > 1) {
    MdNode t = decompose(g);
    r.node_count = node_count(t);
    r.c = c ? *c : measured_codec_bound(t, pc);
  } else {
    r.node_count = r.n;
    r.c = c.value_or(0.0);
  }
  const double n = static_cast<double>(r.n);
  const double nlogn = r.n > 1 ? n * std::log2(n) : 0.0;
  r.bound = (r.c + 2) * nlogn + n + static_cast<double>(r.node_count);
  r.pass = static_cast<double>(r.internal_contribution) <= r.bound + 1e-9;
  return r;
}

}  // namespace herencode
