#include "herencode/labeling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "herencode/errors.hpp"
#include "herencode/recognition.hpp"
#include "json_util.hpp"

namespace herencode {

std::string scheme_kind_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::Degeneracy: return "degeneracy";
    case SchemeKind::BipartiteDegeneracy: return "bipartite-degeneracy";
    case SchemeKind::Biclique: return "biclique";
    case SchemeKind::Covering: return "covering";
    case SchemeKind::Peeling: return "peeling";
  }
  return "?";
}

namespace {

SchemeKind scheme_kind_from_name(const std::string& s) {
  for (auto k : {SchemeKind::Degeneracy, SchemeKind::BipartiteDegeneracy, SchemeKind::Biclique, SchemeKind::Covering,
                 SchemeKind::Peeling})
    if (scheme_kind_name(k) == s) return k;
  throw std::invalid_argument("unknown scheme kind '" + s + "'");
}

unsigned count_width(unsigned d) { return ceil_log2(static_cast<std::uint64_t>(d) + 1); }

std::string set_text(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    os << (first ? "" : ",") << v;
    first = false;
  });
  os << '}';
  return os.str();
}

struct Parsed {
  std::uint64_t pos = 0;  // degeneracy position, or peeling vertex id
  std::uint64_t layer = 0;
  bool side = false;
  bool flag = false;
  std::vector<std::uint64_t> list;
  std::vector<std::pair<std::uint64_t, Parsed>> entries;  // coverings
  std::vector<Parsed> inner;                               // peelings: exactly one
};

Parsed parse(const SchemeDescriptor& desc, BitReader& r) {
  Parsed p;
  const unsigned w = ceil_log2(desc.n);
  auto read_list = [&] {
    const std::uint64_t cnt = r.read(count_width(desc.d));
    if (cnt > desc.d) throw MalformedWordError("list longer than the scheme bound", r.position());
    for (std::uint64_t i = 0; i < cnt; ++i) p.list.push_back(r.read(w));
  };
  switch (desc.kind) {
    case SchemeKind::Degeneracy:
      p.pos = r.read(w);
      p.flag = r.read_bit();
      read_list();
      break;
    case SchemeKind::BipartiteDegeneracy:
      p.pos = r.read(w);
      p.side = r.read_bit();
      p.flag = r.read_bit();
      read_list();
      break;
    case SchemeKind::Biclique:
      p.side = r.read_bit();
      break;
    case SchemeKind::Covering: {
      const std::uint64_t cnt = r.read(count_width(desc.d));
      if (cnt > desc.d) throw MalformedWordError("more parts than the multiplicity", r.position());
      for (std::uint64_t i = 0; i < cnt; ++i) {
        const std::uint64_t idx = r.read(ceil_log2(desc.parts));
        if (idx >= desc.inner.size()) throw MalformedWordError("part index out of range", r.position());
        p.entries.emplace_back(idx, parse(desc.inner[idx], r));
      }
      break;
    }
    case SchemeKind::Peeling: {
      p.layer = r.read(w);
      if (p.layer >= desc.inner.size()) throw MalformedWordError("layer index out of range", r.position());
      p.pos = r.read(w);
      if (desc.bipartite) p.side = r.read_bit();
      p.flag = r.read_bit();
      read_list();
      p.inner.push_back(parse(desc.inner[p.layer], r));
      break;
    }
  }
  return p;
}

bool ordered_rule(const Parsed& a, const Parsed& b, bool b_is_later) {
  const Parsed& early = b_is_later ? a : b;
  const Parsed& late = b_is_later ? b : a;
  const bool listed = std::find(early.list.begin(), early.list.end(), late.pos) != early.list.end();
  return listed != early.flag;
}

bool query(const SchemeDescriptor& desc, const Parsed& a, const Parsed& b) {
  switch (desc.kind) {
    case SchemeKind::Degeneracy:
      if (a.pos == b.pos) return false;
      return ordered_rule(a, b, a.pos < b.pos);
    case SchemeKind::BipartiteDegeneracy:
      if (a.pos == b.pos || a.side == b.side) return false;
      return ordered_rule(a, b, a.pos < b.pos);
    case SchemeKind::Biclique:
      return a.side != b.side;
    case SchemeKind::Covering:
      for (const auto& [i, pa] : a.entries)
        for (const auto& [j, pb] : b.entries)
          if (i == j && query(desc.inner[i], pa, pb)) return true;
      return false;
    case SchemeKind::Peeling:
      if (a.layer == b.layer) return query(desc.inner[a.layer], a.inner[0], b.inner[0]);
      if (desc.bipartite && a.side == b.side) return false;
      return ordered_rule(a, b, a.layer < b.layer);
  }
  return false;
}

Parsed parse_whole(const SchemeDescriptor& desc, const BitString& bits) {
  BitReader r(bits);
  Parsed p = parse(desc, r);
  if (!r.at_end()) throw MalformedWordError("trailing bits after label", r.position());
  return p;
}

void append_list(BitString& out, const std::vector<std::uint64_t>& list, unsigned d, unsigned w) {
  out.append(list.size(), count_width(d));
  for (auto x : list) out.append(x, w);
}

struct OrderResult {
  std::vector<OrderStep> order;
  VertexSet stuck;  // nonempty when no order exists
};

OrderResult greedy_order(const Graph& g, const VertexSet* top, unsigned d) {
  OrderResult res;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    bool found = false;
    for (Vertex v = rest.first(); v != 0; v = rest.next(v)) {
      const std::size_t nb = (g.neighbours(v) & rest).size();
      std::size_t pool = rest.size() - 1;
      if (top) pool = (top->contains(v) ? rest - *top : rest & *top).size();
      const std::size_t nn = pool - nb;
      if (nb > d && nn > d) continue;
      res.order.push_back({v, nb > d || nn < nb});
      rest.erase(v);
      found = true;
      break;
    }
    if (!found) {
      res.stuck = rest;
      return res;
    }
  }
  return res;
}

}  // namespace

std::size_t LabelingScheme::max_label_length() const {
  std::size_t m = 0;
  for (const auto& l : labels) m = std::max(m, l.size());
  return m;
}

std::size_t LabelingScheme::declared_bound() const {
  return descriptor.C * ceil_log2(descriptor.n) + descriptor.constant;
}

bool adjacency_query(const SchemeDescriptor& desc, const BitString& lu, const BitString& lv) {
  return query(desc, parse_whole(desc, lu), parse_whole(desc, lv));
}

std::optional<std::string> verify_scheme(const Graph& g, const LabelingScheme& s) {
  if (s.labels.size() != g.order()) return "label count differs from vertex count";
  if (s.descriptor.n != g.order()) return "descriptor vertex count differs from graph";
  std::vector<Parsed> parsed;
  for (Vertex v = 1; v <= g.order(); ++v) {
    try {
      parsed.push_back(parse_whole(s.descriptor, s.labels[v - 1]));
    } catch (const MalformedWordError& e) {
      return "label of vertex " + std::to_string(v) + " does not parse: " + e.what();
    }
  }
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v)
      if (query(s.descriptor, parsed[u - 1], parsed[v - 1]) != g.adjacent(u, v))
        return "query disagrees with adjacency on pair " + std::to_string(u) + "," + std::to_string(v);
  if (s.max_label_length() > s.declared_bound())
    return "label length " + std::to_string(s.max_label_length()) + " exceeds declared bound " +
           std::to_string(s.declared_bound());
  return std::nullopt;
}

std::optional<std::vector<OrderStep>> degeneracy_order(const Graph& g, unsigned d) {
  auto r = greedy_order(g, nullptr, d);
  if (!r.stuck.empty()) return std::nullopt;
  return r.order;
}

std::optional<std::vector<OrderStep>> bipartite_degeneracy_order(const BipartiteGraph& g, unsigned d) {
  auto r = greedy_order(g.graph(), &g.top(), d);
  if (!r.stuck.empty()) return std::nullopt;
  return r.order;
}

unsigned least_degeneracy(const Graph& g) {
  unsigned d = 0;
  while (!degeneracy_order(g, d)) ++d;
  return d;
}

unsigned least_bipartite_degeneracy(const BipartiteGraph& g) {
  unsigned d = 0;
  while (!bipartite_degeneracy_order(g, d)) ++d;
  return d;
}

namespace {

LabelingScheme degeneracy_scheme(const Graph& g, const VertexSet* top, unsigned d) {
  auto r = greedy_order(g, top, d);
  if (!r.stuck.empty())
    throw SchemeUnavailableError("no " + std::string(top ? "bipartite " : "") + "degeneracy order with d=" +
                                 std::to_string(d) + ": every vertex of suffix " + set_text(r.stuck) +
                                 " has more than d neighbours and non-neighbours");
  const std::size_t n = g.order();
  const unsigned w = ceil_log2(n);
  std::vector<std::uint64_t> pos(n + 1);
  for (std::size_t i = 0; i < r.order.size(); ++i) pos[r.order[i].v] = i;
  LabelingScheme s;
  s.descriptor.kind = top ? SchemeKind::BipartiteDegeneracy : SchemeKind::Degeneracy;
  s.descriptor.n = n;
  s.descriptor.d = d;
  s.descriptor.C = d + 1;
  s.descriptor.constant = 1 + count_width(d) + (top ? 1 : 0);
  s.labels.resize(n);
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    const auto [v, few_non] = r.order[i];
    std::vector<std::uint64_t> list;
    for (std::size_t j = i + 1; j < r.order.size(); ++j) {
      const Vertex u = r.order[j].v;
      if (top && top->contains(u) == top->contains(v)) continue;
      if (g.adjacent(u, v) != few_non) list.push_back(j);
    }
    BitString b;
    b.append(i, w);
    if (top) b.push_back(!top->contains(v));
    b.push_back(few_non);
    append_list(b, list, d, w);
    s.labels[v - 1] = std::move(b);
  }
  return s;
}

}  // namespace

LabelingScheme label_by_degeneracy(const Graph& g, unsigned d) { return degeneracy_scheme(g, nullptr, d); }

LabelingScheme label_by_bipartite_degeneracy(const BipartiteGraph& g, unsigned d) {
  return degeneracy_scheme(g.graph(), &g.top(), d);
}

LabelingScheme label_biclique(const BipartiteGraph& g) {
  if (!is_complete_between(g.graph(), g.top(), g.bottom())) throw InvariantError("graph is not complete bipartite");
  LabelingScheme s;
  s.descriptor.kind = SchemeKind::Biclique;
  s.descriptor.n = g.order();
  s.descriptor.constant = 1;
  for (Vertex v = 1; v <= g.order(); ++v) {
    BitString b;
    b.push_back(!g.top().contains(v));
    s.labels.push_back(b);
  }
  return s;
}

std::optional<std::string> check_covering(const Graph& g, const Covering& cov) {
  std::vector<unsigned> mult(g.order() + 1, 0);
  Graph seen(g.order());
  for (std::size_t i = 0; i < cov.parts.size(); ++i) {
    const Graph& h = cov.parts[i];
    std::vector<Vertex> at(h.order() + 1);
    for (Vertex x = 1; x <= h.order(); ++x) {
      auto v = g.find_label(h.label(x));
      if (!v) return "part " + std::to_string(i) + " names unknown vertex " + std::to_string(h.label(x));
      at[x] = *v;
      if (++mult[*v] > cov.multiplicity)
        return "vertex " + std::to_string(g.label(*v)) + " lies in more than " + std::to_string(cov.multiplicity) +
               " parts";
    }
    for (auto [x, y] : h.edges()) {
      if (!g.adjacent(at[x], at[y]))
        return "part " + std::to_string(i) + " has non-edge " + std::to_string(h.label(x)) + "-" +
               std::to_string(h.label(y));
      seen.add_edge(at[x], at[y]);
    }
  }
  for (Vertex v = 1; v <= g.order(); ++v)
    if (mult[v] == 0) return "vertex " + std::to_string(g.label(v)) + " uncovered";
  for (auto [u, v] : g.edges())
    if (!seen.adjacent(u, v)) return "edge uncovered: " + std::to_string(g.label(u)) + "-" + std::to_string(g.label(v));
  std::size_t total = 0;
  for (const auto& h : cov.parts) total += h.order();
  if (total > static_cast<std::size_t>(cov.multiplicity) * g.order() ||
      cov.parts.size() > static_cast<std::size_t>(cov.multiplicity) * g.order())
    return "part sizes exceed multiplicity times vertex count";
  return std::nullopt;
}

Covering forest_cover(const Graph& g) {
  Covering cov;
  Graph rest = g;
  bool first = true;
  while (first || rest.edge_count() > 0) {
    Graph forest(g.order());
    VertexSet visited(g.order());
    // Iterative DFS; each tree edge moves from rest into the forest.
    for (Vertex root = 1; root <= g.order(); ++root) {
      if (visited.contains(root)) continue;
      visited.insert(root);
      std::vector<Vertex> stack{root};
      while (!stack.empty()) {
        const Vertex v = stack.back();
        const VertexSet fresh = rest.neighbours(v) - visited;
        const Vertex u = fresh.first();
        if (u == 0) {
          stack.pop_back();
          continue;
        }
        visited.insert(u);
        forest.add_edge(v, u);
        stack.push_back(u);
      }
    }
    for (auto [u, v] : forest.edges()) rest.remove_edge(u, v);
    VertexSet keep(g.order());
    for (Vertex v = 1; v <= g.order(); ++v)
      if (first || forest.degree(v) > 0) keep.insert(v);
    Graph part = induced_subgraph(forest, keep);
    std::vector<Vertex> labels;
    keep.for_each([&](Vertex v) { labels.push_back(g.label(v)); });
    Graph labelled(part.order(), labels);
    for (auto [u, v] : part.edges()) labelled.add_edge(u, v);
    cov.parts.push_back(std::move(labelled));
    first = false;
  }
  cov.multiplicity = static_cast<unsigned>(cov.parts.size());
  return cov;
}

LabelingScheme combine_covering(const Graph& g, const Covering& cov, const std::vector<LabelingScheme>& sub) {
  if (sub.size() != cov.parts.size())
    throw std::invalid_argument("need one sub-scheme per part: " + std::to_string(cov.parts.size()) + " parts, " +
                                std::to_string(sub.size()) + " schemes");
  if (auto why = check_covering(g, cov)) throw std::invalid_argument("not a covering: " + *why);
  const std::size_t k = cov.parts.size();
  const unsigned c = cov.multiplicity;
  LabelingScheme s;
  s.descriptor.kind = SchemeKind::Covering;
  s.descriptor.n = g.order();
  s.descriptor.d = c;
  s.descriptor.parts = k;
  std::size_t max_c = 0, max_const = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (sub[i].labels.size() != cov.parts[i].order())
      throw std::invalid_argument("sub-scheme " + std::to_string(i) + " labels the wrong number of vertices");
    s.descriptor.inner.push_back(sub[i].descriptor);
    max_c = std::max(max_c, sub[i].descriptor.C);
    max_const = std::max(max_const, sub[i].descriptor.constant);
  }
  s.descriptor.C = c * (1 + max_c);
  s.descriptor.constant = count_width(c) + c * (ceil_log2(c) + max_const);
  std::vector<std::vector<std::pair<std::size_t, const BitString*>>> per(g.order() + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (Vertex x = 1; x <= cov.parts[i].order(); ++x)
      per[*g.find_label(cov.parts[i].label(x))].emplace_back(i, &sub[i].labels[x - 1]);
  const unsigned iw = ceil_log2(k);
  for (Vertex v = 1; v <= g.order(); ++v) {
    BitString b;
    b.append(per[v].size(), count_width(c));
    for (const auto& [i, l] : per[v]) {
      b.append(i, iw);
      b.append(*l);
    }
    s.labels.push_back(std::move(b));
  }
  return s;
}

namespace {

struct Tally {
  std::size_t nb = 0;
  std::size_t nn = 0;
};

Tally later_tally(const Graph& g, const Peeling& peel, const VertexSet& later, Vertex v) {
  VertexSet pool = later;
  pool.erase(v);
  if (peel.top) pool = peel.top->contains(v) ? pool - *peel.top : pool & *peel.top;
  Tally t;
  t.nb = (g.neighbours(v) & pool).size();
  t.nn = pool.size() - t.nb;
  return t;
}

VertexSet later_than(const Graph& g, const std::vector<VertexSet>& layers, std::size_t i) {
  VertexSet later(g.order());
  for (std::size_t j = i + 1; j < layers.size(); ++j) later |= layers[j];
  return later;
}

void check_layers(const Graph& g, const std::vector<VertexSet>& layers) {
  VertexSet seen(g.order());
  for (const auto& l : layers) {
    if (l.empty()) throw std::invalid_argument("peeling layers must be nonempty");
    if (l.intersects(seen)) throw std::invalid_argument("peeling layers overlap");
    seen |= l;
  }
  if (seen.size() != g.order()) throw std::invalid_argument("peeling layers do not cover every vertex");
}

}  // namespace

Peeling make_peeling(const Graph& g, std::vector<VertexSet> layers, unsigned d, std::optional<VertexSet> top) {
  check_layers(g, layers);
  Peeling p;
  p.d = d;
  p.top = std::move(top);
  p.few_non_neighbours.assign(g.order(), false);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const VertexSet later = later_than(g, layers, i);
    layers[i].for_each([&](Vertex v) {
      const Tally t = later_tally(g, p, later, v);
      if (t.nb > d && t.nn > d)
        throw CertificateInvalidError("vertex " + std::to_string(v) + " has more than " + std::to_string(d) +
                                          " neighbours and non-neighbours in later layers",
                                      v);
      p.few_non_neighbours[v - 1] = t.nb > d;
    });
  }
  p.layers = std::move(layers);
  return p;
}

std::optional<std::string> check_peeling(const Graph& g, const Peeling& peel) {
  try {
    check_layers(g, peel.layers);
  } catch (const std::invalid_argument& e) {
    return std::string(e.what());
  }
  if (peel.few_non_neighbours.size() != g.order()) return "flag count differs from vertex count";
  for (std::size_t i = 0; i < peel.layers.size(); ++i) {
    const VertexSet later = later_than(g, peel.layers, i);
    for (Vertex v = peel.layers[i].first(); v != 0; v = peel.layers[i].next(v)) {
      const Tally t = later_tally(g, peel, later, v);
      if ((peel.few_non_neighbours[v - 1] ? t.nn : t.nb) > peel.d)
        return "vertex " + std::to_string(v) + " exceeds the bound for its flag";
    }
  }
  return std::nullopt;
}

LabelingScheme combine_peeling(const Graph& g, const Peeling& peel, const SchemeBuilder& inner) {
  if (auto why = check_peeling(g, peel)) {
    Vertex bad = 0;
    const auto pos = why->find("vertex ");
    if (pos != std::string::npos) bad = static_cast<Vertex>(std::stoul(why->substr(pos + 7)));
    throw CertificateInvalidError("invalid peeling: " + *why, bad);
  }
  const std::size_t n = g.order();
  const unsigned w = ceil_log2(n);
  const bool bip = peel.top.has_value();
  LabelingScheme s;
  s.descriptor.kind = SchemeKind::Peeling;
  s.descriptor.n = n;
  s.descriptor.d = peel.d;
  s.descriptor.parts = peel.layers.size();
  s.descriptor.bipartite = bip;
  s.labels.resize(n);
  std::size_t max_c = 0, max_const = 0;
  for (std::size_t i = 0; i < peel.layers.size(); ++i) {
    const VertexSet& layer = peel.layers[i];
    const LabelingScheme sub = inner(induced_subgraph(g, layer), i);
    if (sub.labels.size() != layer.size())
      throw std::invalid_argument("inner scheme for layer " + std::to_string(i) + " has the wrong size");
    s.descriptor.inner.push_back(sub.descriptor);
    max_c = std::max(max_c, sub.descriptor.C);
    max_const = std::max(max_const, sub.descriptor.constant);
    const VertexSet later = later_than(g, peel.layers, i);
    std::size_t x = 0;
    layer.for_each([&](Vertex v) {
      const bool few_non = peel.few_non_neighbours[v - 1];
      VertexSet pool = later;
      if (bip) pool = peel.top->contains(v) ? pool - *peel.top : pool & *peel.top;
      VertexSet listed = few_non ? pool - g.neighbours(v) : pool & g.neighbours(v);
      std::vector<std::uint64_t> list;
      listed.for_each([&](Vertex u) { list.push_back(u - 1); });
      BitString b;
      b.append(i, w);
      b.append(v - 1, w);
      if (bip) b.push_back(!peel.top->contains(v));
      b.push_back(few_non);
      append_list(b, list, peel.d, w);
      b.append(sub.labels[x++]);
      s.labels[v - 1] = std::move(b);
    });
  }
  s.descriptor.C = 2 + peel.d + max_c;
  s.descriptor.constant = 1 + (bip ? 1 : 0) + count_width(peel.d) + max_const;
  return s;
}

namespace {

detail::Json descriptor_to_json(const SchemeDescriptor& d) {
  detail::Json j;
  j["kind"] = scheme_kind_name(d.kind);
  j["n"] = d.n;
  j["d"] = d.d;
  j["C"] = d.C;
  j["constant"] = d.constant;
  if (d.kind == SchemeKind::Covering || d.kind == SchemeKind::Peeling) {
    j["parts"] = d.parts;
    if (d.kind == SchemeKind::Peeling) j["bipartite"] = d.bipartite;
    j["inner"] = detail::Json::array();
    for (const auto& in : d.inner) j["inner"].push_back(descriptor_to_json(in));
  }
  return j;
}

SchemeDescriptor descriptor_from_json(const detail::Json& j) {
  SchemeDescriptor d;
  d.kind = scheme_kind_from_name(j.at("kind").get<std::string>());
  d.n = j.at("n").get<std::size_t>();
  d.d = j.at("d").get<unsigned>();
  d.C = j.at("C").get<std::size_t>();
  d.constant = j.at("constant").get<std::size_t>();
  if (d.kind == SchemeKind::Covering || d.kind == SchemeKind::Peeling) {
    d.parts = j.at("parts").get<std::size_t>();
    if (d.kind == SchemeKind::Peeling) d.bipartite = j.at("bipartite").get<bool>();
    for (const auto& in : j.at("inner")) d.inner.push_back(descriptor_from_json(in));
    if (d.inner.size() != d.parts) throw std::invalid_argument("inner descriptor count differs from parts");
  }
  return d;
}

}  // namespace

std::string bundle_to_json(const LabelingScheme& s) {
  detail::Json j;
  j["scheme"] = descriptor_to_json(s.descriptor);
  detail::Json labels = detail::Json::object();
  for (std::size_t v = 0; v < s.labels.size(); ++v) {
    detail::Json l;
    l["bits"] = s.labels[v].size();
    l["hex"] = s.labels[v].to_hex();
    labels[std::to_string(v + 1)] = l;
  }
  j["labels"] = labels;
  return j.dump(2) + "\n";
}

LabelingScheme bundle_from_json(std::string_view text) {
  detail::Json j;
  try {
    j = detail::Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("label bundle is not valid JSON: ") + e.what(), e.byte);
  }
  try {
    LabelingScheme s;
    s.descriptor = descriptor_from_json(j.at("scheme"));
    const auto& labels = j.at("labels");
    for (std::size_t v = 1; v <= s.descriptor.n; ++v) {
      const auto& l = labels.at(std::to_string(v));
      s.labels.push_back(BitString::from_hex(l.at("hex").get<std::string>(), l.at("bits").get<std::size_t>()));
    }
    if (labels.size() != s.descriptor.n) throw std::invalid_argument("bundle has labels for unknown vertices");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("label bundle: ") + e.what());
  }
}

}  // namespace herencode
