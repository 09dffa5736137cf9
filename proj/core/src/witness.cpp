#include "herencode/witness.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "herencode/errors.hpp"
#include "herencode/modular.hpp"
#include "herencode/recognition.hpp"
#include "herencode/speed.hpp"
#include "herencode/succinct.hpp"

namespace herencode {

ClaimViolatedError::ClaimViolatedError(std::string class_id, std::string claim, std::vector<Vertex> witness)
    : std::runtime_error([&] {
        std::string w;
        for (Vertex v : witness) w += (w.empty() ? "" : ",") + std::to_string(v);
        return class_id + ": claim " + claim + " violated, witness {" + w + "}";
      }()),
      class_id_(std::move(class_id)),
      claim_(std::move(claim)),
      witness_(std::move(witness)) {}

// ---- registry --------------------------------------------------------------

namespace {

struct ParamUse {
  bool p = false, s = false, k = false;
};

const std::map<std::string, ParamUse>& registry() {
  static const std::map<std::string, ParamUse> r = {
      {"kpp-chordality", {true, false, true}},
      {"kpp-plus-k1", {true, false, true}},
      {"Qp", {true, false, true}},
      {"L-plus-O01", {true, true, true}},
      {"Mp", {true, false, true}},
      {"Np", {true, false, true}},
      {"A-graph", {false, false, true}},
      {"P7-Spp", {true, false, false}},
      {"P7-KppO0p", {true, false, false}},
      {"P7-K12-2K2", {}},
      {"P7-P5K2", {}},
      {"P7-C4K2", {}},
      {"P7-domino", {}},
      {"P7-K33e", {}},
      {"P7-3K2", {}},
      {"chain", {}},
      {"2k2-c4-structure", {}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& class_ids() {
  static const std::vector<std::string> ids = {
      "kpp-chordality", "kpp-plus-k1", "Qp",         "L-plus-O01", "Mp",        "Np",
      "A-graph",        "P7-Spp",      "P7-KppO0p",  "P7-K12-2K2", "P7-P5K2",   "P7-C4K2",
      "P7-domino",      "P7-K33e",     "P7-3K2",     "chain",      "2k2-c4-structure"};
  return ids;
}

ClassSpec class_spec_for(const std::string& id, const ClassParams& prm) {
  auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown class id: " + id);
  const ParamUse use = it->second;
  auto need = [&](const char* name, bool used, int value, int least) {
    if (used && value < least)
      throw std::invalid_argument(id + " needs " + name + " >= " + std::to_string(least));
    if (!used && value != 0) throw std::invalid_argument(id + " takes no parameter " + name);
  };
  need("p", use.p, prm.p, 1);
  need("s", use.s, prm.s, 1);
  need("k", use.k, prm.k, 4);
  ClassSpec c;
  c.bipartite = true;
  const int p = prm.p;
  // Classes of "chordality at most k" forbid cycles of length k+1 and more;
  // the two base classes take the first forbidden length directly.
  if (id == "kpp-chordality") {
    c.forbidden = {pattern::complete_bipartite(p, p)};
    c.chordality_lt = prm.k;
  } else if (id == "kpp-plus-k1") {
    c.forbidden = {pattern::kpp_plus_k1(p)};
    c.chordality_lt = prm.k;
  } else if (id == "Qp") {
    c.forbidden = {pattern::q(p)};
    c.chordality_lt = prm.k + 1;
  } else if (id == "L-plus-O01") {
    c.forbidden = {pattern::l_plus_o01(prm.s, p)};
    c.chordality_lt = prm.k + 1;
  } else if (id == "Mp") {
    c.forbidden = {pattern::m(p)};
    c.chordality_lt = prm.k + 1;
  } else if (id == "Np") {
    c.forbidden = {pattern::n(p)};
    c.chordality_lt = prm.k + 1;
  } else if (id == "A-graph") {
    c.forbidden = {pattern::a_graph()};
    c.chordality_lt = prm.k + 1;
  } else if (id == "P7-Spp") {
    c.forbidden = {pattern::path(7), pattern::double_star(p, p)};
  } else if (id == "P7-KppO0p") {
    c.forbidden = {pattern::path(7), pattern::kpp_plus_o0p(p)};
  } else if (id == "P7-K12-2K2") {
    c.forbidden = {pattern::path(7), pattern::k12_plus_2k2()};
  } else if (id == "P7-P5K2") {
    c.forbidden = {pattern::path(7), pattern::p5_plus_k2()};
  } else if (id == "P7-C4K2") {
    c.forbidden = {pattern::path(7), pattern::c4_plus_k2()};
  } else if (id == "P7-domino") {
    c.forbidden = {pattern::path(7), pattern::domino()};
  } else if (id == "P7-K33e") {
    c.forbidden = {pattern::path(7), pattern::k33_minus_edge()};
  } else if (id == "P7-3K2") {
    c.forbidden = {pattern::path(7), pattern::three_k2()};
  } else if (id == "chain") {
    c.forbidden = {pattern::two_k2()};
  } else if (id == "2k2-c4-structure") {
    c.forbidden = {pattern::two_k2(), pattern::cycle(4)};
  }
  return c;
}

std::optional<unsigned> stated_delta_bound(const std::string& id, const ClassParams& prm) {
  if (id == "chain") return 1;
  if (id == "P7-K12-2K2") return 2;
  if (id == "P7-P5K2") return 4;
  if (id == "P7-C4K2") return 8;
  if (id == "L-plus-O01" && prm.s >= 1) return static_cast<unsigned>(2 * (prm.s - 1));
  return std::nullopt;
}

namespace {

std::optional<unsigned> stated_peel_d(const std::string& id, const ClassParams& prm) {
  if (id == "Qp" && prm.p >= 1) return static_cast<unsigned>(prm.p - 1);
  if (id == "P7-Spp" && prm.p >= 1) return static_cast<unsigned>(2 * prm.p - 1);
  return std::nullopt;
}

// ---- small helpers ---------------------------------------------------------

std::vector<Vertex> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<Vertex> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.label(v));
  return out;
}

std::vector<Vertex> labels_of(const Graph& g, const VertexSet& s) { return labels_of(g, s.to_vector()); }

std::optional<VertexSet> indices_of(const Graph& g, const std::vector<Vertex>& labels, std::string& why) {
  VertexSet s(g.order());
  for (Vertex l : labels) {
    auto v = g.find_label(l);
    if (!v) {
      why = "unknown vertex " + std::to_string(l);
      return std::nullopt;
    }
    if (s.contains(*v)) {
      why = "vertex " + std::to_string(l) + " listed twice";
      return std::nullopt;
    }
    s.insert(*v);
  }
  return s;
}

BipartiteGraph swapped(const BipartiteGraph& h) { return BipartiteGraph(h.graph(), h.bottom()); }

// Copy of pattern h embedded part-preservingly in either orientation; host indices.
std::optional<std::vector<Vertex>> find_sided(const BipartiteGraph& g, const BipartiteGraph& h) {
  if (auto e = find_one_sided(g, h, Side::Bottom)) return *e;
  if (auto e = find_one_sided(g, h, Side::Top)) return *e;
  return std::nullopt;
}

// Copy of h whose larger part lands in g.part(side).
std::optional<std::vector<Vertex>> find_larger_in(const BipartiteGraph& g, const BipartiteGraph& h, Side side) {
  const BipartiteGraph& oriented = h.bottom().size() >= h.top().size() ? h : swapped(h);
  if (auto e = find_one_sided(g, oriented, side)) return *e;
  return std::nullopt;
}

BipartiteGraph k2p_plus_o01(int p) {
  // bottom 1..p, top p+1 and p+2 complete to them, isolated bottom p+3
  const std::size_t n = static_cast<std::size_t>(p) + 3;
  Graph h(n);
  for (Vertex b = 1; b <= static_cast<Vertex>(p); ++b) {
    h.add_edge(b, static_cast<Vertex>(p + 1));
    h.add_edge(b, static_cast<Vertex>(p + 2));
  }
  return BipartiteGraph(std::move(h), VertexSet(n, {static_cast<Vertex>(p + 1), static_cast<Vertex>(p + 2)}));
}

VertexSet neighbourhood(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  s.for_each([&](Vertex v) { out |= g.neighbours(v); });
  return out;
}

std::optional<std::pair<Vertex, Vertex>> edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex u = a.first(); u != 0; u = a.next(u)) {
    VertexSet hit = g.neighbours(u) & b;
    if (!hit.empty()) return std::pair{u, hit.first()};
  }
  return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> non_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  for (Vertex u = a.first(); u != 0; u = a.next(u)) {
    VertexSet miss = b - g.neighbours(u);
    if (!miss.empty()) return std::pair{u, miss.first()};
  }
  return std::nullopt;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

unsigned bipartite_ramsey_cached(int p) {
  static std::mutex mu;
  static std::map<int, unsigned> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto b = bipartite_ramsey(p, p, 5);
  if (!b) throw ResourceError("B(" + std::to_string(p) + "," + std::to_string(p) + ") exceeds the search limit of 5");
  cache[p] = static_cast<unsigned>(*b);
  return static_cast<unsigned>(*b);
}

// Lexicographically least maximum induced matching as (top, bottom) pairs.
std::vector<std::pair<Vertex, Vertex>> maximum_induced_matching(const BipartiteGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  g.top().for_each([&](Vertex u) { (g.neighbours(u)).for_each([&](Vertex v) { edges.emplace_back(u, v); }); });
  std::vector<std::pair<Vertex, Vertex>> best, cur;
  VertexSet blocked(g.order());
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() > best.size()) best = cur;
    if (cur.size() + (edges.size() - from) <= best.size()) return;
    for (std::size_t i = from; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (blocked.contains(u) || blocked.contains(v)) continue;
      const VertexSet saved = blocked;
      blocked.insert(u);
      blocked.insert(v);
      blocked |= g.neighbours(u);
      blocked |= g.neighbours(v);
      cur.emplace_back(u, v);
      self(self, i + 1);
      cur.pop_back();
      blocked = saved;
    }
  };
  rec(rec, 0);
  return best;
}

// ---- finder context ----------------------------------------------------------

struct Ctx {
  const BipartiteGraph& g;
  std::string id;
  ClassParams prm;
  std::vector<std::string> claims;

  const Graph& graph() const { return g.graph(); }

  [[noreturn]] void fail(const std::string& claim, const std::vector<Vertex>& witness_indices) const {
    throw ClaimViolatedError(id, claim, labels_of(graph(), sorted(witness_indices)));
  }
  [[noreturn]] void fail_labels(const std::string& claim, const std::vector<Vertex>& witness_labels) const {
    throw ClaimViolatedError(id, claim, sorted(witness_labels));
  }
  void passed(const std::string& claim) {
    if (std::find(claims.begin(), claims.end(), claim) == claims.end()) claims.push_back(claim);
  }
  void expect_empty(const std::string& claim, const VertexSet& s) {
    if (!s.empty()) fail(claim, {s.first()});
    passed(claim);
  }
  void expect_no_edge(const std::string& claim, const VertexSet& a, const VertexSet& b) {
    if (auto e = edge_between(graph(), a, b)) fail(claim, {e->first, e->second});
    passed(claim);
  }
  void expect_complete(const std::string& claim, const VertexSet& a, const VertexSet& b) {
    if (auto e = non_edge_between(graph(), a, b)) fail(claim, {e->first, e->second});
    passed(claim);
  }
  // No part-preserving copy of pat (either orientation) inside G[s].
  void expect_free(const std::string& claim, const VertexSet& s, const NamedPattern& pat) {
    const BipartiteGraph sub = induced_subgraph(g, s);
    if (auto e = find_sided(sub, pattern_bipartite(pat))) fail_labels(claim, labels_of(sub.graph(), *e));
    passed(claim);
  }
  // No copy of pat inside G[s] whose larger part lies in the host part `side`.
  void expect_one_sided_free(const std::string& claim, const VertexSet& s, const NamedPattern& pat, Side side) {
    const BipartiteGraph sub = induced_subgraph(g, s);
    if (auto e = find_larger_in(sub, pattern_bipartite(pat), side)) fail_labels(claim, labels_of(sub.graph(), *e));
    passed(claim);
  }
  void expect_in(const std::string& claim, const VertexSet& s, const ClassSpec& spec) {
    const BipartiteGraph sub = induced_subgraph(g, s);
    if (!in_class(sub, spec)) fail(claim, s.to_vector());
    passed(claim);
  }

  Certificate make(decltype(Certificate::body) body) const {
    Certificate c;
    c.class_id = id;
    c.params = prm;
    c.claims_checked = claims;
    c.body = std::move(body);
    return c;
  }

  Piece piece(const VertexSet& s, std::optional<PartTag> tag = std::nullopt) const {
    return Piece{labels_of(graph(), s), std::move(tag), {}};
  }
};

PartTag complete_tag(std::string name) { return PartTag{std::move(name), PartCheck::Complete, 0, {}, false}; }
PartTag codegree_tag(std::string name, unsigned bound) {
  return PartTag{std::move(name), PartCheck::CoDegreeAtMost, bound, {}, false};
}
PartTag class_tag(std::string name, ClassSpec spec, bool implicit) {
  return PartTag{std::move(name), PartCheck::InClass, 0, std::move(spec), implicit};
}

ClassSpec bip_spec(std::vector<NamedPattern> forbidden) {
  ClassSpec c;
  c.bipartite = true;
  c.forbidden = std::move(forbidden);
  return c;
}

ClassSpec one_sided_spec(const NamedPattern& pat, Side side) {
  ClassSpec c;
  c.bipartite = true;
  c.one_sided.push_back(OneSidedRule{pat, side});
  return c;
}

Certificate find_impl(const BipartiteGraph& g, const std::string& id, const ClassParams& prm);

Certificate reduce_to(Ctx& cx, const BipartiteGraph& g, const std::string& target_id, const ClassParams& target_params,
                      bool complement) {
  Reduce r;
  r.target_id = target_id;
  r.target_params = target_params;
  r.target = class_spec_for(target_id, target_params);
  r.on_bipartite_complement = complement;
  const BipartiteGraph target_graph = complement ? bipartite_complement(g) : g;
  if (!in_class(target_graph, r.target)) cx.fail("reduce", g.graph().vertices().to_vector());
  cx.passed("reduce");
  if (registry().count(target_id) && target_id != "P7-3K2")
    r.inner.push_back(find_impl(target_graph, target_id, target_params));
  return cx.make(std::move(r));
}

Certificate reduce_to_spec(Ctx& cx, const std::string& target_id, ClassSpec spec) {
  Reduce r;
  r.target_id = target_id;
  r.target = std::move(spec);
  if (!in_class(cx.g, r.target)) cx.fail("reduce", cx.graph().vertices().to_vector());
  cx.passed("reduce");
  return cx.make(std::move(r));
}

Certificate split_components(Ctx& cx) {
  Components comp;
  for (const VertexSet& c : connected_components(cx.graph())) {
    Piece pc = cx.piece(c);
    pc.inner.push_back(find_impl(induced_subgraph(cx.g, c), cx.id, cx.prm));
    comp.parts.push_back(std::move(pc));
  }
  return cx.make(std::move(comp));
}

void collect_prime(const MdNode& t, std::vector<VertexSet>& reps, std::size_t n) {
  if (t.kind == NodeKind::Prime) {
    VertexSet r(n);
    for (const auto& ch : t.children) r.insert(ch.leaf());
    reps.push_back(r);
  }
  for (const auto& ch : t.children) collect_prime(ch, reps, n);
}

std::vector<VertexSet> prime_representatives(const Graph& g) {
  std::vector<VertexSet> reps;
  if (g.order() > 0) collect_prime(decompose(g), reps, g.order());
  return reps;
}

Certificate split_quotient(Ctx& cx) {
  Quotient q;
  for (const VertexSet& r : prime_representatives(cx.graph())) {
    Piece pc = cx.piece(r);
    pc.inner.push_back(find_impl(induced_subgraph(cx.g, r), cx.id, cx.prm));
    q.parts.push_back(std::move(pc));
  }
  return cx.make(std::move(q));
}

// ---- per-class finders -------------------------------------------------------

Certificate find_kpp_chordality(Ctx& cx) {
  const Graph& g = cx.graph();
  if (g.order() == 0) throw PreconditionMissingError("empty graph");
  Vertex best = 1;
  for (Vertex v = 2; v <= g.order(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return cx.make(LowDegree{{g.label(best)}, static_cast<unsigned>(g.degree(best)), DegreeMeasure::Degree});
}

Certificate find_kpp_plus_k1(Ctx& cx) {
  const int p = cx.prm.p;
  const int s = p * ((1 << (p - 1)) + 1);
  if (!contains_biclique(cx.g, s, s)) return reduce_to(cx, cx.g, "kpp-chordality", {s, 0, cx.prm.k}, false);
  const unsigned bound = static_cast<unsigned>(2 * p - 2);
  for (Vertex v = 1; v <= cx.g.order(); ++v) {
    if (cx.g.opposite_non_neighbours(v).size() <= bound) {
      cx.passed("low-co-degree");
      return cx.make(LowDegree{{cx.graph().label(v)}, bound, DegreeMeasure::BipartiteCoDegree});
    }
  }
  cx.fail("low-co-degree", {});
}

Certificate find_qp(Ctx& cx) {
  const int p = cx.prm.p;
  if (!contains_biclique(cx.g, p * p, p * p))
    return reduce_to(cx, cx.g, "kpp-chordality", {p * p, 0, cx.prm.k + 1}, false);
  if (!is_connected(cx.graph())) return split_components(cx);
  const BicliquePartition P = biclique_partition(cx.g, p);
  cx.expect_empty("1", P.A1pp | P.B1pp);
  cx.expect_empty("2", P.A2 | P.B2);
  const VertexSet layer = P.A1p | P.B1p;
  cx.expect_free("3", layer, pattern::kpp_plus_k1(p));
  Peel peel;
  peel.d = static_cast<unsigned>(p - 1);
  if (!layer.empty())
    peel.layers.push_back(
        cx.piece(layer, class_tag("K_{p,p}+K1-free", class_spec_for("kpp-plus-k1", {p, 0, cx.prm.k + 1}), true)));
  peel.layers.push_back(cx.piece(P.A0 | P.B0, complete_tag("biclique")));
  return cx.make(std::move(peel));
}

Certificate find_l_plus_o01(Ctx& cx) {
  const int s = cx.prm.s, p = cx.prm.p;
  const BipartiteGraph pat = k2p_plus_o01(p);
  auto emb = find_sided(cx.g, pat);
  if (!emb) return reduce_to(cx, cx.g, "kpp-plus-k1", {std::max(2, p), 0, cx.prm.k + 1}, false);
  const Vertex x = (*emb)[static_cast<std::size_t>(p)], y = (*emb)[static_cast<std::size_t>(p) + 1];
  const Graph& g = cx.graph();
  const VertexSet px = g.neighbours(x) - g.neighbours(y), py = g.neighbours(y) - g.neighbours(x);
  for (const VertexSet* priv : {&px, &py})
    if (priv->size() > static_cast<std::size_t>(s - 1)) cx.fail("private-neighbours", priv->to_vector());
  cx.passed("private-neighbours");
  const VertexSet d = neighbourhood_delta(g, x, y);
  const Vertex a = std::min(x, y), b = std::max(x, y);
  return cx.make(Delta{g.label(a), g.label(b), labels_of(g, d), static_cast<unsigned>(2 * (s - 1)),
                       static_cast<unsigned>(d.size()), true});
}

Certificate find_mp(Ctx& cx) {
  const int p = cx.prm.p;
  if (!contains_biclique(cx.g, p * p, p * p))
    return reduce_to(cx, cx.g, "kpp-chordality", {p * p, 0, cx.prm.k + 1}, false);
  if (!is_prime(cx.graph())) return split_quotient(cx);
  const BicliquePartition P = biclique_partition(cx.g, p);
  const VertexSet A1 = P.A1p | P.A1pp, B1 = P.B1p | P.B1pp;
  cx.expect_empty("2", P.A2 | P.B2);
  cx.expect_no_edge("3", P.A1pp, B1);
  cx.expect_no_edge("4", P.B1pp, A1);
  const NamedPattern ms = pattern::m_star(p);
  cx.expect_free("5", P.A1p | P.B1p, ms);
  cx.expect_one_sided_free("6", P.A0 | B1, ms, Side::Top);
  cx.expect_one_sided_free("6", P.B0 | A1, ms, Side::Bottom);
  Cover cov;
  cov.multiplicity = 2;
  auto add = [&](const VertexSet& s, PartTag t) {
    if (!s.empty()) cov.parts.push_back(cx.piece(s, std::move(t)));
  };
  add(P.A0 | P.B0, complete_tag("biclique"));
  add(P.A0 | B1, class_tag("one-sided M*-free", one_sided_spec(ms, Side::Top), false));
  add(P.B0 | A1, class_tag("one-sided M*-free", one_sided_spec(ms, Side::Bottom), false));
  add(P.A1p | P.B1p, class_tag("M*-free", bip_spec({ms}), false));
  return cx.make(std::move(cov));
}

Certificate find_np(Ctx& cx) {
  const int p = cx.prm.p;
  if (!contains_biclique(cx.g, p * p, p * p))
    return reduce_to(cx, cx.g, "kpp-chordality", {p * p, 0, cx.prm.k + 1}, false);
  if (!is_prime(cx.graph())) return split_quotient(cx);
  const BicliquePartition P = biclique_partition(cx.g, p);
  const VertexSet A1 = P.A1p | P.A1pp, B1 = P.B1p | P.B1pp;
  const NamedPattern ns = pattern::n_star(p);
  cx.expect_one_sided_free("2", P.A0 | B1 | P.B2, ns, Side::Top);
  cx.expect_one_sided_free("2", P.B0 | A1 | P.A2, ns, Side::Bottom);
  cx.expect_complete("3", A1, P.B1pp | P.B2);
  cx.expect_complete("4", B1, P.A1pp | P.A2);
  // The A2/B2 copy is excluded on the side opposite to a vertex of A1 (or B1).
  const Side outer = !A1.empty() ? Side::Bottom : Side::Top;
  if (!(P.A2 | P.B2).empty() && (A1 | B1).empty()) cx.fail("5", (P.A2 | P.B2).to_vector());
  cx.expect_one_sided_free("5", P.A2 | P.B2, ns, outer);
  cx.expect_free("6", P.A1p | P.B1p, ns);
  Cover cov;
  cov.multiplicity = 3;
  auto add = [&](const VertexSet& s, PartTag t) {
    if (!s.empty()) cov.parts.push_back(cx.piece(s, std::move(t)));
  };
  add(P.A0 | P.B0, complete_tag("biclique"));
  add(P.A0 | B1 | P.B2, class_tag("one-sided N*-free", one_sided_spec(ns, Side::Top), false));
  add(P.B0 | A1 | P.A2, class_tag("one-sided N*-free", one_sided_spec(ns, Side::Bottom), false));
  add(A1 | P.B1pp | P.B2, complete_tag("complete join"));
  add(B1 | P.A1pp | P.A2, complete_tag("complete join"));
  add(P.A1p | P.B1p, class_tag("N*-free", bip_spec({ns}), false));
  add(P.A2 | P.B2, class_tag("one-sided N*-free", one_sided_spec(ns, outer), false));
  return cx.make(std::move(cov));
}

// Maximal biclique around the least copy of K_{q,q}; A in the top part.
std::pair<VertexSet, VertexSet> seed_biclique(const BipartiteGraph& g, int q) {
  auto b = contains_biclique(g, q, q);
  if (!b) throw PreconditionMissingError("no K_{" + std::to_string(q) + "," + std::to_string(q) + "}");
  Biclique ext = maximal_biclique_extension(g, *b);
  return {ext.top, ext.bottom};
}

Certificate find_a_graph(Ctx& cx) {
  if (!contains_biclique(cx.g, 2, 2)) return reduce_to(cx, cx.g, "kpp-chordality", {2, 0, cx.prm.k + 1}, false);
  if (!is_prime(cx.graph())) return split_quotient(cx);
  const Graph& g = cx.graph();
  const auto [A, B] = seed_biclique(cx.g, 2);
  const VertexSet C = neighbourhood(g, B) - A, D = neighbourhood(g, A) - B;
  if (C.empty()) cx.fail("1", B.to_vector());
  if (D.empty()) cx.fail("1", A.to_vector());
  cx.passed("1");
  C.for_each([&](Vertex c) {
    if ((B - g.neighbours(c)).empty()) cx.fail("2", {c});
  });
  D.for_each([&](Vertex d) {
    if ((A - g.neighbours(d)).empty()) cx.fail("2", {d});
  });
  cx.passed("2");
  cx.expect_complete("3", C, D);
  cx.expect_empty("4", g.vertices() - (A | B | C | D));
  auto at_most_one_miss = [&](const std::string& claim, const VertexSet& from, const VertexSet& to) {
    from.for_each([&](Vertex v) {
      const VertexSet miss = to - g.neighbours(v);
      if (miss.size() > 1) {
        std::vector<Vertex> w = {v};
        for (Vertex m : miss.to_vector()) w.push_back(m);
        cx.fail(claim, w);
      }
    });
    cx.passed(claim);
  };
  at_most_one_miss("5", D, A);
  at_most_one_miss("5", C, B);
  at_most_one_miss("6", A, D);
  at_most_one_miss("6", B, C);
  Cover cov;
  cov.multiplicity = 2;
  cov.parts.push_back(cx.piece(A | B, complete_tag("biclique")));
  cov.parts.push_back(cx.piece(C | D, complete_tag("biclique")));
  cov.parts.push_back(cx.piece(A | D, codegree_tag("bipartite complement of degree <= 1", 1)));
  cov.parts.push_back(cx.piece(B | C, codegree_tag("bipartite complement of degree <= 1", 1)));
  return cx.make(std::move(cov));
}

Certificate find_p7_spp(Ctx& cx) {
  const int p = cx.prm.p;
  if (!contains_biclique(cx.g, p, p)) return reduce_to(cx, cx.g, "kpp-chordality", {p, 0, 8}, false);
  const Graph& g = cx.graph();
  const ClassSpec huv_spec = bip_spec({pattern::path(7), pattern::empty_bipartite(p, p)});
  Peel peel;
  peel.d = static_cast<unsigned>(2 * p - 1);
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    const BipartiteGraph sub = induced_subgraph(cx.g, rest);
    auto kb = contains_biclique(sub, p, p);
    if (!kb) {
      peel.layers.push_back(
          cx.piece(rest, class_tag("K_{p,p}-free", class_spec_for("kpp-chordality", {p, 0, 8}), true)));
      break;
    }
    // Back to indices of g.
    const auto rv = rest.to_vector();
    VertexSet Kt(g.order()), Kb(g.order());
    kb->top.for_each([&](Vertex v) { Kt.insert(rv[v - 1]); });
    kb->bottom.for_each([&](Vertex v) { Kb.insert(rv[v - 1]); });
    const VertexSet K = Kt | Kb;
    const VertexSet A = (neighbourhood(g, K) & rest) - K;
    if (A.empty()) {
      peel.layers.push_back(cx.piece(K, complete_tag("biclique")));
      rest -= K;
      continue;
    }
    const VertexSet far = rest - K - A;
    A.for_each([&](Vertex u) {
      const VertexSet out = g.neighbours(u) & far;
      if (out.size() > static_cast<std::size_t>(p - 1)) {
        std::vector<Vertex> w = {u};
        for (Vertex x : out.to_vector()) w.push_back(x);
        cx.fail("2", w);
      }
    });
    cx.passed("2");
    // Covering of G[A] by H_uv = G[A & (N(u) | N(v))] over the edges uv of K.
    Ctx inner{cx.g, cx.id, cx.prm, {}};
    Cover cov;
    cov.multiplicity = static_cast<unsigned>(p * p);
    Kt.for_each([&](Vertex u) {
      Kb.for_each([&](Vertex v) {
        const VertexSet H = A & (g.neighbours(u) | g.neighbours(v));
        if (H.empty()) return;
        inner.expect_free("1", H, pattern::empty_bipartite(p, p));
        cov.parts.push_back(inner.piece(H, class_tag("O_{p,p}-free", huv_spec, true)));
      });
    });
    cx.passed("1");
    Piece layer = cx.piece(A);
    // The inner certificate speaks about G[A], whose labels are those of g.
    Certificate ic;
    ic.class_id = cx.id;
    ic.params = cx.prm;
    ic.claims_checked = inner.claims;
    ic.body = std::move(cov);
    layer.inner.push_back(std::move(ic));
    peel.layers.push_back(std::move(layer));
    rest -= A;
  }
  return cx.make(std::move(peel));
}

Certificate find_p7_kppo0p(Ctx& cx) {
  const int p = cx.prm.p;
  const int t = static_cast<int>(bipartite_ramsey_cached(p)) + p - 1;
  auto kt = contains_biclique(cx.g, t, t);
  if (!kt) return reduce_to(cx, cx.g, "kpp-chordality", {t, 0, 8}, false);
  const BipartiteGraph co = bipartite_complement(cx.g);
  if (auto ot = contains_biclique(co, t, t)) cx.fail("K_{t,t} or O_{t,t}", (kt->top | kt->bottom | ot->top | ot->bottom).to_vector());
  cx.passed("K_{t,t} or O_{t,t}");
  return reduce_to(cx, cx.g, "kpp-chordality", {t, 0, 8}, true);
}

// Matching edges of the least 3K2 as (top, bottom), ordered by top vertex.
std::optional<std::vector<std::pair<Vertex, Vertex>>> least_3k2(const BipartiteGraph& g) {
  const BipartiteGraph pat = pattern_bipartite(pattern::three_k2());
  auto e = find_one_sided(g, pat, Side::Bottom);
  if (!e) return std::nullopt;
  std::vector<std::pair<Vertex, Vertex>> m;
  pat.top().for_each([&](Vertex t) {
    const Vertex b = pat.neighbours(t).first();
    m.emplace_back((*e)[t - 1], (*e)[b - 1]);
  });
  std::sort(m.begin(), m.end());
  return m;
}

Certificate delta_cert(Ctx& cx, Vertex a, Vertex b, unsigned bound, bool same_part) {
  const Graph& g = cx.graph();
  if (a > b) std::swap(a, b);
  const VertexSet d = neighbourhood_delta(g, a, b);
  if (d.size() > bound) {
    std::vector<Vertex> w = {a, b};
    for (Vertex v : d.to_vector()) w.push_back(v);
    cx.fail("bound", w);
  }
  cx.passed("bound");
  return cx.make(Delta{g.label(a), g.label(b), labels_of(g, d), bound, static_cast<unsigned>(d.size()), same_part});
}

Certificate find_p7_k12_2k2(Ctx& cx) {
  auto m = least_3k2(cx.g);
  if (!m) return reduce_to_spec(cx, "P7-3K2", class_spec_for("P7-3K2", {}));
  const Graph& g = cx.graph();
  VertexSet X(g.order()), M(g.order());
  for (auto [x, y] : *m) {
    X.insert(x);
    M.insert(x);
    M.insert(y);
  }
  std::optional<VertexSet> two;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (M.contains(v)) continue;
    const VertexSet hit = g.neighbours(v) & X;
    if (hit.size() == 1) cx.fail("1", {v, hit.first()});
    if (hit.size() == 2) {
      if (two && !(*two == hit)) {
        std::vector<Vertex> w = {v};
        for (Vertex x : (hit | *two).to_vector()) w.push_back(x);
        cx.fail("2", w);
      }
      two = hit;
    }
  }
  cx.passed("1");
  cx.passed("2");
  Vertex a = (*m)[0].first, b = (*m)[1].first;
  if (two) {
    a = two->first();
    b = two->next(a);
  }
  // N(a) xor N(b) is exactly the two matched partners.
  VertexSet expect(g.order());
  for (auto [x, y] : *m)
    if (x == a || x == b) expect.insert(y);
  if (!(neighbourhood_delta(g, a, b) == expect)) cx.fail("3", {a, b});
  cx.passed("3");
  return delta_cert(cx, a, b, 2, true);
}

// Least same-part pair of h with |N(u) xor N(v)| <= 1, in h's indices.
std::optional<std::pair<Vertex, Vertex>> chain_pair(const BipartiteGraph& h) {
  for (Vertex u = 1; u <= h.order(); ++u)
    for (Vertex v = u + 1; v <= h.order(); ++v)
      if (h.side(u) == h.side(v) && neighbourhood_delta(h.graph(), u, v).size() <= 1) return std::pair{u, v};
  return std::nullopt;
}

Certificate find_p7_p5k2(Ctx& cx) {
  const Graph& g = cx.graph();
  const auto m = maximum_induced_matching(cx.g);
  if (m.size() < 3) return reduce_to_spec(cx, "P7-3K2", class_spec_for("P7-3K2", {}));
  const std::size_t s = m.size(), n = g.order();
  VertexSet M1(n), M2(n);
  for (auto [x, y] : m) {
    M1.insert(x);
    M2.insert(y);
  }
  // Side 1 is the top part (holding M1); side 2 the bottom.
  VertexSet A1(n), B1(n), C1(n), A2(n), B2(n), C2(n);
  auto classify = [&](const VertexSet& part, const VertexSet& own, const VertexSet& other, VertexSet& A, VertexSet& B,
                      VertexSet& C) {
    (part - own).for_each([&](Vertex v) {
      const VertexSet hit = g.neighbours(v) & other;
      if (hit.size() == s) A.insert(v);
      else if (hit.size() == 1) B.insert(v);
      else if (hit.empty()) C.insert(v);
      else {
        std::vector<Vertex> w = {v};
        for (Vertex x : hit.to_vector()) w.push_back(x);
        cx.fail("0", w);
      }
    });
  };
  classify(cx.g.top(), M1, M2, A1, B1, C1);
  classify(cx.g.bottom(), M2, M1, A2, B2, C2);
  cx.passed("0");
  std::vector<VertexSet> X(s, VertexSet(n)), Y(s, VertexSet(n));
  for (std::size_t i = 0; i < s; ++i) {
    X[i] = g.neighbours(m[i].first) & B2;
    Y[i] = g.neighbours(m[i].second) & B1;
  }
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      if (i != j) cx.expect_no_edge("1", X[i], Y[j]);
  cx.passed("1");
  cx.expect_complete("2", A1, B2);
  cx.expect_complete("2", A2, B1);
  VertexSet R(n), Q(n);
  std::vector<VertexSet> Ri(s, VertexSet(n)), Qi(s, VertexSet(n));
  auto split = [&](const VertexSet& Cset, const std::vector<VertexSet>& T, VertexSet& none,
                   std::vector<VertexSet>& per) {
    Cset.for_each([&](Vertex v) {
      std::optional<std::size_t> at;
      for (std::size_t i = 0; i < s; ++i) {
        if (!(g.neighbours(v) & T[i]).empty()) {
          if (at) cx.fail("3", {v});
          at = i;
        }
      }
      if (at) per[*at].insert(v);
      else none.insert(v);
    });
  };
  split(C1, X, R, Ri);
  split(C2, Y, Q, Qi);
  cx.passed("3");
  cx.expect_complete("4", A1, C2 - Q);
  cx.expect_complete("4", A2, C1 - R);
  for (std::size_t i = 0; i < s; ++i) cx.expect_free("maximum", X[i] | C2 | Y[i] | C1, pattern::two_k2());
  cx.expect_no_edge("maximum", C1, C2);
  for (std::size_t i = 0; i < s; ++i) {
    if (X[i].size() < 2 || Y[i].size() < 2) continue;
    const VertexSet Hs = X[i] | Qi[i] | Y[i] | Ri[i];
    const BipartiteGraph H = induced_subgraph(cx.g, Hs);
    auto pr = chain_pair(H);
    if (!pr) cx.fail("2K2-free pair", Hs.to_vector());
    cx.passed("2K2-free pair");
    const auto hv = Hs.to_vector();
    return delta_cert(cx, hv[pr->first - 1], hv[pr->second - 1], 4, true);
  }
  std::vector<Vertex> low1, low2;
  for (std::size_t i = 0; i < s; ++i) {
    if (X[i].size() <= 1) low1.push_back(m[i].first);
    if (Y[i].size() <= 1) low2.push_back(m[i].second);
  }
  const auto& low = low1.size() >= 2 ? low1 : low2;
  if (low.size() < 2) cx.fail("low matched pair", M1.to_vector());
  cx.passed("low matched pair");
  return delta_cert(cx, low[0], low[1], 4, true);
}

Certificate find_p7_c4k2(Ctx& cx) {
  const Graph& g = cx.graph();
  const auto m = maximum_induced_matching(cx.g);
  if (m.size() < 3) return reduce_to_spec(cx, "P7-3K2", class_spec_for("P7-3K2", {}));
  const std::size_t s = m.size(), n = g.order();
  VertexSet M1(n), M2(n);
  std::vector<Vertex> xs, ys;
  for (auto [x, y] : m) {
    M1.insert(x);
    M2.insert(y);
    xs.push_back(x);
    ys.push_back(y);
  }
  struct SideSets {
    VertexSet A, B, C;
  };
  auto classify = [&](const VertexSet& part, const VertexSet& own, const VertexSet& other) {
    SideSets r{VertexSet(n), VertexSet(n), VertexSet(n)};
    (part - own).for_each([&](Vertex v) {
      const std::size_t h = (g.neighbours(v) & other).size();
      if (h == s) r.A.insert(v);
      else if (h > 0) r.B.insert(v);
      else r.C.insert(v);
    });
    return r;
  };
  const SideSets S1 = classify(cx.g.top(), M1, M2), S2 = classify(cx.g.bottom(), M2, M1);
  // Claims (1)-(6) for one orientation: B is the side adjacent to the matched
  // vertices `mine`, whose partners are `partners`; Bo/Ao/Co the opposite side.
  auto claims = [&](const std::vector<Vertex>& mine, const std::vector<Vertex>& partners, const SideSets& own,
                    const SideSets& opp) {
    VertexSet Mm(n, mine);
    const auto bv = own.B.to_vector();
    for (std::size_t a = 0; a < bv.size(); ++a)
      for (std::size_t b = a + 1; b < bv.size(); ++b) {
        const VertexSet nu = g.neighbours(bv[a]) & Mm, nv = g.neighbours(bv[b]) & Mm;
        if (nu.intersects(nv) && !nu.is_subset_of(nv) && !nv.is_subset_of(nu)) cx.fail("1", {bv[a], bv[b]});
      }
    cx.passed("1");
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j) {
        const VertexSet common = g.neighbours(mine[i]) & g.neighbours(mine[j]) & own.B;
        if (common.size() > 1) cx.fail("2", {mine[i], mine[j]});
      }
    cx.passed("2");
    for (std::size_t i = 0; i < s; ++i) {
      std::vector<Vertex> multi;
      (g.neighbours(mine[i]) & own.B).for_each([&](Vertex v) {
        if ((g.neighbours(v) & Mm).size() > 1) multi.push_back(v);
      });
      if (multi.size() > 1) cx.fail("3", multi);
    }
    cx.passed("3");
    own.B.for_each([&](Vertex v) {
      if ((g.neighbours(v) & Mm).size() != 1) return;
      if ((g.neighbours(v) & opp.B).size() > 2) cx.fail("4", {v});
      if ((opp.A - g.neighbours(v)).size() > 1) cx.fail("5", {v});
    });
    cx.passed("4");
    cx.passed("5");
    for (std::size_t i = 0; i < s; ++i) {
      VertexSet Ri(n);
      own.B.for_each([&](Vertex v) {
        if ((g.neighbours(v) & Mm) == VertexSet(n, {mine[i]})) Ri.insert(v);
      });
      cx.expect_in("6", Ri | opp.C, bip_spec({pattern::two_k2(), pattern::cycle(4)}));
    }
    (void)partners;
  };
  claims(ys, xs, S1, S2);
  claims(xs, ys, S2, S1);
  // Claim (7): the pair.
  for (std::size_t i = 0; i < s; ++i) {
    const VertexSet nb = g.neighbours(ys[i]) & S1.B;
    if (nb.size() <= 3) continue;
    std::vector<Vertex> only;
    nb.for_each([&](Vertex v) {
      if ((g.neighbours(v) & M2).size() == 1 && only.size() < 3) only.push_back(v);
    });
    if (only.size() < 3) cx.fail("3", nb.to_vector());
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) {
        const VertexSet dc = (g.neighbours(only[a]) ^ g.neighbours(only[b])) & S2.C;
        if (dc.size() <= 1) {
          cx.passed("6");
          return delta_cert(cx, only[a], only[b], 8, true);
        }
      }
    cx.fail("6", only);
  }
  return delta_cert(cx, ys[0], ys[1], 8, true);
}

struct DominoSets {
  VertexSet A, B, C, D, E, F, I, J;
};

DominoSets domino_sets(const BipartiteGraph& bg, int q) {
  const Graph& g = bg.graph();
  const auto [A, B] = seed_biclique(bg, q);
  DominoSets s{A, B, {}, {}, {}, {}, {}, {}};
  s.C = neighbourhood(g, B) - A;
  s.D = neighbourhood(g, A) - B;
  s.E = neighbourhood(g, s.D) - (A | s.C);
  s.F = neighbourhood(g, s.C) - (B | s.D);
  s.I = neighbourhood(g, s.F) - (A | s.C | s.E);
  s.J = neighbourhood(g, s.E) - (B | s.D | s.F);
  return s;
}

Certificate find_p7_domino(Ctx& cx) {
  if (!contains_biclique(cx.g, 2, 2)) return reduce_to(cx, cx.g, "kpp-chordality", {2, 0, 8}, false);
  if (!is_connected(cx.graph())) return split_components(cx);
  const DominoSets S = domino_sets(cx.g, 2);
  const ClassSpec p6c6 = bip_spec({pattern::path(6), pattern::cycle(6)});
  const ClassSpec c6 = bip_spec({pattern::cycle(6)});
  cx.expect_no_edge("1", S.C, S.D);
  cx.expect_one_sided_free("2", S.A | S.D, pattern::path(5), Side::Top);
  cx.expect_in("2", S.A | S.D, p6c6);
  cx.expect_one_sided_free("3", S.B | S.C, pattern::path(5), Side::Bottom);
  cx.expect_in("3", S.B | S.C, p6c6);
  cx.expect_no_edge("4", S.E, S.F);
  cx.expect_in("5", S.F | S.C, c6);
  cx.expect_in("6", S.E | S.D, c6);
  cx.expect_no_edge("7", S.I, S.J);
  cx.expect_in("8", S.J | S.E, c6);
  cx.expect_in("9", S.I | S.F, c6);
  cx.expect_empty("10", cx.graph().vertices() - (S.A | S.B | S.C | S.D | S.E | S.F | S.I | S.J));
  Cover cov;
  cov.multiplicity = 2;
  auto add = [&](const VertexSet& v, PartTag t) {
    if (!v.empty()) cov.parts.push_back(cx.piece(v, std::move(t)));
  };
  add(S.A | S.B, complete_tag("biclique"));
  add(S.A | S.D, class_tag("(P6,C6)-free", p6c6, false));
  add(S.B | S.C, class_tag("(P6,C6)-free", p6c6, false));
  add(S.F | S.C, class_tag("C6-free", c6, false));
  add(S.E | S.D, class_tag("C6-free", c6, false));
  add(S.J | S.E, class_tag("C6-free", c6, false));
  add(S.I | S.F, class_tag("C6-free", c6, false));
  return cx.make(std::move(cov));
}

Certificate find_p7_k33e(Ctx& cx) {
  if (!contains_biclique(cx.g, 4, 4)) return reduce_to(cx, cx.g, "kpp-chordality", {4, 0, 8}, false);
  if (!is_connected(cx.graph())) return split_components(cx);
  const Graph& g = cx.graph();
  const DominoSets S = domino_sets(cx.g, 4);
  const VertexSet AB = S.A | S.B;
  (g.vertices() - AB).for_each([&](Vertex v) {
    const VertexSet hit = g.neighbours(v) & AB;
    if (hit.size() > 1) {
      std::vector<Vertex> w = {v};
      for (Vertex x : hit.to_vector()) w.push_back(x);
      cx.fail("1", w);
    }
  });
  cx.passed("1");
  cx.expect_empty("10", g.vertices() - (AB | S.C | S.D | S.E | S.F | S.I | S.J));
  cx.expect_no_edge("7", S.I, S.J);
  const ClassSpec dom = class_spec_for("P7-domino", {});
  cx.expect_in("2", S.C | S.D | S.F | S.J, dom);
  cx.expect_in("3", S.E | S.F | S.J, dom);
  cx.expect_in("2", S.D | S.C | S.E | S.I, dom);
  cx.expect_in("3", S.F | S.E | S.I, dom);
  Cover cov;
  cov.multiplicity = 3;
  auto add = [&](const VertexSet& v, std::optional<PartTag> t, bool recurse) {
    if (v.empty()) return;
    Piece pc = cx.piece(v, std::move(t));
    if (recurse) pc.inner.push_back(find_impl(induced_subgraph(cx.g, v), "P7-domino", {}));
    cov.parts.push_back(std::move(pc));
  };
  add(AB, complete_tag("biclique"), false);
  for (const VertexSet& v : {S.A | S.D, S.B | S.C, S.C | S.D | S.F | S.J, S.E | S.F | S.J, S.D | S.C | S.E | S.I,
                             S.F | S.E | S.I})
    add(v, class_tag("domino-free", dom, false), true);
  return cx.make(std::move(cov));
}

Certificate find_chain(Ctx& cx) {
  if (cx.g.order() < 3) throw PreconditionMissingError("chain pairs need at least three vertices");
  auto pr = chain_pair(cx.g);
  if (!pr) cx.fail("inclusion order", cx.graph().vertices().to_vector());
  cx.passed("inclusion order");
  return delta_cert(cx, pr->first, pr->second, 1, true);
}

Certificate find_2k2_c4(Ctx& cx) {
  const Graph& g = cx.graph();
  LowDegree ld;
  ld.bound = 1;
  ld.measure = DegreeMeasure::Degree;
  for (const VertexSet* part : {&cx.g.top(), &cx.g.bottom()}) {
    std::vector<Vertex> high;
    std::optional<VertexSet> shared;
    part->for_each([&](Vertex v) {
      if (g.degree(v) > 1) high.push_back(v);
      if (g.degree(v) == 1) {
        if (shared && !(*shared == g.neighbours(v))) cx.fail("2", {v, shared->first(), g.neighbours(v).first()});
        shared = g.neighbours(v);
      }
    });
    if (high.size() > 1) cx.fail("1", high);
  }
  cx.passed("1");
  cx.passed("2");
  for (Vertex v = 1; v <= g.order(); ++v)
    if (g.degree(v) <= 1) ld.vertices.push_back(g.label(v));
  return cx.make(std::move(ld));
}

Certificate find_impl(const BipartiteGraph& g, const std::string& id, const ClassParams& prm) {
  Ctx cx{g, id, prm, {}};
  if (id == "kpp-chordality") return find_kpp_chordality(cx);
  if (id == "kpp-plus-k1") return find_kpp_plus_k1(cx);
  if (id == "Qp") return find_qp(cx);
  if (id == "L-plus-O01") return find_l_plus_o01(cx);
  if (id == "Mp") return find_mp(cx);
  if (id == "Np") return find_np(cx);
  if (id == "A-graph") return find_a_graph(cx);
  if (id == "P7-Spp") return find_p7_spp(cx);
  if (id == "P7-KppO0p") return find_p7_kppo0p(cx);
  if (id == "P7-K12-2K2") return find_p7_k12_2k2(cx);
  if (id == "P7-P5K2") return find_p7_p5k2(cx);
  if (id == "P7-C4K2") return find_p7_c4k2(cx);
  if (id == "P7-domino") return find_p7_domino(cx);
  if (id == "P7-K33e") return find_p7_k33e(cx);
  if (id == "chain") return find_chain(cx);
  if (id == "2k2-c4-structure") return find_2k2_c4(cx);
  throw PreconditionMissingError("no certificate finder for " + id);
}

}  // namespace

BicliquePartition biclique_partition(const BipartiteGraph& g, int p) {
  if (p < 1) throw std::invalid_argument("p must be positive");
  auto b = contains_biclique(g, p * p, p * p);
  if (!b) throw PreconditionMissingError("no K_{" + std::to_string(p * p) + "," + std::to_string(p * p) + "}");
  const Biclique ext = maximal_biclique_extension(g, *b);
  const std::size_t n = g.order();
  BicliquePartition P{ext.top,    VertexSet(n), VertexSet(n), VertexSet(n),
                      ext.bottom, VertexSet(n), VertexSet(n), VertexSet(n)};
  auto split = [&](const VertexSet& part, const VertexSet& own0, const VertexSet& other0, VertexSet& one_p,
                   VertexSet& one_pp, VertexSet& two) {
    (part - own0).for_each([&](Vertex v) {
      const VertexSet nb = g.neighbours(v) & other0;
      if (nb.empty()) two.insert(v);
      else if ((other0 - nb).size() <= static_cast<std::size_t>(p - 1)) one_p.insert(v);
      else one_pp.insert(v);
    });
  };
  split(g.top(), P.A0, P.B0, P.A1p, P.A1pp, P.A2);
  split(g.bottom(), P.B0, P.A0, P.B1p, P.B1pp, P.B2);
  return P;
}

std::string certificate_kind(const Certificate& c) {
  static const char* names[] = {"LowDegree", "Delta", "Cover", "Peel", "Reduce", "Components", "Quotient"};
  return names[c.body.index()];
}

Certificate find_certificate(const BipartiteGraph& g, const std::string& id, const ClassParams& prm,
                             bool check_membership) {
  const ClassSpec spec = class_spec_for(id, prm);
  if (!two_colouring(g.graph())) throw NotBipartiteError("graph is not bipartite");
  if (check_membership && !in_class(g, spec)) throw NotInClassError("graph is not in " + id, g.graph());
  return find_impl(g, id, prm);
}

Certificate find_certificate(const Graph& g, const std::string& id, const ClassParams& prm, bool check_membership) {
  auto top = two_colouring(g);
  if (!top) throw NotBipartiteError("graph is not bipartite");
  return find_certificate(BipartiteGraph(g, *top), id, prm, check_membership);
}

// ---- verification -------------------------------------------------------------

namespace {

Verdict bad(std::string why) { return Verdict{false, std::move(why)}; }

Verdict check_piece(const BipartiteGraph& g, const Piece& pc, const std::string& where,
                    std::optional<BipartiteGraph>* out_sub = nullptr) {
  std::string why;
  auto s = indices_of(g.graph(), pc.vertices, why);
  if (!s) return bad(where + ": " + why);
  if (s->empty()) return bad(where + ": empty piece");
  BipartiteGraph sub = induced_subgraph(g, *s);
  if (pc.tag) {
    const PartTag& t = *pc.tag;
    switch (t.check) {
      case PartCheck::Complete:
        if (!is_complete_between(sub.graph(), sub.top(), sub.bottom())) return bad(where + ": not complete bipartite");
        break;
      case PartCheck::CoDegreeAtMost:
        for (Vertex v = 1; v <= sub.order(); ++v)
          if (sub.opposite_non_neighbours(v).size() > t.bound)
            return bad(where + ": vertex " + std::to_string(sub.graph().label(v)) + " has too many non-neighbours");
        break;
      case PartCheck::InClass:
        if (!in_class(sub, t.spec)) return bad(where + ": not in " + describe(t.spec));
        break;
    }
  }
  if (pc.inner.size() > 1) return bad(where + ": more than one inner certificate");
  if (!pc.inner.empty()) {
    Verdict v = verify_certificate(sub, pc.inner.front());
    if (!v) return bad(where + ": " + v.reason);
  }
  if (out_sub) *out_sub = std::move(sub);
  return {};
}

bool same_sets(const Graph& g, const std::vector<VertexSet>& want, const std::vector<Piece>& got) {
  if (want.size() != got.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i)
    if (labels_of(g, want[i]) != got[i].vertices) return false;
  return true;
}

std::optional<Covering> rebuild_covering(const BipartiteGraph& g, const Cover& c, std::string& why) {
  Covering cov;
  cov.multiplicity = c.multiplicity;
  for (const auto& pc : c.parts) {
    auto s = indices_of(g.graph(), pc.vertices, why);
    if (!s) return std::nullopt;
    cov.parts.push_back(induced_subgraph(g.graph(), *s));
  }
  return cov;
}

std::optional<Peeling> rebuild_peeling(const BipartiteGraph& g, const Peel& p, std::string& why) {
  std::vector<VertexSet> layers;
  for (const auto& pc : p.layers) {
    auto s = indices_of(g.graph(), pc.vertices, why);
    if (!s) return std::nullopt;
    layers.push_back(*s);
  }
  try {
    return make_peeling(g.graph(), layers, p.d, g.top());
  } catch (const CertificateInvalidError& e) {
    why = e.what();
  } catch (const std::invalid_argument& e) {
    why = e.what();
  }
  return std::nullopt;
}

}  // namespace

Verdict verify_certificate(const BipartiteGraph& g, const Certificate& cert) {
  const Graph& gg = g.graph();
  std::string why;
  return std::visit(
      [&](const auto& b) -> Verdict {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, LowDegree>) {
          if (b.vertices.empty()) return bad("no vertices listed");
          auto s = indices_of(gg, b.vertices, why);
          if (!s) return bad(why);
          for (Vertex v : s->to_vector()) {
            std::size_t m = 0;
            switch (b.measure) {
              case DegreeMeasure::Degree: m = gg.degree(v); break;
              case DegreeMeasure::CoDegree: m = std::min(gg.degree(v), gg.co_degree(v)); break;
              case DegreeMeasure::BipartiteCoDegree:
                m = std::min(gg.degree(v), g.opposite_non_neighbours(v).size());
                break;
            }
            if (m > b.bound) return bad("vertex " + std::to_string(gg.label(v)) + " exceeds the bound");
          }
          return {};
        } else if constexpr (std::is_same_v<T, Delta>) {
          auto x = gg.find_label(b.x), y = gg.find_label(b.y);
          if (!x || !y || *x == *y) return bad("invalid pair");
          if (b.same_part && g.side(*x) != g.side(*y)) return bad("pair not in the same part");
          const VertexSet d = neighbourhood_delta(gg, *x, *y);
          if (labels_of(gg, d) != b.delta) return bad("symmetric difference differs");
          if (b.achieved != d.size()) return bad("achieved size differs");
          if (auto stated = stated_delta_bound(cert.class_id, cert.params); stated && *stated != b.bound)
            return bad("bound differs from the stated bound " + std::to_string(*stated));
          if (d.size() > b.bound) return bad("symmetric difference exceeds the bound");
          return {};
        } else if constexpr (std::is_same_v<T, Cover>) {
          auto cov = rebuild_covering(g, b, why);
          if (!cov) return bad(why);
          if (auto w = check_covering(gg, *cov)) return bad(*w);
          for (std::size_t i = 0; i < b.parts.size(); ++i)
            if (Verdict v = check_piece(g, b.parts[i], "part " + std::to_string(i)); !v) return v;
          return {};
        } else if constexpr (std::is_same_v<T, Peel>) {
          if (auto stated = stated_peel_d(cert.class_id, cert.params); stated && *stated != b.d)
            return bad("d differs from the stated bound " + std::to_string(*stated));
          auto peel = rebuild_peeling(g, b, why);
          if (!peel) return bad(why);
          if (auto w = check_peeling(gg, *peel)) return bad(*w);
          for (std::size_t i = 0; i < b.layers.size(); ++i)
            if (Verdict v = check_piece(g, b.layers[i], "layer " + std::to_string(i)); !v) return v;
          return {};
        } else if constexpr (std::is_same_v<T, Reduce>) {
          const BipartiteGraph t = b.on_bipartite_complement ? bipartite_complement(g) : g;
          if (!b.target_id.empty() && registry().count(b.target_id)) {
            try {
              if (!(class_spec_for(b.target_id, b.target_params) == b.target)) return bad("target spec mismatch");
            } catch (const std::invalid_argument& e) {
              return bad(e.what());
            }
          }
          if (!in_class(t, b.target)) return bad("graph is not in the target class");
          if (b.inner.size() > 1) return bad("more than one inner certificate");
          if (!b.inner.empty()) {
            Verdict v = verify_certificate(t, b.inner.front());
            if (!v) return bad("reduced: " + v.reason);
          }
          return {};
        } else {
          const std::vector<VertexSet> want =
              std::is_same_v<T, Components> ? connected_components(gg) : prime_representatives(gg);
          if (!same_sets(gg, want, b.parts)) return bad("pieces do not match the decomposition");
          for (std::size_t i = 0; i < b.parts.size(); ++i) {
            if (b.parts[i].inner.size() != 1) return bad("piece " + std::to_string(i) + " needs a certificate");
            if (Verdict v = check_piece(g, b.parts[i], "piece " + std::to_string(i)); !v) return v;
          }
          return {};
        }
      },
      cert.body);
}

// ---- schemes -----------------------------------------------------------------

namespace {

using SchemeOrPlan = std::variant<LabelingScheme, SuccinctPlan>;

SchemeOrPlan scheme_for(const BipartiteGraph& g, const Certificate& cert);

SchemeOrPlan piece_scheme(const BipartiteGraph& sub, const Piece& pc) {
  if (!pc.inner.empty()) return scheme_for(sub, pc.inner.front());
  if (!pc.tag) return SuccinctPlan{"piece without tag or certificate"};
  switch (pc.tag->check) {
    case PartCheck::Complete: return label_biclique(sub);
    case PartCheck::CoDegreeAtMost: return label_by_bipartite_degeneracy(sub, pc.tag->bound);
    case PartCheck::InClass:
      if (pc.tag->implicit) return label_by_bipartite_degeneracy(sub, least_bipartite_degeneracy(sub));
      return SuccinctPlan{"part tagged " + pc.tag->name + " has no scheme constructor"};
  }
  return SuccinctPlan{"unknown part check"};
}

BipartiteGraph sided(const BipartiteGraph& host, const Graph& part) {
  VertexSet top(part.order());
  for (Vertex v = 1; v <= part.order(); ++v)
    if (host.top().contains(*host.graph().find_label(part.label(v)))) top.insert(v);
  return BipartiteGraph(part, std::move(top));
}

struct NoScheme {
  SuccinctPlan plan;
};

SchemeOrPlan combine_pieces(const BipartiteGraph& g, const std::vector<Piece>& pieces, unsigned multiplicity) {
  std::string why;
  Covering cov;
  cov.multiplicity = multiplicity;
  std::vector<LabelingScheme> subs;
  for (const auto& pc : pieces) {
    auto s = indices_of(g.graph(), pc.vertices, why);
    if (!s) throw CertificateInvalidError(why, 0);
    const BipartiteGraph sub = induced_subgraph(g, *s);
    SchemeOrPlan r = piece_scheme(sub, pc);
    if (auto* plan = std::get_if<SuccinctPlan>(&r)) return *plan;
    cov.parts.push_back(sub.graph());
    subs.push_back(std::get<LabelingScheme>(std::move(r)));
  }
  return combine_covering(g.graph(), cov, subs);
}

SchemeOrPlan scheme_for(const BipartiteGraph& g, const Certificate& cert) {
  return std::visit(
      [&](const auto& b) -> SchemeOrPlan {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, LowDegree>) {
          if (b.measure == DegreeMeasure::BipartiteCoDegree)
            return label_by_bipartite_degeneracy(g, least_bipartite_degeneracy(g));
          return label_by_degeneracy(g.graph(), least_degeneracy(g.graph()));
        } else if constexpr (std::is_same_v<T, Delta>) {
          return SuccinctPlan{"Delta pair: functional-vertex description only, no implicit labels"};
        } else if constexpr (std::is_same_v<T, Cover>) {
          return combine_pieces(g, b.parts, b.multiplicity);
        } else if constexpr (std::is_same_v<T, Peel>) {
          std::string why;
          auto peel = rebuild_peeling(g, b, why);
          if (!peel) throw CertificateInvalidError(why, 0);
          std::optional<SuccinctPlan> plan;
          auto builder = [&](const Graph& layer, std::size_t i) -> LabelingScheme {
            SchemeOrPlan r = piece_scheme(sided(g, layer), b.layers[i]);
            if (auto* p = std::get_if<SuccinctPlan>(&r)) throw NoScheme{*p};
            return std::get<LabelingScheme>(std::move(r));
          };
          try {
            return combine_peeling(g.graph(), *peel, builder);
          } catch (const NoScheme& e) {
            return e.plan;
          }
        } else if constexpr (std::is_same_v<T, Reduce>) {
          if (b.inner.empty()) return SuccinctPlan{"reduced to " + describe(b.target) + " without a scheme"};
          if (b.on_bipartite_complement) {
            // The complement's low degree is this graph's low co-degree.
            return label_by_bipartite_degeneracy(g, least_bipartite_degeneracy(g));
          }
          return scheme_for(g, b.inner.front());
        } else if constexpr (std::is_same_v<T, Components>) {
          return combine_pieces(g, b.parts, 1);
        } else {
          return SuccinctPlan{"prime quotients certified; labels through the decomposition are not built"};
        }
      },
      cert.body);
}

}  // namespace

std::variant<LabelingScheme, SuccinctPlan> certificate_to_scheme(const BipartiteGraph& g, const Certificate& cert) {
  Verdict v = verify_certificate(g, cert);
  if (!v) throw CertificateInvalidError("certificate does not verify: " + v.reason, 0);
  return scheme_for(g, cert);
}

}  // namespace herencode
