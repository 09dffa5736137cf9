#include "herencode/patterns.hpp"

#include <stdexcept>

namespace herencode {

namespace pattern {
NamedPattern path(int k) { return {PatternKind::Path, k}; }
NamedPattern cycle(int k) { return {PatternKind::Cycle, k}; }
NamedPattern complete(int k) { return {PatternKind::Complete, k}; }
NamedPattern empty(int k) { return {PatternKind::Empty, k}; }
NamedPattern complete_bipartite(int p, int q) { return {PatternKind::CompleteBip, p, q}; }
NamedPattern empty_bipartite(int p, int q) { return {PatternKind::EmptyBip, p, q}; }
NamedPattern spider(int i, int j, int k) { return {PatternKind::Spider, i, j, k}; }
NamedPattern double_star(int p, int q) { return {PatternKind::DoubleStar, p, q}; }
NamedPattern three_k2() { return {PatternKind::ThreeK2}; }
NamedPattern two_k2() { return {PatternKind::TwoK2}; }
NamedPattern k12_plus_2k2() { return {PatternKind::K12Plus2K2}; }
NamedPattern p5_plus_k2() { return {PatternKind::P5PlusK2}; }
NamedPattern c4_plus_k2() { return {PatternKind::C4PlusK2}; }
NamedPattern domino() { return {PatternKind::Domino}; }
NamedPattern k33_minus_edge() { return {PatternKind::K33MinusEdge}; }
NamedPattern q(int p) { return {PatternKind::Q, p}; }
NamedPattern l(int s, int p) { return {PatternKind::L, s, p}; }
NamedPattern l_plus_o01(int s, int p) { return {PatternKind::LPlusO01, s, p}; }
NamedPattern m(int p) { return {PatternKind::M, p}; }
NamedPattern n(int p) { return {PatternKind::N, p}; }
NamedPattern m_star(int p) { return {PatternKind::MStar, p}; }
NamedPattern n_star(int p) { return {PatternKind::NStar, p}; }
NamedPattern kpp_plus_k1(int p) { return {PatternKind::KppPlusK1, p}; }
NamedPattern kpp_plus_o0p(int p) { return {PatternKind::KppPlusO0p, p}; }
NamedPattern a_graph() { return {PatternKind::AGraph}; }
}  // namespace pattern

namespace {

struct KindInfo {
  PatternKind kind;
  const char* id;
  int params;
};

constexpr KindInfo kKinds[] = {
    {PatternKind::Path, "P", 1},          {PatternKind::Cycle, "C", 1},
    {PatternKind::Complete, "K", 1},      {PatternKind::Empty, "O", 1},
    {PatternKind::CompleteBip, "Kpq", 2}, {PatternKind::EmptyBip, "Opq", 2},
    {PatternKind::Spider, "S", 3},        {PatternKind::DoubleStar, "Spq", 2},
    {PatternKind::ThreeK2, "3K2", 0},     {PatternKind::TwoK2, "2K2", 0},
    {PatternKind::K12Plus2K2, "K12+2K2", 0}, {PatternKind::P5PlusK2, "P5+K2", 0},
    {PatternKind::C4PlusK2, "C4+K2", 0},  {PatternKind::Domino, "domino", 0},
    {PatternKind::K33MinusEdge, "K33-e", 0}, {PatternKind::Q, "Q", 1},
    {PatternKind::L, "L", 2},             {PatternKind::LPlusO01, "L+O01", 2},
    {PatternKind::M, "M", 1},             {PatternKind::N, "N", 1},
    {PatternKind::MStar, "M*", 1},        {PatternKind::NStar, "N*", 1},
    {PatternKind::KppPlusK1, "Kpp+K1", 1}, {PatternKind::KppPlusO0p, "Kpp+O0p", 1},
    {PatternKind::AGraph, "A", 0},
};

const KindInfo& info(PatternKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw std::invalid_argument("unknown pattern kind");
}

// Pattern under construction: vertex count, top part, edge list.
struct Builder {
  std::size_t n;
  std::vector<Vertex> top;
  std::vector<Edge> edges;
  bool bipartite = true;

  void join(Vertex u, Vertex v) { edges.emplace_back(u, v); }
  void join_all(Vertex u, Vertex lo, Vertex hi) {
    for (Vertex v = lo; v <= hi; ++v) join(u, v);
  }
};

Builder build(const NamedPattern& p) {
  const int a = p.a, b = p.b, c = p.c;
  Builder x{};
  switch (p.kind) {
    case PatternKind::Path:
      x.n = a;
      for (int i = 1; i < a; ++i) x.join(i, i + 1);
      for (int i = 1; i <= a; i += 2) x.top.push_back(i);
      break;
    case PatternKind::Cycle:
      x.n = a;
      for (int i = 1; i < a; ++i) x.join(i, i + 1);
      x.join(1, a);
      x.bipartite = a % 2 == 0;
      for (int i = 1; i <= a; i += 2) x.top.push_back(i);
      break;
    case PatternKind::Complete:
      x.n = a;
      for (int i = 1; i <= a; ++i)
        for (int j = i + 1; j <= a; ++j) x.join(i, j);
      x.bipartite = a <= 2;
      x.top = {1};
      break;
    case PatternKind::Empty:
      x.n = a;
      for (int i = 1; i <= a; ++i) x.top.push_back(i);
      break;
    case PatternKind::CompleteBip:
    case PatternKind::EmptyBip:
      x.n = a + b;
      for (int i = 1; i <= a; ++i) {
        x.top.push_back(i);
        if (p.kind == PatternKind::CompleteBip) x.join_all(i, a + 1, a + b);
      }
      break;
    case PatternKind::Spider: {
      // Centre 1, then legs of lengths a, b, c.
      x.n = 1 + a + b + c;
      x.top.push_back(1);
      Vertex next = 2;
      for (int len : {a, b, c}) {
        Vertex prev = 1;
        for (int d = 1; d <= len; ++d, ++next) {
          x.join(prev, next);
          if (d % 2 == 0) x.top.push_back(next);
          prev = next;
        }
      }
      break;
    }
    case PatternKind::DoubleStar:
      // Centres 1 and 2; 1 carries a leaves, 2 carries b leaves.
      x.n = 2 + a + b;
      x.join(1, 2);
      x.join_all(1, 3, 2 + a);
      x.join_all(2, 3 + a, 2 + a + b);
      x.top.push_back(1);
      for (int i = 3 + a; i <= 2 + a + b; ++i) x.top.push_back(i);
      break;
    case PatternKind::ThreeK2:
      x.n = 6;
      x.top = {1, 2, 3};
      x.edges = {{1, 4}, {2, 5}, {3, 6}};
      break;
    case PatternKind::TwoK2:
      x.n = 4;
      x.top = {1, 2};
      x.edges = {{1, 3}, {2, 4}};
      break;
    case PatternKind::K12Plus2K2:
      x.n = 7;
      x.top = {5, 6, 7};
      x.edges = {{1, 5}, {2, 5}, {3, 6}, {4, 7}};
      break;
    case PatternKind::P5PlusK2:
      x.n = 7;
      x.top = {5, 6, 7};
      x.edges = {{1, 5}, {2, 5}, {3, 6}, {4, 7}, {2, 6}};
      break;
    case PatternKind::C4PlusK2:
      x.n = 6;
      x.top = {4, 5, 6};
      x.edges = {{1, 5}, {1, 6}, {2, 5}, {2, 6}, {3, 4}};
      break;
    case PatternKind::Domino:
      x.n = 6;
      x.top = {4, 5, 6};
      x.edges = {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {2, 6}};
      break;
    case PatternKind::K33MinusEdge:
      x.n = 6;
      x.top = {4, 5, 6};
      for (Vertex u = 1; u <= 3; ++u)
        for (Vertex v = 4; v <= 6; ++v)
          if (!(u == 3 && v == 6)) x.join(u, v);
      break;
    case PatternKind::Q:
      // Bottom 1..a+1 (a+1 is the added K1), top a+2..2a+2; 2a+2 dominates the bottom.
      x.n = 2 * a + 2;
      for (int t = a + 2; t <= 2 * a + 1; ++t) x.join_all(t, 1, a);
      x.join_all(2 * a + 2, 1, a + 1);
      for (int t = a + 2; t <= 2 * a + 2; ++t) x.top.push_back(t);
      break;
    case PatternKind::L:
    case PatternKind::LPlusO01: {
      // Bottom: pendants 1..a, K_{2,b} side a+1..a+b; top: x = a+b+1 (with
      // the pendants), y = a+b+2; optional isolated bottom vertex a+b+3.
      const int s = a, q = b;
      x.n = s + q + 2 + (p.kind == PatternKind::LPlusO01 ? 1 : 0);
      x.join_all(s + q + 1, 1, s + q);
      x.join_all(s + q + 2, s + 1, s + q);
      x.top = {static_cast<Vertex>(s + q + 1), static_cast<Vertex>(s + q + 2)};
      break;
    }
    case PatternKind::M:
    case PatternKind::N:
      // Bottom 1..a (K_{2,a} side) and pendant a+1; top a+2 (x), a+3 (y, carries
      // the pendant), a+4 (adjacent to the pendant in M, isolated in N).
      x.n = a + 4;
      x.join_all(a + 2, 1, a);
      x.join_all(a + 3, 1, a + 1);
      if (p.kind == PatternKind::M) x.join(a + 4, a + 1);
      x.top = {static_cast<Vertex>(a + 2), static_cast<Vertex>(a + 3), static_cast<Vertex>(a + 4)};
      break;
    case PatternKind::MStar:
    case PatternKind::NStar:
      // Larger part is the bottom 1..a+1; top a+2 is the star centre.
      x.n = a + 3;
      x.join_all(a + 2, 1, a);
      if (p.kind == PatternKind::MStar) x.join(a + 3, a + 1);
      x.top = {static_cast<Vertex>(a + 2), static_cast<Vertex>(a + 3)};
      break;
    case PatternKind::KppPlusK1:
      // Bottom 1..a+1 with a+1 isolated; top a+2..2a+1.
      x.n = 2 * a + 1;
      for (int t = a + 2; t <= 2 * a + 1; ++t) {
        x.join_all(t, 1, a);
        x.top.push_back(t);
      }
      break;
    case PatternKind::KppPlusO0p:
      // Bottom 1..2a with a+1..2a isolated; top 2a+1..3a.
      x.n = 3 * a;
      for (int t = 2 * a + 1; t <= 3 * a; ++t) {
        x.join_all(t, 1, a);
        x.top.push_back(t);
      }
      break;
    case PatternKind::AGraph:
      // A 4-cycle a1 b1 a2 b2 with a pendant c on b1 and a pendant d on a1:
      // a1=1, a2=2, c=3 on top; b1=4, b2=5, d=6 on the bottom.
      x.n = 6;
      x.top = {1, 2, 3};
      x.edges = {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {1, 6}};
      break;
  }
  (void)c;
  return x;
}

}  // namespace

std::string pattern_id(PatternKind kind) { return info(kind).id; }

PatternKind pattern_kind_from_id(const std::string& id) {
  for (const auto& i : kKinds)
    if (id == i.id) return i.kind;
  throw std::invalid_argument("unknown pattern '" + id + "'");
}

std::string display_name(const NamedPattern& p) {
  auto s = [](int v) { return std::to_string(v); };
  switch (p.kind) {
    case PatternKind::Path: return "P" + s(p.a);
    case PatternKind::Cycle: return "C" + s(p.a);
    case PatternKind::Complete: return "K" + s(p.a);
    case PatternKind::Empty: return "O" + s(p.a);
    case PatternKind::CompleteBip: return "K_{" + s(p.a) + "," + s(p.b) + "}";
    case PatternKind::EmptyBip: return "O_{" + s(p.a) + "," + s(p.b) + "}";
    case PatternKind::Spider: return "S_{" + s(p.a) + "," + s(p.b) + "," + s(p.c) + "}";
    case PatternKind::DoubleStar: return "S_{" + s(p.a) + "," + s(p.b) + "}";
    case PatternKind::Q: return "Q(" + s(p.a) + ")";
    case PatternKind::L: return "L(" + s(p.a) + "," + s(p.b) + ")";
    case PatternKind::LPlusO01: return "L(" + s(p.a) + "," + s(p.b) + ")+O_{0,1}";
    case PatternKind::M: return "M(" + s(p.a) + ")";
    case PatternKind::N: return "N(" + s(p.a) + ")";
    case PatternKind::MStar: return "M*(" + s(p.a) + ")";
    case PatternKind::NStar: return "N*(" + s(p.a) + ")";
    case PatternKind::KppPlusK1: return "K_{" + s(p.a) + "," + s(p.a) + "}+K1";
    case PatternKind::KppPlusO0p: return "K_{" + s(p.a) + "," + s(p.a) + "}+O_{0," + s(p.a) + "}";
    default: return info(p.kind).id;
  }
}

void validate(const NamedPattern& p) {
  const int need = info(p.kind).params;
  const int vals[3] = {p.a, p.b, p.c};
  for (int i = 0; i < 3; ++i) {
    if (i < need && vals[i] < 1)
      throw std::invalid_argument("pattern " + pattern_id(p.kind) + " needs positive parameters");
    if (i >= need && vals[i] != 0)
      throw std::invalid_argument("pattern " + pattern_id(p.kind) + " takes " + std::to_string(need) + " parameters");
  }
  if (p.kind == PatternKind::Cycle && p.a < 3) throw std::invalid_argument("cycles need at least 3 vertices");
}

bool has_bipartition(const NamedPattern& p) {
  validate(p);
  return build(p).bipartite;
}

Graph pattern_graph(const NamedPattern& p) {
  validate(p);
  auto x = build(p);
  return Graph::from_edges(x.n, x.edges);
}

BipartiteGraph pattern_bipartite(const NamedPattern& p) {
  validate(p);
  auto x = build(p);
  if (!x.bipartite) throw std::invalid_argument(display_name(p) + " is not bipartite");
  return BipartiteGraph(Graph::from_edges(x.n, x.edges), VertexSet(x.n, x.top));
}

std::variant<Graph, BipartiteGraph> instantiate(const NamedPattern& p) {
  if (has_bipartition(p)) return pattern_bipartite(p);
  return pattern_graph(p);
}

}  // namespace herencode
