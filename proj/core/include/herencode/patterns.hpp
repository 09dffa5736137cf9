#pragma once

#include <string>
#include <variant>

#include "herencode/graph.hpp"

namespace herencode {

enum class PatternKind {
  Path,              // P_k
  Cycle,             // C_k
  Complete,          // K_k
  Empty,             // O_k
  CompleteBip,       // K_{p,q}
  EmptyBip,          // O_{p,q}
  Spider,            // S_{i,j,k}
  DoubleStar,        // S_{p,q}
  ThreeK2,           // 3K2
  TwoK2,             // 2K2
  K12Plus2K2,        // K_{1,2} + 2K2
  P5PlusK2,          // P5 + K2
  C4PlusK2,          // C4 + K2
  Domino,
  K33MinusEdge,      // K_{3,3} - e
  Q,                 // Q(p)
  L,                 // L(s,p)
  LPlusO01,          // L(s,p) + O_{0,1}
  M,                 // M(p)
  N,                 // N(p)
  MStar,             // M*(p) = K_{1,p} + K2
  NStar,             // N*(p) = K_{1,p} + O_{1,1}
  KppPlusK1,         // K_{p,p} + K1
  KppPlusO0p,        // K_{p,p} + O_{0,p}
  AGraph,            // the six-vertex graph A
};

// A pattern identifier with its integer parameters. Unused parameters are 0.
// Parameter slots: k (P,C,K,O), p/q (K_{p,q}, O_{p,q}, S_{p,q}), i/j/k
// (spider), s/p (L families), p (Q, M, N, M*, N*, K_{p,p}+...).
struct NamedPattern {
  PatternKind kind = PatternKind::Path;
  int a = 0;
  int b = 0;
  int c = 0;

  friend bool operator==(const NamedPattern&, const NamedPattern&) = default;
};

namespace pattern {
NamedPattern path(int k);
NamedPattern cycle(int k);
NamedPattern complete(int k);
NamedPattern empty(int k);
NamedPattern complete_bipartite(int p, int q);
NamedPattern empty_bipartite(int p, int q);
NamedPattern spider(int i, int j, int k);
NamedPattern double_star(int p, int q);
NamedPattern three_k2();
NamedPattern two_k2();
NamedPattern k12_plus_2k2();
NamedPattern p5_plus_k2();
NamedPattern c4_plus_k2();
NamedPattern domino();
NamedPattern k33_minus_edge();
NamedPattern q(int p);
NamedPattern l(int s, int p);
NamedPattern l_plus_o01(int s, int p);
NamedPattern m(int p);
NamedPattern n(int p);
NamedPattern m_star(int p);
NamedPattern n_star(int p);
NamedPattern kpp_plus_k1(int p);
NamedPattern kpp_plus_o0p(int p);
NamedPattern a_graph();
}  // namespace pattern

// Short identifier used in JSON ("P", "Kpq", "L+O01", ...).
std::string pattern_id(PatternKind kind);
PatternKind pattern_kind_from_id(const std::string& id);
// Human-readable name such as "P7", "K_{2,2}" or "Q(2)".
std::string display_name(const NamedPattern& p);

// Throws std::invalid_argument for out-of-range parameters.
void validate(const NamedPattern& p);
bool has_bipartition(const NamedPattern& p);

// The pattern as a plain graph (always available).
Graph pattern_graph(const NamedPattern& p);
// The pattern with its canonical top/bottom; throws std::invalid_argument
// for patterns that are not bipartite.
BipartiteGraph pattern_bipartite(const NamedPattern& p);
std::variant<Graph, BipartiteGraph> instantiate(const NamedPattern& p);

}  // namespace herencode
