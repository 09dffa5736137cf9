// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Exit status is nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "herencode/corpus.hpp"
#include "herencode/graph_io.hpp"
#include "herencode/labeling.hpp"
#include "herencode/modular.hpp"
#include "herencode/patterns.hpp"
#include "herencode/recognition.hpp"
#include "herencode/speed.hpp"
#include "herencode/succinct.hpp"
#include "herencode/witness.hpp"
#include "oracle.hpp"

using namespace herencode;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void fail(const std::string& what) {
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& extra = "") const {
    std::ostringstream s;
    s << checked << " checked, " << failures << " failed";
    if (!extra.empty()) s << "; " << extra;
    if (failures) s << "; first: " << first;
    return {failures == 0 && checked > 0, s.str()};
  }
};

bool pairs_match(const Graph& g, const LabelingScheme& s) {
  const auto m = oracle::matrix(g);
  if (s.labels.size() != g.order()) return false;
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v) {
      const bool want = m[u][v];
      if (adjacency_query(s.descriptor, s.labels[u], s.labels[v]) != want) return false;
      if (adjacency_query(s.descriptor, s.labels[v], s.labels[u]) != want) return false;
    }
  return true;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

std::vector<Graph> codec_corpus() {
  std::vector<Graph> all;
  for (std::size_t n = 1; n <= 5; ++n) for_each_graph(n, [&](const Graph& g) { all.push_back(g); });
  for (Graph& g : random_graphs(20261016, 10000, 64)) all.push_back(std::move(g));
  return all;
}

// ---- 1, 2: modular codec -------------------------------------------------

Outcome modular_round_trip(const std::vector<Graph>& corpus) {
  NaivePrimeCodec pc;
  Tally t;
  for (const Graph& g : corpus) {
    ++t.checked;
    try {
      if (!(decode_modular(encode_modular(g, pc), pc) == g)) t.fail(to_graph6(g));
    } catch (const std::exception& e) {
      t.fail(to_graph6(g) + ": " + e.what());
    }
  }
  return t.outcome();
}

Outcome modular_accounting(const std::vector<Graph>& corpus) {
  NaivePrimeCodec pc;
  Tally t;
  for (const Graph& g : corpus) {
    ++t.checked;
    const LengthReport r = check_length_accounting(g, pc);
    const double n = static_cast<double>(g.order());
    const double bound = (r.c + 2) * n * (n > 1 ? std::log2(n) : 0.0) + n + static_cast<double>(r.node_count);
    const bool ok = r.pass && static_cast<double>(r.internal_contribution) <= bound + 1e-9 &&
                    r.word_length == encode_modular(g, pc).size();
    if (!ok) t.fail(to_graph6(g));
  }
  return t.outcome();
}

// ---- 3: log inequality ---------------------------------------------------

Outcome log_inequality() {
  // Independent enumeration: every composition of n into k < n parts.
  Tally t;
  for (std::size_t n = 2; n <= 18; ++n) {
    for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
      std::vector<std::size_t> parts;
      std::size_t run = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (cuts >> i & 1) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      const std::size_t k = parts.size();
      if (k >= n) continue;
      ++t.checked;
      long double lhs = k * std::log2(static_cast<long double>(k));
      for (std::size_t p : parts) lhs += p * std::log2(static_cast<long double>(p));
      const long double rhs = n * std::log2(static_cast<long double>(n));
      const bool ours = lhs <= rhs + 1e-12L;
      const bool lib = check_log_inequality(k, parts);
      if (!ours || !lib) t.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  const CompositionSweep s = sweep_compositions(18);
  if (s.checked != t.checked) t.fail("sweep counted " + std::to_string(s.checked));
  if (s.violations) t.fail("sweep reported violations");
  return t.outcome();
}

// ---- 4: functional codec -------------------------------------------------

Outcome functional_codec() {
  Tally t;
  std::size_t encoded = 0;
  auto bound = [](std::size_t n, unsigned c) {
    const double l = n > 1 ? std::ceil(std::log2(static_cast<double>(n))) : 0.0;
    return (2.0 * c + 1) * n * l + (std::pow(2.0, c) + 2.0 * c) * n;
  };
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_graph(n, [&](const Graph& g) {
      ++t.checked;
      BitString bits;
      try {
        bits = encode_functional(g, 2);
      } catch (const NotInClassError&) {
        return;
      }
      ++encoded;
      if (!(decode_functional(bits, n, 2) == g)) t.fail("round trip " + to_graph6(g));
      if (static_cast<double>(bits.size()) > bound(n, 2)) t.fail("length " + to_graph6(g));
    });
  for (std::size_t n = 1; n <= 64; ++n)
    for (const Graph& g : {Graph(n), complete_graph(n)}) {
      ++t.checked;
      try {
        const BitString bits = encode_functional(g, 0);
        if (!(decode_functional(bits, n, 0) == g)) t.fail("c=0 round trip n=" + std::to_string(n));
        if (static_cast<double>(bits.size()) > bound(n, 0)) t.fail("c=0 length n=" + std::to_string(n));
      } catch (const std::exception& e) {
        t.fail(std::string("c=0 n=") + std::to_string(n) + ": " + e.what());
      }
    }
  return t.outcome(std::to_string(encoded) + " graphs with a chain at c=2");
}

// ---- 5: labeling soundness ----------------------------------------------

Outcome labeling_soundness() {
  Tally t;
  auto check = [&](const Graph& g, const LabelingScheme& s, const std::string& what) {
    ++t.checked;
    if (!pairs_match(g, s)) t.fail(what + " pairs " + to_graph6(g));
    if (s.max_label_length() > s.declared_bound()) t.fail(what + " length " + to_graph6(g));
  };
  for (std::size_t n = 1; n <= 6; ++n)
    for_each_graph(n, [&](const Graph& g) {
      check(g, label_by_degeneracy(g, least_degeneracy(g)), "degeneracy");
      const Covering cov = forest_cover(g);
      if (auto why = check_covering(g, cov)) t.fail("covering " + *why);
      std::vector<LabelingScheme> subs;
      for (const Graph& f : cov.parts) subs.push_back(label_by_degeneracy(f, 1));
      check(g, combine_covering(g, cov, subs), "forest-cover");
    });

  // Peelings produced by the class certificates.
  std::size_t peelings = 0;
  auto from_certificate = [&](const BipartiteGraph& g, const std::string& id, const ClassParams& prm) {
    const Certificate c = find_certificate(g, id, prm);
    if (certificate_kind(c) != "Peel") return;
    ++peelings;
    auto s = certificate_to_scheme(g, c);
    if (auto* ls = std::get_if<LabelingScheme>(&s)) check(g.graph(), *ls, id + " peeling");
    else t.fail(id + " peeling without scheme");
  };
  const std::vector<std::pair<std::string, ClassParams>> peeling_classes = {
      {"Qp", {2, 0, 6}}, {"P7-Spp", {2, 0, 0}}, {"kpp-plus-k1", {2, 0, 6}}};
  for (const auto& [id, prm] : peeling_classes) {
    const ClassSpec spec = class_spec_for(id, prm);
    for (std::size_t a = 1; a <= 5; ++a)
      for (std::size_t b = a; b <= 5; ++b)
        for_each_bipartite(a, b, [&](const BipartiteGraph& g) { return in_class(g, spec); },
                           [&](const BipartiteGraph& g) { from_certificate(g, id, prm); });
  }
  if (peelings == 0) t.fail("no peeling certificates found");
  return t.outcome(std::to_string(peelings) + " peelings");
}

// ---- 6: witness bounds ---------------------------------------------------

BipartiteGraph k22_plus_o01() {
  // Top 1, 2 complete to bottom 3, 4; bottom 5 isolated.
  Graph h(5);
  for (Vertex a : {1, 2})
    for (Vertex b : {3, 4}) h.add_edge(a, b);
  return BipartiteGraph(h, VertexSet(5, {1, 2}));
}

struct DeltaRun {
  std::string id;
  ClassParams params;
  unsigned bound;
  std::function<bool(const BipartiteGraph&)> precondition;
  bool same_part;
  std::size_t min_order = 0;
};

Outcome witness_bounds() {
  const BipartiteGraph three = pattern_bipartite(pattern::three_k2());
  const BipartiteGraph kp = k22_plus_o01();
  auto has_3k2 = [&](const BipartiteGraph& g) { return contains_one_sided(g, three, Side::Bottom); };
  auto has_kp = [&](const BipartiteGraph& g) {
    return contains_one_sided(g, kp, Side::Bottom) || contains_one_sided(g, kp, Side::Top);
  };
  const std::vector<DeltaRun> runs = {
      {"P7-K12-2K2", {}, 2, has_3k2, true},
      {"P7-P5K2", {}, 4, has_3k2, false},
      {"P7-C4K2", {}, 8, has_3k2, false},
      {"L-plus-O01", {2, 2, 4}, 2, has_kp, true},
      {"chain", {}, 1, [](const BipartiteGraph&) { return true; }, true, 3},
  };
  Tally t;
  std::ostringstream extra;
  for (const DeltaRun& r : runs) {
    const ClassSpec spec = class_spec_for(r.id, r.params);
    std::size_t graphs = 0, deltas = 0;
    unsigned worst = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t a = 1; a <= 6; ++a)
      for (std::size_t b = a; b <= 6; ++b)
        for_each_bipartite(a, b, [&](const BipartiteGraph& g) { return in_class(g, spec); },
                           [&](const BipartiteGraph& g) {
                             if (g.order() < r.min_order) return;
                             ++graphs;
                             ++t.checked;
                             const std::string name = r.id + " " + to_graph6(g.graph());
                             Certificate c;
                             try {
                               c = find_certificate(g, r.id, r.params);
                             } catch (const std::exception& e) {
                               t.fail(name + ": " + e.what());
                               return;
                             }
                             const Verdict v = verify_certificate(g, c);
                             if (!v) t.fail(name + ": " + v.reason);
                             const Delta* d = std::get_if<Delta>(&c.body);
                             if (!d) {
                               if (r.precondition(g)) t.fail(name + ": no Delta pair");
                               return;
                             }
                             ++deltas;
                             const auto m = oracle::matrix(g.graph());
                             const Vertex x = g.graph().find_label(d->x).value_or(0), y = g.graph().find_label(d->y).value_or(0);
                             if (!x || !y) {
                               t.fail(name + ": pair names unknown vertices");
                               return;
                             }
                             const std::size_t sd = oracle::symmetric_difference(m, x - 1, y - 1);
                             worst = std::max(worst, static_cast<unsigned>(sd));
                             if (sd > r.bound) t.fail(name + ": delta " + std::to_string(sd));
                             if (r.same_part && g.side(x) != g.side(y)) t.fail(name + ": pair across parts");
                           });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    extra << r.id << " " << graphs << " graphs, " << deltas << " pairs, max " << worst << " (" << std::fixed
          << std::setprecision(0) << secs << "s); ";
  }
  return t.outcome(extra.str());
}

// ---- 7: claim suites and mutations --------------------------------------

// Overwrites the adjacency among randomly chosen host vertices so that h
// appears induced, h's top part landing in the host part `top_side`.
BipartiteGraph inject(const BipartiteGraph& g, const BipartiteGraph& h, Side top_side, std::mt19937& rng) {
  std::vector<Vertex> tops = g.top().to_vector(), bottoms = g.bottom().to_vector();
  std::vector<Vertex>& for_htop = top_side == Side::Top ? tops : bottoms;
  std::vector<Vertex>& for_hbot = top_side == Side::Top ? bottoms : tops;
  std::size_t n = g.order();
  std::vector<bool> new_top;
  while (for_htop.size() < h.top().size()) {
    for_htop.push_back(static_cast<Vertex>(++n));
    new_top.push_back(top_side == Side::Top);
  }
  while (for_hbot.size() < h.bottom().size()) {
    for_hbot.push_back(static_cast<Vertex>(++n));
    new_top.push_back(top_side != Side::Top);
  }
  Graph out(n);
  for (auto [u, v] : g.graph().edges()) out.add_edge(u, v);
  VertexSet top(n);
  g.top().for_each([&](Vertex v) { top.insert(v); });
  for (std::size_t i = 0; i < new_top.size(); ++i)
    if (new_top[i]) top.insert(static_cast<Vertex>(g.order() + i + 1));

  std::shuffle(for_htop.begin(), for_htop.end(), rng);
  std::shuffle(for_hbot.begin(), for_hbot.end(), rng);
  std::vector<Vertex> image(h.order() + 1);
  std::size_t it = 0, ib = 0;
  for (Vertex v = 1; v <= h.order(); ++v) image[v] = h.top().contains(v) ? for_htop[it++] : for_hbot[ib++];
  for (Vertex a = 1; a <= h.order(); ++a)
    for (Vertex b = a + 1; b <= h.order(); ++b) out.set_adjacent(image[a], image[b], h.graph().adjacent(a, b));
  return BipartiteGraph(std::move(out), top);
}

Outcome claim_suites() {
  const std::vector<std::pair<std::string, ClassParams>> suites = {
      {"Qp", {2, 0, 6}}, {"Mp", {2, 0, 6}},      {"Np", {2, 0, 6}},
      {"P7-domino", {}}, {"P7-K33e", {}},        {"A-graph", {0, 0, 6}},
  };
  Tally t;
  std::size_t mutations = 0;
  std::mt19937 rng(7);
  for (const auto& [id, prm] : suites) {
    const ClassSpec spec = class_spec_for(id, prm);
    std::vector<BipartiteGraph> members;
    for (std::size_t a = 1; a <= 5; ++a)
      for (std::size_t b = a; b <= 5; ++b)
        for_each_bipartite(a, b, [&](const BipartiteGraph& g) { return in_class(g, spec); },
                           [&](const BipartiteGraph& g) {
                             ++t.checked;
                             members.push_back(g);
                             try {
                               const Certificate c = find_certificate(g, id, prm);
                               if (auto v = verify_certificate(g, c); !v) t.fail(id + " verify: " + v.reason);
                             } catch (const ClaimViolatedError& e) {
                               t.fail(e.what());
                             } catch (const std::exception& e) {
                               t.fail(id + " " + to_graph6(g.graph()) + ": " + e.what());
                             }
                           });

    // Patterns to inject: the forbidden list, one-sided rules and an even
    // hole at the chordality cutoff.
    struct Inj {
      BipartiteGraph h;
      std::vector<Side> orientations;
    };
    std::vector<Inj> injections;
    for (const NamedPattern& p : spec.forbidden)
      if (has_bipartition(p)) injections.push_back({pattern_bipartite(p), {Side::Top, Side::Bottom}});
    for (const OneSidedRule& r : spec.one_sided) {
      // The rule concerns copies with h's bottom in r.side, so h's top goes opposite.
      injections.push_back({pattern_bipartite(r.pattern), {r.side == Side::Top ? Side::Bottom : Side::Top}});
    }
    if (spec.chordality_lt) {
      const int len = *spec.chordality_lt % 2 ? *spec.chordality_lt + 1 : *spec.chordality_lt;
      injections.push_back({pattern_bipartite(pattern::cycle(len)), {Side::Top}});
    }
    for (int i = 0; i < 200 && !members.empty(); ++i) {
      const BipartiteGraph& g = members[rng() % members.size()];
      for (const Inj& in : injections)
        for (Side s : in.orientations) {
          ++mutations;
          const BipartiteGraph mutant = inject(g, in.h, s, rng);
          if (in_class(mutant, spec)) t.fail(id + " missed mutation " + to_graph6(mutant.graph()));
        }
    }
  }
  return t.outcome(std::to_string(mutations) + " mutations");
}

// ---- 8: speed lab --------------------------------------------------------

Outcome speed_counts() {
  Tally t;
  const auto bell = oracle::bell(7);
  ClassSpec p3;
  p3.forbidden = {pattern::path(3)};
  for (std::size_t n = 1; n <= 6; ++n) {
    t.checked += 2;
    const std::uint64_t all = std::uint64_t{1} << oracle::binomial(static_cast<unsigned>(n), 2);
    if (count_labelled(ClassSpec{}, n) != all) t.fail("Free(none) n=" + std::to_string(n));
    if (count_labelled(p3, n) != bell[n]) t.fail("Free(P3) n=" + std::to_string(n));
  }
  ++t.checked;
  if (bipartite_ramsey(1, 1, 5) != 1) t.fail("B(1,1)");
  ++t.checked;
  auto m = ramsey_counterexample(1, 2, 2);
  if (!m) {
    t.fail("no B(1,2) counterexample on 2+2 vertices");
  } else {
    // Two disjoint edges: every vertex has one neighbour and one non-neighbour.
    bool matching = m->graph().edge_count() == 2;
    for (Vertex v = 1; v <= m->order(); ++v) matching = matching && m->graph().degree(v) == 1;
    if (!matching) t.fail("B(1,2) counterexample is not a matching");
  }
  return t.outcome();
}

// ---- 9: CLI reruns -------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args, const fs::path& out, const fs::path& err) {
  const std::string cmd =
      std::string("'") + HERENCODE_CLI_PATH + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_reruns() {
  Tally t;
  const fs::path dir = fs::temp_directory_path() / ("herencode-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name, std::ios::binary) << text;
    return (dir / name).string();
  };
  std::string sample;
  for (const Graph& g : random_graphs(5, 40, 16)) sample += to_graph6(g) + "\n";
  const std::string graphs = write("graphs.g6", sample);
  const std::string star = write("star.g6", "IsaCCA?_?\n");
  const std::string p5 = write("p5.txt", "5\ntop: 1 3 5\n1 2\n2 3\n3 4\n4 5\n");
  const std::string spec = write("p3.json", "{\"forbidden\":[{\"pattern\":\"P\",\"k\":3}]}");
  // Inputs the decode and query manifests read.
  run_cli("encode '" + graphs + "' --out '" + (dir / "words").string() + "'", dir / "x", dir / "y");
  run_cli("label '" + star + "' --scheme degeneracy --d 1 --out '" + (dir / "bundle.json").string() + "'", dir / "x",
          dir / "y");

  struct Manifest {
    std::string name;
    std::string body;  // command, inputs, parameters
    bool has_output;
  };
  const std::vector<Manifest> manifests = {
      {"encode-modular", "\"command\":\"encode\",\"inputs\":[\"" + graphs + "\"],\"parameters\":{\"jobs\":2}", true},
      {"encode-functional",
       "\"command\":\"encode\",\"inputs\":[\"" + graphs + "\"],\"parameters\":{\"codec\":\"functional\",\"c\":2}", true},
      {"decode", "\"command\":\"decode\",\"inputs\":[\"" + (dir / "words").string() + "\"]", true},
      {"label", "\"command\":\"label\",\"inputs\":[\"" + star + "\"],\"parameters\":{\"scheme\":\"forest-cover\",\"verify\":true}",
       true},
      {"query", "\"command\":\"query\",\"inputs\":[\"" + (dir / "bundle.json").string() + "\",\"1\",\"4\"]", false},
      {"witness",
       "\"command\":\"witness\",\"inputs\":[\"" + p5 +
           "\"],\"parameters\":{\"format\":\"bipartite-edge-list\",\"class\":\"P7-Spp\",\"p\":2}",
       true},
      {"count", "\"command\":\"count\",\"inputs\":[\"" + spec + "\"],\"parameters\":{\"n-max\":5}", true},
      {"sample", "\"command\":\"sample\",\"parameters\":{\"count\":25,\"n-max\":20},\"seed\":11", true},
  };
  std::string names;
  for (const Manifest& m : manifests) {
    ++t.checked;
    const fs::path out = dir / (m.name + ".out");
    std::string body = "{" + m.body + ",\"version\":\"0.1.0\"";
    if (m.has_output) body += ",\"outputs\":[\"" + out.string() + "\"]";
    body += "}";
    const std::string path = write(m.name + ".manifest.json", body);
    std::vector<std::string> runs;
    for (int i = 0; i < 2; ++i) {
      const int code = run_cli("run '" + path + "'", dir / "stdout", dir / "stderr");
      if (code != 0) t.fail(m.name + " exited " + std::to_string(code) + ": " + slurp(dir / "stderr"));
      std::string bytes = slurp(dir / "stdout") + '\0' + slurp(dir / "stderr");
      if (m.has_output) bytes += '\0' + slurp(out) + '\0' + slurp(out.string() + ".stats.jsonl");
      runs.push_back(bytes);
      fs::remove(out);
    }
    if (runs[0] != runs[1]) t.fail(m.name + " differs between runs");
    names += m.name + " ";
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return t.outcome(names);
}

}  // namespace

int main() {
  const std::vector<Graph> corpus = codec_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"modular round trip", [&] { return modular_round_trip(corpus); }},
      {"modular length accounting", [&] { return modular_accounting(corpus); }},
      {"log inequality on compositions", log_inequality},
      {"functional codec", functional_codec},
      {"labeling soundness", labeling_soundness},
      {"witness bounds", witness_bounds},
      {"claim suites and mutations", claim_suites},
      {"speed-lab counts", speed_counts},
      {"CLI reruns byte-identical", cli_reruns},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s  [%s] (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
