#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "herencode/class_spec.hpp"
#include "herencode/corpus.hpp"
#include "herencode/errors.hpp"
#include "herencode/graph_io.hpp"
#include "herencode/labeling.hpp"
#include "herencode/modular.hpp"
#include "herencode/recognition.hpp"
#include "herencode/speed.hpp"
#include "herencode/succinct.hpp"
#include "herencode/witness.hpp"

namespace {

using namespace herencode;
using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kSchemeUnavailable = 3,
  kClaimViolated = 4,
  kNotInClass = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A failure with a fixed exit code and message.
struct ExitError : std::runtime_error {
  ExitError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path);
  out << data;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("HERENCODE_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return static_cast<unsigned>(j);
    } catch (const std::exception&) {
    }
    std::cerr << "herencode: ignoring HERENCODE_JOBS='" << env << "'\n";
  }
  return 1;
}

// Runs f(i) for i < count on `jobs` threads; results stay in input order and
// the first failure in input order is rethrown.
template <class T, class F>
std::vector<T> ordered_map(std::size_t count, unsigned jobs, F f) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errs(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

// Graph6 files may hold many graphs (one per line); other formats hold one.
std::vector<AnyGraph> read_graphs(const std::string& path, const std::string& format) {
  const Format f = format_from_name(format);
  const std::string text = read_file(path);
  std::vector<AnyGraph> out;
  if (f == Format::Graph6) {
    for (const auto& line : split_graph6_lines(text)) out.emplace_back(from_graph6(line));
  } else {
    out.push_back(parse_graph(text, f));
  }
  if (out.empty()) throw UsageError("no graph in " + path);
  return out;
}

AnyGraph read_one_graph(const std::string& path, const std::string& format) {
  auto gs = read_graphs(path, format);
  if (gs.size() != 1) throw UsageError(path + " holds " + std::to_string(gs.size()) + " graphs, expected one");
  return std::move(gs.front());
}

BipartiteGraph as_bipartite(const AnyGraph& g) {
  if (auto* b = std::get_if<BipartiteGraph>(&g)) return *b;
  const Graph& gg = std::get<Graph>(g);
  auto top = two_colouring(gg);
  if (!top) throw NotBipartiteError("graph is not bipartite");
  return BipartiteGraph(gg, *top);
}

// ---- options ---------------------------------------------------------------

struct Common {
  std::string format = "graph6";
  std::string out;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
};

struct Params {
  int p = 0, s = 0, k = 0;
  unsigned c = 0, d = 0;
};

struct Options {
  Common common;
  Params prm;
  std::string input;
  std::string codec = "modular";
  std::string scheme;
  std::string class_id;
  std::string check;
  std::string name;
  bool verify = false;
  std::size_t n_max = 0;
  std::size_t count = 0;
  std::string u, v;
};

// ---- commands --------------------------------------------------------------

int cmd_encode(const Options& o) {
  const auto graphs = read_graphs(o.input, o.common.format);
  NaivePrimeCodec pc;
  struct Row {
    std::string word;
    Json stats;
  };
  const auto rows = ordered_map<Row>(graphs.size(), o.common.jobs, [&](std::size_t i) {
    const Graph& g = as_graph(graphs[i]);
    Row r;
    r.stats["index"] = i;
    r.stats["n"] = g.order();
    if (o.codec == "modular") {
      r.word = encode_modular(g, pc);
      const LengthReport rep = check_length_accounting(g, pc);
      r.stats["length"] = r.word.size();
      r.stats["internal"] = rep.internal_contribution;
      r.stats["bound"] = rep.bound;
      r.stats["pass"] = rep.pass && decode_modular(r.word, pc) == g;
    } else {
      FunctionalCode code{g.order(), o.prm.c, encode_functional(g, o.prm.c)};
      r.word = functional_to_hex(code);
      const double bound = functional_bound(g.order(), o.prm.c);
      r.stats["length"] = code.bits.size();
      r.stats["bound"] = bound;
      r.stats["pass"] = static_cast<double>(code.bits.size()) <= bound &&
                        decode_functional(code.bits, code.n, code.c) == g;
    }
    return r;
  });
  std::string words, stats;
  for (const auto& r : rows) {
    words += r.word + "\n";
    stats += r.stats.dump() + "\n";
  }
  write_output(o.common.out, words);
  if (o.common.out.empty() || o.common.out == "-") std::cerr << stats;
  else write_output(o.common.out + ".stats.jsonl", stats);
  for (const auto& r : rows)
    if (!r.stats["pass"].get<bool>()) return kFailure;
  return kOk;
}

int cmd_decode(const Options& o) {
  const auto words = nonempty_lines(read_file(o.input));
  NaivePrimeCodec pc;
  const auto out = ordered_map<std::string>(words.size(), o.common.jobs, [&](std::size_t i) {
    if (o.codec == "modular") return to_graph6(decode_modular(words[i], pc));
    const FunctionalCode code = functional_from_hex(words[i]);
    return to_graph6(decode_functional(code.bits, code.n, code.c));
  });
  std::string text;
  for (const auto& s : out) text += s + "\n";
  write_output(o.common.out, text);
  return kOk;
}

int cmd_label(const Options& o) {
  const AnyGraph ag = read_one_graph(o.input, o.common.format);
  const Graph& g = as_graph(ag);
  LabelingScheme s;
  if (o.scheme == "degeneracy") {
    s = label_by_degeneracy(g, o.prm.d);
  } else if (o.scheme == "bipartite-degeneracy") {
    s = label_by_bipartite_degeneracy(as_bipartite(ag), o.prm.d);
  } else if (o.scheme == "biclique") {
    const BipartiteGraph b = as_bipartite(ag);
    if (!is_complete_between(b.graph(), b.top(), b.bottom()))
      throw SchemeUnavailableError("graph is not complete bipartite");
    s = label_biclique(b);
  } else if (o.scheme == "forest-cover") {
    const Covering cov = forest_cover(g);
    std::vector<LabelingScheme> subs;
    for (const auto& part : cov.parts) subs.push_back(label_by_degeneracy(part, 1));
    s = combine_covering(g, cov, subs);
  } else if (o.scheme == "witness") {
    if (o.class_id.empty()) throw UsageError("--scheme witness needs --class");
    const BipartiteGraph b = as_bipartite(ag);
    const Certificate cert = find_certificate(b, o.class_id, {o.prm.p, o.prm.s, o.prm.k});
    auto r = certificate_to_scheme(b, cert);
    if (auto* plan = std::get_if<SuccinctPlan>(&r))
      throw SchemeUnavailableError(certificate_kind(cert) + " certificate: " + plan->reason);
    s = std::get<LabelingScheme>(std::move(r));
  } else {
    throw UsageError("unknown scheme '" + o.scheme + "'");
  }
  if (o.verify) {
    if (auto why = verify_scheme(g, s)) {
      std::cerr << "herencode: verification failed: " << *why << "\n";
      return kFailure;
    }
  }
  write_output(o.common.out, bundle_to_json(s) + "\n");
  return kOk;
}

std::size_t parse_vertex(const std::string& text, std::size_t n) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || v < 1 || v > n) throw UsageError("unknown vertex '" + text + "'");
  return v;
}

int cmd_query(const Options& o) {
  const LabelingScheme s = bundle_from_json(read_file(o.input));
  const std::size_t n = s.labels.size();
  const std::size_t u = parse_vertex(o.u, n), v = parse_vertex(o.v, n);
  const bool adj = u != v && adjacency_query(s.descriptor, s.labels[u - 1], s.labels[v - 1]);
  write_output("", adj ? "1\n" : "0\n");
  return kOk;
}

int cmd_witness(const Options& o) {
  const AnyGraph ag = read_one_graph(o.input, o.common.format);
  const ClassParams prm{o.prm.p, o.prm.s, o.prm.k};
  const BipartiteGraph b = [&] {
    try {
      return as_bipartite(ag);
    } catch (const NotBipartiteError& e) {
      throw NotInClassError(e.what(), as_graph(ag));
    }
  }();
  if (!o.check.empty()) {
    const Certificate cert = certificate_from_json(read_file(o.check));
    if (cert.class_id != o.class_id || !(cert.params == prm))
      throw ExitError(kClaimViolated, "certificate is for another class or parameters");
    const Verdict v = verify_certificate(b, cert);
    if (!v) throw ExitError(kClaimViolated, "certificate rejected: " + v.reason);
    write_output(o.common.out, "verified " + certificate_kind(cert) + "\n");
    return kOk;
  }
  const Certificate cert = find_certificate(b, o.class_id, prm);
  const Verdict v = verify_certificate(b, cert);
  if (!v) throw ExitError(kClaimViolated, "certificate does not verify: " + v.reason);
  write_output(o.common.out, certificate_to_json(cert) + "\n");
  return kOk;
}

int cmd_count(const Options& o) {
  const std::string& path = o.input;
  const ClassSpec spec = class_spec_from_json(read_file(path));
  const std::string name = o.name.empty() ? std::filesystem::path(path).stem().string() : o.name;
  const SpeedTable t = speed_table(name, spec, o.n_max, o.common.jobs);
  write_output(o.common.out, speed_table_csv(t));
  return kOk;
}

int cmd_sample(const Options& o) {
  std::string text;
  for (const Graph& g : random_graphs(o.common.seed, o.count, o.n_max)) text += to_graph6(g) + "\n";
  write_output(o.common.out, text);
  return kOk;
}

int run_cli(const std::vector<std::string>& args);

// {"command", "inputs", "parameters", "outputs", "seed", "version"}
int cmd_run(const Options& o) {
  const std::string path = o.input;
  Json m;
  try {
    m = Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("manifest " + path + " is not valid JSON: " + e.what());
  }
  try {
    if (m.contains("version") && m.at("version").get<std::string>() != kVersion)
      throw UsageError("manifest wants version " + m.at("version").get<std::string>() + ", this is " + kVersion);
    std::vector<std::string> args = {m.at("command").get<std::string>()};
    if (args[0] == "run") throw UsageError("manifests cannot nest run");
    for (const auto& in : m.value("inputs", Json::array())) args.push_back(in.get<std::string>());
    const Json params = m.value("parameters", Json::object());
    for (const auto& [key, value] : params.items()) {
      if (value.is_boolean()) {
        if (value.get<bool>()) args.push_back("--" + key);
        continue;
      }
      args.push_back("--" + key);
      args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
    const auto outs = m.value("outputs", Json::array());
    if (outs.size() > 1) throw UsageError("at most one output path");
    if (!outs.empty()) args.insert(args.end(), {"--out", outs.front().get<std::string>()});
    if (m.contains("seed")) args.insert(args.end(), {"--seed", std::to_string(m.at("seed").get<std::uint64_t>())});
    return run_cli(args);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("manifest: ") + e.what());
  }
}

// ---- parsing ---------------------------------------------------------------

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"herencode: graph encodings, labeling schemes and class certificates"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;
  o.common.jobs = default_jobs();

  auto common = [&](CLI::App* c, bool with_format) {
    if (with_format)
      c->add_option("--format", o.common.format, "graph6, edge-list or bipartite-edge-list")->capture_default_str();
    c->add_option("--out", o.common.out, "output file (default stdout)");
    c->add_option("--jobs", o.common.jobs, "worker threads (default HERENCODE_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    c->add_option("--seed", o.common.seed, "seed for sampled corpora")->capture_default_str();
  };
  auto class_params = [&](CLI::App* c) {
    c->add_option("--p", o.prm.p);
    c->add_option("--s", o.prm.s);
    c->add_option("--k", o.prm.k);
  };

  auto* enc = app.add_subcommand("encode", "encode graphs with the modular or functional codec");
  enc->add_option("input", o.input, "graph file")->required();
  enc->add_option("--codec", o.codec)->check(CLI::IsMember({"modular", "functional"}))->capture_default_str();
  enc->add_option("--c", o.prm.c, "functional codec parameter");
  common(enc, true);

  auto* dec = app.add_subcommand("decode", "decode words back to graph6");
  dec->add_option("input", o.input, "one word per line")->required();
  dec->add_option("--codec", o.codec)->check(CLI::IsMember({"modular", "functional"}))->capture_default_str();
  common(dec, false);

  auto* lab = app.add_subcommand("label", "build an adjacency labeling bundle");
  lab->add_option("input", o.input, "graph file")->required();
  lab->add_option("--scheme", o.scheme, "degeneracy, bipartite-degeneracy, biclique, forest-cover or witness")
      ->required();
  lab->add_option("--d", o.prm.d, "degeneracy bound");
  lab->add_option("--class", o.class_id, "class id for --scheme witness");
  class_params(lab);
  lab->add_flag("--verify", o.verify, "check every vertex pair against the graph");
  common(lab, true);

  auto* qry = app.add_subcommand("query", "adjacency of two vertices from their labels");
  qry->add_option("bundle", o.input)->required();
  qry->add_option("u", o.u)->required();
  qry->add_option("v", o.v)->required();

  auto* wit = app.add_subcommand("witness", "find and verify a structural certificate");
  wit->add_option("input", o.input, "graph file")->required();
  wit->add_option("--class", o.class_id)->required()->check(CLI::IsMember(class_ids()));
  class_params(wit);
  wit->add_option("--check", o.check, "verify this certificate instead of finding one");
  common(wit, true);

  auto* cnt = app.add_subcommand("count", "count labelled graphs of a class");
  cnt->add_option("spec", o.input, "class spec JSON")->required();
  cnt->add_option("--n-max", o.n_max)->required();
  cnt->add_option("--name", o.name, "class id column (default file stem)");
  common(cnt, false);

  auto* smp = app.add_subcommand("sample", "seeded random graphs as graph6");
  smp->add_option("--count", o.count)->required();
  smp->add_option("--n-max", o.n_max)->required();
  common(smp, false);

  auto* run = app.add_subcommand("run", "execute a run manifest");
  run->add_option("manifest", o.input)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "encode") return cmd_encode(o);
    if (name == "decode") return cmd_decode(o);
    if (name == "label") return cmd_label(o);
    if (name == "query") return cmd_query(o);
    if (name == "witness") return cmd_witness(o);
    if (name == "count") return cmd_count(o);
    if (name == "sample") return cmd_sample(o);
    return cmd_run(o);
  } catch (const ExitError& e) {
    std::cerr << "herencode: " << e.what() << "\n";
    return e.code;
  } catch (const UsageError& e) {
    std::cerr << "herencode: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "herencode: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemeUnavailableError& e) {
    std::cerr << "herencode: scheme unavailable: " << e.what() << "\n";
    return kSchemeUnavailable;
  } catch (const ClaimViolatedError& e) {
    std::cerr << "herencode: claim " << e.claim() << " violated: " << e.what() << "\n";
    return kClaimViolated;
  } catch (const NotInClassError& e) {
    std::cerr << "herencode: not in class: " << e.what() << "\n";
    return kNotInClass;
  } catch (const NotBipartiteError& e) {
    std::cerr << "herencode: not in class: " << e.what() << "\n";
    return kNotInClass;
  } catch (const PreconditionMissingError& e) {
    std::cerr << "herencode: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "herencode: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "herencode: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args);
}
