#include "herencode/graph_io.hpp"

#include <charconv>
#include <stdexcept>

namespace herencode {

Format format_from_name(std::string_view name) {
  if (name == "graph6") return Format::Graph6;
  if (name == "edge-list") return Format::EdgeList;
  if (name == "bipartite-edge-list") return Format::BipartiteEdgeList;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string format_name(Format f) {
  switch (f) {
    case Format::Graph6: return "graph6";
    case Format::EdgeList: return "edge-list";
    case Format::BipartiteEdgeList: return "bipartite-edge-list";
  }
  return "?";
}

const Graph& as_graph(const AnyGraph& g) {
  if (auto* b = std::get_if<BipartiteGraph>(&g)) return b->graph();
  return std::get<Graph>(g);
}

namespace {

constexpr std::size_t kSmallLimit = 62;
constexpr std::size_t kMediumLimit = 258047;

void put_size(std::string& out, std::size_t n) {
  if (n <= kSmallLimit) {
    out.push_back(static_cast<char>(n + 63));
    return;
  }
  int groups = 3;
  if (n <= kMediumLimit) {
    out.push_back('~');
  } else {
    out.append("~~");
    groups = 6;
  }
  for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + 63));
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  put_size(out, n);
  int acc = 0;
  int used = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  std::size_t end = text.size();
  if (end > pos && text[end - 1] == '\n') --end;
  if (end > pos && text[end - 1] == '\r') --end;

  auto value = [&](std::size_t at) -> unsigned {
    if (at >= end) throw ParseError("graph6 text truncated", at);
    auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside 63..126", at);
    return c - 63;
  };

  std::size_t n = 0;
  if (pos < end && text[pos] == '~') {
    int groups = 3;
    ++pos;
    if (pos < end && text[pos] == '~') {
      groups = 6;
      ++pos;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | value(pos++);
  } else {
    n = value(pos++);
  }

  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (end - pos < bytes) throw ParseError("graph6 text truncated", end);
  if (end - pos > bytes) throw ParseError("unexpected bytes after graph6 body", pos + bytes);
  std::size_t k = 0;
  for (Vertex j = 2; j <= n; ++j) {
    for (Vertex i = 1; i < j; ++i, ++k) {
      unsigned byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    unsigned last = value(pos + bytes - 1);
    if (last & ((1u << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", pos + bytes - 1);
  }
  return g;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t offset() const { return pos_; }

  // Returns the next line without its terminator and its starting offset.
  std::string_view next(std::size_t& start) {
    start = pos_;
    auto nl = text_.find('\n', pos_);
    std::string_view line = text_.substr(pos_, nl == std::string_view::npos ? std::string_view::npos : nl - pos_);
    pos_ = nl == std::string_view::npos ? text_.size() : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Parses whitespace-separated unsigned integers of one line.
std::vector<std::size_t> parse_numbers(std::string_view line, std::size_t base) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + i) throw ParseError("expected an unsigned integer", base + i);
    std::size_t next = static_cast<std::size_t>(ptr - line.data());
    if (next < line.size() && line[next] != ' ' && line[next] != '\t')
      throw ParseError("unexpected character", base + next);
    out.push_back(value);
    i = next;
  }
  return out;
}

std::size_t read_header(LineReader& lines) {
  if (lines.done()) throw ParseError("missing vertex count line", 0);
  std::size_t start = 0;
  auto nums = parse_numbers(lines.next(start), start);
  if (nums.size() != 1) throw ParseError("first line must hold exactly the vertex count", start);
  return nums[0];
}

void read_edges(LineReader& lines, Graph& g) {
  while (!lines.done()) {
    std::size_t start = 0;
    auto line = lines.next(start);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    auto nums = parse_numbers(line, start);
    if (nums.size() != 2) throw ParseError("edge line must hold two vertices", start);
    for (auto v : nums)
      if (v < 1 || v > g.order()) throw ParseError("vertex " + std::to_string(v) + " out of range", start);
    if (nums[0] == nums[1]) throw ParseError("self-loop", start);
    g.add_edge(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
}

void append_edges(std::string& out, const Graph& g) {
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out.push_back(' ');
    out += std::to_string(v);
    out.push_back('\n');
  }
}

}  // namespace

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  append_edges(out, g);
  return out;
}

Graph from_edge_list(std::string_view text) {
  LineReader lines(text);
  Graph g(read_header(lines));
  read_edges(lines, g);
  return g;
}

std::string to_bipartite_edge_list(const BipartiteGraph& g) {
  std::string out = std::to_string(g.order()) + "\ntop:";
  g.top().for_each([&](Vertex v) { out += " " + std::to_string(v); });
  out.push_back('\n');
  append_edges(out, g.graph());
  return out;
}

BipartiteGraph from_bipartite_edge_list(std::string_view text) {
  LineReader lines(text);
  Graph g(read_header(lines));
  if (lines.done()) throw ParseError("missing 'top:' line", lines.offset());
  std::size_t start = 0;
  auto line = lines.next(start);
  constexpr std::string_view tag = "top:";
  if (line.substr(0, tag.size()) != tag) throw ParseError("expected 'top:' line", start);
  VertexSet top(g.order());
  for (auto v : parse_numbers(line.substr(tag.size()), start + tag.size())) {
    if (v < 1 || v > g.order()) throw ParseError("top vertex " + std::to_string(v) + " out of range", start);
    if (top.contains(static_cast<Vertex>(v))) throw ParseError("top vertex " + std::to_string(v) + " repeated", start);
    top.insert(static_cast<Vertex>(v));
  }
  read_edges(lines, g);
  return BipartiteGraph(std::move(g), std::move(top));
}

AnyGraph parse_graph(std::string_view text, Format f) {
  switch (f) {
    case Format::Graph6: return from_graph6(text);
    case Format::EdgeList: return from_edge_list(text);
    case Format::BipartiteEdgeList: return from_bipartite_edge_list(text);
  }
  throw std::invalid_argument("unknown format");
}

std::string serialize_graph(const AnyGraph& g, Format f) {
  switch (f) {
    case Format::Graph6: return to_graph6(as_graph(g));
    case Format::EdgeList: return to_edge_list(as_graph(g));
    case Format::BipartiteEdgeList: {
      if (auto* b = std::get_if<BipartiteGraph>(&g)) return to_bipartite_edge_list(*b);
      return to_bipartite_edge_list(with_canonical_bipartition(std::get<Graph>(g)));
    }
  }
  throw std::invalid_argument("unknown format");
}

std::vector<std::string> split_graph6_lines(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.emplace_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace herencode
