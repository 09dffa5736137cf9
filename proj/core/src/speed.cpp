#include "herencode/speed.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "herencode/bits.hpp"
#include "herencode/corpus.hpp"
#include "herencode/errors.hpp"

namespace herencode {

std::uint64_t count_labelled(const ClassSpec& spec, std::size_t n, unsigned jobs) {
  if (n > 7) throw ResourceError("labelled counting is limited to n <= 7, asked for n=" + std::to_string(n));
  const ClassChecker check(spec);
  const std::uint64_t total = std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(total)));
  std::vector<std::uint64_t> partial(workers, 0);
  auto work = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    for (std::uint64_t m = lo; m < hi; ++m)
      if (check(graph_from_mask(n, m))) ++partial[w];
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t sum = 0;
  for (auto c : partial) sum += c;
  return sum;
}

SpeedTable speed_table(const std::string& class_id, const ClassSpec& spec, std::size_t n_max, unsigned jobs) {
  if (n_max > 7) throw ResourceError("labelled counting is limited to n <= 7, asked for n=" + std::to_string(n_max));
  SpeedTable t;
  t.class_id = class_id;
  for (std::size_t n = 1; n <= n_max; ++n) t.counts[n] = count_labelled(spec, n, jobs);
  return t;
}

double bits_per_vertex(std::uint64_t count, std::size_t n) {
  if (count < 1 || n < 1) throw std::invalid_argument("count and n must be positive");
  const double lc = std::log2(static_cast<double>(count));
  if (n == 1) return lc;
  const double nn = static_cast<double>(n);
  return lc / (nn * std::log2(nn));
}

std::string speed_table_csv(const SpeedTable& t) {
  std::ostringstream os;
  os << "class_id,n,count,bits_per_vertex\n";
  for (const auto& [n, c] : t.counts) {
    os << t.class_id << ',' << n << ',' << c << ',';
    if (c == 0) os << "nan";
    else os << std::fixed << std::setprecision(6) << bits_per_vertex(c, n);
    os << '\n';
  }
  return os.str();
}

namespace {

// Some s rows (from `rows`, each a bitmask of columns) share at least t columns.
bool shared_columns(const std::vector<std::uint32_t>& rows, int s, int t, std::size_t from, std::uint32_t common) {
  if (std::popcount(common) < t) return false;
  if (s == 0) return true;
  for (std::size_t i = from; i < rows.size(); ++i)
    if (shared_columns(rows, s - 1, t, i + 1, common & rows[i])) return true;
  return false;
}

bool has_pattern(const BipartiteGraph& g, std::size_t b, int p, int q) {
  std::vector<std::uint32_t> ones, zeros;
  const std::uint32_t full = b == 32 ? ~0u : ((1u << b) - 1);
  const std::size_t a = g.top().size();
  for (Vertex i = 1; i <= a; ++i) {
    std::uint32_t r = 0;
    for (std::size_t j = 0; j < b; ++j)
      if (g.adjacent(i, static_cast<Vertex>(a + j + 1))) r |= 1u << j;
    ones.push_back(r);
    zeros.push_back(~r & full);
  }
  for (const auto* rows : {&ones, &zeros})
    if (shared_columns(*rows, p, q, 0, full) || shared_columns(*rows, q, p, 0, full)) return true;
  return false;
}

}  // namespace

std::optional<BipartiteGraph> ramsey_counterexample(int p, int q, int N) {
  if (p < 1 || q < 1 || N < 1) throw std::invalid_argument("p, q and N must be positive");
  if (N > 5) throw ResourceError("Ramsey search is limited to 5 vertices per part");
  const std::size_t b = static_cast<std::size_t>(N);
  std::optional<BipartiteGraph> found;
  // Rows beyond a found counterexample are still enumerated; the search is tiny.
  for_each_bipartite(
      b, b, [&](const BipartiteGraph& part) { return !found && !has_pattern(part, b, p, q); },
      [&](const BipartiteGraph& g) {
        if (!found) found = g;
      });
  return found;
}

std::optional<int> bipartite_ramsey(int p, int q, int limit) {
  if (limit > 5) throw ResourceError("Ramsey search is limited to 5 vertices per part");
  for (int N = 1; N <= limit; ++N)
    if (!ramsey_counterexample(p, q, N)) return N;
  return std::nullopt;
}

LogInequality evaluate_log_inequality(std::size_t k, const std::vector<std::size_t>& parts) {
  if (parts.size() != k) throw std::invalid_argument("k must equal the number of parts");
  std::size_t n = 0;
  for (auto x : parts) {
    if (x == 0) throw std::invalid_argument("parts must be positive");
    n += x;
  }
  if (k >= n) throw std::invalid_argument("k must be smaller than n");
  auto xlogx = [](std::size_t x) { return x <= 1 ? 0.0 : static_cast<double>(x) * std::log2(static_cast<double>(x)); };
  LogInequality r;
  r.lhs = xlogx(k);
  for (auto x : parts) r.lhs += xlogx(x);
  r.rhs = xlogx(n);
  r.holds_float = r.lhs <= r.rhs + 1e-9;
  if (static_cast<std::uint64_t>(n) * ceil_log2(n) <= (std::uint64_t{1} << 20)) {
    using boost::multiprecision::cpp_int;
    using boost::multiprecision::pow;
    cpp_int left = pow(cpp_int(k), static_cast<unsigned>(k));
    for (auto x : parts) left *= pow(cpp_int(x), static_cast<unsigned>(x));
    r.holds_exact = left <= pow(cpp_int(n), static_cast<unsigned>(n));
  }
  return r;
}

bool check_log_inequality(std::size_t k, const std::vector<std::size_t>& parts) {
  return evaluate_log_inequality(k, parts).holds();
}

CompositionSweep sweep_compositions(std::size_t n_max) {
  CompositionSweep s;
  for (std::size_t n = 2; n <= n_max; ++n) {
    // Bit i of cut set means a part boundary after position i+1.
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
      std::vector<std::size_t> parts;
      std::size_t run = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if ((cuts >> i) & 1) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      if (parts.size() >= n) continue;
      ++s.checked;
      const LogInequality r = evaluate_log_inequality(parts.size(), parts);
      if (!r.holds() || (r.holds_exact && *r.holds_exact != r.holds_float)) {
        ++s.violations;
        if (!s.first_violation) s.first_violation = parts;
      }
    }
  }
  return s;
}

}  // namespace herencode
