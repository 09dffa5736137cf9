#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "herencode/class_spec.hpp"
#include "herencode/graph.hpp"

namespace herencode {

// Labelled n-vertex graphs in the class, by filtering every adjacency
// assignment. n > 7 throws ResourceError. jobs = 0 means one worker.
std::uint64_t count_labelled(const ClassSpec& spec, std::size_t n, unsigned jobs = 1);

struct SpeedTable {
  std::string class_id;
  std::map<std::size_t, std::uint64_t> counts;
};

SpeedTable speed_table(const std::string& class_id, const ClassSpec& spec, std::size_t n_max, unsigned jobs = 1);
// class_id,n,count,bits_per_vertex
std::string speed_table_csv(const SpeedTable& t);

// log2(count) / (n log2 n); log2(count) for n = 1.
double bits_per_vertex(std::uint64_t count, std::size_t n);

// A bipartite graph with N vertices per part (top 1..N) containing neither
// an induced K_{p,q} nor an induced O_{p,q} in either orientation.
std::optional<BipartiteGraph> ramsey_counterexample(int p, int q, int N);
// Least N <= limit without a counterexample; limit above 5 throws ResourceError.
std::optional<int> bipartite_ramsey(int p, int q, int limit);

struct LogInequality {
  double lhs = 0;  // k log k + sum n_i log n_i
  double rhs = 0;  // n log n
  bool holds_float = false;
  std::optional<bool> holds_exact;  // n^n >= k^k prod n_i^n_i, when small enough

  bool holds() const { return holds_exact.value_or(holds_float); }
};

// Throws std::invalid_argument unless parts are positive, k = |parts| and k < n.
LogInequality evaluate_log_inequality(std::size_t k, const std::vector<std::size_t>& parts);
bool check_log_inequality(std::size_t k, const std::vector<std::size_t>& parts);

struct CompositionSweep {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<std::vector<std::size_t>> first_violation;
};

// Every composition with fewer parts than its total, for totals 2..n_max.
CompositionSweep sweep_compositions(std::size_t n_max);

}  // namespace herencode
