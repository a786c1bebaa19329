#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/kcut_dp.hpp"
#include "kcut/partition.hpp"
#include "kcut/rational.hpp"
#include "kcut/tree_packing.hpp"

namespace kcut {

struct SchemeOptions {
  int packing_count = 0;               // 0: default_tree_count
  Vertex exhaustive_trees_up_to = 8;   // add all spanning trees for components this small
  std::size_t exhaustive_cap = 5000;
  DpOptions dp;
};

struct SchemeStats {
  std::string branch;  // trivial | components | exact | stripped | sampled
  Rational approx_weight;
  Rational epsilon_prime;
  Rational scale;
  std::int64_t removed_weight = 0;
  int strip_iterations = 0;
  double rate = 1.0;
  double inverse_rate = 1.0;
  std::int64_t sampled_value = 0;  // s*
  std::int64_t sweep_bound = 0;    // S_max
  double estimate = 0;             // (s* r + q) * scale
  int components = 0;
  std::size_t trees_used = 0;
  std::size_t dp_entries = 0;
  bool fallback = false;
};

struct SchemeResult {
  Partition partition;
  Rational value;  // recomputed on the input graph
  SchemeStats stats;
};

SchemeResult solve(const MultiGraph& g, int k, const Rational& epsilon, std::uint64_t seed,
                   const SchemeOptions& options = {});

std::int64_t sweep_bound(Vertex n, int k, const Rational& epsilon_prime);

struct Assignment {
  std::vector<int> parts;  // per component
  std::int64_t total = 0;
};

// tables[c][j] is the best value of component c split into j parts
// (kInfinity when unavailable; index 0 unused). Minimizes the total subject
// to sum of parts = k. Throws NoSolution when infeasible or over budget.
Assignment combine_components(const std::vector<std::vector<DpValue>>& tables, int k,
                              DpValue budget);

// Exactly k parts from a crossing-free partition with at least k parts,
// merging the smallest parts first.
Partition merge_to_k_parts(const Partition& components, int k);

struct ExactMinimum {
  Partition partition;
  std::int64_t value = 0;
  bool fallback = false;  // some component used its greedy partition
  std::size_t trees_used = 0;
  std::size_t dp_entries = 0;
};

// Optimum over a multi-mode graph of any connectivity: per component the DP
// runs once at s = min(greedy upper bound, s_cap); components are combined
// by combine_components.
ExactMinimum minimize_exact(const MultiGraph& g, int k, const SchemeOptions& options,
                            std::int64_t s_cap = kInfinity - 1);

}  // namespace kcut
