#pragma once

#include <cstdint>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"
#include "kcut/rational.hpp"

namespace kcut {

struct CutResult {
  Partition partition;
  Rational weight;
};

// Greedy splitting: cut the cheapest component along its minimum cut until
// at least k components exist, then merge back down to exactly k parts.
CutResult approx2_kcut(const MultiGraph& g, int k);

enum class OracleMode { enumeration, contraction };

struct OracleOptions {
  OracleMode mode = OracleMode::enumeration;
  std::uint64_t seed = 0;
  std::int64_t repetitions = 0;  // 0: ceil(n^(2(k-1)) ln n), capped at 1e6
};

inline constexpr int kOracleMaxVertices = 14;

// Exact minimum k-cut by exhaustive search over k-partitions (n <= 14), or
// best of repeated random contractions.
CutResult oracle_exact_kcut(const MultiGraph& g, int k, const OracleOptions& options = {});

}  // namespace kcut
