#pragma once

#include <cstdint>

#include "kcut/graph.hpp"
#include "kcut/rational.hpp"

namespace kcut {

struct StripResult {
  MultiGraph graph;
  std::int64_t removed_weight = 0;  // q
  bool hit_k_components = false;
  int iterations = 0;
  Rational approx_weight;  // w_a
  Rational threshold;      // eps * w_a / (k-1)
};

// Deletes non-trivial minimum 2-cuts of order <= eps*w_a/(k-1) while fewer
// than k components exist. The procedure is deterministic; the seed is
// accepted for interface symmetry with sample_edges.
StripResult strip_cheap_2cuts(const MultiGraph& g, int k, const Rational& epsilon,
                              std::uint64_t seed = 0);

struct SampleResult {
  MultiGraph graph;
  double rate = 1.0;          // p
  double inverse_rate = 1.0;  // r = 1/p
  std::int64_t min_cut = 0;   // OPT(G1, 2) used for the rate
};

double sampling_rate(Vertex n, const Rational& epsilon, std::int64_t min_cut);

// Keeps each unit of multiplicity independently with probability p. The
// coin for unit j of edge e depends only on (seed, e, j).
SampleResult sample_edges(const MultiGraph& g1, int k, const Rational& epsilon,
                          std::uint64_t seed);

}  // namespace kcut
