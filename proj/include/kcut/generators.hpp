#pragma once

#include <cstdint>
#include <string>

#include "kcut/graph.hpp"

namespace kcut {

// m edges with uniformly random distinct-endpoint pairs (repeats allowed),
// multiplicities in 1..max_multiplicity.
MultiGraph random_multigraph(Vertex n, std::size_t m, std::uint64_t seed,
                             std::int64_t max_multiplicity = 1);

// Like random_multigraph, but a random spanning tree comes first so the
// result is connected. Requires m >= n-1.
MultiGraph random_connected_multigraph(Vertex n, std::size_t m, std::uint64_t seed,
                                       std::int64_t max_multiplicity = 1);

// Connected weighted graph with weights p/q, 1 <= p <= max_numerator,
// q in {1, 2, 4}.
MultiGraph random_connected_weighted(Vertex n, std::size_t m, std::uint64_t seed,
                                     std::int64_t max_numerator = 10);

struct PlantedGraph {
  MultiGraph graph;
  std::int64_t opt_upper_bound = 0;
};

// k near-equal clusters, each a random connected graph, plus `cross` unit
// edges between clusters. m counts intra-cluster edges.
PlantedGraph planted_multigraph(Vertex n, std::size_t m, int k, std::size_t cross,
                                std::uint64_t seed);

}  // namespace kcut
