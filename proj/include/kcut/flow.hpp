#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/rational.hpp"

namespace kcut {

struct EdgeCut {
  std::vector<Vertex> a;  // sorted
  std::vector<Vertex> b;  // sorted
  Rational order;
};

struct FlowResult {
  std::int64_t value = 0;
  EdgeCut cut;  // a = residual-reachable side of the sources
};

// Minimum multiplicity of an edge set separating sources from sinks.
FlowResult min_st_edge_cut(const MultiGraph& g, std::span<const Vertex> sources,
                           std::span<const Vertex> sinks);

struct VertexSeparation {
  std::vector<Vertex> x1;         // sorted, contains z1
  std::vector<Vertex> x2;         // sorted, contains z2
  std::vector<Vertex> separator;  // x1 ∩ x2
  // One z1-z2 path per separator vertex, paths[i] passing through separator[i].
  std::vector<std::vector<Vertex>> paths;
};

// Minimum-order separation via unit vertex capacities (Menger).
VertexSeparation min_vertex_separator(const MultiGraph& g, std::span<const Vertex> z1,
                                      std::span<const Vertex> z2);

// Minimum non-trivial 2-cut. Runs n-1 flows from vertex 0; the first sink
// attaining the minimum wins and side a is the source side of that flow.
// Works in either mode (exact rational flow for weighted graphs).
EdgeCut global_min_2cut(const MultiGraph& g);

Rational edge_cut_order(const MultiGraph& g, std::span<const Vertex> side_a);

}  // namespace kcut
