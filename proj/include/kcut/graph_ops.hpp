#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"
#include "kcut/rational.hpp"

namespace kcut {

// Weight of the edges of G[ground] whose endpoints lie in different parts.
Rational cut_weight(const MultiGraph& g, const Partition& p);

// Same, for multi-mode graphs, in integer arithmetic.
std::int64_t multi_cut_weight(const MultiGraph& g, const Partition& p);

Partition connected_components(const MultiGraph& g);
int component_count(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

// Merges vertices by group label (labels dense in 0..groups-1). Edges inside
// a group vanish; parallel edges are kept.
MultiGraph contract(const MultiGraph& g, std::span<const int> group_of, int groups);

struct RoundedGraph {
  MultiGraph graph;               // multi mode
  Rational scale;                 // delta: one unit of multiplicity
  std::vector<Vertex> vertex_map; // original vertex -> vertex of `graph`
};

// Knapsack-style rounding. Edges heavier than 2*lower_bound are contracted;
// every other edge gets multiplicity ceil(w / delta), delta = eps*lb/m.
RoundedGraph round_to_multigraph(const MultiGraph& g, const Rational& epsilon,
                                 const Rational& lower_bound);

// Pulls a partition of the contracted vertex set back to the original.
Partition lift_partition(const Partition& p, std::span<const Vertex> vertex_map);

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint32_t> rank_;
  std::size_t components_;
};

}  // namespace kcut
