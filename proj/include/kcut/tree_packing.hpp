#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"

namespace kcut {

// Edge list with u < v, sorted.
using SpanningTree = std::vector<std::pair<Vertex, Vertex>>;

struct TreeFamily {
  std::vector<SpanningTree> trees;
  // Loads per simple edge (u < v), sorted by endpoint pair.
  std::vector<std::pair<std::pair<Vertex, Vertex>, std::int64_t>> loads;
};

// Greedy packing: each tree is an MST under cost load/multiplicity, ties by
// simple-edge index. Duplicate trees are dropped.
TreeFamily pack_trees(const MultiGraph& g, int count);

int default_tree_count(int k, std::size_t m);

// All spanning trees in lexicographic edge order, stopping at `cap`.
std::vector<SpanningTree> enumerate_spanning_trees(const MultiGraph& g, std::size_t cap);

struct TreeFamilyOptions {
  int packing_count = 0;  // 0: default_tree_count
  bool exhaustive = false;
  std::size_t exhaustive_cap = 5000;
};

// Packed trees first, then enumerated ones not already present.
std::vector<SpanningTree> build_tree_family(const MultiGraph& g, int k,
                                            const TreeFamilyOptions& options);

std::int64_t crossings(const SpanningTree& tree, const Partition& p);

bool is_spanning_tree(const SpanningTree& tree, Vertex n);

}  // namespace kcut
