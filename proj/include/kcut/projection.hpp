#pragma once

#include <utility>
#include <vector>

#include "kcut/partition.hpp"
#include "kcut/tree_packing.hpp"

namespace kcut {

struct ProjectedTree {
  std::vector<Vertex> x;         // sorted
  std::vector<Vertex> vertices;  // sorted; x plus kept Steiner vertices
  std::vector<std::pair<Vertex, Vertex>> edges;  // u < v, sorted
  std::vector<std::vector<Vertex>> paths;        // tree path behind each edge, from u to v
};

// Deletes leaves outside X and smooths degree-2 vertices outside X until
// neither applies. X = ∅ yields the empty tree.
ProjectedTree project_tree(const SpanningTree& tree, Vertex n, const std::vector<Vertex>& x);

// All partitions of X obtained by deleting at most 2k-2 edges of pt, taking
// any coarsening of the components, and restricting to X. Sorted.
std::vector<Partition> feasible_family(const ProjectedTree& pt, int k);

// Same family as label strings over pt.x.
std::vector<Rgs> feasible_family_rgs(const ProjectedTree& pt, int k);

// Calls visit(rgs) for every coarsening of the partition given by `base`
// (an RGS) into at most max_parts parts.
template <class Visit>
void for_each_coarsening(const Rgs& base, int max_parts, Visit&& visit);

}  // namespace kcut

#include "kcut/detail/coarsening.hpp"
