#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kcut/flow.hpp"
#include "kcut/graph.hpp"

namespace kcut {

using NodeId = int;
using Bag = std::vector<Vertex>;  // sorted

// Rooted tree decomposition. Nodes are stored with an undirected tree
// structure and a root; parents and children follow from the root.
class TreeDecomposition {
 public:
  TreeDecomposition() = default;
  TreeDecomposition(std::vector<Bag> bags, std::vector<std::pair<NodeId, NodeId>> tree_edges,
                    NodeId root);

  static TreeDecomposition single_bag(Vertex n);

  std::size_t size() const { return bags_.size(); }
  NodeId root() const { return root_; }
  const Bag& bag(NodeId t) const { return bags_[t]; }
  const std::vector<Bag>& bags() const { return bags_; }
  NodeId parent(NodeId t) const { return parent_[t]; }
  const std::vector<NodeId>& children(NodeId t) const { return children_[t]; }
  const std::vector<std::pair<NodeId, NodeId>>& tree_edges() const { return edges_; }
  // Parents before children.
  const std::vector<NodeId>& preorder() const { return preorder_; }

  Bag adhesion(NodeId t) const;  // empty at the root
  Bag gamma(NodeId t) const;     // union of bags in the subtree of t
  Bag alpha(NodeId t) const;     // gamma(t) minus adhesion(t)

  TreeDecomposition rerooted(NodeId new_root) const;

  // One line per node: "<id> <parent> <bag...>", nodes in preorder.
  void dump(std::ostream& out) const;
  std::string dump() const;

 private:
  std::vector<Bag> bags_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  NodeId root_ = 0;
  std::vector<NodeId> parent_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<NodeId> preorder_;
};

// Checkers return an explanation on failure.
std::optional<std::string> check_tree_decomposition(const MultiGraph& g,
                                                    const TreeDecomposition& td);
std::optional<std::string> check_compact(const MultiGraph& g, const TreeDecomposition& td);
std::size_t max_adhesion(const TreeDecomposition& td);

std::int64_t potential(const TreeDecomposition& td, std::int64_t s);

struct LeanWitness {
  NodeId node = 0;
  std::vector<Vertex> z1;
  std::vector<Vertex> z2;
  VertexSeparation separation;
};

std::optional<EdgeCut> find_breakability_witness(const MultiGraph& g, const std::vector<Vertex>& q,
                                                 std::int64_t s);

LeanWitness witness_to_lean(const MultiGraph& g, const TreeDecomposition& td, NodeId t,
                            const EdgeCut& cut, std::int64_t s);

TreeDecomposition refine(const MultiGraph& g, const TreeDecomposition& td, const LeanWitness& w,
                         std::int64_t s);

TreeDecomposition cleanup(const TreeDecomposition& td);

TreeDecomposition compactify(const MultiGraph& g, const TreeDecomposition& td);

struct DecompositionLog {
  std::vector<std::int64_t> potentials;  // before the first and after each refinement
  int refinements = 0;
  int witness_searches = 0;
};

TreeDecomposition build_unbreakable_decomposition(const MultiGraph& g, std::int64_t s,
                                                  DecompositionLog* log = nullptr);

}  // namespace kcut
