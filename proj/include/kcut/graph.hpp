#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kcut/rational.hpp"

namespace kcut {

using Vertex = std::int32_t;

enum class GraphMode { weighted, multi };

struct Edge {
  Vertex u;
  Vertex v;
  Rational weight;  // the multiplicity in multi mode
};

// Structure-of-arrays view of a multigraph's edges, consumed by the
// crossing-weight kernels.
struct EdgeArrays {
  std::vector<std::int32_t> u;
  std::vector<std::int32_t> v;
  std::vector<std::int64_t> w;

  std::size_t size() const { return u.size(); }
};

class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(Vertex n, GraphMode mode);

  void add_edge(Vertex u, Vertex v, const Rational& weight);
  void add_edge(Vertex u, Vertex v, std::int64_t multiplicity);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  GraphMode mode() const { return mode_; }
  bool is_multi() const { return mode_ == GraphMode::multi; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }

  // Multi mode only.
  std::int64_t multiplicity(std::size_t e) const { return mult_[e]; }
  const std::vector<std::int64_t>& multiplicities() const { return mult_; }
  std::int64_t total_multiplicity() const;

  Rational total_weight() const;

  // Neighbour lists as (neighbour, edge index).
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adjacency() const;

  // Subgraph induced on `vertices` (sorted, distinct), relabelled to
  // 0..|vertices|-1 in the given order.
  MultiGraph induced(std::span<const Vertex> vertices) const;

  EdgeArrays edge_arrays() const;  // multi mode only

  bool operator==(const MultiGraph& other) const;

 private:
  Vertex n_ = 0;
  GraphMode mode_ = GraphMode::multi;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> mult_;
};

}  // namespace kcut
