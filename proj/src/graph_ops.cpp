#include "kcut/graph_ops.hpp"

#include <algorithm>
#include <numeric>

#include "kcut/error.hpp"
#include "kcut/kernels.hpp"

namespace kcut {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  --components_;
  return true;
}

namespace {

// Label per vertex, -1 outside the ground set.
std::vector<std::int32_t> vertex_labels(const MultiGraph& g, const Partition& p) {
  std::vector<std::int32_t> label(g.vertex_count(), -1);
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    for (Vertex v : p.parts()[i]) {
      if (v < 0 || v >= g.vertex_count())
        throw InvalidInput("partition vertex " + std::to_string(v) + " not in graph");
      label[v] = static_cast<std::int32_t>(i);
    }
  }
  return label;
}

}  // namespace

Rational cut_weight(const MultiGraph& g, const Partition& p) {
  if (g.is_multi()) return Rational(multi_cut_weight(g, p));
  auto label = vertex_labels(g, p);
  Rational total = 0;
  for (const auto& e : g.edges()) {
    if (label[e.u] >= 0 && label[e.v] >= 0 && label[e.u] != label[e.v]) total += e.weight;
  }
  return total;
}

std::int64_t multi_cut_weight(const MultiGraph& g, const Partition& p) {
  if (!g.is_multi()) throw InvalidInput("multi_cut_weight needs a multi-mode graph");
  auto label = vertex_labels(g, p);
  EdgeArrays arrays;
  if (p.ground().size() == static_cast<std::size_t>(g.vertex_count())) {
    arrays = g.edge_arrays();
  } else {
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if (label[edge.u] < 0 || label[edge.v] < 0) continue;
      arrays.u.push_back(edge.u);
      arrays.v.push_back(edge.v);
      arrays.w.push_back(g.multiplicity(e));
    }
  }
  return kernels::crossing_weight(arrays.u, arrays.v, arrays.w, label);
}

Partition connected_components(const MultiGraph& g) {
  if (g.vertex_count() == 0) return Partition();
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  std::vector<int> labels(g.vertex_count());
  std::vector<Vertex> ground(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ground[v] = v;
    labels[v] = static_cast<int>(uf.find(v));
  }
  return Partition::from_labels(ground, labels);
}

int component_count(const MultiGraph& g) {
  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  return static_cast<int>(uf.components());
}

bool is_connected(const MultiGraph& g) { return component_count(g) <= 1; }

MultiGraph contract(const MultiGraph& g, std::span<const int> group_of, int groups) {
  MultiGraph h(groups, g.mode());
  for (const auto& e : g.edges()) {
    int a = group_of[e.u];
    int b = group_of[e.v];
    if (a != b) h.add_edge(a, b, e.weight);
  }
  return h;
}

RoundedGraph round_to_multigraph(const MultiGraph& g, const Rational& epsilon,
                                 const Rational& lower_bound) {
  if (epsilon <= 0 || epsilon > 1) throw InvalidInput("epsilon must lie in (0, 1]");
  if (lower_bound <= 0) throw InvalidInput("lower bound must be positive");
  const Rational heavy = 2 * lower_bound;
  const std::size_t m = g.edge_count();

  UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges())
    if (e.weight > heavy) uf.unite(e.u, e.v);
  // Number the groups by their smallest vertex so the output is canonical.
  std::vector<int> group(g.vertex_count(), -1);
  std::vector<int> root_group(g.vertex_count(), -1);
  int groups = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto r = uf.find(v);
    if (root_group[r] < 0) root_group[r] = groups++;
    group[v] = root_group[r];
  }

  RoundedGraph out;
  out.scale = m == 0 ? Rational(1) : epsilon * lower_bound / Rational(m);
  out.graph = MultiGraph(groups, GraphMode::multi);
  out.vertex_map.assign(group.begin(), group.end());
  for (const auto& e : g.edges()) {
    int a = group[e.u];
    int b = group[e.v];
    if (a == b) continue;
    std::int64_t mult = ceil_to_int64(e.weight / out.scale);
    if (mult == 0) continue;  // zero-weight edges carry no cut weight
    out.graph.add_edge(a, b, mult);
  }
  return out;
}

Partition lift_partition(const Partition& p, std::span<const Vertex> vertex_map) {
  std::vector<int> labels(vertex_map.size());
  std::vector<Vertex> ground(vertex_map.size());
  for (std::size_t v = 0; v < vertex_map.size(); ++v) {
    ground[v] = static_cast<Vertex>(v);
    labels[v] = p.part_of(vertex_map[v]);
    if (labels[v] < 0) throw InvalidInput("partition does not cover the contracted graph");
  }
  return Partition::from_labels(ground, labels);
}

}  // namespace kcut
