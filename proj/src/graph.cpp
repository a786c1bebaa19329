#include "kcut/graph.hpp"

#include <algorithm>
#include <string>

#include "kcut/error.hpp"

namespace kcut {

MultiGraph::MultiGraph(Vertex n, GraphMode mode) : n_(n), mode_(mode) {
  if (n < 0) throw InvalidInput("negative vertex count");
}

void MultiGraph::add_edge(Vertex u, Vertex v, const Rational& weight) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidInput("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (weight < 0) throw InvalidInput("negative edge weight");
  if (mode_ == GraphMode::multi) {
    if (!is_integral(weight) || weight < 1)
      throw InvalidInput("multiplicity must be a positive integer, got " + format_rational(weight));
    mult_.push_back(to_int64(weight));
  }
  edges_.push_back(Edge{u, v, weight});
}

void MultiGraph::add_edge(Vertex u, Vertex v, std::int64_t multiplicity) {
  add_edge(u, v, Rational(multiplicity));
}

std::int64_t MultiGraph::total_multiplicity() const {
  std::int64_t total = 0;
  for (auto m : mult_) total += m;
  return total;
}

Rational MultiGraph::total_weight() const {
  Rational total = 0;
  for (const auto& e : edges_) total += e.weight;
  return total;
}

std::vector<std::vector<std::pair<Vertex, std::size_t>>> MultiGraph::adjacency() const {
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adj[edges_[i].u].push_back({edges_[i].v, i});
    adj[edges_[i].v].push_back({edges_[i].u, i});
  }
  return adj;
}

MultiGraph MultiGraph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> local(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  MultiGraph h(static_cast<Vertex>(vertices.size()), mode_);
  for (const auto& e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) h.add_edge(local[e.u], local[e.v], e.weight);
  }
  return h;
}

EdgeArrays MultiGraph::edge_arrays() const {
  if (mode_ != GraphMode::multi) throw InvalidInput("edge arrays need a multi-mode graph");
  EdgeArrays a;
  a.u.reserve(edges_.size());
  a.v.reserve(edges_.size());
  a.w = mult_;
  for (const auto& e : edges_) {
    a.u.push_back(e.u);
    a.v.push_back(e.v);
  }
  return a;
}

bool MultiGraph::operator==(const MultiGraph& other) const {
  if (n_ != other.n_ || mode_ != other.mode_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.u != b.u || a.v != b.v || a.weight != b.weight) return false;
  }
  return true;
}

}  // namespace kcut
