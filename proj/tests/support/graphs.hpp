#pragma once

#include <utility>
#include <vector>

#include "kcut/graph.hpp"
#include "kcut/partition.hpp"

namespace kcut::fixtures {

inline MultiGraph from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                             GraphMode mode = GraphMode::multi) {
  MultiGraph g(n, mode);
  for (auto [u, v] : edges) g.add_edge(u, v, std::int64_t{1});
  return g;
}

inline MultiGraph path(Vertex n) {
  MultiGraph g(n, GraphMode::multi);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1, std::int64_t{1});
  return g;
}

inline MultiGraph cycle(Vertex n) {
  MultiGraph g = path(n);
  g.add_edge(n - 1, 0, std::int64_t{1});
  return g;
}

inline MultiGraph clique(Vertex n, GraphMode mode = GraphMode::multi) {
  MultiGraph g(n, mode);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v, std::int64_t{1});
  return g;
}

inline MultiGraph triangle(GraphMode mode = GraphMode::multi) { return clique(3, mode); }

// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline MultiGraph two_triangles_bridge(GraphMode mode = GraphMode::multi) {
  return from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}, mode);
}

inline MultiGraph petersen() {
  return from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline Partition parts(std::vector<std::vector<Vertex>> p) { return Partition::from_parts(std::move(p)); }

}  // namespace kcut::fixtures
