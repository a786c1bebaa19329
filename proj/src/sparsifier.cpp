#include "kcut/sparsifier.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kcut/baseline.hpp"
#include "kcut/error.hpp"
#include "kcut/flow.hpp"
#include "kcut/graph_ops.hpp"
#include "kcut/rng.hpp"

namespace kcut {

namespace {

struct ComponentCut {
  bool exists = false;
  std::int64_t order = 0;
  std::vector<Vertex> side;  // vertices of g on side a
  int component = -1;
};

// Minimum non-trivial 2-cut: the cheapest minimum cut of any component.
ComponentCut min_nontrivial_cut(const MultiGraph& g) {
  Partition comps = connected_components(g);
  ComponentCut best;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& members = comps.parts()[c];
    if (members.size() < 2) continue;
    MultiGraph h = g.induced(members);
    EdgeCut cut = global_min_2cut(h);
    std::int64_t order = to_int64(cut.order);
    if (!best.exists || order < best.order) {
      best.exists = true;
      best.order = order;
      best.component = static_cast<int>(c);
      best.side.clear();
      for (Vertex v : cut.a) best.side.push_back(members[v]);
    }
  }
  return best;
}

}  // namespace

StripResult strip_cheap_2cuts(const MultiGraph& g, int k, const Rational& epsilon, std::uint64_t) {
  if (!g.is_multi()) throw InvalidInput("strip_cheap_2cuts needs a multi-mode graph");
  if (k < 2) throw InvalidInput("strip_cheap_2cuts needs k >= 2");
  if (epsilon <= 0 || epsilon > 1) throw InvalidInput("epsilon must lie in (0, 1]");
  if (component_count(g) >= k) throw InvalidInput("graph already has k components");

  StripResult out;
  out.approx_weight = approx2_kcut(g, k).weight;
  out.threshold = epsilon * out.approx_weight / Rational(k - 1);
  out.graph = g;
  while (component_count(out.graph) < k) {
    ComponentCut cut = min_nontrivial_cut(out.graph);
    if (!cut.exists || Rational(cut.order) > out.threshold) break;
    std::vector<char> in_a(g.vertex_count(), 0);
    for (Vertex v : cut.side) in_a[v] = 1;
    MultiGraph next(g.vertex_count(), GraphMode::multi);
    for (std::size_t e = 0; e < out.graph.edge_count(); ++e) {
      const auto& edge = out.graph.edge(e);
      if (in_a[edge.u] != in_a[edge.v]) {
        out.removed_weight += out.graph.multiplicity(e);
      } else {
        next.add_edge(edge.u, edge.v, out.graph.multiplicity(e));
      }
    }
    out.graph = std::move(next);
    ++out.iterations;
  }
  out.hit_k_components = component_count(out.graph) >= k;
  return out;
}

double sampling_rate(Vertex n, const Rational& epsilon, std::int64_t min_cut) {
  double eps = to_double(epsilon);
  double p = 100.0 * std::log(static_cast<double>(n)) / (eps * eps * static_cast<double>(min_cut));
  return std::min(1.0, p);
}

SampleResult sample_edges(const MultiGraph& g1, int k, const Rational& epsilon, std::uint64_t seed) {
  if (!g1.is_multi()) throw InvalidInput("sample_edges needs a multi-mode graph");
  const Vertex n = g1.vertex_count();
  if (epsilon > 1 || epsilon * Rational(n) <= 1) throw InvalidInput("epsilon must lie in (1/n, 1]");
  if (component_count(g1) >= k) throw InvalidInput("graph already has k components");
  ComponentCut cut = min_nontrivial_cut(g1);
  if (!cut.exists) throw InvalidInput("graph has no non-trivial 2-cut");

  SampleResult out;
  out.min_cut = cut.order;
  out.rate = sampling_rate(n, epsilon, cut.order);
  out.inverse_rate = 1.0 / out.rate;
  if (out.rate >= 1.0) {
    out.graph = g1;
    return out;
  }
  out.graph = MultiGraph(n, GraphMode::multi);
  for (std::size_t e = 0; e < g1.edge_count(); ++e) {
    std::uint64_t key = splitmix64(seed ^ splitmix64(0x51ed27e5ULL + e));
    std::int64_t kept = 0;
    for (std::int64_t unit = 0; unit < g1.multiplicity(e); ++unit) {
      std::uint64_t x = splitmix64(key + static_cast<std::uint64_t>(unit));
      double u = static_cast<double>(x >> 11) * 0x1.0p-53;
      kept += u < out.rate;
    }
    if (kept > 0) out.graph.add_edge(g1.edge(e).u, g1.edge(e).v, kept);
  }
  return out;
}

}  // namespace kcut
