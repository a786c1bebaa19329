#include "kcut/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kcut/error.hpp"
#include "kcut/flow.hpp"
#include "kcut/graph_ops.hpp"
#include "kcut/rng.hpp"

namespace kcut {

namespace {

// Merges the pair of parts joined by the most weight until `k` remain.
std::vector<int> merge_labels_down(const MultiGraph& g, std::vector<int> label, int parts, int k) {
  while (parts > k) {
    std::vector<std::vector<Rational>> between(parts, std::vector<Rational>(parts, 0));
    for (const auto& e : g.edges()) {
      int a = label[e.u], b = label[e.v];
      if (a != b) between[std::min(a, b)][std::max(a, b)] += e.weight;
    }
    int best_a = 0, best_b = 1;
    for (int a = 0; a < parts; ++a)
      for (int b = a + 1; b < parts; ++b)
        if (between[a][b] > between[best_a][best_b]) best_a = a, best_b = b;
    for (auto& l : label) {
      if (l == best_b) l = best_a;
      else if (l > best_b) --l;
    }
    --parts;
  }
  return label;
}

std::vector<Vertex> iota_vertices(Vertex n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

CutResult approx2_kcut(const MultiGraph& g, int k) {
  const Vertex n = g.vertex_count();
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  std::vector<char> alive(g.edge_count(), 1);
  std::vector<int> label(n);
  int parts = 0;
  while (true) {
    UnionFind uf(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
      if (alive[e]) uf.unite(g.edge(e).u, g.edge(e).v);
    std::vector<int> root_label(n, -1);
    parts = 0;
    for (Vertex v = 0; v < n; ++v) {
      auto r = uf.find(v);
      if (root_label[r] < 0) root_label[r] = parts++;
      label[v] = root_label[r];
    }
    if (parts >= k) break;

    // Cheapest minimum cut over components with at least two vertices.
    std::vector<std::vector<Vertex>> members(parts);
    for (Vertex v = 0; v < n; ++v) members[label[v]].push_back(v);
    bool have = false;
    Rational best_order;
    std::vector<Vertex> best_side;
    for (int c = 0; c < parts; ++c) {
      if (members[c].size() < 2) continue;
      std::vector<Vertex> local(n, -1);
      for (std::size_t i = 0; i < members[c].size(); ++i) local[members[c][i]] = static_cast<Vertex>(i);
      MultiGraph h(static_cast<Vertex>(members[c].size()), g.mode());
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        if (alive[e] && local[edge.u] >= 0) h.add_edge(local[edge.u], local[edge.v], edge.weight);
      }
      EdgeCut cut = global_min_2cut(h);
      if (!have || cut.order < best_order) {
        have = true;
        best_order = cut.order;
        best_side.clear();
        for (Vertex v : cut.a) best_side.push_back(members[c][v]);
      }
    }
    std::vector<char> in_a(n, 0);
    for (Vertex v : best_side) in_a[v] = 1;
    const int comp = label[best_side.front()];
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edge(e);
      if (alive[e] && label[edge.u] == comp && in_a[edge.u] != in_a[edge.v]) alive[e] = 0;
    }
  }
  label = merge_labels_down(g, std::move(label), parts, k);
  CutResult out{Partition::from_labels(iota_vertices(n), label), 0};
  out.weight = cut_weight(g, out.partition);
  return out;
}

namespace {

template <class W>
class Enumerator {
 public:
  Enumerator(Vertex n, int k, std::vector<std::vector<std::pair<Vertex, W>>> back)
      : n_(n), k_(k), back_(std::move(back)), label_(n, 0), best_label_(n, 0) {}

  void run() { dfs(0, 0, W(0)); }
  bool found() const { return found_; }
  const W& best() const { return best_; }
  const std::vector<int>& best_label() const { return best_label_; }

 private:
  void dfs(Vertex idx, int used, W cost) {
    if (found_ && cost >= best_) return;
    if (n_ - idx < k_ - used) return;
    if (idx == n_) {
      found_ = true;
      best_ = cost;
      best_label_ = label_;
      return;
    }
    int limit = std::min(used + 1, k_);
    for (int l = 0; l < limit; ++l) {
      W add = W(0);
      for (const auto& [u, w] : back_[idx])
        if (label_[u] != l) add += w;
      label_[idx] = l;
      dfs(idx + 1, l == used ? used + 1 : used, cost + add);
    }
  }

  Vertex n_;
  int k_;
  std::vector<std::vector<std::pair<Vertex, W>>> back_;
  std::vector<int> label_;
  std::vector<int> best_label_;
  W best_{};
  bool found_ = false;
};

CutResult enumerate(const MultiGraph& g, int k) {
  const Vertex n = g.vertex_count();
  // Scale to integers when the common denominator allows it.
  BigInt lcm = 1;
  for (const auto& e : g.edges()) {
    BigInt d = boost::multiprecision::denominator(e.weight);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  Rational total = g.total_weight() * Rational(lcm);
  std::vector<int> label;
  if (total < Rational(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::vector<std::pair<Vertex, std::int64_t>>> back(n);
    for (const auto& e : g.edges()) {
      auto w = to_int64(e.weight * Rational(lcm));
      back[std::max(e.u, e.v)].push_back({std::min(e.u, e.v), w});
    }
    Enumerator<std::int64_t> en(n, k, std::move(back));
    en.run();
    label = en.best_label();
  } else {
    std::vector<std::vector<std::pair<Vertex, Rational>>> back(n);
    for (const auto& e : g.edges()) back[std::max(e.u, e.v)].push_back({std::min(e.u, e.v), e.weight});
    Enumerator<Rational> en(n, k, std::move(back));
    en.run();
    label = en.best_label();
  }
  CutResult out{Partition::from_labels(iota_vertices(n), label), 0};
  out.weight = cut_weight(g, out.partition);
  return out;
}

CutResult contract_randomly(const MultiGraph& g, int k, const OracleOptions& options) {
  const Vertex n = g.vertex_count();
  std::int64_t runs = options.repetitions;
  if (runs <= 0) {
    double r = std::ceil(std::pow(static_cast<double>(n), 2.0 * (k - 1)) * std::log(std::max<Vertex>(n, 2)));
    runs = static_cast<std::int64_t>(std::min(r, 1e6));
  }
  std::vector<double> weight(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) weight[e] = to_double(g.edge(e).weight);

  bool have = false;
  CutResult best{Partition(), 0};
  std::vector<std::pair<double, std::size_t>> order(g.edge_count());
  for (std::int64_t run = 0; run < runs; ++run) {
    Rng rng(splitmix64(options.seed ^ static_cast<std::uint64_t>(run) * 0x2545f4914f6cdd1dULL));
    // Exponential keys give a weighted random contraction order.
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      double u = rng.uniform();
      double key = weight[e] > 0 ? -std::log1p(-u) / weight[e] : std::numeric_limits<double>::infinity();
      order[e] = {key, e};
    }
    std::sort(order.begin(), order.end());
    UnionFind uf(n);
    for (const auto& [key, e] : order) {
      if (static_cast<int>(uf.components()) <= k) break;
      uf.unite(g.edge(e).u, g.edge(e).v);
    }
    std::vector<int> label(n);
    std::vector<int> root_label(n, -1);
    int parts = 0;
    for (Vertex v = 0; v < n; ++v) {
      auto r = uf.find(v);
      if (root_label[r] < 0) root_label[r] = parts++;
      label[v] = root_label[r];
    }
    for (auto& l : label) l = std::min(l, k - 1);  // fold surplus components together
    CutResult candidate{Partition::from_labels(iota_vertices(n), label), 0};
    candidate.weight = cut_weight(g, candidate.partition);
    if (!have || candidate.weight < best.weight) {
      have = true;
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace

CutResult oracle_exact_kcut(const MultiGraph& g, int k, const OracleOptions& options) {
  const Vertex n = g.vertex_count();
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  if (options.mode == OracleMode::enumeration) {
    if (n > kOracleMaxVertices)
      throw OracleTooLarge("enumeration oracle handles at most " + std::to_string(kOracleMaxVertices) +
                           " vertices, got " + std::to_string(n));
    return enumerate(g, k);
  }
  return contract_randomly(g, k, options);
}

}  // namespace kcut
