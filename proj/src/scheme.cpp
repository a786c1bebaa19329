#include "kcut/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kcut/baseline.hpp"
#include "kcut/error.hpp"
#include "kcut/graph_ops.hpp"
#include "kcut/sparsifier.hpp"

namespace kcut {

namespace {

Partition stitch(const std::vector<std::vector<Vertex>>& members, const std::vector<Partition>& local, Vertex n) {
  std::vector<int> labels(n, -1);
  int next = 0;
  for (std::size_t c = 0; c < members.size(); ++c) {
    const auto& p = local[c];
    for (const auto& part : p.parts()) {
      for (Vertex v : part) labels[members[c][v]] = next;
      ++next;
    }
  }
  std::vector<Vertex> ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  return Partition::from_labels(ground, labels);
}

Partition all_in_one(Vertex n) {
  std::vector<Vertex> ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  return Partition::single(ground);
}

// Multiplies all weights by the common denominator; exact for rationals.
MultiGraph integer_scaled(const MultiGraph& g) {
  BigInt lcm = 1;
  for (const auto& e : g.edges()) {
    BigInt d = boost::multiprecision::denominator(e.weight);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  MultiGraph h(g.vertex_count(), GraphMode::multi);
  for (const auto& e : g.edges()) {
    Rational w = e.weight * Rational(lcm);
    if (w == 0) continue;
    if (w > Rational(std::numeric_limits<std::int64_t>::max() / 4)) throw InvalidInput("weights too large to scale exactly");
    h.add_edge(e.u, e.v, to_int64(w));
  }
  return h;
}

}  // namespace

std::int64_t sweep_bound(Vertex n, int k, const Rational& epsilon_prime) {
  if (n < 1 || k < 1 || epsilon_prime <= 0) throw InvalidInput("sweep bound needs n, k >= 1 and eps' > 0");
  long double e = to_double(epsilon_prime);
  long double raw = (1 + e) * 100.0L * std::log(static_cast<long double>(n)) * (k - 1) / (e * e * e);
  long double bound = std::ceil(raw) + 1;
  if (bound > static_cast<long double>(kInfinity / 2)) return kInfinity / 2;
  return static_cast<std::int64_t>(bound);
}

Assignment combine_components(const std::vector<std::vector<DpValue>>& tables, int k, DpValue budget) {
  const std::size_t c = tables.size();
  if (c == 0 || static_cast<int>(c) > k) throw NoSolution("cannot split the components into k parts");
  // best[x][j]: first x components, j parts in total.
  std::vector<std::vector<DpValue>> best(c + 1, std::vector<DpValue>(k + 1, kInfinity));
  std::vector<std::vector<int>> pick(c + 1, std::vector<int>(k + 1, -1));
  best[0][0] = 0;
  for (std::size_t x = 0; x < c; ++x) {
    for (int j = 0; j <= k; ++j) {
      if (best[x][j] == kInfinity) continue;
      for (int take = 1; j + take <= k && take < static_cast<int>(tables[x].size()); ++take) {
        DpValue v = tables[x][take];
        if (v == kInfinity) continue;
        DpValue total = best[x][j] + v;
        if (total < best[x + 1][j + take]) {
          best[x + 1][j + take] = total;
          pick[x + 1][j + take] = take;
        }
      }
    }
  }
  if (best[c][k] == kInfinity) throw NoSolution("no assignment of part counts reaches k");
  if (best[c][k] > budget) throw NoSolution("best assignment exceeds the budget");
  Assignment out;
  out.total = best[c][k];
  out.parts.assign(c, 0);
  int j = k;
  for (std::size_t x = c; x > 0; --x) {
    out.parts[x - 1] = pick[x][j];
    j -= pick[x][j];
  }
  return out;
}

Partition merge_to_k_parts(const Partition& components, int k) {
  if (k < 1 || static_cast<int>(components.size()) < k) throw InvalidInput("fewer parts than k");
  std::vector<std::vector<Vertex>> parts = components.parts();
  while (static_cast<int>(parts.size()) > k) {
    // Two smallest parts; ties go to the part with the smaller first vertex.
    std::vector<std::size_t> order(parts.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (parts[a].size() != parts[b].size()) return parts[a].size() < parts[b].size();
      return parts[a].front() < parts[b].front();
    });
    std::size_t a = std::min(order[0], order[1]), b = std::max(order[0], order[1]);
    parts[a].insert(parts[a].end(), parts[b].begin(), parts[b].end());
    parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return Partition::from_parts(std::move(parts));
}

ExactMinimum minimize_exact(const MultiGraph& g, int k, const SchemeOptions& options, std::int64_t s_cap) {
  if (!g.is_multi()) throw InvalidInput("minimize_exact needs a multi-mode graph");
  const Vertex n = g.vertex_count();
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  ExactMinimum out;
  Partition comps = connected_components(g);
  if (static_cast<int>(comps.size()) >= k) {
    out.partition = merge_to_k_parts(comps, k);
    return out;
  }
  const auto& members = comps.parts();
  std::vector<std::vector<DpValue>> tables;
  std::vector<std::vector<std::optional<Partition>>> local(members.size());
  std::vector<std::vector<char>> greedy(members.size());
  // A component can take at most k - (others) parts.
  const int spare = k - static_cast<int>(members.size()) + 1;
  for (std::size_t c = 0; c < members.size(); ++c) {
    MultiGraph h = g.induced(members[c]);
    const int top = std::min<int>(spare, h.vertex_count());
    std::vector<DpValue> values(top + 1, kInfinity);
    local[c].assign(top + 1, std::nullopt);
    greedy[c].assign(top + 1, 0);
    values[1] = 0;
    local[c][1] = all_in_one(h.vertex_count());
    for (int j = 2; j <= top; ++j) {
      CutResult approx = approx2_kcut(h, j);
      std::int64_t upper = to_int64(approx.weight);
      std::int64_t s = std::min(upper, s_cap);
      TreeFamilyOptions tree_options;
      tree_options.packing_count = options.packing_count;
      tree_options.exhaustive = h.vertex_count() <= options.exhaustive_trees_up_to;
      tree_options.exhaustive_cap = options.exhaustive_cap;
      auto trees = build_tree_family(h, j, tree_options);
      ExactOptions exact;
      exact.mode = SolveMode::construct;
      exact.dp = options.dp;
      ExactResult r = solve_exact(h, j, s, trees, exact);
      out.trees_used += r.trees_evaluated;
      out.dp_entries += r.dp_entries;
      if (r.yes) {
        values[j] = r.value;
        local[c][j] = *r.partition;
      } else {
        values[j] = upper;
        local[c][j] = approx.partition;
        greedy[c][j] = 1;
      }
    }
    tables.push_back(std::move(values));
  }
  Assignment assignment = combine_components(tables, k, kInfinity - 1);
  std::vector<Partition> chosen;
  for (std::size_t c = 0; c < members.size(); ++c) {
    int j = assignment.parts[c];
    chosen.push_back(*local[c][j]);
    if (greedy[c][j]) out.fallback = true;
  }
  out.partition = stitch(members, chosen, n);
  out.value = assignment.total;
  if (multi_cut_weight(g, out.partition) != out.value)
    throw std::logic_error("combined partition weight disagrees with the component values");
  return out;
}

SchemeResult solve(const MultiGraph& g, int k, const Rational& epsilon, std::uint64_t seed,
                   const SchemeOptions& options) {
  const Vertex n = g.vertex_count();
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  if (epsilon <= 0 || epsilon > 1) throw InvalidInput("epsilon must lie in (0, 1]");
  SchemeResult out;
  auto finish = [&](Partition p) {
    out.partition = std::move(p);
    out.value = cut_weight(g, out.partition);
    if (static_cast<int>(out.partition.size()) != k) throw std::logic_error("scheme produced the wrong part count");
    return out;
  };

  if (k == 1) {
    out.stats.branch = "trivial";
    return finish(all_in_one(n));
  }
  Partition comps = connected_components(g);
  out.stats.components = static_cast<int>(comps.size());
  if (static_cast<int>(comps.size()) >= k) {
    out.stats.branch = "components";
    return finish(merge_to_k_parts(comps, k));
  }
  if (epsilon * Rational(n) < 1) {
    out.stats.branch = "exact";
    if (n <= kOracleMaxVertices) return finish(oracle_exact_kcut(g, k).partition);
    ExactMinimum best = minimize_exact(integer_scaled(g), k, options);
    out.stats.trees_used = best.trees_used;
    out.stats.dp_entries = best.dp_entries;
    out.stats.fallback = best.fallback;
    return finish(best.partition);
  }

  const Rational eps = epsilon / 10;
  out.stats.epsilon_prime = eps;
  CutResult approx = approx2_kcut(g, k);
  out.stats.approx_weight = approx.weight;
  if (approx.weight == 0) {
    out.stats.branch = "trivial";
    return finish(approx.partition);
  }
  RoundedGraph rounded;
  try {
    rounded = round_to_multigraph(g, eps, approx.weight / 2);
  } catch (const InvalidInput& e) {
    throw std::runtime_error(std::string("round: ") + e.what());
  }
  out.stats.scale = rounded.scale;
  const MultiGraph& gstar = rounded.graph;
  Partition star_comps = connected_components(gstar);
  if (static_cast<int>(star_comps.size()) >= k) {
    out.stats.branch = "components";
    return finish(lift_partition(merge_to_k_parts(star_comps, k), rounded.vertex_map));
  }

  StripResult strip = strip_cheap_2cuts(gstar, k, eps, seed);
  out.stats.removed_weight = strip.removed_weight;
  out.stats.strip_iterations = strip.iterations;
  if (strip.hit_k_components) {
    out.stats.branch = "stripped";
    out.stats.estimate = to_double(Rational(strip.removed_weight) * rounded.scale);
    return finish(lift_partition(merge_to_k_parts(connected_components(strip.graph), k), rounded.vertex_map));
  }

  MultiGraph g2 = strip.graph;
  if (eps * Rational(gstar.vertex_count()) > 1) {
    SampleResult sample = sample_edges(strip.graph, k, eps, seed);
    out.stats.rate = sample.rate;
    out.stats.inverse_rate = sample.inverse_rate;
    g2 = std::move(sample.graph);
  }
  out.stats.branch = "sampled";
  out.stats.sweep_bound = sweep_bound(gstar.vertex_count(), k, eps);
  ExactMinimum best = minimize_exact(g2, k, options, out.stats.sweep_bound);
  out.stats.sampled_value = best.value;
  out.stats.trees_used = best.trees_used;
  out.stats.dp_entries = best.dp_entries;
  out.stats.fallback = best.fallback;
  out.stats.estimate = (static_cast<double>(best.value) * out.stats.inverse_rate + static_cast<double>(strip.removed_weight)) *
                       to_double(rounded.scale);
  return finish(lift_partition(best.partition, rounded.vertex_map));
}

}  // namespace kcut
