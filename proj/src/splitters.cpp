#include "kcut/splitters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include "kcut/error.hpp"

namespace kcut {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::size_t SplitterFamily::apply(std::size_t member, std::size_t x) const {
  if (prime == 0) return 0;
  return static_cast<std::size_t>((coefficients[member] * x) % prime % range);
}

SplitterFamily build_splitter(std::size_t n, std::size_t kk) {
  if (n < 1 || kk < 1) throw InvalidInput("splitter needs n >= 1 and kk >= 1");
  SplitterFamily f;
  f.n = n;
  f.kk = kk;
  if (kk == 1) return f;
  f.range = kk * kk;
  std::uint64_t p = std::max<std::uint64_t>(n, f.range);
  while (!is_prime(p)) ++p;
  f.prime = p;
  f.coefficients.resize(p - 1);
  for (std::uint64_t a = 1; a < p; ++a) f.coefficients[a - 1] = a;
  return f;
}

namespace {

using Set = std::vector<std::uint32_t>;

// Calls visit(chosen) for every subset of {0..n-1} with size in [lo, hi].
template <class Visit>
void for_each_subset(std::size_t n, std::size_t lo, std::size_t hi, Visit&& visit) {
  std::vector<std::uint32_t> chosen;
  auto rec = [&](auto&& self, std::uint32_t next) -> void {
    if (chosen.size() >= lo) visit(chosen);
    if (chosen.size() == hi) return;
    for (std::uint32_t i = next; i < n; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

SubsetFamily build_subset_family(std::size_t ground_size, std::size_t s1, std::size_t s2) {
  if (s1 >= ground_size) throw InvalidInput("subset family needs s1 < |S|");
  std::set<Set> sets;
  for (std::size_t a = 0; a <= s1; ++a) {
    for (std::size_t b = 0; b <= s2; ++b) {
      std::size_t total = a + b;
      if (a == 0 || total == 0) {
        sets.insert(Set{});
        continue;
      }
      if (total > ground_size) continue;  // no subset of that size exists
      SplitterFamily f = build_splitter(ground_size, total);
      for (std::size_t member = 0; member < f.size(); ++member) {
        std::vector<Set> preimage(f.range);
        for (std::size_t j = 0; j < ground_size; ++j)
          preimage[f.apply(member, j)].push_back(static_cast<std::uint32_t>(j));
        std::vector<std::size_t> used;
        for (std::size_t bucket = 0; bucket < f.range; ++bucket)
          if (!preimage[bucket].empty()) used.push_back(bucket);
        // A bucket set X of size a only matters through X ∩ used; empty
        // buckets make up the rest of X.
        std::size_t empty = f.range - used.size();
        std::size_t lo = a > empty ? a - empty : 0;
        std::size_t hi = std::min(a, used.size());
        if (lo > hi) continue;
        for_each_subset(used.size(), lo, hi, [&](const std::vector<std::uint32_t>& pick) {
          Set x;
          for (auto i : pick) x.insert(x.end(), preimage[used[i]].begin(), preimage[used[i]].end());
          std::sort(x.begin(), x.end());
          sets.insert(std::move(x));
        });
      }
    }
  }
  SubsetFamily out;
  out.ground_size = ground_size;
  out.s1 = s1;
  out.s2 = s2;
  out.sets.assign(sets.begin(), sets.end());
  return out;
}

std::shared_ptr<const SubsetFamily> covering_family(std::size_t ground_size, std::size_t s1,
                                                    std::size_t s2) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::shared_ptr<const SubsetFamily>> cache;
  auto key = std::make_tuple(ground_size, s1, s2);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto family = std::make_shared<SubsetFamily>();
  family->ground_size = ground_size;
  family->s1 = s1;
  family->s2 = s2;
  if (s1 >= ground_size || s2 + s1 >= ground_size) {
    // With s2 saturated the subsets of size <= s1 are used directly: each
    // covers (X1, X2) through X = X1.
    if (ground_size > 24 && s1 >= ground_size) throw InvalidInput("power set too large");
    for_each_subset(ground_size, 0, std::min(s1, ground_size),
                    [&](const std::vector<std::uint32_t>& pick) { family->sets.push_back(pick); });
    std::sort(family->sets.begin(), family->sets.end());
  } else {
    *family = build_subset_family(ground_size, s1, s2);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, family);
  return family;
}

}  // namespace kcut
