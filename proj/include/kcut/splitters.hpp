#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace kcut {

// x -> ((a*x) mod p) mod range, one member per a in 1..p-1.
struct SplitterFamily {
  std::size_t n = 0;
  std::size_t kk = 0;
  std::size_t range = 1;
  std::uint64_t prime = 0;  // 0 for the constant family (kk <= 1)
  std::vector<std::uint64_t> coefficients;

  std::size_t size() const { return prime == 0 ? 1 : coefficients.size(); }
  std::size_t apply(std::size_t member, std::size_t x) const;
};

SplitterFamily build_splitter(std::size_t n, std::size_t kk);

// Subsets of {0..ground_size-1}, each sorted, the list sorted and distinct.
struct SubsetFamily {
  std::size_t ground_size = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::vector<std::vector<std::uint32_t>> sets;
};

// For all disjoint X1, X2 with |X1| <= s1, |X2| <= s2 some member X has
// X1 ⊆ X and X ∩ X2 = ∅. Requires s1 < ground_size.
SubsetFamily build_subset_family(std::size_t ground_size, std::size_t s1, std::size_t s2);

// Variant used by the DP: clamps s2 to ground_size-1 (which keeps the
// covering property) and returns the power set once s1 >= ground_size.
// Results are memoized per (ground_size, s1, s2).
std::shared_ptr<const SubsetFamily> covering_family(std::size_t ground_size, std::size_t s1,
                                                    std::size_t s2);

bool is_prime(std::uint64_t x);

}  // namespace kcut
