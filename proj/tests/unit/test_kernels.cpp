#include <doctest.h>

#include <vector>

#include "kcut/kernels.hpp"
#include "kcut/rng.hpp"

using namespace kcut;

namespace {

struct Arrays {
  std::vector<std::int32_t> u, v, label;
  std::vector<std::int64_t> w;
};

Arrays random_arrays(std::size_t m, int n, int labels, std::uint64_t seed) {
  Rng rng(seed);
  Arrays a;
  for (std::size_t e = 0; e < m; ++e) {
    a.u.push_back(static_cast<std::int32_t>(rng.below(n)));
    a.v.push_back(static_cast<std::int32_t>(rng.below(n)));
    a.w.push_back(rng.between(1, 1'000'000'000));
  }
  for (int x = 0; x < n; ++x) a.label.push_back(static_cast<std::int32_t>(rng.below(labels)));
  return a;
}

}  // namespace

TEST_CASE("scalar kernel on a hand example") {
  std::vector<std::int32_t> u{0, 1, 0}, v{1, 2, 2}, label{0, 0, 1};
  std::vector<std::int64_t> w{5, 7, 11};
  CHECK(kernels::scalar::crossing_weight(u.data(), v.data(), w.data(), 3, label.data()) == 18);
  CHECK(kernels::scalar::crossing_count(u.data(), v.data(), 3, label.data()) == 2);
}

TEST_CASE("avx2 kernel matches scalar") {
  if (!kernels::isa_supported(kernels::Isa::avx2)) return;
  for (std::size_t m : {0, 1, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 100, 1001}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Arrays a = random_arrays(m, 40, 1 + static_cast<int>(seed), seed * 131 + m);
      CHECK(kernels::avx2::crossing_weight(a.u.data(), a.v.data(), a.w.data(), m, a.label.data()) ==
            kernels::scalar::crossing_weight(a.u.data(), a.v.data(), a.w.data(), m, a.label.data()));
      CHECK(kernels::avx2::crossing_count(a.u.data(), a.v.data(), m, a.label.data()) ==
            kernels::scalar::crossing_count(a.u.data(), a.v.data(), m, a.label.data()));
    }
  }
}

TEST_CASE("dispatch can be pinned") {
  kernels::Isa before = kernels::active_isa();
  Arrays a = random_arrays(50, 10, 3, 9);
  kernels::set_active_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  std::int64_t scalar = kernels::crossing_weight(a.u, a.v, a.w, a.label);
  if (kernels::isa_supported(kernels::Isa::avx2)) {
    kernels::set_active_isa(kernels::Isa::avx2);
    CHECK(kernels::crossing_weight(a.u, a.v, a.w, a.label) == scalar);
  }
  kernels::set_active_isa(before);
}
