#include "kcut/kernels.hpp"

namespace kcut::kernels::scalar {

std::int64_t crossing_weight(const std::int32_t* u, const std::int32_t* v,
                             const std::int64_t* w, std::size_t m, const std::int32_t* label) {
  std::int64_t total = 0;
  for (std::size_t e = 0; e < m; ++e) {
    if (label[u[e]] != label[v[e]]) total += w[e];
  }
  return total;
}

std::int64_t crossing_count(const std::int32_t* u, const std::int32_t* v, std::size_t m,
                            const std::int32_t* label) {
  std::int64_t total = 0;
  for (std::size_t e = 0; e < m; ++e) total += label[u[e]] != label[v[e]];
  return total;
}

}  // namespace kcut::kernels::scalar
