#pragma once

#include <cstdint>
#include <span>

namespace kcut::kernels {

// Sum of w[e] over edges e whose endpoint labels differ.
using CrossingWeightFn = std::int64_t (*)(const std::int32_t* u, const std::int32_t* v,
                                          const std::int64_t* w, std::size_t m,
                                          const std::int32_t* label);
// Number of edges whose endpoint labels differ.
using CrossingCountFn = std::int64_t (*)(const std::int32_t* u, const std::int32_t* v,
                                         std::size_t m, const std::int32_t* label);

enum class Isa { scalar, avx2 };

namespace scalar {
std::int64_t crossing_weight(const std::int32_t* u, const std::int32_t* v,
                             const std::int64_t* w, std::size_t m, const std::int32_t* label);
std::int64_t crossing_count(const std::int32_t* u, const std::int32_t* v, std::size_t m,
                            const std::int32_t* label);
}  // namespace scalar

namespace avx2 {
std::int64_t crossing_weight(const std::int32_t* u, const std::int32_t* v,
                             const std::int64_t* w, std::size_t m, const std::int32_t* label);
std::int64_t crossing_count(const std::int32_t* u, const std::int32_t* v, std::size_t m,
                            const std::int32_t* label);
}  // namespace avx2

bool isa_supported(Isa isa);

// Chosen once from CPU features; KCUT_FORCE_SCALAR=1 pins the scalar path.
Isa active_isa();
void set_active_isa(Isa isa);  // tests only; throws if unsupported

std::int64_t crossing_weight(std::span<const std::int32_t> u, std::span<const std::int32_t> v,
                             std::span<const std::int64_t> w,
                             std::span<const std::int32_t> label);
std::int64_t crossing_count(std::span<const std::int32_t> u, std::span<const std::int32_t> v,
                            std::span<const std::int32_t> label);

}  // namespace kcut::kernels
