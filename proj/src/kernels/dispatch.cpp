#include "kcut/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace kcut::kernels {

namespace {

Isa detect() {
  const char* force = std::getenv("KCUT_FORCE_SCALAR");
  if (force && std::strcmp(force, "1") == 0) return Isa::scalar;
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

Isa& current() {
  static Isa isa = detect();
  return isa;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current(); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw std::runtime_error("instruction set not supported on this CPU");
  current() = isa;
}

std::int64_t crossing_weight(std::span<const std::int32_t> u, std::span<const std::int32_t> v,
                             std::span<const std::int64_t> w,
                             std::span<const std::int32_t> label) {
  if (current() == Isa::avx2) return avx2::crossing_weight(u.data(), v.data(), w.data(), u.size(), label.data());
  return scalar::crossing_weight(u.data(), v.data(), w.data(), u.size(), label.data());
}

std::int64_t crossing_count(std::span<const std::int32_t> u, std::span<const std::int32_t> v,
                            std::span<const std::int32_t> label) {
  if (current() == Isa::avx2) return avx2::crossing_count(u.data(), v.data(), u.size(), label.data());
  return scalar::crossing_count(u.data(), v.data(), u.size(), label.data());
}

}  // namespace kcut::kernels
