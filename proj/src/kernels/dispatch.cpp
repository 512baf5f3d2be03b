#include <atomic>
#include <cstdlib>
#include <string_view>

#include "iwkit/kernels.hpp"

namespace iwkit::kernels {
namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("IWKIT_ISA"); env != nullptr && std::string_view(env) == "scalar") {
    return Isa::scalar;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(IWKIT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) noexcept {
  current().store(isa_available(isa) ? isa : Isa::scalar, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

void axpy_mod(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::uint64_t w,
              std::uint64_t m) noexcept {
#if defined(IWKIT_HAVE_AVX2)
  if (m < kSimdModulusLimit && active_isa() == Isa::avx2) {
    axpy_mod_avx2(dst, src, w, m);
    return;
  }
#endif
  axpy_mod_scalar(dst, src, w, m);
}

void scale_mod(std::span<std::uint64_t> dst, std::uint64_t w, std::uint64_t m) noexcept {
#if defined(IWKIT_HAVE_AVX2)
  if (m < kSimdModulusLimit && active_isa() == Isa::avx2) {
    scale_mod_avx2(dst, w, m);
    return;
  }
#endif
  scale_mod_scalar(dst, w, m);
}

}  // namespace iwkit::kernels
