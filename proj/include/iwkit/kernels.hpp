#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Modular vector kernels over Z/m with m = p^N. Every hot loop in the library
// (row elimination in Smith normal form, series products, polynomial
// reduction) is an instance of one of these.
namespace iwkit::kernels {

enum class Isa { scalar, avx2 };

// The AVX2 path estimates quotients in double precision; it is exact only for
// moduli below this bound. Larger moduli always take the scalar path.
inline constexpr std::uint64_t kSimdModulusLimit = std::uint64_t{1} << 50;

// dst[i] = (dst[i] + w * src[i]) mod m. All inputs must lie in [0, m) and
// dst.size() <= src.size().
void axpy_mod_scalar(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                     std::uint64_t w, std::uint64_t m) noexcept;
// dst[i] = (w * dst[i]) mod m.
void scale_mod_scalar(std::span<std::uint64_t> dst, std::uint64_t w, std::uint64_t m) noexcept;

#if defined(IWKIT_HAVE_AVX2)
// Same contracts, plus m < kSimdModulusLimit.
void axpy_mod_avx2(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
                   std::uint64_t w, std::uint64_t m) noexcept;
void scale_mod_avx2(std::span<std::uint64_t> dst, std::uint64_t w, std::uint64_t m) noexcept;
#endif

bool isa_available(Isa isa) noexcept;

// ISA picked at first use: the best available one, unless the environment
// variable IWKIT_ISA=scalar forces the reference kernels.
Isa active_isa() noexcept;

// Overrides the runtime choice (tests and benchmarks). Requests for an
// unavailable ISA fall back to scalar.
void force_isa(Isa isa) noexcept;

std::string_view isa_name(Isa isa) noexcept;

// Dispatching entry points.
void axpy_mod(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src,
              std::uint64_t w, std::uint64_t m) noexcept;
void scale_mod(std::span<std::uint64_t> dst, std::uint64_t w, std::uint64_t m) noexcept;

}  // namespace iwkit::kernels
